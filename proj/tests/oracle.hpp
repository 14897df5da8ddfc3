// Test-only reference arithmetic over Q, written without the library's kernels.
//
// Subspaces are lists of row vectors. Meets go through orthogonal complements
// (A meet B = (A^perp join B^perp)^perp) rather than the library's stacked
// kernel, and Alg L dimensions come from a row-major constraint count.

#ifndef SLT_TESTS_ORACLE_HPP
#define SLT_TESTS_ORACLE_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <set>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Row = std::vector<Q>;
using Rows = std::vector<Row>;

// Gauss-Jordan on a copy; returns the nonzero rows, pivots normalised to 1.
inline Rows rref(Rows a) {
    if (a.empty()) return a;
    const std::size_t cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        const Q lead = a[r][c];
        for (auto& x : a[r]) x /= lead;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Q f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    a.resize(r);
    return a;
}

inline std::size_t rank(const Rows& a) {
    return rref(a).size();
}

inline Rows cat(Rows a, const Rows& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// Null space {x : a x = 0} of a (rows x n) matrix, as rows.
inline Rows null_space(const Rows& a, std::size_t n) {
    const Rows r = rref(a);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t c = 0; c < n; ++c)
            if (r[i][c] != 0) {
                is_pivot[c] = true;
                break;
            }
    Rows out;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Row v(n, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::size_t pc = 0;
            while (r[i][pc] == 0) ++pc;
            v[pc] = -r[i][f];
        }
        out.push_back(v);
    }
    return out;
}

struct Space {
    std::size_t n = 0;
    Rows rows; // RREF

    static Space of(std::size_t n, Rows r) { return {n, rref(std::move(r))}; }
    std::size_t dim() const { return rows.size(); }
    friend bool operator==(const Space& a, const Space& b) { return a.n == b.n && a.rows == b.rows; }
    friend bool operator<(const Space& a, const Space& b) {
        if (a.rows.size() != b.rows.size()) return a.rows.size() < b.rows.size();
        return a.rows < b.rows;
    }
};

inline Space join(const Space& a, const Space& b) {
    return Space::of(a.n, cat(a.rows, b.rows));
}

// Real scalars only: the complement is the null space of the row matrix.
inline Space perp(const Space& a) {
    return Space::of(a.n, null_space(a.rows, a.n));
}

inline Space meet(const Space& a, const Space& b) {
    return perp(join(perp(a), perp(b)));
}

inline bool leq(const Space& a, const Space& b) {
    return rank(cat(a.rows, b.rows)) == b.dim();
}

inline Row kron(const Row& u, const Row& v) {
    Row out;
    for (const auto& a : u)
        for (const auto& b : v) out.push_back(a * b);
    return out;
}

inline Space tensor(const Space& a, const Space& b) {
    Rows r;
    for (const auto& u : a.rows)
        for (const auto& v : b.rows) r.push_back(kron(u, v));
    return Space::of(a.n * b.n, r);
}

// All-pairs fixpoint; includes 0 and I.
inline std::set<Space> closure(std::size_t n, std::vector<Space> gens) {
    Rows id;
    for (std::size_t i = 0; i < n; ++i) {
        Row e(n, 0);
        e[i] = 1;
        id.push_back(e);
    }
    std::set<Space> s(gens.begin(), gens.end());
    s.insert(Space::of(n, {}));
    s.insert(Space::of(n, id));
    for (bool grew = true; grew;) {
        grew = false;
        const std::vector<Space> cur(s.begin(), s.end());
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j) {
                grew |= s.insert(meet(cur[i], cur[j])).second;
                grew |= s.insert(join(cur[i], cur[j])).second;
            }
    }
    return s;
}

inline std::set<Space> tensor_closure(const std::vector<Space>& l, const std::vector<Space>& m) {
    std::vector<Space> gens;
    for (const auto& a : l)
        for (const auto& b : m) gens.push_back(tensor(a, b));
    return closure(l.front().n * m.front().n, gens);
}

/*
 * Basis of {T : T P ⊆ P for every P}. T is indexed row-major, t[i*n + j] = T(i,j);
 * invariance of P is w^T T p = 0 for w in P^perp and p in P, i.e. the
 * constraint row with entry w_i p_j at position i*n + j.
 */
inline Rows alg_basis(std::size_t n, const std::vector<Space>& lattice) {
    Rows cons;
    for (const auto& p : lattice) {
        const Space w = perp(p);
        for (const auto& wv : w.rows)
            for (const auto& pv : p.rows) {
                Row c(n * n, 0);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) c[i * n + j] = wv[i] * pv[j];
                cons.push_back(c);
            }
    }
    return null_space(cons, n * n);
}

inline std::size_t alg_dim(std::size_t n, const std::vector<Space>& lattice) {
    return alg_basis(n, lattice).size();
}

// Span of x y^T (row-major) with x in P and y in (P_-)^perp, over all P.
inline std::size_t rank_one_dim(std::size_t n, const std::vector<Space>& lattice) {
    Rows ops;
    for (const auto& p : lattice) {
        Space minus = Space::of(n, {});
        for (const auto& q : lattice)
            if (!leq(p, q)) minus = join(minus, q);
        for (const auto& x : p.rows)
            for (const auto& y : perp(minus).rows) {
                Row t(n * n, 0);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = x[i] * y[j];
                ops.push_back(t);
            }
    }
    return rank(ops);
}

} // namespace oracle

#endif
