#include "slt/tensor_maps.hpp"

#include "slt/errors.hpp"
#include "slt/opalg.hpp"

#include <algorithm>

namespace slt {

namespace {

void require_same_atoms(const AtomMap& f, const AtomMap& g) {
    if (f.k_dim != g.k_dim || f.h_dim != g.h_dim || f.atoms != g.atoms)
        throw DimensionMismatch("atom maps over different atom lists");
}

} // namespace

AtomMap AtomMap::make(std::size_t k_dim, std::size_t h_dim, std::vector<Subspace> atoms,
                      std::vector<Subspace> values) {
    if (atoms.size() != values.size())
        throw DimensionMismatch("atom map: " + std::to_string(atoms.size()) + " atoms but " +
                                std::to_string(values.size()) + " values");
    for (const auto& e : atoms)
        if (e.ambient_dim() != h_dim) throw DimensionMismatch("atom map: atom not on H");
    for (const auto& v : values)
        if (v.ambient_dim() != k_dim) throw DimensionMismatch("atom map: value not on K");
    return AtomMap{k_dim, h_dim, std::move(atoms), std::move(values)};
}

AtomMap AtomMap::constant(std::size_t k_dim, std::vector<Subspace> atoms, const Subspace& value) {
    const std::size_t h = atoms.empty() ? 0 : atoms.front().ambient_dim();
    std::vector<Subspace> values(atoms.size(), value);
    return make(k_dim, h, std::move(atoms), std::move(values));
}

AtomMap pointwise_join(const AtomMap& f, const AtomMap& g) {
    require_same_atoms(f, g);
    AtomMap out = f;
    for (std::size_t j = 0; j < f.size(); ++j) out.values[j] = join(f.values[j], g.values[j]);
    return out;
}

AtomMap pointwise_meet(const AtomMap& f, const AtomMap& g) {
    require_same_atoms(f, g);
    AtomMap out = f;
    for (std::size_t j = 0; j < f.size(); ++j) out.values[j] = meet(f.values[j], g.values[j]);
    return out;
}

bool pointwise_leq(const AtomMap& f, const AtomMap& g) {
    require_same_atoms(f, g);
    for (std::size_t j = 0; j < f.size(); ++j)
        if (!leq(f.values[j], g.values[j])) return false;
    return true;
}

Subspace theta(const AtomMap& f) {
    const std::size_t n = f.k_dim * f.h_dim;
    std::vector<Vector> vectors;
    for (std::size_t j = 0; j < f.size(); ++j) {
        if (f.values[j].ambient_dim() != f.k_dim || f.atoms[j].ambient_dim() != f.h_dim)
            throw DimensionMismatch("theta: value/atom does not live on the declared K ⊗ H");
        for (const auto& u : f.values[j].basis_vectors())
            for (const auto& v : f.atoms[j].basis_vectors()) vectors.push_back(kronecker(u, v));
    }
    return Subspace::span(n, vectors);
}

AtomMap phi_full(const Subspace& q, std::span<const Subspace> atoms, std::size_t k_dim) {
    if (k_dim == 0 || q.ambient_dim() % k_dim != 0)
        throw DimensionMismatch("phi: Q does not live on K ⊗ H for dim K = " + std::to_string(k_dim));
    const std::size_t h_dim = q.ambient_dim() / k_dim;
    // W* has rows spanning the functionals that vanish on Q.
    const Matrix w_adj = perp(q).basis().adjoint();

    std::vector<Subspace> values;
    values.reserve(atoms.size());
    for (const auto& e : atoms) {
        if (e.ambient_dim() != h_dim) throw DimensionMismatch("phi: atom not on H");
        // x ⊗ e ∈ Q  <=>  W* (I_K ⊗ e) x = 0, stacked over a basis of E.
        std::vector<Vector> rows;
        for (const auto& ev : e.basis_vectors())
            for (std::size_t r = 0; r < w_adj.rows(); ++r) {
                Vector row(k_dim);
                for (std::size_t i = 0; i < k_dim; ++i)
                    for (std::size_t t = 0; t < h_dim; ++t) {
                        const Scalar& c = w_adj(r, i * h_dim + t);
                        if (!c.is_zero() && !ev[t].is_zero()) row[i] += c * ev[t];
                    }
                rows.push_back(std::move(row));
            }
        values.push_back(Subspace::from_columns(kernel_basis(Matrix::from_rows(k_dim, rows))));
    }
    return AtomMap::make(k_dim, h_dim, {atoms.begin(), atoms.end()}, std::move(values));
}

AtomMap phi_lattice(const Subspace& q, std::span<const Subspace> atoms, const ProjectionLattice& l) {
    const std::size_t k_dim = l.ambient_dim();
    if (k_dim == 0 || q.ambient_dim() % k_dim != 0) throw DimensionMismatch("phi: Q does not live on K ⊗ H");
    const std::size_t h_dim = q.ambient_dim() / k_dim;
    std::vector<Subspace> values;
    for (const auto& e : atoms) {
        if (e.ambient_dim() != h_dim) throw DimensionMismatch("phi: atom not on H");
        std::vector<Subspace> below;
        for (const auto& p : l.elements())
            if (leq(tensor(p, e), q)) below.push_back(p);
        values.push_back(join_all(k_dim, below));
    }
    return AtomMap::make(k_dim, h_dim, {atoms.begin(), atoms.end()}, std::move(values));
}

bool TensorLattice::is_elementary(std::size_t product_index) const {
    return std::any_of(elementary.begin(), elementary.end(),
                       [&](const ElementaryEntry& e) { return e.product_index == product_index; });
}

TensorLattice tensor_lattice(const ProjectionLattice& l, const ProjectionLattice& m, std::size_t cap, Exec exec) {
    if (!l.is_closed() || !m.is_closed()) throw PreconditionError("tensor lattice requires closed factors");
    const std::size_t n = l.ambient_dim() * m.ambient_dim();
    std::vector<Subspace> generators;
    generators.reserve(l.size() * m.size());
    for (const auto& p : l.elements())
        for (const auto& e : m.elements()) generators.push_back(tensor(p, e));

    TensorLattice out{l, m, lattice_closure(n, generators, cap, exec), {}};
    for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            out.elementary.push_back({*out.product.index_of(generators[i * m.size() + j]), i, j});
    return out;
}

AtomMap atom_map_perp(const AtomMap& f, std::span<const Subspace> complement_atoms) {
    if (complement_atoms.size() != f.size())
        throw DimensionMismatch("atom_map_perp: " + std::to_string(complement_atoms.size()) +
                                " complement atoms for a map over " + std::to_string(f.size()) + " atoms");
    std::vector<Subspace> values;
    values.reserve(f.size());
    for (const auto& v : f.values) values.push_back(perp(v));
    return AtomMap::make(f.k_dim, f.h_dim, {complement_atoms.begin(), complement_atoms.end()}, std::move(values));
}

std::vector<Subspace> decomposition_index(const ProjectionLattice& m) {
    if (m.flags().is_absl) return m.atoms();
    std::vector<Subspace> out;
    for (const auto& s : m.elements())
        if (!s.is_zero()) out.push_back(s);
    return out;
}

AtomMap cyclic_decomposition(std::span<const Scalar> xi, const ProjectionLattice& m, std::size_t k_dim) {
    const std::size_t h_dim = m.ambient_dim();
    if (xi.size() != k_dim * h_dim) throw DimensionMismatch("cyclic decomposition: ξ does not live on K ⊗ H");
    if (!m.is_closed()) throw PreconditionError("cyclic decomposition requires a closed lattice");
    const OperatorSpace alg = alg_of(m);
    const DensityReport density{rank_one_subspace(m).dimension(), alg.dimension()};
    if (!density.dense())
        throw PreconditionError("cyclic decomposition requires rank-one density (rank-one span " +
                                std::to_string(density.rank_one_dim) + " vs Alg " +
                                std::to_string(density.alg_dim) + ")");

    // Row j of X is x_j where ξ = Σ_j e_j ⊗ x_j.
    const Matrix x(k_dim, h_dim, {xi.begin(), xi.end()});
    const std::vector<Subspace> index = decomposition_index(m);
    std::vector<Subspace> values;
    for (const auto& e : index) {
        const Subspace allowed = perp(l_minus(e, m));
        std::vector<Vector> images;
        // Σ_j (x_j, q) e_j = X conj(q).
        for (const auto& q : allowed.basis_vectors()) {
            Vector qc(q.size());
            for (std::size_t t = 0; t < q.size(); ++t) qc[t] = q[t].conj();
            images.push_back(x * qc);
        }
        values.push_back(Subspace::span(k_dim, images));
    }
    AtomMap f = AtomMap::make(k_dim, h_dim, index, std::move(values));

    const Subspace orbit = cyclic_invariant_subspace(ampliation(k_dim, alg), xi);
    if (!(theta(f) == orbit))
        throw std::logic_error("cyclic decomposition: θ(f) differs from the orbit span of ξ");
    return f;
}

std::size_t for_each_atom_map(std::span<const Subspace> atoms, const ProjectionLattice& values,
                              const std::function<void(const AtomMap&)>& visit) {
    const std::size_t k_dim = values.ambient_dim();
    const std::size_t h_dim = atoms.empty() ? 0 : atoms.front().ambient_dim();
    const std::size_t radix = values.size();
    std::vector<std::size_t> digits(atoms.size(), 0);
    std::size_t count = 0;
    for (;;) {
        std::vector<Subspace> vals;
        vals.reserve(atoms.size());
        for (std::size_t d : digits) vals.push_back(values[d]);
        visit(AtomMap::make(k_dim, h_dim, {atoms.begin(), atoms.end()}, std::move(vals)));
        ++count;
        std::size_t pos = digits.size();
        while (pos > 0) {
            --pos;
            if (++digits[pos] < radix) break;
            digits[pos] = 0;
            if (pos == 0) return count;
        }
        if (digits.empty()) return count;
    }
}

Subspace flip_factors(const Subspace& s, std::size_t m, std::size_t n) {
    if (s.ambient_dim() != m * n) throw DimensionMismatch("flip_factors: dimension is not m·n");
    std::vector<Vector> flipped;
    for (const auto& v : s.basis_vectors()) {
        Vector w(m * n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) w[j * m + i] = v[i * n + j];
        flipped.push_back(std::move(w));
    }
    return Subspace::span(m * n, flipped);
}

} // namespace slt
