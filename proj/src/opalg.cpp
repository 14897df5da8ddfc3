#include "slt/opalg.hpp"

#include "slt/errors.hpp"
#include "slt/random.hpp"

#include <algorithm>

namespace slt {

namespace {

void require_dim(std::size_t a, std::size_t b, const char* op) {
    if (a != b)
        throw DimensionMismatch(std::string(op) + ": dimensions " + std::to_string(a) + " and " +
                                std::to_string(b));
}

/// Rows of W* where the columns of W span S^⊥; x ∈ S iff W* x = 0.
Matrix annihilator(const Subspace& s) {
    return perp(s).basis().adjoint();
}

std::vector<Matrix> canonical_matrices(const RowSpace& rs, std::size_t n) {
    std::vector<Matrix> out;
    out.reserve(rs.rank());
    for (const auto& row : rs.rows()) out.push_back(unvectorize(row, n, n));
    return out;
}

} // namespace

OperatorSpace OperatorSpace::span(std::size_t n, std::span<const Matrix> matrices, bool algebra,
                                  bool verify_algebra) {
    OperatorSpace a(n);
    for (const auto& t : matrices) {
        if (t.rows() != n || t.cols() != n) throw DimensionMismatch("operator space: matrix shape mismatch");
        a.echelon_.insert(vectorize(t));
    }
    a.is_algebra_ = verify_algebra ? a.verify_algebra() : algebra;
    return a;
}

OperatorSpace OperatorSpace::full(std::size_t n) {
    std::vector<Matrix> units;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            Matrix e(n, n);
            e(i, j) = Scalar(1);
            units.push_back(std::move(e));
        }
    return span(n, units, true);
}

OperatorSpace OperatorSpace::scalars(std::size_t n) {
    const Matrix id = Matrix::identity(n);
    return span(n, std::span<const Matrix>(&id, 1), true);
}

std::vector<Matrix> OperatorSpace::basis() const {
    return canonical_matrices(echelon_, n_);
}

bool OperatorSpace::contains(const Matrix& t) const {
    require_dim(t.rows(), n_, "operator membership");
    require_dim(t.cols(), n_, "operator membership");
    return echelon_.contains(vectorize(t));
}

bool OperatorSpace::verify_algebra() const {
    if (!contains(Matrix::identity(n_))) return false;
    const auto b = basis();
    for (const auto& s : b)
        for (const auto& t : b)
            if (!contains(s * t)) return false;
    return true;
}

OperatorSpace alg_of(const ProjectionLattice& lat, Exec exec) {
    if (!lat.is_closed()) throw PreconditionError("Alg requires a closed lattice");
    const std::size_t n = lat.ambient_dim();
    std::vector<Matrix> current = OperatorSpace::full(n).basis();

    for (const auto& s : lat.elements()) {
        if (s.is_zero() || s.is_full() || current.empty()) continue;
        const Matrix w = annihilator(s);
        const Matrix b = s.basis();
        const std::size_t eqs = w.rows() * b.cols();
        // Column k of g holds the constraint values W* T_k B for the k-th current basis matrix.
        Matrix g(eqs, current.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
        for (std::ptrdiff_t sk = 0; sk < static_cast<std::ptrdiff_t>(current.size()); ++sk) {
            const auto k = static_cast<std::size_t>(sk);
            const Matrix y = w * current[k] * b;
            for (std::size_t e = 0; e < eqs; ++e) g(e, k) = y.data()[e];
        }
        const Matrix coeffs = kernel_basis(g);
        RowSpace next(n * n);
        for (std::size_t c = 0; c < coeffs.cols(); ++c) {
            Matrix t(n, n);
            for (std::size_t k = 0; k < current.size(); ++k)
                if (!coeffs(k, c).is_zero()) t += coeffs(k, c) * current[k];
            next.insert(vectorize(t));
        }
        current = canonical_matrices(next, n);
    }
    return OperatorSpace::span(n, current, true);
}

OperatorSpace alg_of_reference(const ProjectionLattice& lat) {
    if (!lat.is_closed()) throw PreconditionError("Alg requires a closed lattice");
    const std::size_t n = lat.ambient_dim();
    std::vector<Vector> rows;
    for (const auto& s : lat.elements()) {
        const Matrix w = perp(s).basis();
        const Matrix b = s.basis();
        // sum_{i,j} conj(W(i,a)) T(i,j) B(j,c) = 0 for every (a, c).
        for (std::size_t a = 0; a < w.cols(); ++a)
            for (std::size_t c = 0; c < b.cols(); ++c) {
                Vector row(n * n);
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t i = 0; i < n; ++i) row[j * n + i] = w(i, a).conj() * b(j, c);
                rows.push_back(std::move(row));
            }
    }
    const Matrix kernel = kernel_basis(Matrix::from_rows(n * n, rows));
    std::vector<Matrix> mats;
    for (std::size_t c = 0; c < kernel.cols(); ++c) mats.push_back(unvectorize(kernel.column(c), n, n));
    return OperatorSpace::span(n, mats, true);
}

OperatorSpace rank_one_subspace(const ProjectionLattice& lat) {
    if (!lat.is_closed()) throw PreconditionError("rank-one subspace requires a closed lattice");
    const std::size_t n = lat.ambient_dim();
    std::vector<Matrix> mats;
    for (const auto& l : lat.elements()) {
        if (l.is_zero()) continue;
        const Subspace y = perp(l_minus(l, lat));
        for (const auto& x : l.basis_vectors())
            for (const auto& v : y.basis_vectors()) {
                Matrix r(n, n);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) r(i, j) = x[i] * v[j].conj();
                mats.push_back(std::move(r));
            }
    }
    return OperatorSpace::span(n, mats);
}

DensityReport rank_one_density(const ProjectionLattice& lat) {
    return {rank_one_subspace(lat).dimension(), alg_of(lat).dimension()};
}

bool has_rank_one_density(const ProjectionLattice& lat) {
    return rank_one_density(lat).dense();
}

bool is_invariant(const Subspace& q, const OperatorSpace& a) {
    require_dim(q.ambient_dim(), a.ambient_dim(), "invariance test");
    if (q.is_zero() || q.is_full()) return true;
    for (const auto& t : a.basis())
        for (const auto& v : q.basis_vectors())
            if (!q.contains(t * v)) return false;
    return true;
}

Subspace cyclic_invariant_subspace(const OperatorSpace& a, std::span<const Scalar> x) {
    require_dim(x.size(), a.ambient_dim(), "cyclic subspace");
    std::vector<Vector> orbit;
    for (const auto& t : a.basis()) orbit.push_back(t * x);
    return Subspace::span(a.ambient_dim(), orbit);
}

OperatorSpace commutant(const OperatorSpace& a) {
    const std::size_t n = a.ambient_dim();
    std::vector<Matrix> current = OperatorSpace::full(n).basis();
    for (const auto& t : a.basis()) {
        if (current.size() <= 1) break;
        Matrix g(n * n, current.size());
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t sk = 0; sk < static_cast<std::ptrdiff_t>(current.size()); ++sk) {
            const auto k = static_cast<std::size_t>(sk);
            const Matrix y = t * current[k] - current[k] * t;
            for (std::size_t e = 0; e < n * n; ++e) g(e, k) = y.data()[e];
        }
        const Matrix coeffs = kernel_basis(g);
        RowSpace next(n * n);
        for (std::size_t c = 0; c < coeffs.cols(); ++c) {
            Matrix s(n, n);
            for (std::size_t k = 0; k < current.size(); ++k)
                if (!coeffs(k, c).is_zero()) s += coeffs(k, c) * current[k];
            next.insert(vectorize(s));
        }
        current = canonical_matrices(next, n);
    }
    return OperatorSpace::span(n, current, true);
}

InvariantSample sample_invariant_projections(const OperatorSpace& a, std::uint64_t seed, std::size_t count,
                                             Field field) {
    InvariantSample out;
    out.requested = count;
    if (count == 0) return out;
    Rng rng(seed);
    std::vector<Subspace>& found = out.subspaces;
    auto add = [&](Subspace s) {
        if (found.size() >= count || std::find(found.begin(), found.end(), s) != found.end()) return false;
        found.push_back(std::move(s));
        return true;
    };

    const std::size_t max_attempts = 32 * count + 64;
    for (std::size_t attempt = 0; attempt < max_attempts && found.size() < count; ++attempt) {
        if (!add(cyclic_invariant_subspace(a, rng.vector(a.ambient_dim(), field)))) continue;
        // Close the new element against everything found so far.
        const Subspace fresh = found.back();
        const std::size_t before = found.size() - 1;
        for (std::size_t i = 0; i < before && found.size() < count; ++i) {
            add(meet(found[i], fresh));
            add(join(found[i], fresh));
        }
    }
    if (found.size() >= count) return out;

    // Cyclic vectors rarely land in a proper invariant subspace when Lat A is a
    // continuum (ampliations). Any S commuting with A maps Lat A into itself, so
    // push what was found through random commutant elements.
    const std::vector<Matrix> comm = commutant(a).basis();
    if (comm.size() <= 1) return out;
    for (std::size_t attempt = 0; attempt < max_attempts && found.size() < count; ++attempt) {
        const Subspace& base = found[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(found.size()) - 1))];
        if (base.is_zero() || base.is_full()) continue;
        const Vector c = rng.vector(comm.size(), field);
        Matrix s(a.ambient_dim(), a.ambient_dim());
        for (std::size_t k = 0; k < comm.size(); ++k)
            if (!c[k].is_zero()) s += c[k] * comm[k];
        std::vector<Vector> image;
        for (const auto& v : base.basis().columns()) image.push_back(s * v);
        if (!add(Subspace::span(a.ambient_dim(), image))) continue;
        const Subspace fresh = found.back();
        const std::size_t before = found.size() - 1;
        for (std::size_t i = 0; i < before && found.size() < count; ++i) {
            add(meet(found[i], fresh));
            add(join(found[i], fresh));
        }
    }
    return out;
}

OperatorSpace operator_space_tensor_span(const OperatorSpace& a, const OperatorSpace& b) {
    const std::size_t n = a.ambient_dim() * b.ambient_dim();
    std::vector<Matrix> mats;
    const auto ba = a.basis();
    const auto bb = b.basis();
    for (const auto& s : ba)
        for (const auto& t : bb) mats.push_back(kronecker(s, t));
    return OperatorSpace::span(n, mats, a.is_algebra() && b.is_algebra());
}

OperatorSpace ampliation(std::size_t k_dim, const OperatorSpace& a) {
    return operator_space_tensor_span(OperatorSpace::scalars(k_dim), a);
}

bool operator_space_equal(const OperatorSpace& a, const OperatorSpace& b) {
    require_dim(a.ambient_dim(), b.ambient_dim(), "operator space comparison");
    if (a.dimension() != b.dimension()) return false;
    const auto basis = a.basis();
    return std::all_of(basis.begin(), basis.end(), [&](const Matrix& t) { return b.contains(t); });
}

} // namespace slt
