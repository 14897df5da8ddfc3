#include "slt/subspace.hpp"

#include "slt/errors.hpp"

#include <algorithm>
#include <sstream>

namespace slt {

namespace {

void require_same_dim(const Subspace& s, const Subspace& t, const char* op) {
    if (s.ambient_dim() != t.ambient_dim())
        throw DimensionMismatch(std::string(op) + ": ambient dimensions " + std::to_string(s.ambient_dim()) +
                                " and " + std::to_string(t.ambient_dim()));
}

} // namespace

Subspace::Subspace(std::size_t dim, RowSpace echelon)
    : dim_(dim), rows_(echelon.rows()), pivots_(echelon.pivots()) {
    projection_ = orthogonal_projection(basis());
}

Subspace Subspace::span(std::size_t dim, std::span<const Vector> vectors) {
    RowSpace rs(dim);
    for (const auto& v : vectors) {
        if (v.size() != dim) throw DimensionMismatch("spanning vector has the wrong length");
        rs.insert(v);
    }
    return Subspace(dim, std::move(rs));
}

Subspace Subspace::from_columns(const Matrix& b) {
    const auto cols = b.columns();
    return span(b.rows(), cols);
}

Subspace Subspace::zero(std::size_t dim) {
    return Subspace(dim, RowSpace(dim));
}

Subspace Subspace::full(std::size_t dim) {
    RowSpace rs(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        Vector e(dim);
        e[i] = Scalar(1);
        rs.insert(e);
    }
    return Subspace(dim, std::move(rs));
}

Subspace Subspace::coordinate(std::size_t dim, std::span<const std::size_t> axes) {
    RowSpace rs(dim);
    for (std::size_t a : axes) {
        if (a >= dim) throw DimensionMismatch("coordinate axis out of range");
        Vector e(dim);
        e[a] = Scalar(1);
        rs.insert(e);
    }
    return Subspace(dim, std::move(rs));
}

bool Subspace::contains(std::span<const Scalar> v) const {
    if (v.size() != dim_) throw DimensionMismatch("membership test: vector length mismatch");
    // Reduce against the RREF rows directly; they are fully reduced with unit pivots.
    Vector w(v.begin(), v.end());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const std::size_t p = pivots_[r];
        if (w[p].is_zero()) continue;
        const Scalar f = w[p];
        for (std::size_t j = p; j < dim_; ++j)
            if (!rows_[r][j].is_zero()) w[j] -= f * rows_[r][j];
    }
    return slt::is_zero(w);
}

std::string Subspace::to_string() const {
    std::ostringstream os;
    os << "span{";
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        os << (r ? ", " : "") << "(";
        for (std::size_t j = 0; j < dim_; ++j) os << (j ? "," : "") << rows_[r][j].to_string();
        os << ")";
    }
    os << "} in F^" << dim_;
    return os.str();
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    if (auto c = a.rows_.size() <=> b.rows_.size(); c != 0) return c;
    for (std::size_t r = 0; r < a.rows_.size(); ++r)
        for (std::size_t j = 0; j < a.dim_; ++j)
            if (auto c = a.rows_[r][j] <=> b.rows_[r][j]; c != 0) return c;
    return std::strong_ordering::equal;
}

Subspace meet(const Subspace& s, const Subspace& t) {
    require_same_dim(s, t, "meet");
    const std::size_t n = s.ambient_dim();
    if (s.is_zero() || t.is_zero()) return Subspace::zero(n);
    if (s.is_full()) return t;
    if (t.is_full()) return s;
    // x = B_s a = B_t b  <=>  [B_s | -B_t] (a; b) = 0.
    const Matrix bs = s.basis();
    const Matrix bt = t.basis();
    const Matrix coeffs = kernel_basis(hstack(bs, Scalar(-1) * bt));
    std::vector<Vector> vectors;
    vectors.reserve(coeffs.cols());
    for (std::size_t k = 0; k < coeffs.cols(); ++k) {
        Vector a(s.rank());
        for (std::size_t i = 0; i < s.rank(); ++i) a[i] = coeffs(i, k);
        vectors.push_back(bs * a);
    }
    return Subspace::span(n, vectors);
}

Subspace join(const Subspace& s, const Subspace& t) {
    require_same_dim(s, t, "join");
    if (s.is_zero() || t.is_full()) return t;
    if (t.is_zero() || s.is_full()) return s;
    std::vector<Vector> vectors = s.basis_vectors();
    vectors.insert(vectors.end(), t.basis_vectors().begin(), t.basis_vectors().end());
    return Subspace::span(s.ambient_dim(), vectors);
}

Subspace perp(const Subspace& s) {
    const std::size_t n = s.ambient_dim();
    if (s.is_zero()) return Subspace::full(n);
    if (s.is_full()) return Subspace::zero(n);
    // x ⟂ range(B)  <=>  B* x = 0.
    return Subspace::from_columns(kernel_basis(s.basis().adjoint()));
}

bool leq(const Subspace& s, const Subspace& t) {
    require_same_dim(s, t, "order test");
    if (s.rank() > t.rank()) return false;
    return std::all_of(s.basis_vectors().begin(), s.basis_vectors().end(),
                       [&](const Vector& v) { return t.contains(v); });
}

Subspace tensor(const Subspace& s, const Subspace& t) {
    const std::size_t n = s.ambient_dim() * t.ambient_dim();
    std::vector<Vector> vectors;
    vectors.reserve(s.rank() * t.rank());
    for (const auto& u : s.basis_vectors())
        for (const auto& v : t.basis_vectors()) vectors.push_back(kronecker(u, v));
    return Subspace::span(n, vectors);
}

Subspace join_all(std::size_t dim, std::span<const Subspace> family) {
    std::vector<Vector> vectors;
    for (const auto& s : family) {
        if (s.ambient_dim() != dim) throw DimensionMismatch("join: ambient dimension mismatch");
        vectors.insert(vectors.end(), s.basis_vectors().begin(), s.basis_vectors().end());
    }
    return Subspace::span(dim, vectors);
}

Subspace meet_all(std::size_t dim, std::span<const Subspace> family) {
    Subspace acc = Subspace::full(dim);
    for (const auto& s : family) acc = meet(acc, s);
    return acc;
}

} // namespace slt
