#ifndef SLT_SUBSPACE_HPP
#define SLT_SUBSPACE_HPP

#include "slt/linalg.hpp"

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace slt {

/*
 * A subspace of F^n, held in canonical form.
 *
 * The basis is the RREF of any spanning set, so two subspaces are equal
 * exactly when their canonical bases agree entrywise. The orthogonal
 * projection is computed once at construction and cached.
 */
class Subspace {
public:
    Subspace() = default;

    static Subspace span(std::size_t dim, std::span<const Vector> vectors);
    /// Column space of b.
    static Subspace from_columns(const Matrix& b);
    static Subspace zero(std::size_t dim);
    static Subspace full(std::size_t dim);
    static Subspace coordinate(std::size_t dim, std::span<const std::size_t> axes);

    std::size_t ambient_dim() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    bool is_zero() const noexcept { return rows_.empty(); }
    bool is_full() const noexcept { return rows_.size() == dim_; }

    /// Canonical basis vectors (rows of the RREF).
    const std::vector<Vector>& basis_vectors() const noexcept { return rows_; }
    /// Canonical basis as an n×r matrix whose columns are the basis vectors.
    Matrix basis() const { return Matrix::from_columns(dim_, rows_); }
    const Matrix& projection() const noexcept { return projection_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    bool contains(std::span<const Scalar> v) const;
    std::string to_string() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.dim_ == b.dim_ && a.rows_ == b.rows_;
    }
    /// Canonical order: by ambient dimension, then rank, then basis entries lexicographically.
    friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

private:
    Subspace(std::size_t dim, RowSpace echelon);

    std::size_t dim_ = 0;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
    Matrix projection_;
};

Subspace meet(const Subspace& s, const Subspace& t);
Subspace join(const Subspace& s, const Subspace& t);
Subspace perp(const Subspace& s);
/// range(s) ⊆ range(t)
bool leq(const Subspace& s, const Subspace& t);
/// Elementary tensor s⊗t inside F^(m·n); the range of kron(P_s, P_t).
Subspace tensor(const Subspace& s, const Subspace& t);

/// Empty join is the zero subspace; empty meet is the whole space.
Subspace join_all(std::size_t dim, std::span<const Subspace> family);
Subspace meet_all(std::size_t dim, std::span<const Subspace> family);

} // namespace slt

#endif
