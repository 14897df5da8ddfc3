#ifndef SLT_LINALG_HPP
#define SLT_LINALG_HPP

#include "slt/matrix.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace slt {

struct EchelonForm {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank() const noexcept { return pivots.size(); }
};

/// Unique reduced row-echelon form (Gauss-Jordan, exact).
EchelonForm reduced_row_echelon(Matrix a);
std::size_t rank(const Matrix& a);

/// Canonical basis of {x : Ax = 0} as the columns of the result: one column per
/// free variable, with a 1 in that variable and zeros in the other free slots.
Matrix kernel_basis(const Matrix& a);

/// Inverse of a square nonsingular matrix; throws std::domain_error if singular.
Matrix inverse(const Matrix& a);

/// Orthogonal projection B'(B'*B')^-1 B'* onto the column space of b.
Matrix orthogonal_projection(const Matrix& b);

/*
 * Incrementally maintained reduced row-echelon basis of a span.
 *
 * Rows are kept fully reduced with unit pivots and sorted by pivot column,
 * so rows() is always the RREF of everything inserted so far. This is the
 * workhorse behind joins, operator-space canonicalization and rank-one spans.
 */
class RowSpace {
public:
    explicit RowSpace(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    const std::vector<Vector>& rows() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// v minus its projection along the echelon basis (zero iff v is in the span).
    Vector reduce(Vector v) const;
    bool contains(std::span<const Scalar> v) const;
    /// Returns true when v enlarged the span.
    bool insert(std::span<const Scalar> v);

    Matrix as_rows() const { return Matrix::from_rows(dim_, rows_); }

private:
    std::size_t dim_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace slt

#endif
