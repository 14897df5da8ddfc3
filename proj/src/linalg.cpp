#include "slt/linalg.hpp"

#include "slt/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace slt {

EchelonForm reduced_row_echelon(Matrix a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && a(p, c).is_zero()) ++p;
        if (p == m) continue;
        if (p != r)
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(r, j));
        const Scalar inv = a(r, c).inverse();
        for (std::size_t j = c; j < n; ++j)
            if (!a(r, j).is_zero()) a(r, j) *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            const Scalar f = a(i, c);
            for (std::size_t j = c; j < n; ++j)
                if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& a) {
    return reduced_row_echelon(a).rank();
}

Matrix kernel_basis(const Matrix& a) {
    const std::size_t n = a.cols();
    const EchelonForm e = reduced_row_echelon(a);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;

    std::vector<Vector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vector v(n);
        v[f] = Scalar(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
        basis.push_back(std::move(v));
    }
    return Matrix::from_columns(n, basis);
}

Matrix inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    const EchelonForm e = reduced_row_echelon(hstack(a, Matrix::identity(n)));
    if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) throw std::domain_error("singular matrix");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

Matrix orthogonal_projection(const Matrix& b) {
    const std::size_t n = b.rows();
    // Column basis B' of the column space: the pivot columns of b.
    const EchelonForm e = reduced_row_echelon(b);
    if (e.rank() == 0) return Matrix::zero(n, n);
    std::vector<Vector> cols;
    cols.reserve(e.rank());
    for (std::size_t p : e.pivots) cols.push_back(b.column(p));
    const Matrix basis = Matrix::from_columns(n, cols);
    const Matrix adj = basis.adjoint();
    return basis * inverse(adj * basis) * adj;
}

Vector RowSpace::reduce(Vector v) const {
    if (v.size() != dim_) throw DimensionMismatch("row space: vector length mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const std::size_t p = pivots_[r];
        if (v[p].is_zero()) continue;
        const Scalar f = v[p];
        const Vector& row = rows_[r];
        for (std::size_t j = p; j < dim_; ++j)
            if (!row[j].is_zero()) v[j] -= f * row[j];
    }
    return v;
}

bool RowSpace::contains(std::span<const Scalar> v) const {
    return is_zero(reduce(Vector(v.begin(), v.end())));
}

bool RowSpace::insert(std::span<const Scalar> v) {
    Vector w = reduce(Vector(v.begin(), v.end()));
    auto lead = std::find_if(w.begin(), w.end(), [](const Scalar& s) { return !s.is_zero(); });
    if (lead == w.end()) return false;
    const std::size_t p = static_cast<std::size_t>(lead - w.begin());
    const Scalar inv = w[p].inverse();
    for (std::size_t j = p; j < dim_; ++j)
        if (!w[j].is_zero()) w[j] *= inv;
    // Clear the new pivot column from the existing rows to stay fully reduced.
    for (auto& row : rows_) {
        if (row[p].is_zero()) continue;
        const Scalar f = row[p];
        for (std::size_t j = p; j < dim_; ++j)
            if (!w[j].is_zero()) row[j] -= f * w[j];
    }
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(w));
    return true;
}

} // namespace slt
