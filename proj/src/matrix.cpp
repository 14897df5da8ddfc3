#include "slt/matrix.hpp"

#include "slt/errors.hpp"

#include <algorithm>
#include <string>

namespace slt {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch(std::string(op) + ": shapes " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()));
}

} // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw DimensionMismatch("matrix entry count does not match shape");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, std::span<const Vector> columns) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows) throw DimensionMismatch("column length does not match row count");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
}

Matrix Matrix::from_rows(std::size_t cols, std::span<const Vector> rows) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DimensionMismatch("row length does not match column count");
        std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * cols));
    }
    return m;
}

Vector Matrix::column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

std::vector<Vector> Matrix::columns() const {
    std::vector<Vector> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::adjoint() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j).conj();
    return t;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix& Matrix::operator+=(const Matrix& o) {
    require_same_shape(*this, o, "matrix sum");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    require_same_shape(*this, o, "matrix difference");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
        throw DimensionMismatch("matrix product: inner dimensions " + std::to_string(a.cols_) + " and " +
                                std::to_string(b.rows_));
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& bkj = b(k, j);
                if (!bkj.is_zero()) c(i, j) += aik * bkj;
            }
        }
    return c;
}

Matrix operator*(const Scalar& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
}

Vector operator*(const Matrix& a, std::span<const Scalar> x) {
    if (a.cols_ != x.size()) throw DimensionMismatch("matrix-vector product: length mismatch");
    Vector y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (!a(i, k).is_zero() && !x[k].is_zero()) y[i] += a(i, k) * x[k];
    return y;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar& aij = a(i, j);
            if (aij.is_zero()) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    if (!b(p, q).is_zero()) k(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
        }
    return k;
}

Vector kronecker(std::span<const Scalar> u, std::span<const Scalar> v) {
    Vector w(u.size() * v.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) w[i * v.size() + j] = u[i] * v[j];
    }
    return w;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("hstack: row counts differ");
    Matrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw DimensionMismatch("vstack: column counts differ");
    std::vector<Scalar> data = a.data();
    data.insert(data.end(), b.data().begin(), b.data().end());
    return Matrix(a.rows() + b.rows(), a.cols(), std::move(data));
}

Vector vectorize(const Matrix& t) {
    Vector v(t.rows() * t.cols());
    for (std::size_t j = 0; j < t.cols(); ++j)
        for (std::size_t i = 0; i < t.rows(); ++i) v[j * t.rows() + i] = t(i, j);
    return v;
}

Matrix unvectorize(std::span<const Scalar> v, std::size_t rows, std::size_t cols) {
    if (v.size() != rows * cols) throw DimensionMismatch("unvectorize: length mismatch");
    Matrix t(rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i) t(i, j) = v[j * rows + i];
    return t;
}

Scalar inner(std::span<const Scalar> x, std::span<const Scalar> y) {
    if (x.size() != y.size()) throw DimensionMismatch("inner product: length mismatch");
    Scalar s;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero() && !y[i].is_zero()) s += x[i] * y[i].conj();
    return s;
}

bool is_zero(std::span<const Scalar> v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

} // namespace slt
