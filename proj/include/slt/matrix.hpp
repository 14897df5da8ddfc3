#ifndef SLT_MATRIX_HPP
#define SLT_MATRIX_HPP

#include "slt/scalar.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace slt {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over the exact field. 0×n and n×0 shapes are valid.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    /// Matrix whose columns are the given vectors (all of length `rows`).
    static Matrix from_columns(std::size_t rows, std::span<const Vector> columns);
    static Matrix from_rows(std::size_t cols, std::span<const Vector> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    const std::vector<Scalar>& data() const noexcept { return data_; }

    Vector column(std::size_t j) const;
    std::vector<Vector> columns() const;

    Matrix transpose() const;
    /// Conjugate transpose.
    Matrix adjoint() const;
    bool is_zero() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, Matrix a);
    friend Vector operator*(const Matrix& a, std::span<const Scalar> x);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Kronecker product: block (i,j) of the result is a(i,j)·b.
Matrix kronecker(const Matrix& a, const Matrix& b);
Vector kronecker(std::span<const Scalar> u, std::span<const Scalar> v);

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

/// Column-stacking vectorization: vec(T)[j*n + i] = T(i,j).
Vector vectorize(const Matrix& t);
Matrix unvectorize(std::span<const Scalar> v, std::size_t rows, std::size_t cols);

/// Standard inner product (x, y) = sum x_i conj(y_i), linear in the first slot.
Scalar inner(std::span<const Scalar> x, std::span<const Scalar> y);
bool is_zero(std::span<const Scalar> v);

} // namespace slt

#endif
