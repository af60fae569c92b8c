#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "icat/scalar.hpp"

namespace icat {

/// Dense row-major matrix over one exact field. An m x n matrix is a linear
/// map from an n-dimensional space to an m-dimensional one acting on columns.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, Field f = {});
    /// Integer literal constructor, mainly for fixtures and tests.
    Matrix(std::initializer_list<std::initializer_list<long>> rows, Field f = {});

    static Matrix identity(std::size_t n, Field f = {});
    static Matrix zero(std::size_t rows, std::size_t cols, Field f = {}) { return Matrix(rows, cols, f); }
    static Matrix column(const std::vector<Scalar>& v, Field f = {});
    static Matrix unit_column(std::size_t n, std::size_t i, Field f = {});
    /// Matrix of the tensor-factor swap V (x) W -> W (x) V.
    static Matrix swap(std::size_t v, std::size_t w, Field f = {});

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Field field() const { return field_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, long v) { data_[r * cols_ + c] = Scalar(v, field_); }

    const std::vector<Scalar>& data() const { return data_; }

    Matrix transpose() const;
    Matrix col(std::size_t c) const;
    Matrix cols_range(std::size_t begin, std::size_t end) const;
    Matrix select_rows(const std::vector<std::size_t>& idx) const;
    Matrix select_cols(const std::vector<std::size_t>& idx) const;

    bool is_zero() const;
    bool is_identity() const;
    /// First column index on which this and other differ, or cols() if none.
    std::size_t first_differing_col(const Matrix& other) const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Scalar& s);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);

    friend bool operator==(const Matrix& a, const Matrix& b);

    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Field field_{};
    std::vector<Scalar> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols, Field f);

/// Kronecker product with e_i (x) e_j at index i * dim(second) + j.
Matrix tensor(const Matrix& f, const Matrix& g);
Matrix tensor(std::initializer_list<Matrix> factors);

void require_same_shape(const Matrix& a, const Matrix& b, const char* where);

}  // namespace icat
