#include "icat/matrix.hpp"

#include <sstream>

#include "icat/kernels.hpp"

namespace icat {

Matrix::Matrix(std::size_t rows, std::size_t cols, Field f)
    : rows_(rows), cols_(cols), field_(f), data_(rows * cols, Scalar(f)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows, Field f) : field_(f) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "ragged matrix literal");
        for (long v : r) data_.emplace_back(v, f);
    }
}

Matrix Matrix::identity(std::size_t n, Field f) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1, f);
    return m;
}

Matrix Matrix::column(const std::vector<Scalar>& v, Field f) {
    Matrix m(v.size(), 1, f);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

Matrix Matrix::unit_column(std::size_t n, std::size_t i, Field f) {
    Matrix m(n, 1, f);
    m(i, 0) = Scalar(1, f);
    return m;
}

Matrix Matrix::swap(std::size_t v, std::size_t w, Field f) {
    Matrix m(v * w, v * w, f);
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = 0; j < w; ++j) m(j * v + i, i * w + j) = Scalar(1, f);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::col(std::size_t c) const { return cols_range(c, c + 1); }

Matrix Matrix::cols_range(std::size_t begin, std::size_t end) const {
    Matrix m(rows_, end - begin, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = begin; j < end; ++j) m(i, j - begin) = (*this)(i, j);
    return m;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
    Matrix m(idx.size(), cols_, field_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(idx[i], j);
    return m;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const {
    Matrix m(rows_, idx.size(), field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const { return rows_ == cols_ && *this == identity(rows_, field_); }

std::size_t Matrix::first_differing_col(const Matrix& other) const {
    require_same_shape(*this, other, "comparison");
    for (std::size_t j = 0; j < cols_; ++j)
        for (std::size_t i = 0; i < rows_; ++i)
            if (!((*this)(i, j) == other(i, j))) return j;
    return cols_;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    require_same_shape(*this, o, "sum");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    require_same_shape(*this, o, "difference");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
    for (auto& x : data_) x *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) { return kernels::multiply(a, b); }

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << ", ";
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* where) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorKind::ShapeMismatch, std::string(where) + ": " + std::to_string(a.rows()) + "x" +
                                                  std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                                                  "x" + std::to_string(b.cols()));
    if (!(a.field() == b.field())) throw Error(ErrorKind::FieldMismatch, where);
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "hstack");
    Matrix m(a.rows(), a.cols() + b.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) { return vstack({a, b}, a.cols(), a.field()); }

Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols, Field f) {
    std::size_t rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw Error(ErrorKind::ShapeMismatch, "vstack");
        rows += b.rows();
    }
    Matrix m(rows, cols, f);
    std::size_t r0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < cols; ++j) m(r0 + i, j) = b(i, j);
        r0 += b.rows();
    }
    return m;
}

Matrix tensor(const Matrix& f, const Matrix& g) {
    if (!(f.field() == g.field())) throw Error(ErrorKind::FieldMismatch, "tensor");
    Matrix m(f.rows() * g.rows(), f.cols() * g.cols(), f.field());
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j) {
            const Scalar& x = f(i, j);
            if (x.is_zero()) continue;
            for (std::size_t k = 0; k < g.rows(); ++k)
                for (std::size_t l = 0; l < g.cols(); ++l)
                    if (!g(k, l).is_zero()) m(i * g.rows() + k, j * g.cols() + l) = x * g(k, l);
        }
    return m;
}

Matrix tensor(std::initializer_list<Matrix> factors) {
    auto it = factors.begin();
    Matrix m = *it;
    for (++it; it != factors.end(); ++it) m = tensor(m, *it);
    return m;
}

}  // namespace icat
