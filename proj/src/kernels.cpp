#include "icat/kernels.hpp"

#include <string>

namespace icat::kernels {

namespace {

void check_mult(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw Error(ErrorKind::ShapeMismatch, "product of " + std::to_string(a.rows()) + "x" +
                                                  std::to_string(a.cols()) + " and " + std::to_string(b.rows()) +
                                                  "x" + std::to_string(b.cols()));
    if (!(a.field() == b.field())) throw Error(ErrorKind::FieldMismatch, "matrix product");
}

void check_block(const Matrix& v, std::size_t left, const Matrix& f, std::size_t right) {
    if (v.rows() != left * f.cols() * right)
        throw Error(ErrorKind::ShapeMismatch, "block application: " + std::to_string(v.rows()) + " rows vs " +
                                                  std::to_string(left) + "*" + std::to_string(f.cols()) + "*" +
                                                  std::to_string(right));
    if (!(v.field() == f.field())) throw Error(ErrorKind::FieldMismatch, "block application");
}

// Row i of a*b. Zero entries of a are skipped; structure maps are sparse.
void multiply_row(const Matrix& a, const Matrix& b, Matrix& out, std::size_t i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
        const Scalar& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols(); ++j) out(i, j).add_product(x, b(k, j));
    }
}

// Column c of (I (x) f (x) I) v.
void apply_column(const Matrix& v, std::size_t left, const Matrix& f, std::size_t right, Matrix& out,
                  std::size_t c) {
    const std::size_t q = f.cols();
    const std::size_t qo = f.rows();
    for (std::size_t l = 0; l < left; ++l) {
        for (std::size_t k = 0; k < q; ++k) {
            for (std::size_t r = 0; r < right; ++r) {
                const Scalar& x = v((l * q + k) * right + r, c);
                if (x.is_zero()) continue;
                for (std::size_t i = 0; i < qo; ++i) out((l * qo + i) * right + r, c).add_product(f(i, k), x);
            }
        }
    }
}

}  // namespace

Matrix multiply_serial(const Matrix& a, const Matrix& b) {
    check_mult(a, b);
    Matrix out(a.rows(), b.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i) multiply_row(a, b, out, i);
    return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    check_mult(a, b);
    Matrix out(a.rows(), b.cols(), a.field());
    const std::size_t work = a.rows() * a.cols() * b.cols();
    const auto n = static_cast<long>(a.rows());
#pragma omp parallel for schedule(dynamic) if (work > parallel_threshold)
    for (long i = 0; i < n; ++i) multiply_row(a, b, out, static_cast<std::size_t>(i));
    return out;
}

Matrix apply_block_serial(const Matrix& v, std::size_t left, const Matrix& f, std::size_t right) {
    check_block(v, left, f, right);
    Matrix out(left * f.rows() * right, v.cols(), v.field());
    for (std::size_t c = 0; c < v.cols(); ++c) apply_column(v, left, f, right, out, c);
    return out;
}

Matrix apply_block(const Matrix& v, std::size_t left, const Matrix& f, std::size_t right) {
    check_block(v, left, f, right);
    Matrix out(left * f.rows() * right, v.cols(), v.field());
    const std::size_t work = v.rows() * f.rows() * v.cols();
    const auto n = static_cast<long>(v.cols());
#pragma omp parallel for schedule(dynamic) if (work > parallel_threshold)
    for (long c = 0; c < n; ++c) apply_column(v, left, f, right, out, static_cast<std::size_t>(c));
    return out;
}

}  // namespace icat::kernels
