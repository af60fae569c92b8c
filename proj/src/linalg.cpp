#include "icat/linalg.hpp"

namespace icat {

Echelon rref(const Matrix& m) {
    Echelon e{m, {}};
    Matrix& a = e.reduced;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!a(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(piv, j), a(r, j));
        const Scalar inv = a(r, c).inverse();
        for (std::size_t j = c; j < cols; ++j)
            if (!a(r, j).is_zero()) a(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            const Scalar factor = a(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!a(r, j).is_zero()) a(i, j) -= factor * a(r, j);
        }
        e.pivots.push_back(c);
        ++r;
    }
    return e;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix column_echelon(const Matrix& spanning) {
    Echelon e = rref(spanning.transpose());
    std::vector<std::size_t> rows(e.pivots.size());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    return e.reduced.select_rows(rows).transpose();
}

Matrix kernel_basis(const Matrix& f) {
    const std::size_t n = f.cols();
    Echelon e = rref(f);
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) free.push_back(j);
    Matrix k(n, free.size(), f.field());
    for (std::size_t c = 0; c < free.size(); ++c) {
        k(free[c], c) = Scalar(1, f.field());
        for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], c) = -e.reduced(r, free[c]);
    }
    if (free.empty()) return k;
    return column_echelon(k);
}

Matrix cokernel_projection(const Matrix& f) { return kernel_basis(f.transpose()).transpose(); }

Matrix factor_left(const Matrix& iota, const Matrix& f) {
    if (iota.rows() != f.rows()) throw Error(ErrorKind::ShapeMismatch, "factor_left row counts differ");
    auto g = solve(iota, f);
    if (!g) throw Error(ErrorKind::NoFactorization, "map does not factor through the inclusion");
    return *g;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "solve");
    const std::size_t n = a.cols();
    Echelon e = rref(hstack(a, b));
    for (auto p : e.pivots)
        if (p >= n) return std::nullopt;
    Matrix x(n, b.cols(), a.field());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.reduced(r, n + j);
    return x;
}

Matrix inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw Error(ErrorKind::NotInvertible, "non-square matrix");
    Echelon e = rref(hstack(a, Matrix::identity(a.rows(), a.field())));
    if (e.pivots.size() < a.rows() || (a.rows() && e.pivots[a.rows() - 1] != a.rows() - 1))
        throw Error(ErrorKind::NotInvertible, "singular matrix");
    return e.reduced.cols_range(a.cols(), 2 * a.cols());
}

bool is_invertible(const Matrix& a) { return a.rows() == a.cols() && rank(a) == a.rows(); }

}  // namespace icat
