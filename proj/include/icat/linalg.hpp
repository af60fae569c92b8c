#pragma once

#include <optional>
#include <vector>

#include "icat/matrix.hpp"

namespace icat {

struct Echelon {
    Matrix reduced;                   // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Canonical basis of the column space: the nonzero columns of the reduced
/// column echelon form. Depends only on the subspace, not on the spanning set.
Matrix column_echelon(const Matrix& spanning);

/// Canonical (reduced column echelon) basis of ker f, as a cols(f) x k matrix.
Matrix kernel_basis(const Matrix& f);

/// Canonical surjection onto coker f: transpose of the kernel basis of f^T.
Matrix cokernel_projection(const Matrix& f);

/// Unique g with iota * g = f; iota must have full column rank.
/// Throws NoFactorization when f leaves the column space of iota.
Matrix factor_left(const Matrix& iota, const Matrix& f);

/// Some x with a * x = b, or nullopt.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Throws NotInvertible.
Matrix inverse(const Matrix& a);

bool is_invertible(const Matrix& a);

}  // namespace icat
