#pragma once

#include <cstddef>

#include "icat/matrix.hpp"

namespace icat::kernels {

// Exact dense kernels. The parallel versions split independent output rows or
// columns across OpenMP threads; the *_serial versions are the reference
// implementations the tests compare against.

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix multiply_serial(const Matrix& a, const Matrix& b);

/// Applies I_left (x) f (x) I_right to every column of v, where v has
/// left * f.cols() * right rows. Never materialises the Kronecker product.
Matrix apply_block(const Matrix& v, std::size_t left, const Matrix& f, std::size_t right);
Matrix apply_block_serial(const Matrix& v, std::size_t left, const Matrix& f, std::size_t right);

/// Work size (multiply-adds) below which the parallel kernels stay serial.
inline constexpr std::size_t parallel_threshold = 1u << 14;

}  // namespace icat::kernels
