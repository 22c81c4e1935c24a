#pragma once

#include <optional>
#include <vector>

#include "homlie/tensor.hpp"

namespace homlie {

/// Reduced row echelon form by exact Gauss-Jordan elimination.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
};

RowEchelon row_reduce(const Matrix& m);

std::size_t rank(const Matrix& m);

Rational determinant(const Matrix& m);

/// Inverse of a square matrix, or nullopt when it is singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Basis of {x : m x = 0}, one vector per free column, in column order.
std::vector<Vector> nullspace(const Matrix& m);

}  // namespace homlie
