#pragma once

#include <cstddef>
#include <string_view>

#include "homlie/tensor.hpp"

namespace homlie::cli {

/// Parses an element of g (x) g written as a sum of terms
///   [coef] e<i> OP e<j>
/// with OP one of "^" (wedge, e_i (x) e_j - e_j (x) e_i), "*" or "x" (plain tensor).
/// Coefficients are rationals such as 2, -1/2; "0" or "zero" gives r = 0.
/// Throws std::invalid_argument with the offending position.
Matrix parse_r_expression(std::string_view text, std::size_t n);

}  // namespace homlie::cli
