#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "homlie/hom_lie.hpp"
#include "homlie/representation.hpp"
#include "homlie/tensor.hpp"

namespace homlie {

/// Seeded generators for property suites. Every draw is a pure function of the
/// seed and the call sequence.
class Fuzzer {
 public:
  explicit Fuzzer(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// Uniform over {-2..2}/{1,2}.
  Rational rational();
  /// Like rational() but never zero.
  Rational nonzero_rational();
  std::size_t index(std::size_t bound);

  Matrix matrix(std::size_t rows, std::size_t cols);
  Vector vector(std::size_t dim);
  Tensor3 tensor(std::size_t d1, std::size_t d2, std::size_t d3);
  /// A random invertible n x n matrix.
  Matrix invertible(std::size_t n);

  /// Arbitrary r in g (x) g.
  Matrix r_matrix(std::size_t n);
  /// A random point of {r : (phi (x) id) r = (id (x) phi) r}.
  Matrix twist_compatible_r(const HomLieAlgebra& a);
  /// As twist_compatible_r, restricted to skew r.
  Matrix skew_twist_compatible_r(const HomLieAlgebra& a);
  /// A random T: V -> g with T beta = phi T.
  Matrix intertwining_t(const Representation& rep);
  /// A single-entry perturbation of d; for a skew d the result is never skew.
  Tensor3 corrupt_cobracket(const Tensor3& d);

  /// A random combination of a basis of {X : f(X) = 0}, f linear on rows x cols
  /// matrices with values in matrices.
  Matrix kernel_point(std::size_t rows, std::size_t cols, const std::function<Matrix(const Matrix&)>& f);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace homlie
