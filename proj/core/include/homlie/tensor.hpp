#pragma once

// Dense exact tensors of order 1, 2 and 3 over the rationals.
//
// Conventions shared by the whole library:
//  * A Matrix M represents the linear map e_j -> sum_i M(i, j) e_i, i.e.
//    column j is the image of the j-th basis vector.
//  * A Matrix t also represents an element of V (x) W as sum t(i, j) e_i (x) e_j.
//  * A Tensor3 t represents sum t(i, j, k) e_i (x) e_j (x) e_k.
//  * The matrix of a dual map phi^* in the dual basis is the transpose of phi.

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "homlie/rational.hpp"

namespace homlie {

/// Raised when operand shapes do not fit together. The message names the operands.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim) : entries_(dim) {}
  Vector(std::initializer_list<Rational> entries) : entries_(entries) {}
  explicit Vector(std::vector<Rational> entries) : entries_(std::move(entries)) {}

  static Vector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  Rational& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<Rational>& entries() const { return entries_; }

  bool is_zero() const;

  Vector& operator+=(const Vector& rhs);
  Vector& operator-=(const Vector& rhs);
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Rational& s, Vector v);
  Vector operator-() const;
  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<Rational> entries_;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Row-major nested initializer; all rows must have equal length.
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  /// The matrix with the given vectors as columns.
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  Vector column(std::size_t j) const;
  Vector row(std::size_t i) const;
  Matrix transpose() const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Rational& s, Matrix m);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  Matrix operator-() const;
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(std::size_t d1, std::size_t d2, std::size_t d3)
      : d1_(d1), d2_(d2), d3_(d3), data_(d1 * d2 * d3) {}
  /// Cube of side n.
  explicit Tensor3(std::size_t n) : Tensor3(n, n, n) {}

  /// Rank-one tensor a (x) b (x) c.
  static Tensor3 outer(const Vector& a, const Vector& b, const Vector& c);

  std::size_t dim1() const { return d1_; }
  std::size_t dim2() const { return d2_; }
  std::size_t dim3() const { return d3_; }

  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * d2_ + j) * d3_ + k];
  }
  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return data_[(i * d2_ + j) * d3_ + k];
  }

  /// The matrix t(i, ., .) for fixed first index.
  Matrix slice(std::size_t i) const;
  void set_slice(std::size_t i, const Matrix& m);
  bool is_zero() const;

  Tensor3& operator+=(const Tensor3& rhs);
  Tensor3& operator-=(const Tensor3& rhs);
  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
  friend Tensor3 operator*(const Rational& s, Tensor3 t);
  Tensor3 operator-() const;
  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  std::size_t d1_ = 0, d2_ = 0, d3_ = 0;
  std::vector<Rational> data_;
};

/// (A (x) B) t for t in V (x) W: entries sum_{p,q} A(i,p) B(j,q) t(p,q).
Matrix apply_pair(const Matrix& a, const Matrix& b, const Matrix& t);

/// (A (x) B (x) C) t.
Tensor3 apply_triple(const Matrix& a, const Matrix& b, const Matrix& c, const Tensor3& t);

/// Swaps the two tensor factors: x (x) y -> y (x) x.
Matrix sigma2(const Matrix& t);

/// Rotates tensor factors `times` times, each step x (x) y (x) z -> z (x) x (x) y.
Tensor3 cyclic3(const Tensor3& t, int times = 1);

/// Sum of t over its three cyclic rotations.
Tensor3 cyclic_sum(const Tensor3& t);

/// <xi, v> = sum_i xi_i v_i for a dual-basis vector xi.
Rational pair_dual(const Vector& xi, const Vector& v);

/// <t, a (x) b> for t in V (x) W.
Rational pair_dual(const Matrix& t, const Vector& a, const Vector& b);

/// <t, a (x) b (x) c>.
Rational pair_dual(const Tensor3& t, const Vector& a, const Vector& b, const Vector& c);

/// Contracts slots 1 and 2 of t with a and b; the result lives in slot 3.
Vector contract12(const Tensor3& t, const Vector& a, const Vector& b);

/// Contracts slot 1 of t with a; the result lives in the second factor.
Vector contract1(const Matrix& t, const Vector& a);

/// Kronecker-style tensor product of two vectors as an element of V (x) W.
Matrix outer(const Vector& a, const Vector& b);

/// Block-diagonal sum of two square maps.
Matrix direct_sum(const Matrix& a, const Matrix& b);

}  // namespace homlie
