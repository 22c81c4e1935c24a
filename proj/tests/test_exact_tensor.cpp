#include <doctest.h>

#include "homlie/fuzz.hpp"
#include "homlie/linalg.hpp"
#include "homlie/rational.hpp"
#include "homlie/tensor.hpp"

using namespace homlie;

TEST_CASE("rational normal form and exactness") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6).to_string() == "-1/2");
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  Rational a(1, 3), b(5, 7);
  CHECK(a + b - b == a);
  CHECK((a * b) / b == a);
  // far outside machine integers
  Rational big = Rational::parse("123456789012345678901234567890/7");
  CHECK(big * Rational(7) == Rational::parse("123456789012345678901234567890"));
}

TEST_CASE("apply_pair") {
  Matrix r{{1, 2}, {3, 4}};
  CHECK(apply_pair(Matrix::identity(2), Matrix::identity(2), r) == r);
  CHECK(apply_pair(Matrix::zero(2, 2), Matrix{{1, 1}, {0, 1}}, r).is_zero());
  // A e1 = 0, so A (x) Id kills e1 (x) e2
  Matrix e12(2, 2);
  e12(0, 1) = 1;
  CHECK(apply_pair(Matrix{{0, 1}, {0, 0}}, Matrix::identity(2), e12).is_zero());
  // entrywise definition
  Matrix a{{1, 2}, {0, -1}}, b{{3, 0}, {1, 1}};
  Matrix t = apply_pair(a, b, r);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Rational s;
      for (std::size_t p = 0; p < 2; ++p)
        for (std::size_t q = 0; q < 2; ++q) s += a(i, p) * b(j, q) * r(p, q);
      CHECK(t(i, j) == s);
    }
  CHECK_THROWS_AS(apply_pair(Matrix::identity(3), Matrix::identity(2), r), ShapeError);
}

TEST_CASE("apply_triple") {
  Tensor3 t = Tensor3::outer(Vector{1, 0}, Vector{1, 0}, Vector{0, 1});
  CHECK(apply_triple(Matrix::identity(2), Matrix::identity(2), Matrix::identity(2), t) == t);
  CHECK(apply_triple(Matrix::identity(2), Matrix::identity(2), Matrix::zero(2, 2), t).is_zero());
  Matrix swap{{0, 1}, {1, 0}};
  CHECK(apply_triple(swap, Matrix::identity(2), Matrix::identity(2), t) ==
        Tensor3::outer(Vector{0, 1}, Vector{1, 0}, Vector{0, 1}));
}

TEST_CASE("sigma2 and cyclic3") {
  Matrix e12(2, 2);
  e12(0, 1) = 1;
  CHECK(sigma2(e12) == e12.transpose());
  CHECK(sigma2(e12)(1, 0) == Rational(1));
  Fuzzer fz(7);
  Matrix m = fz.matrix(3, 3);
  CHECK(sigma2(sigma2(m)) == m);
  Tensor3 t = fz.tensor(3, 3, 3);
  CHECK(cyclic3(t, 3) == t);
  CHECK(cyclic3(cyclic3(t)) == cyclic3(t, 2));
  // (i,j,k) -> (k,i,j): x (x) y (x) z goes to z (x) x (x) y
  Tensor3 xyz = Tensor3::outer(Vector{1, 0, 0}, Vector{0, 1, 0}, Vector{0, 0, 1});
  CHECK(cyclic3(xyz) == Tensor3::outer(Vector{0, 0, 1}, Vector{1, 0, 0}, Vector{0, 1, 0}));
  CHECK(cyclic_sum(t) == t + cyclic3(t) + cyclic3(t, 2));
}

TEST_CASE("pairings and contractions") {
  Vector f1{1, 0}, f2{0, 1}, e1{1, 0}, e2{0, 1};
  CHECK(pair_dual(f1, e1) == Rational(1));
  CHECK(pair_dual(f1, e2) == Rational(0));
  Tensor3 t = Tensor3::outer(e1, e2, e1);
  CHECK(contract12(t, f1, f2) == e1);
  CHECK(contract12(t, f2, f1).is_zero());
  Matrix m = outer(e1, e2);
  CHECK(pair_dual(m, f1, f2) == Rational(1));
  CHECK(contract1(m, f1) == e2);
  CHECK(pair_dual(t, f1, f2, f1) == Rational(1));
  CHECK_THROWS_AS(pair_dual(Vector{1, 2, 3}, e1), ShapeError);
}

TEST_CASE("linear algebra kernel") {
  Matrix m{{1, 2}, {3, 4}};
  CHECK(determinant(m) == Rational(-2));
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(*inv * m == Matrix::identity(2));
  CHECK_FALSE(inverse(Matrix{{1, 2}, {2, 4}}));
  CHECK(rank(Matrix{{1, 2}, {2, 4}}) == 1);
  auto ns = nullspace(Matrix{{1, 2}, {2, 4}});
  REQUIRE(ns.size() == 1);
  CHECK((Matrix{{1, 2}, {2, 4}} * ns[0]).is_zero());
  CHECK(direct_sum(Matrix{{1}}, Matrix{{2}}) == Matrix{{1, 0}, {0, 2}});
}

TEST_CASE("property: tensor operations are linear and compose") {
  Fuzzer fz(0x5eed);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + fz.index(3);
    Matrix a = fz.matrix(n, n), b = fz.matrix(n, n), c = fz.matrix(n, n), d = fz.matrix(n, n);
    Matrix t = fz.matrix(n, n), u = fz.matrix(n, n);
    Rational s = fz.rational();
    CHECK(apply_pair(a, b, t + s * u) == apply_pair(a, b, t) + s * apply_pair(a, b, u));
    CHECK(apply_pair(c, d, apply_pair(a, b, t)) == apply_pair(c * a, d * b, t));
    CHECK(sigma2(apply_pair(a, b, t)) == apply_pair(b, a, sigma2(t)));
    Tensor3 x = fz.tensor(n, n, n), y = fz.tensor(n, n, n);
    CHECK(apply_triple(a, b, c, x + s * y) == apply_triple(a, b, c, x) + s * apply_triple(a, b, c, y));
    CHECK(apply_triple(d, d, d, apply_triple(a, b, c, x)) == apply_triple(d * a, d * b, d * c, x));
    CHECK(cyclic3(x + s * y) == cyclic3(x) + s * cyclic3(y));
    Vector xi = fz.vector(n), eta = fz.vector(n), v = fz.vector(n);
    CHECK(contract12(x + s * y, xi, eta) == contract12(x, xi, eta) + s * contract12(y, xi, eta));
    CHECK(pair_dual(xi + s * eta, v) == pair_dual(xi, v) + s * pair_dual(eta, v));
  }
}
