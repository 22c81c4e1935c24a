#include <doctest.h>

#include "homlie/coboundary.hpp"
#include "homlie/corpus.hpp"
#include "homlie/fuzz.hpp"
#include "homlie/linalg.hpp"
#include "homlie/operators.hpp"
#include "support/oracles.hpp"

using namespace homlie;

namespace {

OOperatorCandidate over_lsa(const char* name, Matrix t) {
  HomLeftSymmetric l = builtin_lsa(name);
  return {left_mult_rep(l), std::move(t)};
}

Vector defect(const OOperatorCandidate& c, const Vector& u, const Vector& v) {
  return oracle::o_defect(c.rep.base.bracket(), c.rep.action, c.t, u, v);
}

Tensor3 expected_square(const OOperatorCandidate& c) {
  return oracle::o_square_expansion(c.rep.base.bracket(), c.rep.base.twist(), c.rep.action, c.t);
}

Vector concat(const Vector& a, const Vector& b) {
  Vector out(a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.dim(); ++i) out[a.dim() + i] = b[i];
  return out;
}

// (x, y, z) -> (x.y).psi z - psi x.(y.z) - (y.x).psi z + psi y.(x.z)
bool lsa_by_oracle(const HomLeftSymmetric& l) {
  const std::size_t m = l.dim();
  auto mul = [&](const Vector& u, const Vector& v) { return oracle::bracket(l.product, u, v); };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vector x = oracle::basis(m, i), y = oracle::basis(m, j);
      if (oracle::act(l.psi, mul(x, y)) != mul(oracle::act(l.psi, x), oracle::act(l.psi, y))) return false;
      for (std::size_t k = 0; k < m; ++k) {
        Vector z = oracle::basis(m, k), pz = oracle::act(l.psi, z);
        Vector lhs = oracle::add(mul(mul(x, y), pz), mul(oracle::act(l.psi, x), mul(y, z)), -1);
        Vector rhs = oracle::add(mul(mul(y, x), pz), mul(oracle::act(l.psi, y), mul(x, z)), -1);
        if (lhs != rhs) return false;
      }
    }
  return true;
}

}  // namespace

TEST_CASE("O-operator validation") {
  OOperatorCandidate zero = over_lsa("lsa2", Matrix::zero(2, 2));
  CHECK(validate_o_operator(zero).passed);
  // identity is an O-operator for (V, psi, L) over the commutator algebra
  OOperatorCandidate id = over_lsa("lsa2", Matrix::identity(2));
  CHECK(validate_o_operator(id).passed);
  CHECK(validate_o_operator(over_lsa("lsa2psi", Matrix::identity(2))).passed);

  HomLieAlgebra aff2 = builtin_algebra("aff2");
  OOperatorCandidate ad{adjoint_rep(aff2), Matrix::identity(2)};
  CheckReport r = validate_o_operator(ad);
  CHECK_FALSE(r.passed);
  CHECK(o_operator_defect(ad, Vector{1, 0}, Vector{0, 1}) == Vector{-1, 0});
  CHECK(defect(ad, Vector{1, 0}, Vector{0, 1}) == Vector{-1, 0});
  const CheckReport* br = r.find(Condition::OOperatorBracket);
  REQUIRE(br);
  CHECK(br->witnesses.front().indices == std::vector<std::size_t>{0, 1});

  // T beta != phi T
  HomLieAlgebra h = builtin_algebra("heis3phi");
  Matrix t(3, 3);
  t(0, 0) = 1;
  CHECK_FALSE(validate_o_operator({adjoint_rep(h), t}).find(Condition::OOperatorTwist)->passed);
}

TEST_CASE("Hom-left-symmetric algebras and their commutators") {
  HomLeftSymmetric zero("zero", Tensor3(2), Matrix{{1, 1}, {0, 1}});
  CHECK(validate_hlsa(zero).passed);
  CHECK(commutator_hom_lie(zero).bracket().is_zero());

  HomLeftSymmetric l = builtin_lsa("lsa2");
  CHECK(validate_hlsa(l).passed);
  CHECK(lsa_by_oracle(l));
  CHECK(commutator_hom_lie(l).bracket().is_zero());
  CHECK(left_mult_rep(l).rho(1) * Vector{0, 1} == Vector{1, 0});
  CHECK(l.multiply(Vector{0, 1}, Vector{0, 1}) == Vector{1, 0});

  HomLeftSymmetric p = builtin_lsa("lsa2psi");
  CHECK(validate_hlsa(p).passed);
  CHECK(lsa_by_oracle(p));
  CHECK(commutator_hom_lie(p).bracket().is_zero());
  CHECK(left_mult_rep(p).beta == p.psi);
  CHECK(validate_representation(left_mult_rep(p)).passed);

  HomLeftSymmetric b = builtin_lsa("lsa2bad");
  CHECK(validate_hlsa(b).passed);
  CHECK(lsa_by_oracle(b));

  // psi not multiplicative
  HomLeftSymmetric nm("nm", l.product, Matrix{{1, 0}, {0, 2}});
  CHECK_FALSE(validate_hlsa(nm).passed);
  CHECK_FALSE(lsa_by_oracle(nm));
}

TEST_CASE("square-twist condition") {
  CheckReport id = square_twist_o_operator_checks(builtin_lsa("lsa2"));
  CHECK(id.passed);
  CHECK(id.flag("condition"));
  CHECK(id.flag("weakly_involutive"));
  CHECK(id.flag("psi2_o_operator"));
  CheckReport p = square_twist_o_operator_checks(builtin_lsa("lsa2psi"));
  CHECK(p.passed);
  CHECK(p.flag("condition"));
  CHECK(p.flag("psi2_o_operator"));
  HomLeftSymmetric lp = builtin_lsa("lsa2psi");
  CHECK(validate_o_operator({left_mult_rep(lp), lp.psi * lp.psi}).passed);

  // e1.e2 = e2 with psi = diag(2, 0): psi^2(e1).e2 = 4 e2
  HomLeftSymmetric bad = builtin_lsa("lsa2bad");
  CheckReport b = square_twist_o_operator_checks(bad);
  CHECK(b.passed);
  CHECK_FALSE(b.flag("condition"));
  CHECK_FALSE(b.flag("weakly_involutive"));
  const CheckReport* crit = nullptr;
  for (const auto& part : b.parts)
    if (part.message == "u.v = psi^2(u).v") crit = &part;
  REQUIRE(crit);
  REQUIRE_FALSE(crit->witnesses.empty());
  CHECK(crit->witnesses.front().indices == std::vector<std::size_t>{0, 1});
  Vector e1 = oracle::basis(2, 0), e2 = oracle::basis(2, 1);
  Vector psi2e1 = oracle::act(bad.psi, oracle::act(bad.psi, e1));
  CHECK(oracle::bracket(bad.product, psi2e1, e2) != oracle::bracket(bad.product, e1, e2));
  CHECK_FALSE(is_weakly_involutive_rep(left_mult_rep(bad)).passed);
}

TEST_CASE("lift of T") {
  CHECK(lift_t_bar(over_lsa("lsa2", Matrix::zero(2, 2))).is_zero());
  HomLieAlgebra ab = builtin_algebra("abelian2");
  Matrix t(2, 1);
  t(0, 0) = 1;
  Matrix one = lift_t_bar({Representation::zero(ab, Matrix::identity(1)), t});
  CHECK(one.rows() == 3);
  Matrix expect(3, 3);
  expect(2, 0) = 1;
  CHECK(one == expect);
  Matrix l2 = lift_t_bar(over_lsa("lsa2", Matrix::identity(2)));
  Matrix e(4, 4);
  e(2, 0) = 1;
  e(3, 1) = 1;
  CHECK(l2 == e);
}

TEST_CASE("r from O-operators") {
  OOperatorSolution zero = r_from_o_operator(over_lsa("lsa2", Matrix::zero(2, 2)));
  CHECK(zero.r.is_zero());
  CHECK(zero.report.passed);

  OOperatorSolution id = r_from_o_operator(over_lsa("lsa2", Matrix::identity(2)));
  CHECK(id.report.passed);
  CHECK(id.o_operator);
  CHECK(id.algebra.dim() == 4);
  CHECK(id.r == -oracle::transpose(id.r));
  CHECK(oracle::r_square(id.algebra.bracket(), id.algebra.twist(), id.r).is_zero());
  CHECK(id.report.flag("converse_checked"));

  OOperatorCandidate ad{adjoint_rep(builtin_algebra("aff2")), Matrix::identity(2)};
  OOperatorSolution s = r_from_o_operator(ad);
  CHECK(s.report.passed);
  CHECK_FALSE(s.o_operator);
  Tensor3 rr = oracle::r_square(s.algebra.bracket(), s.algebra.twist(), s.r);
  CHECK_FALSE(rr.is_zero());
  CHECK(rr == expected_square(ad));
  CHECK(s.algebra == semidirect_product(hom_dual_representation(ad.rep)));

  // precondition failures
  HomLieAlgebra h = builtin_algebra("heis3phi");
  Matrix t(3, 3);
  t(0, 0) = 1;
  CHECK_THROWS_AS(r_from_o_operator({adjoint_rep(h), t}), PreconditionError);
  CHECK_THROWS_AS(r_from_o_operator({adjoint_rep(builtin_algebra("aff2phi")), Matrix::zero(2, 2)}),
                  PreconditionError);
}

TEST_CASE("wedge solutions") {
  WedgeSolutions id = hlsa_wedge_solutions(builtin_lsa("lsa2"));
  CHECK(id.report.passed);
  CHECK(id.r1 == id.r2);
  CHECK(id.report.flag("r1_equals_r2"));

  WedgeSolutions p = hlsa_wedge_solutions(builtin_lsa("lsa2psi"));
  CHECK(p.report.passed);
  CHECK(p.r1 != p.r2);
  CHECK(p.report.flag("same_cobracket_checked"));
  CHECK(oracle::cobracket(p.algebra.bracket(), p.algebra.twist(), p.r1) ==
        oracle::cobracket(p.algebra.bracket(), p.algebra.twist(), p.r2));
  CHECK(oracle::r_square(p.algebra.bracket(), p.algebra.twist(), p.r1).is_zero());
  CHECK(oracle::r_square(p.algebra.bracket(), p.algebra.twist(), p.r2).is_zero());

  // zero product, psi^2 != Id
  HomLeftSymmetric z("z", Tensor3(2), Matrix{{1, 1}, {0, 1}});
  WedgeSolutions zs = hlsa_wedge_solutions(z);
  CHECK(zs.report.passed);
  CHECK(zs.r1 != zs.r2);
  CHECK(check_chybe(zs.algebra, zs.r1).passed);
  CHECK(check_chybe(zs.algebra, zs.r2).passed);

  CHECK_THROWS_AS(hlsa_wedge_solutions(builtin_lsa("lsa2bad")), PreconditionError);
}

TEST_CASE("coboundary bialgebras from O-operators") {
  OOperatorBialgebra id = o_operator_bialgebra(over_lsa("lsa2", Matrix::identity(2)));
  CHECK(id.report.passed);
  CHECK(id.bialgebra.algebra.dim() == 4);
  CHECK(validate_bialgebra(id.bialgebra).passed);
  CHECK(check_triple_equivalence(id.bialgebra).passed);
  CHECK(check_triple_equivalence(id.bialgebra).flag("bialgebra"));

  OOperatorBialgebra zero = o_operator_bialgebra(over_lsa("lsa2", Matrix::zero(2, 2)));
  CHECK(zero.bialgebra.cobracket.coeffs.is_zero());
  CHECK(dual_algebra(zero.bialgebra.cobracket).bracket().is_zero());

  HomLeftSymmetric p = builtin_lsa("lsa2psi");
  OOperatorBialgebra one = o_operator_bialgebra(over_lsa("lsa2psi", Matrix::identity(2)));
  OOperatorBialgebra sq = o_operator_bialgebra(over_lsa("lsa2psi", p.psi * p.psi));
  CHECK(one.report.passed);
  CHECK(sq.report.passed);
  CHECK(one.bialgebra.cobracket == sq.bialgebra.cobracket);

  CHECK_THROWS_AS(o_operator_bialgebra({adjoint_rep(builtin_algebra("aff2")), Matrix::identity(2)}),
                  PreconditionError);
}

TEST_CASE("property: the O-operator defect expansion holds for every intertwining T") {
  Fuzzer fz(58);
  std::vector<Representation> reps;
  for (const char* l : {"lsa2", "lsa2psi"}) reps.push_back(left_mult_rep(builtin_lsa(l)));
  for (const char* a : {"aff2", "heis3", "heis3phi", "sl2", "sl2yau"}) reps.push_back(adjoint_rep(builtin_algebra(a)));
  reps.push_back(hom_dual_representation(adjoint_rep(builtin_algebra("heis3phi"))));
  for (const auto& rep : reps) {
    for (int trial = 0; trial < 8; ++trial) {
      OOperatorCandidate c{rep, fz.intertwining_t(rep)};
      OOperatorSolution s = r_from_o_operator(c);
      CAPTURE(rep.base.label());
      CHECK(s.report.passed);
      CHECK(oracle::r_square(s.algebra.bracket(), s.algebra.twist(), s.r) == expected_square(c));
    }
  }
}

TEST_CASE("property: lift pairing") {
  Fuzzer fz(59);
  Representation rep = adjoint_rep(builtin_algebra("sl2yau"));
  for (int trial = 0; trial < 20; ++trial) {
    OOperatorCandidate c{rep, fz.matrix(3, 3)};
    Matrix tbar = lift_t_bar(c);
    Vector a = fz.vector(3), b = fz.vector(3), u = fz.vector(3), v = fz.vector(3);
    CHECK(pair_dual(tbar, concat(a, u), concat(b, v)) == pair_dual(b, oracle::act(c.t, u)));
  }
}

TEST_CASE("property: skew CHYBE solutions give O-operators on the coadjoint representation") {
  Fuzzer fz(60);
  for (const char* name : {"aff2", "heis3", "heis3phi", "sl2", "sl2yau"}) {
    HomLieAlgebra a = builtin_algebra(name);
    Representation co = hom_dual_representation(adjoint_rep(a));
    const bool invertible = !determinant(a.twist()).is_zero();
    for (int trial = 0; trial < 15; ++trial) {
      Matrix r = fz.skew_twist_compatible_r(a);
      bool solution = check_chybe(a, r).passed;
      bool o_op = validate_o_operator({co, r_sharp(r)}).passed;
      CAPTURE(name);
      if (solution) CHECK(o_op);
      if (invertible && o_op) CHECK(solution);
    }
  }
}
