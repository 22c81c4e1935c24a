#include <doctest.h>

#include "homlie/coboundary.hpp"
#include "homlie/corpus.hpp"
#include "homlie/fuzz.hpp"
#include "homlie/linalg.hpp"
#include "support/oracles.hpp"

using namespace homlie;

namespace {

Matrix wedge12() { return Matrix{{0, 1}, {-1, 0}}; }
Matrix sym12() { return Matrix{{0, 1}, {1, 0}}; }

Tensor3 e(std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
  return Tensor3::outer(oracle::basis(n, i), oracle::basis(n, j), oracle::basis(n, k));
}

std::vector<HomLieAlgebra> weakly_involutive_corpus() {
  std::vector<HomLieAlgebra> out;
  for (const auto& entry : corpus()) {
    Structure s = entry.make();
    if (!s.algebra && !s.lsa) continue;
    HomLieAlgebra a = s.require_algebra();
    if (validate_hom_lie(a).passed && is_weakly_involutive(a).passed) out.push_back(a.relabeled(entry.name));
  }
  return out;
}

}  // namespace

TEST_CASE("twist compatibility") {
  Fuzzer fz(5);
  CHECK(check_twist_compat(builtin_algebra("sl2"), fz.r_matrix(3)).passed);
  HomLieAlgebra phi = builtin_algebra("aff2phi");
  CheckReport ok = check_twist_compat(phi, Matrix{{1, 0}, {0, 0}});
  CHECK(ok.passed);
  CHECK(ok.flag("sharp_form"));
  Matrix e21(2, 2);
  e21(1, 0) = 1;
  CheckReport bad = check_twist_compat(phi, e21);
  CHECK_FALSE(bad.passed);
  CHECK_FALSE(bad.flag("sharp_form"));
  CHECK(apply_pair(phi.twist(), Matrix::identity(2), e21) == Matrix{{1, 0}, {1, 0}});
  CHECK(apply_pair(Matrix::identity(2), phi.twist(), e21) == e21);
}

TEST_CASE("cobracket induced by r") {
  Fuzzer fz(6);
  CHECK(cobracket_from_r(builtin_algebra("abelian2"), fz.r_matrix(2)).coeffs.is_zero());
  HomLieAlgebra aff2 = builtin_algebra("aff2");
  Cobracket tri = cobracket_from_r(aff2, wedge12());
  CHECK(tri(0).is_zero());
  CHECK(tri(1) == Matrix{{0, -1}, {1, 0}});
  Cobracket e11 = cobracket_from_r(aff2, Matrix{{1, 0}, {0, 0}});
  CHECK(e11(0).is_zero());
  CHECK(e11(1) == Matrix{{-2, 0}, {0, 0}});
  for (const Matrix& r : {wedge12(), sym12(), Matrix{{1, 0}, {0, 0}}})
    CHECK(cobracket_from_r(aff2, r).coeffs == oracle::cobracket(aff2.bracket(), aff2.twist(), r));
}

TEST_CASE("[r,r]") {
  Fuzzer fz(8);
  CHECK(r_square_bracket(builtin_algebra("abelian2"), fz.r_matrix(2)).is_zero());
  HomLieAlgebra aff2 = builtin_algebra("aff2");
  CHECK(r_square_bracket(aff2, wedge12()).is_zero());
  CHECK(oracle::r_square(aff2.bracket(), aff2.twist(), wedge12()).is_zero());
  Tensor3 expected = Rational(-2) * e(2, 0, 0, 1) + Rational(2) * e(2, 1, 0, 0);
  CHECK(r_square_bracket(aff2, sym12()) == expected);
  CHECK(oracle::r_square(aff2.bracket(), aff2.twist(), sym12()) == expected);
  CHECK(check_chybe(aff2, wedge12()).passed);
  CheckReport bad = check_chybe(aff2, sym12());
  CHECK_FALSE(bad.passed);
  REQUIRE(bad.witnesses.size() == 2);
  CHECK(bad.witnesses[0].indices == std::vector<std::size_t>{0, 0, 1});
  CHECK(std::get<Rational>(bad.witnesses[0].residual) == Rational(-2));
}

TEST_CASE("Jac_delta and the ad action on three tensors") {
  HomLieAlgebra aff2 = builtin_algebra("aff2");
  Cobracket zero = Cobracket::zero(aff2);
  CHECK(jac_delta(zero, 0).is_zero());
  Cobracket tri = cobracket_from_r(aff2, wedge12());
  CHECK(jac_delta(tri, 0).is_zero());
  CHECK(jac_delta(tri, 1).is_zero());
  Cobracket sym = cobracket_from_r(aff2, sym12());
  Tensor3 rr = r_square_bracket(aff2, sym12());
  for (std::size_t x = 0; x < 2; ++x) {
    CHECK(jac_delta(sym, x) == oracle::jac_delta(aff2.twist(), sym.coeffs, x));
    CHECK(ad_phi_on_tensor3(aff2, oracle::basis(2, x), rr) ==
          oracle::ad_phi3(aff2.bracket(), aff2.twist(), oracle::basis(2, x), rr));
  }
  CHECK(jac_delta(sym, 1) != ad_phi_on_tensor3(aff2, oracle::basis(2, 1), rr));
  CheckReport diag = jacobiator_identity(aff2, sym12());
  CHECK_FALSE(diag.flag("hypotheses"));
}

TEST_CASE("symmetric part invariance") {
  Fuzzer fz(9);
  HomLieAlgebra sl2 = builtin_algebra("sl2");
  Matrix r = fz.r_matrix(3);
  CHECK(symmetric_part_invariance(sl2, r - oracle::transpose(r)).passed);
  CHECK(symmetric_part_invariance(builtin_algebra("abelian2"), fz.r_matrix(2)).passed);
  CheckReport bad = symmetric_part_invariance(builtin_algebra("aff2"), sym12());
  CHECK_FALSE(bad.passed);
  // fails for both basis vectors: ad_{e1} (r + sigma r) = 4 e1 (x) e1
  REQUIRE(bad.witnesses.size() == 2);
  HomLieAlgebra aff2 = builtin_algebra("aff2");
  for (std::size_t k = 0; k < 2; ++k) {
    CHECK(bad.witnesses[k].indices == std::vector<std::size_t>{k});
    CHECK(std::get<Matrix>(bad.witnesses[k].residual) ==
          oracle::ad2(aff2.bracket(), aff2.twist(), oracle::basis(2, k), Rational(2) * sym12()));
  }
  CHECK(std::get<Matrix>(bad.witnesses[0].residual) == Matrix{{4, 0}, {0, 0}});
  // the Killing-dual Casimir is invariant
  Matrix casimir{{Rational(1, 2), 0, 0}, {0, 0, 1}, {0, 1, 0}};
  CHECK(symmetric_part_invariance(sl2, casimir).passed);
}

TEST_CASE("coboundary classification") {
  HomLieAlgebra aff2 = builtin_algebra("aff2");
  CoboundaryResult tri = validate_coboundary(aff2, wedge12());
  CHECK(tri.report.passed);
  CHECK(tri.classification == CoboundaryClass::Triangular);
  CHECK(tri.conditions);
  CHECK(tri.dual_valid);

  HomLieAlgebra ab = builtin_algebra("abelian2");
  CHECK(validate_coboundary(ab, wedge12()).classification == CoboundaryClass::Triangular);
  CHECK(validate_coboundary(ab, Matrix{{1, 2}, {3, 4}}).classification == CoboundaryClass::Quasitriangular);

  CoboundaryResult sym = validate_coboundary(aff2, sym12());
  CHECK_FALSE(sym.report.passed);
  CHECK_FALSE(sym.conditions);
  CHECK_FALSE(sym.dual_valid);
  CHECK(sym.classification == CoboundaryClass::NotCoboundary);
  CHECK_FALSE(validate_hom_lie(dual_algebra(cobracket_from_r(aff2, sym12()))).find(Condition::SkewSymmetry)->passed);

  // sl2 Casimir plus a skew part: quasitriangular
  HomLieAlgebra sl2 = builtin_algebra("sl2");
  Matrix casimir{{Rational(1, 2), 0, 0}, {0, 0, 1}, {0, 1, 0}};
  Matrix rdj = casimir;
  rdj(1, 2) += Rational(-1);
  rdj(2, 1) += Rational(1);
  CHECK(check_chybe(sl2, rdj).passed);
  CHECK(validate_coboundary(sl2, rdj).classification == CoboundaryClass::Quasitriangular);
  CHECK(oracle::r_square(sl2.bracket(), sl2.twist(), rdj).is_zero());

  CHECK_THROWS_AS(validate_coboundary(builtin_algebra("aff2bad"), wedge12()), PreconditionError);
  Matrix e21(2, 2);
  e21(1, 0) = 1;
  CHECK_THROWS_AS(validate_coboundary(builtin_algebra("heis3phi"), Matrix{{0, 0, 0}, {0, 0, 0}, {1, 0, 0}}),
                  PreconditionError);
  CHECK(to_string(CoboundaryClass::Triangular) == "triangular");
}

TEST_CASE("twist-defect identities") {
  Fuzzer fz(10);
  TwistDefectReports id = twist_defect_identities(builtin_algebra("aff2"), fz.r_matrix(2));
  CHECK(id.passed());
  CHECK_FALSE(id.twist.flag("nonzero"));
  CHECK_FALSE(id.involutive.flag("nonzero"));
  CHECK_FALSE(id.compatibility.flag("nonzero"));
  // twist-incompatible r: both sides agree and are nonzero
  HomLieAlgebra h = builtin_algebra("heis3phi");
  Matrix e12(3, 3);
  e12(0, 1) = 1;
  CHECK_FALSE(check_twist_compat(h, e12).passed);
  TwistDefectReports nz = twist_defect_identities(h, e12);
  CHECK(nz.passed());
  CHECK(nz.combined().passed);
  CHECK(nz.twist.flag("nonzero"));
  CHECK(nz.involutive.flag("nonzero"));
  // without weak involutivity the first identity breaks: aff2phi, r = e2 (x) e1, x = e2
  Matrix e21(2, 2);
  e21(1, 0) = 1;
  TwistDefectReports off = twist_defect_identities(builtin_algebra("aff2phi"), e21);
  CHECK_FALSE(off.twist.passed);
  CHECK(off.twist.witnesses.front().indices == std::vector<std::size_t>{1});
  Matrix pair = fz.twist_compatible_r(h);
  TwistDefectReports zero = twist_defect_identities(h, pair);
  CHECK(zero.passed());
  CHECK_FALSE(zero.twist.flag("nonzero"));
}

TEST_CASE("r sharp and the dual bracket") {
  CHECK(r_sharp(Matrix::identity(3)) == Matrix::identity(3));
  CHECK(r_sharp(wedge12()) == oracle::transpose(wedge12()));
  HomLieAlgebra aff2 = builtin_algebra("aff2");
  HomLieAlgebra d = dual_bracket_from_r(aff2, wedge12());
  CHECK(d.bracket(0, 1) == Vector{0, -1});
  CHECK(d == dual_algebra(cobracket_from_r(aff2, wedge12())));
  CHECK(check_dual_bracket_routes(aff2, wedge12()).passed);
  CHECK(dual_bracket_from_r(aff2, Matrix::zero(2, 2)).bracket().is_zero());
  CHECK_THROWS_AS(dual_bracket_from_r(builtin_algebra("aff2bad"), wedge12()), PreconditionError);
}

TEST_CASE("r sharp bracket defect") {
  HomLieAlgebra aff2 = builtin_algebra("aff2");
  CheckReport tri = r_sharp_bracket_defect(aff2, wedge12());
  CHECK(tri.passed);
  CHECK_FALSE(tri.flag("nonzero"));
  CHECK(r_sharp_bracket_defect(aff2, Matrix::zero(2, 2)).passed);
  CheckReport sym = r_sharp_bracket_defect(aff2, sym12());
  CHECK(sym.passed);
  CHECK(sym.flag("nonzero"));
  // r^# phi^* is then a homomorphism from the dual bracket
  HomLieAlgebra dual = dual_bracket_from_r(aff2, wedge12());
  CHECK(check_algebra_homomorphism(r_sharp(wedge12()) * oracle::transpose(aff2.twist()), dual, aff2).passed);
}

TEST_CASE("forms from invertible r") {
  HomLieAlgebra aff2 = builtin_algebra("aff2");
  FormFromR f = form_from_invertible_r(aff2, wedge12());
  CHECK(f.report.passed);
  CHECK(f.chybe);
  CHECK(f.report.flag("agrees_with_chybe"));
  CHECK(f.form.gram == *inverse(wedge12()));
  CHECK(form_from_invertible_r(builtin_algebra("abelian2"), wedge12()).report.passed);
  CHECK_THROWS_AS(form_from_invertible_r(aff2, wedge12() + Matrix{{1, 0}, {0, 0}}), PreconditionError);
  Matrix singular(4, 4);
  singular(0, 1) = 1;
  singular(1, 0) = -1;
  CHECK_THROWS_AS(form_from_invertible_r(HomLieAlgebra::abelian("a4", 4, Matrix::identity(4)), singular),
                  PreconditionError);
}

TEST_CASE("Hom-doubles of the aff2 bialgebras") {
  HomLieAlgebra aff2 = builtin_algebra("aff2");
  for (const Tensor3& d : {Tensor3(2), cobracket_from_r(aff2, wedge12()).coeffs}) {
    HomDouble hd = hom_double({aff2, Cobracket(aff2, d)});
    CHECK(hd.report.passed);
    CHECK(hd.bialgebra.algebra.dim() == 4);
    CHECK(hd.r == canonical_r(2));
    const HomLieAlgebra& big = hd.bialgebra.algebra;
    CHECK(oracle::r_square(big.bracket(), big.twist(), hd.r).is_zero());
    CHECK(check_twist_compat(big, hd.r).passed);
    CHECK(symmetric_part_invariance(big, hd.r).passed);
  }
  HomLieAlgebra ab = builtin_algebra("abelian2");
  HomDouble cot = hom_double({ab, Cobracket::zero(ab)});
  CHECK(cot.report.passed);
  CHECK(cot.bialgebra.algebra.bracket().is_zero());
  HomLieAlgebra sl2 = builtin_algebra("sl2");
  Tensor3 bad(3);
  bad(0, 1, 2) = 1;
  bad(0, 2, 1) = -1;
  CHECK_THROWS_AS(hom_double({sl2, Cobracket(sl2, bad)}), PreconditionError);
  CHECK(canonical_r(1) == Matrix{{0, 1}, {0, 0}});
}

TEST_CASE("property: twist-defect identities on weakly involutive algebras") {
  Fuzzer fz(44);
  for (const HomLieAlgebra& a : weakly_involutive_corpus()) {
    for (int trial = 0; trial < 10; ++trial) {
      CAPTURE(a.label());
      CHECK(twist_defect_identities(a, fz.r_matrix(a.dim())).passed());
    }
  }
}

TEST_CASE("property: Jacobiator identity for skew twist-compatible r") {
  Fuzzer fz(46);
  for (const HomLieAlgebra& a : weakly_involutive_corpus()) {
    for (int trial = 0; trial < 10; ++trial) {
      Matrix r = fz.skew_twist_compatible_r(a);
      CHECK(r == -oracle::transpose(r));
      CheckReport j = jacobiator_identity(a, r);
      CAPTURE(a.label());
      CHECK(j.passed);
      CHECK(j.flag("hypotheses"));
      Cobracket cb = cobracket_from_r(a, r);
      Tensor3 rr = oracle::r_square(a.bracket(), a.twist(), r);
      for (std::size_t x = 0; x < a.dim(); ++x)
        CHECK(oracle::jac_delta(a.twist(), cb.coeffs, x) ==
              oracle::ad_phi3(a.bracket(), a.twist(), oracle::basis(a.dim(), x), rr));
    }
  }
}

TEST_CASE("property: coboundary conditions match dual validity") {
  Fuzzer fz(47);
  for (const HomLieAlgebra& a : weakly_involutive_corpus()) {
    for (int trial = 0; trial < 10; ++trial) {
      Matrix r = trial % 2 ? fz.skew_twist_compatible_r(a) : fz.twist_compatible_r(a);
      CoboundaryResult c = validate_coboundary(a, r);
      CAPTURE(a.label());
      CHECK(c.conditions == c.dual_valid);
      Tensor3 dual = oracle::dual_constants(oracle::cobracket(a.bracket(), a.twist(), r));
      Matrix dual_twist = oracle::transpose(a.twist());
      CHECK(c.dual_valid == (oracle::is_hom_lie(dual, dual_twist) && oracle::is_weakly_involutive(dual, dual_twist)));
      CHECK(check_dual_bracket_routes(a, r).passed);
      CHECK(r_sharp_bracket_defect(a, r).passed);
    }
  }
}

TEST_CASE("property: forms from invertible skew solutions") {
  Fuzzer fz(415);
  int checked = 0;
  for (const HomLieAlgebra& a : weakly_involutive_corpus()) {
    for (int trial = 0; trial < 10; ++trial) {
      Matrix r = fz.skew_twist_compatible_r(a);
      if (determinant(r).is_zero()) continue;
      FormFromR f = form_from_invertible_r(a, r);
      CAPTURE(a.label());
      CHECK(f.report.flag("agrees_with_chybe"));
      CHECK(f.chybe == oracle::r_square(a.bracket(), a.twist(), r).is_zero());
      ++checked;
    }
  }
  CHECK(checked > 0);
}
