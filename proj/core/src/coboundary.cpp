#include "homlie/coboundary.hpp"

#include "homlie/linalg.hpp"

namespace homlie {

namespace {

void require_r(const HomLieAlgebra& a, const Matrix& r) {
  if (r.rows() != a.dim() || r.cols() != a.dim())
    throw ShapeError("r-matrix must be " + std::to_string(a.dim()) + "x" + std::to_string(a.dim()));
}

bool is_skew(const Matrix& r) { return r == -r.transpose(); }

Matrix twist_difference(const HomLieAlgebra& a, const Matrix& r) {
  const Matrix id = Matrix::identity(a.dim());
  return apply_pair(a.twist(), id, r) - apply_pair(id, a.twist(), r);
}

void require_wi_and_compat(const HomLieAlgebra& a, const Matrix& r, const char* who) {
  CheckReport why(Condition::Precondition);
  why.add_part(is_weakly_involutive(a));
  why.add_part(check_twist_compat(a, r));
  if (!why.passed) throw PreconditionError(std::string(who) + ": needs a weakly involutive algebra and a twist compatible r", std::move(why));
}

}  // namespace

CheckReport check_twist_compat(const HomLieAlgebra& a, const Matrix& r) {
  require_r(a, r);
  const std::size_t n = a.dim();
  const Matrix& phi = a.twist();
  CheckReport report(Condition::TwistCompatibleR);
  Matrix d = twist_difference(a, r);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!d(i, j).is_zero()) report.add_witness({i, j}, d(i, j));
  const Matrix sharp = r_sharp(r);
  const bool sharp_route = phi * sharp == sharp * phi.transpose();
  report.set_flag("sharp_form", sharp_route);
  if (sharp_route != d.is_zero()) report.fail("tensor form and r-sharp form of twist compatibility disagree");
  return report;
}

Cobracket cobracket_from_r(const HomLieAlgebra& a, const Matrix& r) {
  require_r(a, r);
  const std::size_t n = a.dim();
  Tensor3 d(n);
  for (std::size_t k = 0; k < n; ++k) d.set_slice(k, ad_on_tensor2(a, Vector::basis(n, k), r));
  return Cobracket(a, std::move(d));
}

Tensor3 r_square_bracket(const HomLieAlgebra& a, const Matrix& r) {
  require_r(a, r);
  const std::size_t n = a.dim();
  const Tensor3& c = a.bracket();
  const Matrix s = r * a.twist().transpose();  // s(a, j) = sum_b r^{ab} phi(j, b)
  const Matrix u = a.twist() * r;              // u(i, b) = sum_a phi(i, a) r^{ab}
  Tensor3 out(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t i = 0; i < n; ++i) {
        const Rational& cpqi = c(p, q, i);
        if (cpqi.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k) {
            // [e_a, e_c] (x) phi e_b (x) phi e_d with (a, c) = (p, q)
            out(i, j, k).add_product(cpqi, s(p, j) * s(q, k));
            // phi e_a (x) [e_b, e_c] (x) phi e_d with (b, c) = (p, q)
            out(j, i, k).add_product(cpqi, u(j, p) * s(q, k));
            // phi e_a (x) phi e_c (x) [e_b, e_d] with (b, d) = (p, q)
            out(j, k, i).add_product(cpqi, u(j, p) * u(k, q));
          }
      }
  return out;
}

Tensor3 jac_delta(const Cobracket& cb, std::size_t x) {
  const std::size_t n = cb.base.dim();
  const Matrix m = cb.base.twist() * cb(x);
  Tensor3 t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t q = 0; q < n; ++q) {
      if (m(i, q).is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) t(i, j, k).add_product(m(i, q), cb.coeffs(q, j, k));
    }
  return cyclic_sum(t);
}

Tensor3 ad_phi_on_tensor3(const HomLieAlgebra& a, const Vector& x, const Tensor3& t) {
  const Matrix& phi = a.twist();
  const Matrix adx = a.ad(phi * x);
  return apply_triple(adx, phi, phi, t) + apply_triple(phi, adx, phi, t) + apply_triple(phi, phi, adx, t);
}

CheckReport symmetric_part_invariance(const HomLieAlgebra& a, const Matrix& r) {
  require_r(a, r);
  const std::size_t n = a.dim();
  const Matrix sym = r + sigma2(r);
  CheckReport report(Condition::SymmetricPartInvariance);
  for (std::size_t k = 0; k < n; ++k) {
    Matrix d = ad_on_tensor2(a, Vector::basis(n, k), sym);
    if (!d.is_zero()) report.add_witness({k}, d);
  }
  return report;
}

CheckReport ad_twist_square_bracket(const HomLieAlgebra& a, const Matrix& r) {
  const std::size_t n = a.dim();
  const Tensor3 rr = r_square_bracket(a, r);
  CheckReport report(Condition::AdTwistOfSquareBracket);
  for (std::size_t k = 0; k < n; ++k) {
    Tensor3 t = ad_phi_on_tensor3(a, Vector::basis(n, k), rr);
    if (!t.is_zero()) report.add_witness({k}, t);
  }
  return report;
}

CheckReport check_chybe(const HomLieAlgebra& a, const Matrix& r) {
  const std::size_t n = a.dim();
  const Tensor3 rr = r_square_bracket(a, r);
  CheckReport report(Condition::ClassicalHomYangBaxter);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!rr(i, j, k).is_zero()) report.add_witness({i, j, k}, rr(i, j, k));
  return report;
}

std::string_view to_string(CoboundaryClass c) {
  switch (c) {
    case CoboundaryClass::Triangular: return "triangular";
    case CoboundaryClass::Quasitriangular: return "quasitriangular";
    case CoboundaryClass::Coboundary: return "coboundary";
    case CoboundaryClass::NotCoboundary: break;
  }
  return "not-coboundary";
}

CoboundaryResult coboundary_analysis(const HomLieAlgebra& a, const Matrix& r) {
  CoboundaryResult out;
  CheckReport sym = symmetric_part_invariance(a, r);
  CheckReport adsq = ad_twist_square_bracket(a, r);
  out.conditions = sym.passed && adsq.passed;

  HomLieAlgebra dual = dual_algebra(cobracket_from_r(a, r));
  CheckReport dual_report(Condition::HomLie);
  dual_report.message = "dual algebra of the induced cobracket";
  dual_report.add_part(validate_hom_lie(dual));
  dual_report.add_part(is_weakly_involutive(dual));
  out.dual_valid = dual_report.passed;

  const bool chybe = r_square_bracket(a, r).is_zero();
  const bool skew = is_skew(r);
  if (out.conditions)
    out.classification = chybe ? (skew ? CoboundaryClass::Triangular : CoboundaryClass::Quasitriangular)
                               : CoboundaryClass::Coboundary;

  CheckReport& rep = out.report;
  rep.condition = Condition::Coboundary;
  rep.add_part(std::move(sym));
  rep.add_part(std::move(adsq));
  rep.parts.push_back(std::move(dual_report));
  rep.set_flag("conditions", out.conditions);
  rep.set_flag("dual_valid", out.dual_valid);
  rep.set_flag("chybe", chybe);
  rep.set_flag("skew", skew);
  rep.message = std::string(to_string(out.classification));
  if (out.conditions != out.dual_valid) {
    CheckReport agree(Condition::Agreement);
    agree.fail("conditions and dual algebra validity disagree");
    rep.add_part(std::move(agree));
  }
  return out;
}

CoboundaryResult validate_coboundary(const HomLieAlgebra& a, const Matrix& r) {
  require_wi_and_compat(a, r, "validate_coboundary");
  return coboundary_analysis(a, r);
}

CheckReport TwistDefectReports::combined() const {
  CheckReport c(Condition::Agreement);
  c.message = "twist-defect identities";
  c.add_part(twist);
  c.add_part(involutive);
  c.add_part(compatibility);
  return c;
}

TwistDefectReports twist_defect_identities(const HomLieAlgebra& a, const Matrix& r) {
  require_r(a, r);
  const std::size_t n = a.dim();
  const Matrix& phi = a.twist();
  const Matrix id = Matrix::identity(n);
  const Cobracket delta = cobracket_from_r(a, r);
  const Matrix d = twist_difference(a, r);

  TwistDefectReports out{CheckReport(Condition::DefectCobracketTwist), CheckReport(Condition::DefectCobracketInvolutive),
                         CheckReport(Condition::DefectCobracketCompatibility)};
  bool nz_twist = false, nz_inv = false, nz_comp = false;

  for (std::size_t x = 0; x < n; ++x) {
    const Vector ex = Vector::basis(n, x);
    const Matrix ad_phix_phi = a.ad(phi * ex) * phi;

    Matrix lhs = delta(phi * ex) - apply_pair(phi, phi, delta(x));
    Matrix rhs = apply_pair(ad_phix_phi, phi, d) - apply_pair(phi, ad_phix_phi, d);
    nz_twist = nz_twist || !lhs.is_zero();
    if (lhs != rhs) out.twist.add_witness({x}, lhs - rhs);

    lhs = apply_pair(phi * phi, id, delta(x)) - delta(x);
    rhs = apply_pair(phi, a.ad(ex), apply_pair(phi, id, d) + apply_pair(id, phi, d));
    nz_inv = nz_inv || !lhs.is_zero();
    if (lhs != rhs) out.involutive.add_witness({x}, lhs - rhs);
  }

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Vector xy = a.bracket(x, y);
      const Matrix ad_xy_phi = a.ad(xy) * phi;
      Matrix lhs = delta(xy) - ad_on_tensor2(a, phi.column(x), delta(y)) + ad_on_tensor2(a, phi.column(y), delta(x));
      Matrix rhs = apply_pair(ad_xy_phi, phi, d) - apply_pair(phi, ad_xy_phi, d);
      nz_comp = nz_comp || !lhs.is_zero();
      if (lhs != rhs) out.compatibility.add_witness({x, y}, lhs - rhs);
    }

  out.twist.set_flag("nonzero", nz_twist);
  out.involutive.set_flag("nonzero", nz_inv);
  out.compatibility.set_flag("nonzero", nz_comp);
  return out;
}

CheckReport jacobiator_identity(const HomLieAlgebra& a, const Matrix& r) {
  const std::size_t n = a.dim();
  const bool hyp = check_twist_compat(a, r).passed && symmetric_part_invariance(a, r).passed;
  const Cobracket delta = cobracket_from_r(a, r);
  const Tensor3 rr = r_square_bracket(a, r);
  CheckReport report(Condition::JacobiatorIdentity);
  report.set_flag("hypotheses", hyp);
  if (!hyp) report.message = "hypotheses fail; comparison is diagnostic";
  for (std::size_t x = 0; x < n; ++x) {
    Tensor3 d = jac_delta(delta, x) - ad_phi_on_tensor3(a, Vector::basis(n, x), rr);
    if (!d.is_zero()) report.add_witness({x}, d);
  }
  return report;
}

Matrix r_sharp(const Matrix& r) { return r.transpose(); }

HomLieAlgebra dual_bracket_from_r(const HomLieAlgebra& a, const Matrix& r) {
  require_r(a, r);
  require_wi_and_compat(a, r, "dual_bracket_from_r");
  const std::size_t n = a.dim();
  const Matrix& phi = a.twist();
  const Matrix sharp = r_sharp(r);
  const Matrix sharp21 = r_sharp(sigma2(r));
  // ad^o_x = -(ad_{phi x})^T
  auto coad = [&](const Vector& x) { return -a.ad(phi * x).transpose(); };
  Tensor3 c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector v = coad(sharp.column(i)) * Vector::basis(n, j) + coad(sharp21.column(j)) * Vector::basis(n, i);
      for (std::size_t k = 0; k < n; ++k) c(i, j, k) = v[k];
    }
  return HomLieAlgebra(a.label() + "-dual", std::move(c), phi.transpose());
}

CheckReport check_dual_bracket_routes(const HomLieAlgebra& a, const Matrix& r) {
  const std::size_t n = a.dim();
  const HomLieAlgebra via_sharp = dual_bracket_from_r(a, r);
  const HomLieAlgebra via_delta = dual_algebra(cobracket_from_r(a, r));
  CheckReport report(Condition::DualBracketRoutes);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector d = via_sharp.bracket(i, j) - via_delta.bracket(i, j);
      if (!d.is_zero()) report.add_witness({i, j}, d);
    }
  return report;
}

CheckReport r_sharp_bracket_defect(const HomLieAlgebra& a, const Matrix& r) {
  require_r(a, r);
  require_wi_and_compat(a, r, "r_sharp_bracket_defect");
  const std::size_t n = a.dim();
  const HomLieAlgebra dual = dual_algebra(cobracket_from_r(a, r));
  const Matrix s = r_sharp(r) * a.twist().transpose();
  const Tensor3 rr = r_square_bracket(a, r);
  CheckReport report(Condition::RSharpBracketDefect);
  bool nonzero = false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector lhs = a.bracket(s.column(i), s.column(j)) - s * dual.bracket(i, j);
      Vector rhs = contract12(rr, Vector::basis(n, i), Vector::basis(n, j));
      nonzero = nonzero || !lhs.is_zero() || !rhs.is_zero();
      if (lhs != rhs) report.add_witness({i, j}, lhs - rhs);
    }
  report.set_flag("nonzero", nonzero);
  return report;
}

FormFromR form_from_invertible_r(const HomLieAlgebra& a, const Matrix& r) {
  require_r(a, r);
  const std::size_t n = a.dim();
  CheckReport why(Condition::Precondition);
  if (!is_skew(r)) why.fail("r is not skew-symmetric");
  auto inv = inverse(r);
  if (!inv) why.fail("r-sharp is not invertible");
  why.add_part(check_twist_compat(a, r));
  if (!why.passed) throw PreconditionError("form_from_invertible_r: preconditions fail", std::move(why));

  FormFromR out{BilinearForm{*inv}, CheckReport(Condition::CyclicFormIdentity), false};
  const BilinearForm& b = out.form;
  const Matrix& phi = a.twist();
  CheckReport cyc(Condition::CyclicFormIdentity);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Rational v = b(phi.column(i), a.bracket(j, k)) + b(phi.column(j), a.bracket(k, i)) +
                     b(phi.column(k), a.bracket(i, j));
        if (!v.is_zero()) cyc.add_witness({i, j, k}, v);
      }
  CheckReport tw(Condition::FormTwistSymmetry);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational v = b(phi.column(i), Vector::basis(n, j)) - b(Vector::basis(n, i), phi.column(j));
      if (!v.is_zero()) tw.add_witness({i, j}, v);
    }
  out.report.add_part(std::move(cyc));
  out.report.add_part(std::move(tw));
  out.chybe = r_square_bracket(a, r).is_zero();
  out.report.set_flag("chybe", out.chybe);
  out.report.set_flag("agrees_with_chybe", out.report.passed == out.chybe);
  return out;
}

Matrix canonical_r(std::size_t n) {
  Matrix r(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) r(i, n + i) = 1;
  return r;
}

HomDouble hom_double(const HomLieBialgebra& bi) {
  CheckReport valid = validate_bialgebra(bi);
  if (!valid.passed) throw PreconditionError("hom_double: input is not a Hom-Lie bialgebra", std::move(valid));
  const std::size_t n = bi.algebra.dim();
  const HomLieAlgebra big = bialgebra_double(bi);
  Matrix r = canonical_r(n);
  HomLieBialgebra hd{big, cobracket_from_r(big, r)};

  CheckReport report(Condition::HomDouble);
  report.add_part(check_twist_compat(big, r));
  report.add_part(check_chybe(big, r));
  report.add_part(symmetric_part_invariance(big, r));

  const Matrix& phi = bi.algebra.twist();
  Matrix incl(2 * n, n), incl_dual(2 * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      incl(i, j) = phi(i, j);
      incl_dual(n + i, j) = phi(j, i);
    }
  CheckReport g_side = check_bialgebra_homomorphism(incl, bi, hd);
  g_side.message = "inclusion of g";
  report.add_part(std::move(g_side));

  // g^* carries the cobracket minus the dual of the bracket of g.
  const HomLieAlgebra dual = dual_algebra(bi.cobracket);
  Tensor3 minus_dual(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) minus_dual(k, i, j) = -bi.algebra.bracket()(i, j, k);
  HomLieBialgebra dual_bi{dual, Cobracket(dual, std::move(minus_dual))};
  CheckReport dual_side = check_bialgebra_homomorphism(incl_dual, dual_bi, hd);
  dual_side.message = "inclusion of the dual";
  report.add_part(std::move(dual_side));

  return {std::move(hd), std::move(r), std::move(report)};
}

}  // namespace homlie
