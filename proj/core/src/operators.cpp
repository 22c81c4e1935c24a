#include "homlie/operators.hpp"

#include "homlie/coboundary.hpp"
#include "homlie/linalg.hpp"

namespace homlie {

namespace {

void require_t(const OOperatorCandidate& c) {
  if (c.t.rows() != c.algebra().dim() || c.t.cols() != c.rep.carrier_dim())
    throw ShapeError("T must be " + std::to_string(c.algebra().dim()) + "x" + std::to_string(c.rep.carrier_dim()));
}

CheckReport t_twist_report(const OOperatorCandidate& c) {
  CheckReport rep(Condition::OOperatorTwist);
  Matrix d = c.t * c.rep.beta - c.algebra().twist() * c.t;
  for (std::size_t j = 0; j < d.cols(); ++j)
    if (!d.column(j).is_zero()) rep.add_witness({j}, d.column(j));
  return rep;
}

CheckReport implication(bool premise, bool conclusion, std::string what) {
  CheckReport rep(Condition::Agreement);
  rep.message = std::move(what);
  if (premise && !conclusion) rep.fail("premise holds but conclusion fails");
  return rep;
}

}  // namespace

Vector o_operator_defect(const OOperatorCandidate& c, const Vector& u, const Vector& v) {
  const Vector tu = c.t * u, tv = c.t * v;
  return c.algebra().bracket(tu, tv) - c.t * (c.rep.rho(tu) * v - c.rep.rho(tv) * u);
}

CheckReport validate_o_operator(const OOperatorCandidate& c) {
  require_t(c);
  const std::size_t m = c.rep.carrier_dim();
  CheckReport report(Condition::OOperator);
  report.add_part(t_twist_report(c));
  CheckReport br(Condition::OOperatorBracket);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vector d = o_operator_defect(c, Vector::basis(m, i), Vector::basis(m, j));
      if (!d.is_zero()) br.add_witness({i, j}, d);
    }
  report.add_part(std::move(br));
  return report;
}

HomLeftSymmetric::HomLeftSymmetric(std::string label_, Tensor3 product_, Matrix psi_)
    : label(std::move(label_)), product(std::move(product_)), psi(std::move(psi_)) {
  const std::size_t m = product.dim1();
  if (product.dim2() != m || product.dim3() != m) throw ShapeError("product constants must form an m x m x m cube");
  if (psi.rows() != m || psi.cols() != m) throw ShapeError("psi must be square of the algebra dimension");
}

Vector HomLeftSymmetric::multiply(const Vector& u, const Vector& v) const {
  const std::size_t m = dim();
  if (u.dim() != m || v.dim() != m) throw ShapeError("product: vector dimension mismatch");
  Vector w(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (v[j].is_zero()) continue;
      Rational uv = u[i] * v[j];
      for (std::size_t k = 0; k < m; ++k) w[k].add_product(uv, product(i, j, k));
    }
  }
  return w;
}

CheckReport validate_hlsa(const HomLeftSymmetric& l) {
  const std::size_t m = l.dim();
  auto e = [m](std::size_t i) { return Vector::basis(m, i); };
  CheckReport report(Condition::HomLeftSymmetric);

  CheckReport mult(Condition::TwistMultiplicativeProduct);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vector d = l.psi * l.multiply(e(i), e(j)) - l.multiply(l.psi.column(i), l.psi.column(j));
      if (!d.is_zero()) mult.add_witness({i, j}, d);
    }

  CheckReport ident(Condition::LeftSymmetricIdentity);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        const Vector pw = l.psi.column(k);
        Vector d = l.multiply(l.multiply(e(i), e(j)), pw) - l.multiply(l.psi.column(i), l.multiply(e(j), e(k))) -
                   l.multiply(l.multiply(e(j), e(i)), pw) + l.multiply(l.psi.column(j), l.multiply(e(i), e(k)));
        if (!d.is_zero()) ident.add_witness({i, j, k}, d);
      }

  report.add_part(std::move(mult));
  report.add_part(std::move(ident));
  report.add_part(validate_hom_lie(commutator_hom_lie(l)));
  report.add_part(validate_representation(left_mult_rep(l)));
  return report;
}

HomLieAlgebra commutator_hom_lie(const HomLeftSymmetric& l) {
  const std::size_t m = l.dim();
  Tensor3 c(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) c(i, j, k) = l.product(i, j, k) - l.product(j, i, k);
  return HomLieAlgebra(l.label + "-commutator", std::move(c), l.psi);
}

Representation left_mult_rep(const HomLeftSymmetric& l) {
  const std::size_t m = l.dim();
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < m; ++i) {
    Matrix li(m, m);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) li(k, j) = l.product(i, j, k);
    action.push_back(std::move(li));
  }
  return Representation(commutator_hom_lie(l), l.psi, std::move(action));
}

CheckReport square_twist_o_operator_checks(const HomLeftSymmetric& l) {
  const std::size_t m = l.dim();
  const Matrix psi2 = l.psi * l.psi;
  CheckReport cond(Condition::SquareTwistCriterion);
  cond.message = "u.v = psi^2(u).v";
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vector d = l.multiply(psi2.column(i), Vector::basis(m, j)) - l.multiply(Vector::basis(m, i), Vector::basis(m, j));
      if (!d.is_zero()) cond.add_witness({i, j}, d);
    }
  const Representation lrep = left_mult_rep(l);
  CheckReport wi = is_weakly_involutive_rep(lrep);

  CheckReport report(Condition::SquareTwistCriterion);
  report.set_flag("condition", cond.passed);
  report.set_flag("weakly_involutive", wi.passed);
  report.add_part(implication(cond.passed, wi.passed, "condition implies weak involutivity"));
  report.add_part(implication(wi.passed, cond.passed, "weak involutivity implies condition"));
  if (cond.passed) {
    CheckReport oop = validate_o_operator({lrep, psi2});
    report.set_flag("psi2_o_operator", oop.passed);
    oop.message = "psi^2 as O-operator";
    report.add_part(std::move(oop));
  }
  report.parts.push_back(std::move(cond));
  report.parts.push_back(std::move(wi));
  return report;
}

Matrix lift_t_bar(const OOperatorCandidate& c) {
  require_t(c);
  const std::size_t n = c.algebra().dim(), m = c.rep.carrier_dim();
  Matrix bar(n + m, n + m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < n; ++k) bar(n + i, k) = c.t(k, i);
  return bar;
}

OOperatorSolution r_from_o_operator(const OOperatorCandidate& c) {
  require_t(c);
  CheckReport why(Condition::Precondition);
  why.add_part(t_twist_report(c));
  why.add_part(is_weakly_involutive_rep(c.rep));
  if (!why.passed) throw PreconditionError("r_from_o_operator: needs T beta = phi T and a weakly involutive representation", std::move(why));

  const std::size_t n = c.algebra().dim(), m = c.rep.carrier_dim();
  HomLieAlgebra big = semidirect_product(hom_dual_representation(c.rep));
  const Matrix bar = lift_t_bar(c);
  Matrix r = bar - sigma2(bar);

  const Matrix& phi = c.algebra().twist();
  Tensor3 expected(n + m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vector w = phi * o_operator_defect(c, Vector::basis(m, i), Vector::basis(m, j));
      for (std::size_t a = 0; a < n; ++a) {
        if (w[a].is_zero()) continue;
        expected(a, n + i, n + j) += w[a];
        expected(n + i, a, n + j) -= w[a];
        expected(n + i, n + j, a) += w[a];
      }
    }
  const Tensor3 rr = r_square_bracket(big, r);

  OOperatorSolution out{big, r, CheckReport(Condition::OOperatorDefectExpansion), false};
  CheckReport& rep = out.report;
  rep.add_part(check_twist_compat(big, r));
  CheckReport expansion(Condition::OOperatorDefectExpansion);
  expansion.message = "[r,r] against the O_T expansion";
  const Tensor3 diff = rr - expected;
  for (std::size_t a = 0; a < n + m; ++a)
    for (std::size_t b = 0; b < n + m; ++b)
      for (std::size_t k = 0; k < n + m; ++k)
        if (!diff(a, b, k).is_zero()) expansion.add_witness({a, b, k}, diff(a, b, k));
  rep.add_part(std::move(expansion));

  out.o_operator = validate_o_operator(c).passed;
  const bool chybe = rr.is_zero();
  rep.set_flag("o_operator", out.o_operator);
  rep.set_flag("chybe", chybe);
  rep.add_part(implication(out.o_operator, chybe, "O-operator implies [r,r] = 0"));
  if (!determinant(phi).is_zero()) {
    rep.set_flag("converse_checked", true);
    rep.add_part(implication(chybe, out.o_operator, "[r,r] = 0 with invertible twist implies O-operator"));
  }
  return out;
}

WedgeSolutions hlsa_wedge_solutions(const HomLeftSymmetric& l) {
  CheckReport crit = square_twist_o_operator_checks(l);
  if (!crit.flag("condition"))
    throw PreconditionError("hlsa_wedge_solutions: u.v = psi^2(u).v fails", std::move(crit));

  const std::size_t m = l.dim();
  const Representation lrep = left_mult_rep(l);
  OOperatorSolution s1 = r_from_o_operator({lrep, Matrix::identity(m)});
  OOperatorSolution s2 = r_from_o_operator({lrep, l.psi * l.psi});

  WedgeSolutions out{s1.algebra, s1.r, s2.r, CheckReport(Condition::WedgeSolutions)};
  CheckReport& rep = out.report;
  CheckReport c1 = check_chybe(out.algebra, out.r1);
  c1.message = "r1";
  CheckReport c2 = check_chybe(out.algebra, out.r2);
  c2.message = "r2";
  rep.add_part(std::move(c1));
  rep.add_part(std::move(c2));

  const bool part_b = is_weakly_involutive(commutator_hom_lie(l)).passed;
  rep.set_flag("same_cobracket_checked", part_b);
  if (part_b) {
    CoboundaryResult b1 = validate_coboundary(out.algebra, out.r1);
    CoboundaryResult b2 = validate_coboundary(out.algebra, out.r2);
    b1.report.message = "r1 " + b1.report.message;
    b2.report.message = "r2 " + b2.report.message;
    rep.add_part(std::move(b1.report));
    rep.add_part(std::move(b2.report));
    CheckReport same(Condition::Agreement);
    same.message = "cobrackets induced by r1 and r2";
    const Tensor3 d = cobracket_from_r(out.algebra, out.r1).coeffs - cobracket_from_r(out.algebra, out.r2).coeffs;
    for (std::size_t k = 0; k < d.dim1(); ++k)
      if (!d.slice(k).is_zero()) same.add_witness({k}, d.slice(k));
    rep.add_part(std::move(same));
  }
  rep.set_flag("r1_equals_r2", out.r1 == out.r2);
  return out;
}

OOperatorBialgebra o_operator_bialgebra(const OOperatorCandidate& c) {
  require_t(c);
  CheckReport why(Condition::Precondition);
  why.add_part(is_weakly_involutive(c.algebra()));
  why.add_part(is_weakly_involutive_rep(c.rep));
  CheckReport square(Condition::RepTwistSquare);
  const Matrix beta2 = c.rep.beta * c.rep.beta;
  for (std::size_t i = 0; i < c.algebra().dim(); ++i) {
    Matrix rp = c.rep.rho(c.algebra().twist().column(i));
    Matrix d = rp * beta2 - rp;
    if (!d.is_zero()) square.add_witness({i}, d);
  }
  why.add_part(std::move(square));
  why.add_part(validate_o_operator(c));
  if (!why.passed) throw PreconditionError("o_operator_bialgebra: hypotheses fail", std::move(why));

  OOperatorSolution sol = r_from_o_operator(c);
  HomLieBialgebra bi{sol.algebra, cobracket_from_r(sol.algebra, sol.r)};
  OOperatorBialgebra out{bi, sol.r, CheckReport(Condition::Bialgebra)};
  out.report.message = "coboundary bialgebra from an O-operator";
  out.report.add_part(std::move(sol.report));
  out.report.add_part(validate_bialgebra(bi));
  out.report.add_part(check_triple_equivalence(bi));
  out.report.add_part(validate_coboundary(sol.algebra, sol.r).report);
  return out;
}

}  // namespace homlie
