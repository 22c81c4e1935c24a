#include "homlie/bialgebra.hpp"

namespace homlie {

Cobracket::Cobracket(HomLieAlgebra base_, Tensor3 coeffs_) : base(std::move(base_)), coeffs(std::move(coeffs_)) {
  const std::size_t n = base.dim();
  if (coeffs.dim1() != n || coeffs.dim2() != n || coeffs.dim3() != n)
    throw ShapeError("cobracket coefficients must form an n x n x n cube matching the algebra");
}

Cobracket Cobracket::zero(HomLieAlgebra base) {
  const std::size_t n = base.dim();
  return Cobracket(std::move(base), Tensor3(n));
}

Matrix Cobracket::operator()(const Vector& x) const {
  const std::size_t n = base.dim();
  if (x.dim() != n) throw ShapeError("cobracket: vector dimension does not match algebra");
  Matrix t(n, n);
  for (std::size_t k = 0; k < n; ++k)
    if (!x[k].is_zero()) t += x[k] * coeffs.slice(k);
  return t;
}

HomLieAlgebra dual_algebra(const Cobracket& cb) {
  const std::size_t n = cb.base.dim();
  Tensor3 c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c(i, j, k) = cb.coeffs(k, i, j);
  return HomLieAlgebra(cb.base.label() + "-dual", std::move(c), cb.base.twist().transpose());
}

Cobracket cobracket_from_dual(const HomLieAlgebra& g, const HomLieAlgebra& dual) {
  const std::size_t n = g.dim();
  if (dual.dim() != n) throw ShapeError("dual algebra dimension differs");
  Tensor3 d(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) d(k, i, j) = dual.bracket()(i, j, k);
  return Cobracket(g, std::move(d));
}

Matrix ad_on_tensor2(const HomLieAlgebra& a, const Vector& x, const Matrix& t) {
  Matrix adx = a.ad(x);
  return apply_pair(a.twist(), adx, t) + apply_pair(adx, a.twist(), t);
}

CheckReport validate_matched_pair(const MatchedPair& mp) {
  const HomLieAlgebra& g = mp.g;
  const HomLieAlgebra& h = mp.h;
  const std::size_t n = g.dim(), m = h.dim();
  if (mp.rho.base.dim() != n || mp.rho.carrier_dim() != m || mp.rho2.base.dim() != m || mp.rho2.carrier_dim() != n)
    throw ShapeError("matched pair: representation shapes do not fit the two algebras");
  const Matrix& phi = g.twist();
  const Matrix& psi = h.twist();
  CheckReport report(Condition::MatchedPair);
  report.add_part(validate_hom_lie(g));
  report.add_part(validate_hom_lie(h));
  report.add_part(validate_representation(mp.rho));
  report.add_part(validate_representation(mp.rho2));
  if (mp.rho.beta != psi) report.fail("action of g must use the twist of h");
  if (mp.rho2.beta != phi) report.fail("action of h must use the twist of g");

  auto rho = [&](const Vector& x) { return mp.rho.rho(x); };
  auto rho2 = [&](const Vector& x) { return mp.rho2.rho(x); };

  CheckReport first(Condition::MatchedPairFirst);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < m; ++a) {
        Vector x = Vector::basis(n, i), y = Vector::basis(n, j), xp = Vector::basis(m, a);
        Matrix r2x = rho2(xp);
        Vector lhs = rho2(psi * xp) * g.bracket(i, j);
        Vector rhs = g.bracket(r2x * x, phi * y) + g.bracket(phi * x, r2x * y) + rho2(rho(y) * xp) * (phi * x) -
                     rho2(rho(x) * xp) * (phi * y);
        Vector d = lhs - rhs;
        if (!d.is_zero()) first.add_witness({i, j, a}, d);
      }

  CheckReport second(Condition::MatchedPairSecond);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        Vector x = Vector::basis(n, i), xp = Vector::basis(m, a), yp = Vector::basis(m, b);
        Matrix rx = rho(x);
        Vector lhs = rho(phi * x) * h.bracket(a, b);
        Vector rhs = h.bracket(rx * xp, psi * yp) + h.bracket(psi * xp, rx * yp) + rho(rho2(yp) * x) * (psi * xp) -
                     rho(rho2(xp) * x) * (psi * yp);
        Vector d = lhs - rhs;
        if (!d.is_zero()) second.add_witness({i, a, b}, d);
      }

  report.add_part(std::move(first));
  report.add_part(std::move(second));
  return report;
}

HomLieAlgebra assemble_double(const MatchedPair& mp) {
  const std::size_t n = mp.g.dim(), m = mp.h.dim();
  Tensor3 c(n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c(i, j, k) = mp.g.bracket()(i, j, k);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t k = 0; k < m; ++k) c(n + a, n + b, n + k) = mp.h.bracket()(a, b, k);
  // [e_i, f_b] = -rho2(f_b) e_i + rho(e_i) f_b
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t k = 0; k < n; ++k) {
        c(i, n + b, k) = -mp.rho2.rho(b)(k, i);
        c(n + b, i, k) = mp.rho2.rho(b)(k, i);
      }
      for (std::size_t a = 0; a < m; ++a) {
        c(i, n + b, n + a) = mp.rho.rho(i)(a, b);
        c(n + b, i, n + a) = -mp.rho.rho(i)(a, b);
      }
    }
  return HomLieAlgebra(mp.g.label() + "-double", std::move(c), direct_sum(mp.g.twist(), mp.h.twist()));
}

HomLieAlgebra double_from_matched_pair(const MatchedPair& mp) {
  CheckReport r = validate_matched_pair(mp);
  if (!r.passed) throw PreconditionError("double_from_matched_pair: not a matched pair", std::move(r));
  return assemble_double(mp);
}

CheckReport double_weak_involutivity_criteria(const MatchedPair& mp) {
  auto twist_square = [](const Representation& r, const Matrix& tw) {
    CheckReport rep(Condition::RepTwistSquare);
    const Matrix sq = tw * tw;
    for (std::size_t i = 0; i < r.base.dim(); ++i) {
      Matrix d = r.rho(i) * sq - r.rho(i);
      if (!d.is_zero()) rep.add_witness({i}, d);
    }
    return rep;
  };
  std::vector<CheckReport> crit;
  crit.push_back(is_weakly_involutive(mp.g));
  crit.push_back(is_weakly_involutive_rep(mp.rho));
  crit.push_back(is_weakly_involutive(mp.h));
  crit.push_back(is_weakly_involutive_rep(mp.rho2));
  crit.push_back(twist_square(mp.rho, mp.h.twist()));
  crit.push_back(twist_square(mp.rho2, mp.g.twist()));
  bool conj = true;
  for (const auto& c : crit) conj = conj && c.passed;
  CheckReport direct = is_weakly_involutive(double_from_matched_pair(mp));

  CheckReport report(Condition::DoubleCriteria);
  for (auto& c : crit) report.parts.push_back(std::move(c));
  report.parts.push_back(direct);
  report.set_flag("criteria", conj);
  report.set_flag("direct", direct.passed);
  if (conj != direct.passed) report.fail("criteria and direct check on the double disagree");
  return report;
}

BilinearForm standard_form(std::size_t n) {
  Matrix g(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, n + i) = 1;
    g(n + i, i) = 1;
  }
  return {std::move(g)};
}

CheckReport validate_manin_triple(const HomLieAlgebra& big, std::size_t n) {
  if (big.dim() != 2 * n) throw ShapeError("Manin triple: algebra must have dimension 2n");
  const BilinearForm form = standard_form(n);
  CheckReport report(Condition::ManinTriple);
  report.add_part(validate_hom_lie(big));
  report.add_part(check_subalgebra(big, 0, n));
  report.add_part(check_subalgebra(big, n, n));
  CheckReport iso(Condition::Isotropy);
  for (std::size_t block : {std::size_t{0}, n})
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!form.gram(block + i, block + j).is_zero()) iso.add_witness({block + i, block + j}, form.gram(block + i, block + j));
  report.add_part(std::move(iso));
  report.add_part(check_invariant_form(big, form));
  return report;
}

CheckReport check_bialgebra_compatibility(const HomLieBialgebra& bi) {
  const HomLieAlgebra& g = bi.algebra;
  const std::size_t n = g.dim();
  const Matrix& phi = g.twist();
  const bool skew = validate_hom_lie(g).find(Condition::SkewSymmetry)->passed;
  CheckReport report(Condition::BialgebraCompatibility);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = skew ? i + 1 : 0; j < n; ++j) {
      Matrix d = bi.cobracket(g.bracket(i, j)) - ad_on_tensor2(g, phi.column(i), bi.cobracket(j)) +
                 ad_on_tensor2(g, phi.column(j), bi.cobracket(i));
      if (!d.is_zero()) report.add_witness({i, j}, d);
    }
  return report;
}

CheckReport validate_bialgebra(const HomLieBialgebra& bi) {
  if (!(bi.cobracket.base == bi.algebra)) throw ShapeError("cobracket is defined over a different algebra");
  HomLieAlgebra dual = dual_algebra(bi.cobracket);
  CheckReport report(Condition::Bialgebra);
  auto labelled = [](CheckReport r, const char* what) {
    r.message = what;
    return r;
  };
  report.add_part(labelled(validate_hom_lie(bi.algebra), "algebra"));
  report.add_part(labelled(is_weakly_involutive(bi.algebra), "algebra"));
  report.add_part(labelled(validate_hom_lie(dual), "dual algebra"));
  report.add_part(labelled(is_weakly_involutive(dual), "dual algebra"));
  report.add_part(check_bialgebra_compatibility(bi));
  return report;
}

MatchedPair bialgebra_matched_pair_unchecked(const HomLieBialgebra& bi) {
  HomLieAlgebra dual = dual_algebra(bi.cobracket);
  Representation ad_g = hom_dual_unchecked(adjoint_rep(bi.algebra));
  Representation ad_dual = hom_dual_unchecked(adjoint_rep(dual));
  return {bi.algebra, dual, std::move(ad_g), std::move(ad_dual)};
}

HomLieAlgebra bialgebra_double(const HomLieBialgebra& bi) {
  return assemble_double(bialgebra_matched_pair_unchecked(bi)).relabeled(bi.algebra.label() + "-double");
}

CheckReport check_triple_equivalence(const HomLieBialgebra& bi) {
  const std::size_t n = bi.algebra.dim();
  CheckReport bialg = validate_bialgebra(bi);

  CheckReport matched(Condition::MatchedPair);
  try {
    HomLieAlgebra dual = dual_algebra(bi.cobracket);
    Representation ad_g = hom_dual_representation(adjoint_rep(bi.algebra));
    Representation ad_dual = hom_dual_representation(adjoint_rep(dual));
    matched = validate_matched_pair({bi.algebra, dual, std::move(ad_g), std::move(ad_dual)});
  } catch (const PreconditionError& e) {
    matched.message = e.what();
    matched.add_part(e.report());
  }

  CheckReport manin = validate_manin_triple(bialgebra_double(bi), n);

  CheckReport report(Condition::TripleEquivalence);
  report.set_flag("bialgebra", bialg.passed);
  report.set_flag("matched_pair", matched.passed);
  report.set_flag("manin_triple", manin.passed);
  const bool agree = bialg.passed == matched.passed && matched.passed == manin.passed;
  report.message = agree ? (bialg.passed ? "all three pass" : "all three fail") : "verdicts disagree";
  report.parts.push_back(std::move(bialg));
  report.parts.push_back(std::move(matched));
  report.parts.push_back(std::move(manin));
  if (!agree) report.fail("bialgebra, matched pair and Manin triple verdicts differ");
  return report;
}

CheckReport check_bialgebra_homomorphism(const Matrix& f, const HomLieBialgebra& from, const HomLieBialgebra& to) {
  const std::size_t n = from.algebra.dim();
  CheckReport report(Condition::BialgebraHomomorphism);
  report.add_part(check_algebra_homomorphism(f, from.algebra, to.algebra));
  CheckReport co(Condition::CobracketIntertwining);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix d = apply_pair(f, f, from.cobracket(i)) - to.cobracket(f.column(i));
    if (!d.is_zero()) co.add_witness({i}, d);
  }
  report.add_part(std::move(co));
  return report;
}

}  // namespace homlie
