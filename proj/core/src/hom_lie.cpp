#include "homlie/hom_lie.hpp"

#include <random>

#include "homlie/linalg.hpp"
#include "homlie/representation.hpp"

namespace homlie {

namespace {

void require_square(const Matrix& m, std::size_t n, const char* what) {
  if (m.rows() != n || m.cols() != n)
    throw ShapeError(std::string(what) + ": expected " + std::to_string(n) + "x" + std::to_string(n) +
                     " matrix, got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

}  // namespace

HomLieAlgebra::HomLieAlgebra(std::string label, Tensor3 bracket, Matrix twist)
    : label_(std::move(label)), bracket_(std::move(bracket)), twist_(std::move(twist)) {
  const std::size_t n = bracket_.dim1();
  if (bracket_.dim2() != n || bracket_.dim3() != n) throw ShapeError("bracket constants must form an n x n x n cube");
  require_square(twist_, n, "twist");
}

HomLieAlgebra HomLieAlgebra::lie(std::string label, Tensor3 bracket) {
  const std::size_t n = bracket.dim1();
  return HomLieAlgebra(std::move(label), std::move(bracket), Matrix::identity(n));
}

HomLieAlgebra HomLieAlgebra::abelian(std::string label, std::size_t n, Matrix twist) {
  return HomLieAlgebra(std::move(label), Tensor3(n), std::move(twist));
}

Vector HomLieAlgebra::bracket(std::size_t i, std::size_t j) const {
  Vector v(dim());
  for (std::size_t k = 0; k < dim(); ++k) v[k] = bracket_(i, j, k);
  return v;
}

Vector HomLieAlgebra::bracket(const Vector& x, const Vector& y) const {
  const std::size_t n = dim();
  if (x.dim() != n || y.dim() != n) throw ShapeError("bracket: vector dimension does not match algebra");
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) v[k].add_product(xy, bracket_(i, j, k));
    }
  }
  return v;
}

Matrix HomLieAlgebra::ad(std::size_t i) const {
  const std::size_t n = dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m(k, j) = bracket_(i, j, k);
  return m;
}

Matrix HomLieAlgebra::ad(const Vector& x) const {
  const std::size_t n = dim();
  if (x.dim() != n) throw ShapeError("ad: vector dimension does not match algebra");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    if (!x[i].is_zero()) m += x[i] * ad(i);
  return m;
}

HomLieAlgebra HomLieAlgebra::relabeled(std::string label) const {
  HomLieAlgebra a = *this;
  a.label_ = std::move(label);
  return a;
}

Rational BilinearForm::operator()(const Vector& x, const Vector& y) const {
  if (x.dim() != gram.rows() || y.dim() != gram.cols()) throw ShapeError("bilinear form: vector dimension mismatch");
  return pair_dual(x, gram * y);
}

bool BilinearForm::is_nondegenerate() const { return gram.is_square() && !determinant(gram).is_zero(); }

CheckReport validate_hom_lie(const HomLieAlgebra& a) {
  const std::size_t n = a.dim();
  const Matrix& phi = a.twist();
  CheckReport report(Condition::HomLie);

  CheckReport skew(Condition::SkewSymmetry);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vector r = a.bracket(i, j) + a.bracket(j, i);
      if (!r.is_zero()) skew.add_witness({i, j}, r);
    }

  CheckReport mult(Condition::TwistMultiplicative);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector r = phi * a.bracket(i, j) - a.bracket(phi.column(i), phi.column(j));
      if (!r.is_zero()) mult.add_witness({i, j}, r);
    }

  // With a skew bracket the cyclic sum is alternating, so increasing triples suffice.
  CheckReport jacobi(Condition::HomJacobi);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = skew.passed ? i + 1 : 0; j < n; ++j)
      for (std::size_t k = skew.passed ? j + 1 : 0; k < n; ++k) {
        Vector r = a.bracket(phi.column(i), a.bracket(j, k)) + a.bracket(phi.column(j), a.bracket(k, i)) +
                   a.bracket(phi.column(k), a.bracket(i, j));
        if (!r.is_zero()) jacobi.add_witness({i, j, k}, r);
      }

  report.add_part(std::move(skew));
  report.add_part(std::move(mult));
  report.add_part(std::move(jacobi));
  return report;
}

CheckReport is_weakly_involutive(const HomLieAlgebra& a) {
  const std::size_t n = a.dim();
  const Matrix phi2 = a.twist() * a.twist();
  CheckReport report(Condition::WeaklyInvolutive);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector r = a.bracket(phi2.column(i), Vector::basis(n, j)) - a.bracket(i, j);
      if (!r.is_zero()) report.add_witness({i, j}, r);
    }
  return report;
}

CheckReport check_invariant_form(const HomLieAlgebra& a, const BilinearForm& b) {
  const std::size_t n = a.dim();
  require_square(b.gram, n, "gram");
  const Matrix& phi = a.twist();
  CheckReport report(Condition::InvariantForm);

  CheckReport inv(Condition::FormInvariance);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector xy = a.bracket(i, j);
      Matrix ad_phi_y = a.ad(phi.column(j));
      for (std::size_t k = 0; k < n; ++k) {
        Rational r = b(xy, Vector::basis(n, k)) - b(Vector::basis(n, i), ad_phi_y.column(k));
        if (!r.is_zero()) inv.add_witness({i, j, k}, r);
      }
    }

  CheckReport tw(Condition::FormTwistSymmetry);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational r = b(phi.column(i), Vector::basis(n, j)) - b(Vector::basis(n, i), phi.column(j));
      if (!r.is_zero()) tw.add_witness({i, j}, r);
    }

  report.add_part(std::move(inv));
  report.add_part(std::move(tw));
  report.set_flag("symmetric", b.is_symmetric());
  report.set_flag("nondegenerate", b.is_nondegenerate());
  return report;
}

CheckReport check_algebra_homomorphism(const Matrix& f, const HomLieAlgebra& from, const HomLieAlgebra& to) {
  const std::size_t n = from.dim(), m = to.dim();
  if (f.rows() != m || f.cols() != n)
    throw ShapeError("homomorphism matrix must be " + std::to_string(m) + "x" + std::to_string(n));
  CheckReport report(Condition::AlgebraHomomorphism);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector r = f * from.bracket(i, j) - to.bracket(f.column(i), f.column(j));
      if (!r.is_zero()) report.add_witness({i, j}, r, "bracket");
    }
  CheckReport tw(Condition::TwistIntertwining);
  Matrix d = f * from.twist() - to.twist() * f;
  for (std::size_t i = 0; i < n; ++i)
    if (!d.column(i).is_zero()) tw.add_witness({i}, d.column(i));
  report.add_part(std::move(tw));
  return report;
}

CheckReport check_subalgebra(const HomLieAlgebra& a, std::size_t first, std::size_t count) {
  const std::size_t n = a.dim();
  if (first + count > n) throw ShapeError("subalgebra block exceeds algebra dimension");
  auto outside = [&](Vector v) {
    for (std::size_t k = first; k < first + count; ++k) v[k] = 0;
    return v;
  };
  CheckReport report(Condition::Subalgebra);
  for (std::size_t i = first; i < first + count; ++i)
    for (std::size_t j = first; j < first + count; ++j) {
      Vector r = outside(a.bracket(i, j));
      if (!r.is_zero()) report.add_witness({i, j}, r, "bracket leaves block");
    }
  for (std::size_t i = first; i < first + count; ++i) {
    Vector r = outside(a.twist().column(i));
    if (!r.is_zero()) report.add_witness({i}, r, "twist leaves block");
  }
  return report;
}

HomLieAlgebra restrict_to_block(const HomLieAlgebra& a, std::size_t first, std::size_t count, std::string label) {
  if (first + count > a.dim()) throw ShapeError("block exceeds algebra dimension");
  Tensor3 c(count);
  Matrix phi(count, count);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) {
      phi(i, j) = a.twist()(first + i, first + j);
      for (std::size_t k = 0; k < count; ++k) c(i, j, k) = a.bracket()(first + i, first + j, first + k);
    }
  return HomLieAlgebra(std::move(label), std::move(c), std::move(phi));
}

HomLieAlgebra change_basis(const HomLieAlgebra& a, const Matrix& p) {
  const std::size_t n = a.dim();
  require_square(p, n, "change of basis");
  auto pinv = inverse(p);
  if (!pinv) throw ShapeError("change of basis matrix is singular");
  Tensor3 c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector v = *pinv * a.bracket(p.column(i), p.column(j));
      for (std::size_t k = 0; k < n; ++k) c(i, j, k) = v[k];
    }
  return HomLieAlgebra(a.label(), std::move(c), *pinv * a.twist() * p);
}

FormEquivalence form_to_equivalence(const HomLieAlgebra& a, const BilinearForm& b) {
  require_square(b.gram, a.dim(), "gram");
  if (!b.is_nondegenerate()) {
    CheckReport why(Condition::Precondition);
    why.fail("bilinear form is degenerate");
    throw PreconditionError("form_to_equivalence: degenerate form", std::move(why));
  }
  CheckReport wi = is_weakly_involutive(a);
  if (!wi.passed) throw PreconditionError("form_to_equivalence: algebra is not weakly involutive", std::move(wi));

  // (Mx)_j = B(x, e_j)
  Matrix map = b.gram.transpose();
  Representation adj = adjoint_rep(a);
  Representation coadj = hom_dual_representation(adj);
  CheckReport report(Condition::FormEquivalence);
  report.add_part(check_invariant_form(a, b));
  report.add_part(check_rep_equivalence(adj, coadj, map));
  report.set_flag("symmetric", b.is_symmetric());
  return {std::move(map), std::move(report)};
}

FormFromEquivalence equivalence_to_form(const HomLieAlgebra& a, const Matrix& psi) {
  require_square(psi, a.dim(), "equivalence map");
  if (determinant(psi).is_zero()) {
    CheckReport why(Condition::Precondition);
    why.fail("equivalence map is singular");
    throw PreconditionError("equivalence_to_form: singular map", std::move(why));
  }
  BilinearForm form{psi.transpose()};
  return {form, check_invariant_form(a, form)};
}

std::vector<BilinearForm> invariant_forms(const HomLieAlgebra& a, bool symmetric_only) {
  const std::size_t n = a.dim();
  // Unknown index of gram entry (i, j).
  std::vector<std::size_t> var(n * n);
  std::size_t nvars = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (symmetric_only && j < i) var[i * n + j] = var[j * n + i];
      else var[i * n + j] = nvars++;
    }

  std::vector<std::vector<Rational>> rows;
  auto push = [&](std::vector<Rational> row) {
    for (const auto& q : row)
      if (!q.is_zero()) {
        rows.push_back(std::move(row));
        return;
      }
  };
  const Matrix& phi = a.twist();
  // B([e_i,e_j], e_k) - B(e_i, [phi e_j, e_k]) = 0
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector xy = a.bracket(i, j);
      Matrix ad_phi_y = a.ad(phi.column(j));
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<Rational> row(nvars);
        for (std::size_t l = 0; l < n; ++l) {
          row[var[l * n + k]] += xy[l];
          row[var[i * n + l]] -= ad_phi_y(l, k);
        }
        push(std::move(row));
      }
    }
  // B(phi e_i, e_j) - B(e_i, phi e_j) = 0
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> row(nvars);
      for (std::size_t l = 0; l < n; ++l) {
        row[var[l * n + j]] += phi(l, i);
        row[var[i * n + l]] -= phi(l, j);
      }
      push(std::move(row));
    }

  Matrix system(rows.size(), nvars);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < nvars; ++c) system(r, c) = rows[r][c];

  std::vector<BilinearForm> out;
  for (const Vector& v : nullspace(system)) {
    Matrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = v[var[i * n + j]];
    out.push_back({std::move(g)});
  }
  return out;
}

NondegenerateSearch find_nondegenerate_symmetric_form(const HomLieAlgebra& a, unsigned long long seed,
                                                      int random_trials) {
  const std::size_t n = a.dim();
  std::vector<BilinearForm> basis = invariant_forms(a, true);
  NondegenerateSearch out;
  out.space_dim = basis.size();
  const std::size_t k = basis.size();
  if (k == 0) {
    out.conclusive = true;
    return out;
  }
  auto combine = [&](const std::vector<long>& coeffs) {
    Matrix g(n, n);
    for (std::size_t t = 0; t < k; ++t)
      if (coeffs[t] != 0) g += Rational(coeffs[t]) * basis[t].gram;
    return BilinearForm{std::move(g)};
  };

  // Grid {0..n}^k: a nonzero polynomial of degree <= n cannot vanish on all of it.
  std::size_t grid = 1;
  bool exhaustive = true;
  for (std::size_t t = 0; t < k && exhaustive; ++t) {
    grid *= n + 1;
    if (grid > 20000) exhaustive = false;
  }
  if (exhaustive) {
    std::vector<long> coeffs(k, 0);
    for (std::size_t idx = 0; idx < grid; ++idx) {
      std::size_t rest = idx;
      for (std::size_t t = 0; t < k; ++t) {
        coeffs[t] = static_cast<long>(rest % (n + 1));
        rest /= n + 1;
      }
      BilinearForm b = combine(coeffs);
      if (b.is_nondegenerate()) {
        out.witness = std::move(b);
        break;
      }
    }
    out.conclusive = true;
    return out;
  }

  for (std::size_t t = 0; t < k; ++t) {
    if (basis[t].is_nondegenerate()) {
      out.witness = basis[t];
      out.conclusive = true;
      return out;
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-3, 3);
  std::vector<long> coeffs(k);
  for (int trial = 0; trial < random_trials; ++trial) {
    for (auto& c : coeffs) c = coeff(rng);
    BilinearForm b = combine(coeffs);
    if (b.is_nondegenerate()) {
      out.witness = std::move(b);
      out.conclusive = true;
      return out;
    }
  }
  return out;
}

}  // namespace homlie
