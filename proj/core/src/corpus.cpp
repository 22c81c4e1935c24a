#include "homlie/corpus.hpp"

#include <stdexcept>

#include "homlie/coboundary.hpp"

namespace homlie {

namespace {

struct Term {
  std::size_t i, j, k;  // 1-based
  long value;
};

// Skew-completed bracket constants from [e_i, e_j] = sum value e_k.
Tensor3 bracket(std::size_t n, std::initializer_list<Term> terms) {
  Tensor3 c(n);
  for (const auto& t : terms) {
    c(t.i - 1, t.j - 1, t.k - 1) += Rational(t.value);
    c(t.j - 1, t.i - 1, t.k - 1) -= Rational(t.value);
  }
  return c;
}

Tensor3 product(std::size_t n, std::initializer_list<Term> terms) {
  Tensor3 p(n);
  for (const auto& t : terms) p(t.i - 1, t.j - 1, t.k - 1) += Rational(t.value);
  return p;
}

Structure algebra_only(std::string name, Tensor3 c, Matrix phi) {
  Structure s;
  s.name = name;
  s.algebra = HomLieAlgebra(std::move(name), std::move(c), std::move(phi));
  return s;
}

Structure lsa_only(std::string name, Tensor3 p, Matrix psi) {
  Structure s;
  s.name = name;
  s.lsa = HomLeftSymmetric(std::move(name), std::move(p), std::move(psi));
  return s;
}

Structure make_abelian2() { return algebra_only("abelian2", Tensor3(2), Matrix::identity(2)); }

Structure make_aff2() { return algebra_only("aff2", bracket(2, {{1, 2, 1, 1}}), Matrix::identity(2)); }

Structure make_aff2phi() { return algebra_only("aff2phi", bracket(2, {{1, 2, 1, 1}}), Matrix{{1, 1}, {0, 1}}); }

Structure make_aff2bad() { return algebra_only("aff2bad", bracket(2, {{1, 2, 1, 1}}), Matrix{{2, 0}, {0, 1}}); }

Structure make_heis3() { return algebra_only("heis3", bracket(3, {{1, 2, 3, 1}}), Matrix::identity(3)); }

Structure make_heis3phi() {
  return algebra_only("heis3phi", bracket(3, {{1, 2, 3, 1}}), Matrix{{1, 0, 0}, {0, 1, 0}, {1, 0, 1}});
}

// basis (h, e, f)
Structure make_sl2() {
  return algebra_only("sl2", bracket(3, {{1, 2, 2, 2}, {1, 3, 3, -2}, {2, 3, 1, 1}}), Matrix::identity(3));
}

// alpha o [,] with alpha(h) = -h, alpha(e) = f, alpha(f) = e
Structure make_sl2yau() {
  return algebra_only("sl2yau", bracket(3, {{1, 2, 3, 2}, {1, 3, 2, -2}, {2, 3, 1, -1}}),
                      Matrix{{-1, 0, 0}, {0, 0, 1}, {0, 1, 0}});
}

Structure make_notjac3() {
  return algebra_only("notjac3", bracket(3, {{1, 2, 1, 1}, {1, 3, 3, 1}}), Matrix::identity(3));
}

Structure make_lsa2() { return lsa_only("lsa2", product(2, {{2, 2, 1, 1}}), Matrix::identity(2)); }

Structure make_lsa2psi() { return lsa_only("lsa2psi", product(2, {{2, 2, 1, 1}}), Matrix{{1, 1}, {0, 1}}); }

Structure make_lsa2bad() { return lsa_only("lsa2bad", product(2, {{1, 2, 2, 1}}), Matrix{{2, 0}, {0, 0}}); }

Structure make_aff2_zero() {
  Structure s = make_aff2();
  s.name = "aff2-zero";
  s.cobracket = Tensor3(2);
  return s;
}

Structure make_aff2_triangular() {
  Structure s = make_aff2();
  s.name = "aff2-triangular";
  s.rmatrix = Matrix{{0, 1}, {-1, 0}};
  s.cobracket = cobracket_from_r(*s.algebra, *s.rmatrix).coeffs;
  return s;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = {
      {"abelian2", {}, "2-dim abelian, twist Id", true, make_abelian2},
      {"aff2", {}, "affine Lie algebra [e1,e2]=e1, twist Id", true, make_aff2},
      {"aff2phi", {"aff2φ"}, "[e1,e2]=e1, twist e2 -> e1+e2 (Hom-Lie, not weakly involutive)", true, make_aff2phi},
      {"aff2bad", {}, "[e1,e2]=e1, twist diag(2,1) (not weakly involutive)", false, make_aff2bad},
      {"heis3", {}, "Heisenberg [e1,e2]=e3, twist Id", true, make_heis3},
      {"heis3phi", {"heis3φ"}, "Heisenberg with twist e1 -> e1+e3", true, make_heis3phi},
      {"sl2", {}, "sl2 in basis (h,e,f), twist Id", true, make_sl2},
      {"sl2yau", {}, "sl2 twisted by the Chevalley involution", true, make_sl2yau},
      {"notjac3", {}, "[e1,e2]=e1, [e1,e3]=e3 (violates Jacobi)", false, make_notjac3},
      {"lsa2", {}, "Hom-left-symmetric e2.e2=e1, twist Id", true, make_lsa2},
      {"lsa2psi", {"lsa2ψ"}, "Hom-left-symmetric e2.e2=e1, twist e2 -> e1+e2", true, make_lsa2psi},
      {"lsa2bad", {}, "Hom-left-symmetric e1.e2=e2, twist diag(2,0) (u.v != psi^2(u).v)", true, make_lsa2bad},
      {"aff2-zero", {}, "aff2 with zero cobracket", true, make_aff2_zero},
      {"aff2-triangular", {}, "aff2 with the cobracket of r = e1^e2", true, make_aff2_triangular},
  };
  return entries;
}

std::optional<Structure> builtin(std::string_view name) {
  if (name.starts_with("builtin:")) name.remove_prefix(8);
  for (const auto& e : corpus()) {
    bool hit = e.name == name;
    for (const auto& a : e.aliases) hit = hit || a == name;
    if (hit) return e.make();
  }
  return std::nullopt;
}

HomLieAlgebra builtin_algebra(std::string_view name) {
  auto s = builtin(name);
  if (!s) throw std::invalid_argument("unknown builtin: " + std::string(name));
  return s->require_algebra();
}

HomLeftSymmetric builtin_lsa(std::string_view name) {
  auto s = builtin(name);
  if (!s) throw std::invalid_argument("unknown builtin: " + std::string(name));
  return s->require_lsa();
}

}  // namespace homlie
