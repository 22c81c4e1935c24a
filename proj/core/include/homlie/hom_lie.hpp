#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homlie/check_report.hpp"
#include "homlie/tensor.hpp"

namespace homlie {

/// Finite-dimensional Hom-Lie algebra given by structure constants.
///
/// bracket(i, j, k) = c_{ij}^k with [e_i, e_j] = sum_k c_{ij}^k e_k, and
/// twist is the matrix of phi. The constructor only enforces shapes; the
/// algebraic axioms are diagnosed by validate_hom_lie().
class HomLieAlgebra {
 public:
  HomLieAlgebra() = default;
  HomLieAlgebra(std::string label, Tensor3 bracket, Matrix twist);

  /// phi = Id.
  static HomLieAlgebra lie(std::string label, Tensor3 bracket);
  static HomLieAlgebra abelian(std::string label, std::size_t n, Matrix twist);

  const std::string& label() const { return label_; }
  std::size_t dim() const { return bracket_.dim1(); }
  const Tensor3& bracket() const { return bracket_; }
  const Matrix& twist() const { return twist_; }

  Vector bracket(std::size_t i, std::size_t j) const;
  Vector bracket(const Vector& x, const Vector& y) const;
  Vector twist(const Vector& x) const { return twist_ * x; }

  /// Matrix of ad_{e_i}: ad(i)(k, j) = c_{ij}^k.
  Matrix ad(std::size_t i) const;
  Matrix ad(const Vector& x) const;

  HomLieAlgebra relabeled(std::string label) const;

  friend bool operator==(const HomLieAlgebra& a, const HomLieAlgebra& b) {
    return a.bracket_ == b.bracket_ && a.twist_ == b.twist_;
  }

 private:
  std::string label_;
  Tensor3 bracket_;
  Matrix twist_;
};

/// Gram matrix of a bilinear form: B(e_i, e_j) = gram(i, j).
struct BilinearForm {
  Matrix gram;

  Rational operator()(const Vector& x, const Vector& y) const;
  bool is_symmetric() const { return gram == gram.transpose(); }
  bool is_nondegenerate() const;
  friend bool operator==(const BilinearForm&, const BilinearForm&) = default;
};

/// Skew-symmetry, twist multiplicativity and the Hom-Jacobi identity on all basis tuples.
CheckReport validate_hom_lie(const HomLieAlgebra& a);

/// [phi^2(e_i), e_j] = [e_i, e_j] for all i, j.
CheckReport is_weakly_involutive(const HomLieAlgebra& a);

/// B([x,y],z) = B(x,[phi y, z]) and B(phi x, y) = B(x, phi y). Symmetry and
/// nondegeneracy are reported as flags and do not affect the verdict.
CheckReport check_invariant_form(const HomLieAlgebra& a, const BilinearForm& b);

/// Image of [x,y] under phi versus [phi x, phi y]; exposed for other modules.
CheckReport check_algebra_homomorphism(const Matrix& f, const HomLieAlgebra& from, const HomLieAlgebra& to);

/// Closure of span(e_first .. e_first+count-1) under the bracket and the twist.
CheckReport check_subalgebra(const HomLieAlgebra& a, std::size_t first, std::size_t count);

/// Restriction of the structure to a coordinate block that is a subalgebra.
HomLieAlgebra restrict_to_block(const HomLieAlgebra& a, std::size_t first, std::size_t count,
                                std::string label);

/// Conjugates (bracket, twist) by an invertible change of basis P whose
/// columns are the new basis vectors in old coordinates.
HomLieAlgebra change_basis(const HomLieAlgebra& a, const Matrix& p);

struct FormEquivalence {
  Matrix map;  ///< matrix of x -> B(x, .) from g to g^*
  CheckReport report;
};

/// From a nondegenerate form to the map g -> g^*; the report checks that it
/// intertwines (g, phi, ad) with (g^*, phi^*, ad^o). Throws PreconditionError
/// on a degenerate form or when g is not weakly involutive (ad^o then does not exist).
FormEquivalence form_to_equivalence(const HomLieAlgebra& a, const BilinearForm& b);

struct FormFromEquivalence {
  BilinearForm form;
  CheckReport report;  ///< invariance of the form; symmetry only as a flag
};

/// gram(i, j) = <psi(e_i), e_j>. Throws PreconditionError for singular psi.
FormFromEquivalence equivalence_to_form(const HomLieAlgebra& a, const Matrix& psi);

/// Basis of all gram matrices satisfying both invariance identities, optionally
/// restricted to symmetric forms, obtained by solving the linear system over the given basis.
std::vector<BilinearForm> invariant_forms(const HomLieAlgebra& a, bool symmetric_only);

struct NondegenerateSearch {
  std::optional<BilinearForm> witness;
  /// True when a witness was found or its absence is proven.
  bool conclusive = false;
  std::size_t space_dim = 0;
};

/// Looks for a nondegenerate symmetric invariant form in the span of
/// invariant_forms(a, true). det is a polynomial of degree n in the k span
/// coordinates, so when the grid {0..n}^k is small it is scanned exhaustively
/// and a negative answer is a proof; otherwise seeded random combinations are tried.
NondegenerateSearch find_nondegenerate_symmetric_form(const HomLieAlgebra& a, unsigned long long seed,
                                                      int random_trials = 256);

}  // namespace homlie
