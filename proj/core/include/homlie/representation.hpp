#pragma once

#include <vector>

#include "homlie/check_report.hpp"
#include "homlie/hom_lie.hpp"

namespace homlie {

/// (V, beta, rho) over a Hom-Lie algebra. action[i] is the m x m matrix of
/// rho(e_i); rho(x) is the corresponding linear combination.
struct Representation {
  HomLieAlgebra base;
  Matrix beta;
  std::vector<Matrix> action;

  Representation() = default;
  /// Checks shapes only.
  Representation(HomLieAlgebra base, Matrix beta, std::vector<Matrix> action);

  std::size_t carrier_dim() const { return beta.rows(); }
  const Matrix& rho(std::size_t i) const { return action[i]; }
  Matrix rho(const Vector& x) const;

  /// The zero action on an m-dimensional carrier with the given twist.
  static Representation zero(HomLieAlgebra base, Matrix beta);

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.base == b.base && a.beta == b.beta && a.action == b.action;
  }
};

/// rho(phi x) beta = beta rho(x) and rho([x,y]) beta = rho(phi x) rho(y) - rho(phi y) rho(x).
CheckReport validate_representation(const Representation& r);

/// (g, phi, ad).
Representation adjoint_rep(const HomLieAlgebra& a);

/// rho(phi^2 e_i) = rho(e_i) for all i.
CheckReport is_weakly_involutive_rep(const Representation& r);

/// The two conditions under which (V^*, beta^*, rho^o) is a representation even
/// without weak involutivity: beta rho(x) = beta rho(phi^2 x) and
/// rho(phi^2 [x,y]) beta = rho(phi x) rho(phi^2 y) - rho(phi y) rho(phi^2 x).
CheckReport hom_dual_conditions(const Representation& r);

/// rho^o(x) = -rho(phi x)^T on V^* with twist beta^T, built without any check.
Representation hom_dual_unchecked(const Representation& r);

/// Hom-dual representation. Throws PreconditionError carrying the weak
/// involutivity verdict and hom_dual_conditions() when r is not weakly involutive.
Representation hom_dual_representation(const Representation& r);

/// Compares the action and twist of the Hom-dual of the Hom-dual with r itself.
CheckReport rep_double_dual_is_identity(const Representation& r);

/// g semidirect V with bracket ([x,y], rho(x)v - rho(y)u) and twist phi + beta.
/// Throws PreconditionError when the algebra or the representation fails validation.
HomLieAlgebra semidirect_product(const Representation& r);

/// Same bracket without validating the inputs.
HomLieAlgebra semidirect_unchecked(const Representation& r);

/// Criteria for g semidirect V to be weakly involutive: algebra and representation
/// weakly involutive and rho(x) beta^2 = rho(x). The report passes iff the
/// conjunction agrees with the direct check on the constructed semidirect
/// product; flags "criteria" and "direct" carry the two verdicts.
CheckReport semidirect_weak_involutivity_criteria(const Representation& r);

/// Variant for g semidirect V^* through the Hom-dual of a weakly involutive r:
/// algebra weakly involutive and rho(phi x) beta^2 = rho(phi x).
CheckReport dual_semidirect_weak_involutivity_criteria(const Representation& r);

/// varphi rho(x) = rho'(x) varphi and beta' varphi = varphi beta. Throws
/// PreconditionError for singular varphi and ShapeError on mismatched carriers.
CheckReport check_rep_equivalence(const Representation& r, const Representation& r2, const Matrix& varphi);

}  // namespace homlie
