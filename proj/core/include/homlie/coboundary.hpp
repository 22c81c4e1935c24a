#pragma once

// r-matrices are plain square matrices: r(i, j) is the coefficient of e_i (x) e_j.

#include <string_view>

#include "homlie/bialgebra.hpp"
#include "homlie/check_report.hpp"
#include "homlie/hom_lie.hpp"

namespace homlie {

/// (phi (x) id) r = (id (x) phi) r, checked on the tensor and, separately, as
/// phi r^# = r^# phi^*. A disagreement between the two routes fails the report.
CheckReport check_twist_compat(const HomLieAlgebra& a, const Matrix& r);

/// delta(x) = (phi (x) ad_x + ad_x (x) phi) r, as cobracket coefficients.
Cobracket cobracket_from_r(const HomLieAlgebra& a, const Matrix& r);

/// [r,r] = sum r^{ab} r^{cd} ([e_a,e_c] (x) phi e_b (x) phi e_d
///       + phi e_a (x) [e_b,e_c] (x) phi e_d + phi e_a (x) phi e_c (x) [e_b,e_d]).
Tensor3 r_square_bracket(const HomLieAlgebra& a, const Matrix& r);

/// sum over cyclic rotations of (phi (x) delta) delta(e_x).
Tensor3 jac_delta(const Cobracket& cb, std::size_t x);

/// (ad_{phi x} (x) phi (x) phi + phi (x) ad_{phi x} (x) phi + phi (x) phi (x) ad_{phi x}) t.
Tensor3 ad_phi_on_tensor3(const HomLieAlgebra& a, const Vector& x, const Tensor3& t);

/// (phi (x) ad_{e_k} + ad_{e_k} (x) phi)(r + sigma(r)) = 0 for every k.
CheckReport symmetric_part_invariance(const HomLieAlgebra& a, const Matrix& r);

/// ad_{phi e_k} [r,r] = 0 for every k.
CheckReport ad_twist_square_bracket(const HomLieAlgebra& a, const Matrix& r);

/// [r,r] = 0.
CheckReport check_chybe(const HomLieAlgebra& a, const Matrix& r);

enum class CoboundaryClass { NotCoboundary, Coboundary, Quasitriangular, Triangular };

std::string_view to_string(CoboundaryClass c);

struct CoboundaryResult {
  CheckReport report;
  CoboundaryClass classification = CoboundaryClass::NotCoboundary;
  bool conditions = false;   ///< symmetric-part invariance and ad_{phi x}[r,r] = 0
  bool dual_valid = false;   ///< dual algebra of the induced cobracket is a weakly involutive Hom-Lie algebra
};

/// Evaluates both conditions, builds the cobracket and compares the conditions
/// with the validity of the dual algebra. The report passes iff the conditions
/// hold and agree with the dual algebra; a disagreement is an extra failing part.
/// No precondition checks.
CoboundaryResult coboundary_analysis(const HomLieAlgebra& a, const Matrix& r);

/// coboundary_analysis behind hard preconditions: a weakly involutive and r twist
/// compatible. Throws PreconditionError otherwise.
CoboundaryResult validate_coboundary(const HomLieAlgebra& a, const Matrix& r);

/// The three twist-defect identities of the induced cobracket, each with both
/// sides computed separately and compared exactly:
///   delta(phi x) - (phi (x) phi) delta(x)
///     = (ad_{phi x} phi (x) phi - phi (x) ad_{phi x} phi) D,
///   (phi^2 (x) id) delta(x) - delta(x) = (phi (x) ad_x)(phi (x) id + id (x) phi) D,
///   delta[x,y] - ad_{phi x} delta(y) + ad_{phi y} delta(x)
///     = (ad_{[x,y]} phi (x) phi - phi (x) ad_{[x,y]} phi) D,
/// with D = (phi (x) id - id (x) phi) r. Each report carries a flag "nonzero"
/// telling whether some left-hand side is nonzero.
struct TwistDefectReports {
  CheckReport twist;
  CheckReport involutive;
  CheckReport compatibility;

  bool passed() const { return twist.passed && involutive.passed && compatibility.passed; }
  CheckReport combined() const;
};

TwistDefectReports twist_defect_identities(const HomLieAlgebra& a, const Matrix& r);

/// Jac_delta(e_x) against ad_{phi e_x}[r,r] for every basis x. Flag "hypotheses"
/// records twist compatibility and symmetric-part invariance; without them the
/// comparison is only a diagnostic.
CheckReport jacobiator_identity(const HomLieAlgebra& a, const Matrix& r);

/// Matrix of r^#: g^* -> g with <r^#(a), b> = <r, a (x) b>; column a is r^#(f_a),
/// so the matrix is r^T.
Matrix r_sharp(const Matrix& r);

/// [a,b] = ad^o_{r^# a} b + ad^o_{r_21^# b} a on g^*, twist phi^T. Throws
/// PreconditionError unless a is weakly involutive and r twist compatible.
HomLieAlgebra dual_bracket_from_r(const HomLieAlgebra& a, const Matrix& r);

/// dual_bracket_from_r against dual_algebra(cobracket_from_r), entry by entry.
CheckReport check_dual_bracket_routes(const HomLieAlgebra& a, const Matrix& r);

/// [r^# phi^* a, r^# phi^* b] - r^# phi^* [a,b] = [r,r](a,b) for all dual basis
/// pairs, [r,r](a,b) contracting slots 1 and 2. Flag "nonzero" when some side is
/// nonzero. Throws PreconditionError unless a is weakly involutive and r twist compatible.
CheckReport r_sharp_bracket_defect(const HomLieAlgebra& a, const Matrix& r);

struct FormFromR {
  BilinearForm form;
  CheckReport report;
  bool chybe = false;  ///< [r,r] = 0
};

/// B(x,y) = <(r^#)^{-1} x, y>, i.e. gram = r^{-1}. The report checks the cyclic
/// identity B(phi x,[y,z]) + B(phi y,[z,x]) + B(phi z,[x,y]) = 0 and
/// B(phi x,y) = B(x,phi y); flag "agrees_with_chybe" compares its verdict with [r,r] = 0.
/// Throws PreconditionError unless r is skew, invertible and twist compatible.
FormFromR form_from_invertible_r(const HomLieAlgebra& a, const Matrix& r);

/// r = sum e_i (x) f_i on g + g^*.
Matrix canonical_r(std::size_t n);

struct HomDouble {
  HomLieBialgebra bialgebra;  ///< the double with the cobracket induced by canonical_r
  Matrix r;
  CheckReport report;
};

/// The Hom-double of a valid bialgebra: twist compatibility, [r,r] = 0 and
/// symmetric-part invariance for the canonical r, and the inclusions phi of g and
/// phi^T of g^* (the latter against the cobracket minus the dual of the bracket of g)
/// as bialgebra homomorphisms. Throws PreconditionError when bi is not a bialgebra.
HomDouble hom_double(const HomLieBialgebra& bi);

}  // namespace homlie
