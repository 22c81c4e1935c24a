#pragma once

#include "homlie/check_report.hpp"
#include "homlie/hom_lie.hpp"
#include "homlie/representation.hpp"

namespace homlie {

/// Delta(e_k) = sum_{i,j} coeffs(k, i, j) e_i (x) e_j, the dual of a bracket on g^*.
struct Cobracket {
  HomLieAlgebra base;
  Tensor3 coeffs;

  Cobracket() = default;
  Cobracket(HomLieAlgebra base, Tensor3 coeffs);
  static Cobracket zero(HomLieAlgebra base);

  /// Delta(e_k) as an element of g (x) g.
  Matrix operator()(std::size_t k) const { return coeffs.slice(k); }
  Matrix operator()(const Vector& x) const;

  friend bool operator==(const Cobracket& a, const Cobracket& b) {
    return a.base == b.base && a.coeffs == b.coeffs;
  }
};

struct HomLieBialgebra {
  HomLieAlgebra algebra;
  Cobracket cobracket;
};

/// g^* with [f_i, f_j] = sum_k coeffs(k, i, j) f_k and twist phi^T. Not validated.
HomLieAlgebra dual_algebra(const Cobracket& cb);

/// The cobracket on g whose dual algebra is `dual`: coeffs(k, i, j) = c^*_{ij}^k.
Cobracket cobracket_from_dual(const HomLieAlgebra& g, const HomLieAlgebra& dual);

/// ad_x acting on g (x) g as (phi (x) ad_x + ad_x (x) phi).
Matrix ad_on_tensor2(const HomLieAlgebra& a, const Vector& x, const Matrix& t);

/// Two Hom-Lie algebras acting on each other: rho is g on the carrier h,
/// rho2 is h on the carrier g.
struct MatchedPair {
  HomLieAlgebra g;
  HomLieAlgebra h;
  Representation rho;
  Representation rho2;
};

/// Both algebras and both representations valid, plus the two compatibility
/// identities on all basis tuples. Witness tuples are (i, j, a) for the first
/// identity (x = e_i, y = e_j in g, x' = f_a in h) and (i, a, b) for the second.
CheckReport validate_matched_pair(const MatchedPair& mp);

/// Bracket ([x,y] - rho2(y')x + rho2(x')y, [x',y'] + rho(x)y' - rho(y)x') with
/// twist phi + phi', basis (e_1..e_n, f_1..f_m). No checks.
HomLieAlgebra assemble_double(const MatchedPair& mp);

/// As assemble_double, but throws PreconditionError when validate_matched_pair fails.
HomLieAlgebra double_from_matched_pair(const MatchedPair& mp);

/// The four-condition criterion for weak involutivity of the double, compared
/// with the direct check. Passes iff the two verdicts agree; flags "criteria"
/// and "direct" carry them.
CheckReport double_weak_involutivity_criteria(const MatchedPair& mp);

/// gram = [[0, I], [I, 0]] on g + g^*.
BilinearForm standard_form(std::size_t n);

/// big (of dimension 2n) is Hom-Lie, both coordinate blocks are subalgebras,
/// isotropic, and standard_form(n) is invariant.
CheckReport validate_manin_triple(const HomLieAlgebra& big, std::size_t n);

/// Compatibility Delta[x,y] = ad_{phi x} Delta(y) - ad_{phi y} Delta(x) on basis pairs.
CheckReport check_bialgebra_compatibility(const HomLieBialgebra& bi);

/// g and g^* weakly involutive Hom-Lie algebras plus the compatibility identity.
CheckReport validate_bialgebra(const HomLieBialgebra& bi);

/// (g, g^*; ad^o, ad^o of g^*) built without checks.
MatchedPair bialgebra_matched_pair_unchecked(const HomLieBialgebra& bi);

/// The double on g + g^* with
/// [x+a, y+b] = [x,y] + ad^o_x b - ad^o_y a + [a,b] + ad^o_a y - ad^o_b x,
/// twist phi + phi^T. Built mechanically, whatever the inputs.
HomLieAlgebra bialgebra_double(const HomLieBialgebra& bi);

/// Three independent verdicts (bialgebra, matched pair through Hom-duals of the
/// adjoints, Manin triple on the double). Passes iff they coincide; flags
/// "bialgebra", "matched_pair", "manin_triple" carry them.
CheckReport check_triple_equivalence(const HomLieBialgebra& bi);

/// f[x,y] = [fx,fy], f phi = phi' f and (f (x) f) Delta_1 = Delta_2 f.
CheckReport check_bialgebra_homomorphism(const Matrix& f, const HomLieBialgebra& from, const HomLieBialgebra& to);

}  // namespace homlie
