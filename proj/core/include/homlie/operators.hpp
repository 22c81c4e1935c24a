#pragma once

#include <string>

#include "homlie/bialgebra.hpp"
#include "homlie/check_report.hpp"
#include "homlie/representation.hpp"

namespace homlie {

/// T: V -> g as an n x m matrix, with the representation (V, beta, rho) of g.
struct OOperatorCandidate {
  Representation rep;
  Matrix t;

  const HomLieAlgebra& algebra() const { return rep.base; }
};

/// O_T(u,v) = [Tu,Tv] - T(rho(Tu)v - rho(Tv)u).
Vector o_operator_defect(const OOperatorCandidate& c, const Vector& u, const Vector& v);

/// T beta = phi T and O_T = 0 on all basis pairs.
CheckReport validate_o_operator(const OOperatorCandidate& c);

/// Product e_i . e_j = sum_k product(i, j, k) e_k with twist psi.
struct HomLeftSymmetric {
  std::string label;
  Tensor3 product;
  Matrix psi;

  HomLeftSymmetric() = default;
  HomLeftSymmetric(std::string label, Tensor3 product, Matrix psi);

  std::size_t dim() const { return product.dim1(); }
  Vector multiply(const Vector& u, const Vector& v) const;

  friend bool operator==(const HomLeftSymmetric& a, const HomLeftSymmetric& b) {
    return a.product == b.product && a.psi == b.psi;
  }
};

/// psi(u.v) = psi(u).psi(v) and (u.v).psi(w) - psi(u).(v.w) symmetric in u, v.
/// Also validates the commutator algebra and the left multiplication representation.
CheckReport validate_hlsa(const HomLeftSymmetric& l);

/// (V, u.v - v.u, psi).
HomLieAlgebra commutator_hom_lie(const HomLeftSymmetric& l);

/// (V, psi, L) over the commutator algebra, L_u v = u.v.
Representation left_mult_rep(const HomLeftSymmetric& l);

/// The left multiplication representation is weakly involutive iff
/// u.v = psi^2(u).v; both sides are evaluated separately and each implication is
/// reported. When the condition holds, psi^2 must be an O-operator. Flags
/// "condition", "weakly_involutive" and "psi2_o_operator" carry the verdicts.
CheckReport square_twist_o_operator_checks(const HomLeftSymmetric& l);

/// sum_i v^i (x) T(v_i) on g + V^*, basis (g, dual basis of V): entry (n+i, k) = T(k, i).
Matrix lift_t_bar(const OOperatorCandidate& c);

struct OOperatorSolution {
  HomLieAlgebra algebra;  ///< g semidirect V^* through the Hom-dual representation
  Matrix r;               ///< lift minus its flip
  CheckReport report;
  bool o_operator = false;
};

/// Builds r = Tbar - sigma(Tbar) and checks twist compatibility, the identity
/// [r,r] = sum_{i,j} phi(O_T(v_i,v_j)) (x) v^i (x) v^j - v^i (x) phi(O_T(v_i,v_j)) (x) v^j
///       + v^i (x) v^j (x) phi(O_T(v_i,v_j)),
/// and [r,r] = 0 when T is an O-operator. With invertible phi the converse is
/// checked as well. Throws PreconditionError unless T beta = phi T and the
/// representation is weakly involutive.
OOperatorSolution r_from_o_operator(const OOperatorCandidate& c);

struct WedgeSolutions {
  HomLieAlgebra algebra;
  Matrix r1;  ///< T = Id
  Matrix r2;  ///< T = psi^2
  CheckReport report;
};

/// r1 = v^i ^ v_i and r2 = v^i ^ psi^2(v_i) in the commutator algebra semidirect
/// V^*. Both must solve the classical Hom-Yang-Baxter equation; when the
/// commutator algebra is weakly involutive both must give coboundary bialgebras
/// with equal cobrackets (flag "same_cobracket_checked"). Throws
/// PreconditionError when u.v = psi^2(u).v fails.
WedgeSolutions hlsa_wedge_solutions(const HomLeftSymmetric& l);

struct OOperatorBialgebra {
  HomLieBialgebra bialgebra;
  Matrix r;
  CheckReport report;
};

/// The coboundary bialgebra on g semidirect V^* induced by r = Tbar - sigma(Tbar).
/// Throws PreconditionError unless g and the representation are weakly involutive,
/// rho(phi x) beta^2 = rho(phi x) and T is an O-operator.
OOperatorBialgebra o_operator_bialgebra(const OOperatorCandidate& c);

}  // namespace homlie
