#include "homlie/structure.hpp"

#include <stdexcept>

#include "homlie/coboundary.hpp"

namespace homlie {

HomLieAlgebra Structure::require_algebra() const {
  if (algebra) return *algebra;
  if (lsa) return commutator_hom_lie(*lsa);
  throw std::invalid_argument(name + ": no algebra section");
}

Representation Structure::require_representation(bool adjoint_fallback) const {
  if (representation) return Representation(require_algebra(), representation->beta, representation->action);
  if (lsa && !algebra) return left_mult_rep(*lsa);
  if (adjoint_fallback) return adjoint_rep(require_algebra());
  throw std::invalid_argument(name + ": no representation section");
}

HomLieBialgebra Structure::require_bialgebra() const {
  HomLieAlgebra a = require_algebra();
  if (cobracket) return {a, Cobracket(a, *cobracket)};
  if (rmatrix) return {a, cobracket_from_r(a, *rmatrix)};
  throw std::invalid_argument(name + ": no cobracket or rmatrix section");
}

Matrix Structure::require_rmatrix() const {
  if (rmatrix) return *rmatrix;
  throw std::invalid_argument(name + ": no rmatrix section");
}

HomLeftSymmetric Structure::require_lsa() const {
  if (lsa) return *lsa;
  throw std::invalid_argument(name + ": no lsa section");
}

OOperatorCandidate Structure::require_ooperator() const {
  Representation rep = require_representation(true);
  if (ooperator) {
    if (ooperator->rows() != rep.base.dim() || ooperator->cols() != rep.carrier_dim())
      throw ShapeError(name + ": ooperator must be " + std::to_string(rep.base.dim()) + " x " +
                       std::to_string(rep.carrier_dim()));
    return {rep, *ooperator};
  }
  if (rep.carrier_dim() != rep.base.dim())
    throw std::invalid_argument(name + ": no ooperator section and the carrier dimension differs");
  return {rep, Matrix::identity(rep.base.dim())};
}

bool operator==(const Structure& a, const Structure& b) {
  return a.name == b.name && a.builtin == b.builtin && a.algebra == b.algebra &&
         a.representation == b.representation && a.cobracket == b.cobracket && a.rmatrix == b.rmatrix &&
         a.lsa == b.lsa && a.ooperator == b.ooperator;
}

}  // namespace homlie
