#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homlie/bialgebra.hpp"
#include "homlie/hom_lie.hpp"
#include "homlie/operators.hpp"
#include "homlie/representation.hpp"

namespace homlie {

/// Action data of a representation over Structure::algebra.
struct RepresentationData {
  Matrix beta;
  std::vector<Matrix> action;
  friend bool operator==(const RepresentationData&, const RepresentationData&) = default;
};

/// Everything a structure file can hold. All sections are optional.
struct Structure {
  std::string name;
  std::optional<std::string> builtin;
  std::optional<HomLieAlgebra> algebra;
  std::optional<RepresentationData> representation;
  std::optional<Tensor3> cobracket;
  std::optional<Matrix> rmatrix;
  std::optional<HomLeftSymmetric> lsa;
  std::optional<Matrix> ooperator;

  /// The algebra section, or the commutator algebra of the lsa section.
  /// Throws std::invalid_argument when neither is present.
  HomLieAlgebra require_algebra() const;
  /// The representation section over require_algebra(), or left multiplication
  /// of the lsa section, or the adjoint representation when `adjoint_fallback`.
  Representation require_representation(bool adjoint_fallback = false) const;
  /// (algebra, cobracket), the cobracket defaulting to the one induced by rmatrix.
  HomLieBialgebra require_bialgebra() const;
  Matrix require_rmatrix() const;
  HomLeftSymmetric require_lsa() const;
  /// The ooperator section, or the identity when it is absent and the carrier
  /// has the algebra's dimension.
  OOperatorCandidate require_ooperator() const;

  friend bool operator==(const Structure& a, const Structure& b);
};

}  // namespace homlie
