#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "homlie/tensor.hpp"

namespace homlie {

/// Which identity a report is about.
enum class Condition {
  // algebras
  HomLie,
  SkewSymmetry,
  TwistMultiplicative,
  HomJacobi,
  WeaklyInvolutive,
  Subalgebra,
  // bilinear forms
  InvariantForm,
  FormInvariance,
  FormTwistSymmetry,
  FormEquivalence,
  // representations
  Representation,
  RepTwistAxiom,
  RepBracketAxiom,
  RepWeaklyInvolutive,
  HomDualConditions,
  HomDualTwistCondition,
  HomDualBracketCondition,
  DoubleDual,
  RepTwistSquare,
  SemidirectCriteria,
  RepEquivalence,
  IntertwinesAction,
  IntertwinesTwist,
  // matched pairs, Manin triples, bialgebras
  MatchedPair,
  MatchedPairFirst,
  MatchedPairSecond,
  DoubleCriteria,
  Isotropy,
  ManinTriple,
  Bialgebra,
  BialgebraCompatibility,
  TripleEquivalence,
  BialgebraHomomorphism,
  AlgebraHomomorphism,
  TwistIntertwining,
  CobracketIntertwining,
  // r-matrices
  TwistCompatibleR,
  SymmetricPartInvariance,
  ClassicalHomYangBaxter,
  AdTwistOfSquareBracket,
  Coboundary,
  DefectCobracketTwist,
  DefectCobracketInvolutive,
  DefectCobracketCompatibility,
  JacobiatorIdentity,
  DualBracketRoutes,
  RSharpBracketDefect,
  CyclicFormIdentity,
  HomDouble,
  // O-operators and Hom-left-symmetric algebras
  OOperator,
  OOperatorTwist,
  OOperatorBracket,
  HomLeftSymmetric,
  TwistMultiplicativeProduct,
  LeftSymmetricIdentity,
  SquareTwistCriterion,
  OOperatorDefectExpansion,
  WedgeSolutions,
  // bookkeeping
  Agreement,
  Precondition,
};

std::string_view to_string(Condition c);

using Residual = std::variant<std::monostate, Rational, Vector, Matrix, Tensor3>;

/// A failing instance: basis indices (0-based) plus the exact nonzero residual.
struct Witness {
  std::vector<std::size_t> indices;
  Residual residual;
  std::string note;
};

struct Flag {
  std::string name;
  bool value = false;
};

/// Structured verdict of a check. A failed report always carries at least one
/// witness; composite reports collect the witnesses of their failed parts.
struct CheckReport {
  static constexpr std::size_t kMaxWitnesses = 32;

  Condition condition = Condition::Agreement;
  bool passed = true;
  std::vector<Witness> witnesses;
  std::vector<CheckReport> parts;
  std::vector<Flag> flags;
  std::string message;

  explicit CheckReport(Condition c = Condition::Agreement) : condition(c) {}

  void add_witness(std::vector<std::size_t> indices, Residual residual, std::string note = {});
  /// Fails without a basis tuple, e.g. a cross-check disagreement.
  void fail(std::string note);
  void add_part(CheckReport part);
  void set_flag(std::string name, bool value);

  bool flag(std::string_view name) const;
  /// Depth-first search for a sub-report with the given condition.
  const CheckReport* find(Condition c) const;

  explicit operator bool() const { return passed; }
};

/// Indented human-readable rendering; basis indices are printed 1-based.
std::string render_text(const CheckReport& report);

/// Machine-readable rendering; basis indices are 1-based, rationals are "p/q" strings.
std::string render_json(const CheckReport& report, int indent = 2);

/// Thrown by constructions whose mathematical preconditions fail. Carries the
/// diagnosing report.
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(const std::string& what, CheckReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const CheckReport& report() const { return report_; }

 private:
  CheckReport report_;
};

}  // namespace homlie
