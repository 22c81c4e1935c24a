#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homlie/structure.hpp"

namespace homlie {

struct CorpusEntry {
  std::string name;
  std::vector<std::string> aliases;
  std::string description;
  /// Whether the entry is expected to pass its structural validators.
  bool valid = true;
  Structure (*make)();
};

/// The curated builtins in catalog order.
const std::vector<CorpusEntry>& corpus();

/// Looks a builtin up by name or alias ("aff2phi" and "aff2φ" both work).
std::optional<Structure> builtin(std::string_view name);

/// The algebra (or commutator algebra) of a builtin. Throws std::invalid_argument
/// for unknown names.
HomLieAlgebra builtin_algebra(std::string_view name);

HomLeftSymmetric builtin_lsa(std::string_view name);

}  // namespace homlie
