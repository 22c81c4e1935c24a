#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace homlie::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs `homlie <args...>`. Returns 0 when every check passes, 1 on a failed
/// check or construction precondition, 2 on parse and usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Names accepted by `validate --check`, canonical spellings first.
const std::vector<std::string>& check_names();

/// Names accepted by `build`.
const std::vector<std::string>& construction_names();

}  // namespace homlie::cli
