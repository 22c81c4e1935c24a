#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "homlie/structure.hpp"

namespace homlie {

/// Malformed structure document. `line` is 1-based when known (syntax errors),
/// 0 otherwise; `field` is a path such as "algebra.bracket[0][1]".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::string field);
  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

/// Parses a JSON structure document ("version": 1 required). A "builtin" field
/// loads that corpus entry first; sections present in the document replace it.
Structure parse_structure(std::string_view text);

/// "builtin:<name>" (or a bare corpus name), or a path to a structure file.
Structure load_structure(const std::string& source);

/// Dense JSON with a fixed field order; parse_structure(emit_structure(s)) == s.
std::string emit_structure(const Structure& s);

}  // namespace homlie
