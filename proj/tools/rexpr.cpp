#include "rexpr.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace homlie::cli {

namespace {

class Scanner {
 public:
  Scanner(std::string_view text) : text_(text) {}

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip();
    return pos_ >= text_.size();
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  [[noreturn]] void error(const std::string& what) const {
    throw std::invalid_argument("r expression, column " + std::to_string(pos_ + 1) + ": " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::size_t basis_index(Scanner& s, std::size_t n) {
  if (!s.eat('e')) s.error("expected e<index>");
  std::string d = s.digits();
  if (d.empty()) s.error("expected an index after e");
  std::size_t i = std::stoul(d);
  if (i < 1 || i > n) s.error("index " + d + " out of range 1.." + std::to_string(n));
  return i - 1;
}

}  // namespace

Matrix parse_r_expression(std::string_view text, std::size_t n) {
  Matrix r(n, n);
  if (text == "0" || text == "zero") return r;
  Scanner s(text);
  bool first = true;
  while (!s.done()) {
    Rational sign = 1;
    if (s.eat('-'))
      sign = -1;
    else if (!s.eat('+') && !first)
      s.error("expected + or -");
    first = false;
    Rational coef = 1;
    if (std::isdigit(static_cast<unsigned char>(s.peek()))) {
      std::string num = s.digits();
      std::string den = "1";
      if (s.eat('/')) den = s.digits();
      if (den.empty() || den == "0") s.error("bad denominator");
      coef = Rational::parse(num + "/" + den);
      s.eat('*');
    }
    std::size_t i = basis_index(s, n);
    char op = s.peek();
    if (op != '^' && op != '*' && op != 'x') s.error("expected ^, * or x between basis vectors");
    s.eat(op);
    std::size_t j = basis_index(s, n);
    Rational c = sign * coef;
    r(i, j) += c;
    if (op == '^') r(j, i) -= c;
  }
  return r;
}

}  // namespace homlie::cli
