#include "homlie/check_report.hpp"

#include <sstream>

#include "json.hpp"

namespace homlie {

namespace {

constexpr std::pair<Condition, std::string_view> kConditionNames[] = {
    {Condition::HomLie, "hom-lie"},
    {Condition::SkewSymmetry, "skew-symmetry"},
    {Condition::TwistMultiplicative, "twist-multiplicative"},
    {Condition::HomJacobi, "hom-jacobi"},
    {Condition::WeaklyInvolutive, "weakly-involutive"},
    {Condition::Subalgebra, "subalgebra"},
    {Condition::InvariantForm, "invariant-form"},
    {Condition::FormInvariance, "form-invariance"},
    {Condition::FormTwistSymmetry, "form-twist-symmetry"},
    {Condition::FormEquivalence, "form-equivalence"},
    {Condition::Representation, "representation"},
    {Condition::RepTwistAxiom, "rep-twist-axiom"},
    {Condition::RepBracketAxiom, "rep-bracket-axiom"},
    {Condition::RepWeaklyInvolutive, "rep-weakly-involutive"},
    {Condition::HomDualConditions, "hom-dual-conditions"},
    {Condition::HomDualTwistCondition, "hom-dual-twist-condition"},
    {Condition::HomDualBracketCondition, "hom-dual-bracket-condition"},
    {Condition::DoubleDual, "double-dual"},
    {Condition::RepTwistSquare, "rep-twist-square"},
    {Condition::SemidirectCriteria, "semidirect-criteria"},
    {Condition::RepEquivalence, "rep-equivalence"},
    {Condition::IntertwinesAction, "intertwines-action"},
    {Condition::IntertwinesTwist, "intertwines-twist"},
    {Condition::MatchedPair, "matched-pair"},
    {Condition::MatchedPairFirst, "matched-pair-first"},
    {Condition::MatchedPairSecond, "matched-pair-second"},
    {Condition::DoubleCriteria, "double-criteria"},
    {Condition::Isotropy, "isotropy"},
    {Condition::ManinTriple, "manin-triple"},
    {Condition::Bialgebra, "bialgebra"},
    {Condition::BialgebraCompatibility, "bialgebra-compatibility"},
    {Condition::TripleEquivalence, "triple-equivalence"},
    {Condition::BialgebraHomomorphism, "bialgebra-homomorphism"},
    {Condition::AlgebraHomomorphism, "algebra-homomorphism"},
    {Condition::TwistIntertwining, "twist-intertwining"},
    {Condition::CobracketIntertwining, "cobracket-intertwining"},
    {Condition::TwistCompatibleR, "twist-compatible-r"},
    {Condition::SymmetricPartInvariance, "symmetric-part-invariance"},
    {Condition::ClassicalHomYangBaxter, "chybe"},
    {Condition::AdTwistOfSquareBracket, "ad-twist-square-bracket"},
    {Condition::Coboundary, "coboundary"},
    {Condition::DefectCobracketTwist, "defect-cobracket-twist"},
    {Condition::DefectCobracketInvolutive, "defect-cobracket-involutive"},
    {Condition::DefectCobracketCompatibility, "defect-cobracket-compatibility"},
    {Condition::JacobiatorIdentity, "jacobiator-identity"},
    {Condition::DualBracketRoutes, "dual-bracket-routes"},
    {Condition::RSharpBracketDefect, "r-sharp-bracket-defect"},
    {Condition::CyclicFormIdentity, "cyclic-form-identity"},
    {Condition::HomDouble, "hom-double"},
    {Condition::OOperator, "o-operator"},
    {Condition::OOperatorTwist, "o-operator-twist"},
    {Condition::OOperatorBracket, "o-operator-bracket"},
    {Condition::HomLeftSymmetric, "hom-left-symmetric"},
    {Condition::TwistMultiplicativeProduct, "twist-multiplicative-product"},
    {Condition::LeftSymmetricIdentity, "left-symmetric-identity"},
    {Condition::SquareTwistCriterion, "square-twist-criterion"},
    {Condition::OOperatorDefectExpansion, "o-operator-defect-expansion"},
    {Condition::WedgeSolutions, "wedge-solutions"},
    {Condition::Agreement, "agreement"},
    {Condition::Precondition, "precondition"},
};

std::string indices_text(const std::vector<std::size_t>& idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(idx[i] + 1);
  }
  return s + ")";
}

std::string vector_text(const Vector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v[i].is_zero()) continue;
    std::string coeff = v[i].to_string();
    if (!s.empty()) s += coeff.front() == '-' ? " - " : " + ";
    else if (coeff.front() == '-') s += "-";
    if (coeff.front() == '-') coeff.erase(0, 1);
    if (coeff != "1") s += coeff + "*";
    s += "e" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

std::string residual_text(const Residual& r) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(const Rational& q) const { return q.to_string(); }
    std::string operator()(const Vector& v) const { return vector_text(v); }
    std::string operator()(const Matrix& m) const {
      std::string s = "[";
      for (std::size_t i = 0; i < m.rows(); ++i) {
        s += i ? "; " : "";
        for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? " " : "") + m(i, j).to_string();
      }
      return s + "]";
    }
    std::string operator()(const Tensor3& t) const {
      std::string s;
      for (std::size_t i = 0; i < t.dim1(); ++i)
        for (std::size_t j = 0; j < t.dim2(); ++j)
          for (std::size_t k = 0; k < t.dim3(); ++k) {
            if (t(i, j, k).is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += t(i, j, k).to_string() + "*e" + std::to_string(i + 1) + "(x)e" +
                 std::to_string(j + 1) + "(x)e" + std::to_string(k + 1);
          }
      return s.empty() ? "0" : s;
    }
  };
  return std::visit(Visitor{}, r);
}

void render(std::ostringstream& os, const CheckReport& r, int depth) {
  std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  os << pad << (r.passed ? "PASS " : "FAIL ") << to_string(r.condition);
  if (!r.message.empty()) os << ": " << r.message;
  os << "\n";
  for (const auto& f : r.flags) os << pad << "  [" << f.name << " = " << (f.value ? "yes" : "no") << "]\n";
  if (r.parts.empty()) {
    for (const auto& w : r.witnesses) {
      os << pad << "  witness " << indices_text(w.indices);
      std::string res = residual_text(w.residual);
      if (!res.empty()) os << " residual " << res;
      if (!w.note.empty()) os << " (" << w.note << ")";
      os << "\n";
    }
  }
  for (const auto& p : r.parts) render(os, p, depth + 1);
}

nlohmann::ordered_json rationals_json(const std::vector<Rational>& qs) {
  auto a = nlohmann::ordered_json::array();
  for (const auto& q : qs) a.push_back(q.to_string());
  return a;
}

nlohmann::ordered_json residual_json(const Residual& r) {
  using J = nlohmann::ordered_json;
  struct Visitor {
    J operator()(std::monostate) const { return nullptr; }
    J operator()(const Rational& q) const { return q.to_string(); }
    J operator()(const Vector& v) const { return rationals_json(v.entries()); }
    J operator()(const Matrix& m) const {
      J a = J::array();
      for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(rationals_json(m.row(i).entries()));
      return a;
    }
    J operator()(const Tensor3& t) const {
      J a = J::array();
      for (std::size_t i = 0; i < t.dim1(); ++i) a.push_back((*this)(t.slice(i)));
      return a;
    }
  };
  return std::visit(Visitor{}, r);
}

nlohmann::ordered_json report_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["condition"] = std::string(to_string(r.condition));
  j["verdict"] = r.passed ? "pass" : "fail";
  if (!r.message.empty()) j["message"] = r.message;
  if (!r.flags.empty()) {
    auto flags = nlohmann::ordered_json::object();
    for (const auto& f : r.flags) flags[f.name] = f.value;
    j["flags"] = flags;
  }
  auto ws = nlohmann::ordered_json::array();
  for (const auto& w : r.witnesses) {
    nlohmann::ordered_json jw;
    auto idx = nlohmann::ordered_json::array();
    for (auto i : w.indices) idx.push_back(i + 1);
    jw["indices"] = idx;
    jw["residual"] = residual_json(w.residual);
    if (!w.note.empty()) jw["note"] = w.note;
    ws.push_back(jw);
  }
  j["witnesses"] = ws;
  if (!r.parts.empty()) {
    auto ps = nlohmann::ordered_json::array();
    for (const auto& p : r.parts) ps.push_back(report_json(p));
    j["parts"] = ps;
  }
  return j;
}

}  // namespace

std::string_view to_string(Condition c) {
  for (const auto& [cond, name] : kConditionNames)
    if (cond == c) return name;
  return "unknown";
}

void CheckReport::add_witness(std::vector<std::size_t> indices, Residual residual, std::string note) {
  passed = false;
  if (witnesses.size() < kMaxWitnesses)
    witnesses.push_back({std::move(indices), std::move(residual), std::move(note)});
}

void CheckReport::fail(std::string note) { add_witness({}, std::monostate{}, std::move(note)); }

void CheckReport::add_part(CheckReport part) {
  if (!part.passed) {
    passed = false;
    for (const auto& w : part.witnesses) {
      if (witnesses.size() >= kMaxWitnesses) break;
      witnesses.push_back(w);
    }
    if (part.witnesses.empty() && witnesses.empty())
      witnesses.push_back({{}, std::monostate{}, std::string(to_string(part.condition)) + " failed"});
  }
  parts.push_back(std::move(part));
}

void CheckReport::set_flag(std::string name, bool value) {
  for (auto& f : flags)
    if (f.name == name) {
      f.value = value;
      return;
    }
  flags.push_back({std::move(name), value});
}

bool CheckReport::flag(std::string_view name) const {
  for (const auto& f : flags)
    if (f.name == name) return f.value;
  return false;
}

const CheckReport* CheckReport::find(Condition c) const {
  if (condition == c) return this;
  for (const auto& p : parts)
    if (const auto* hit = p.find(c)) return hit;
  return nullptr;
}

std::string render_text(const CheckReport& report) {
  std::ostringstream os;
  render(os, report, 0);
  return os.str();
}

std::string render_json(const CheckReport& report, int indent) { return report_json(report).dump(indent); }

}  // namespace homlie
