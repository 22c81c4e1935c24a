#include "cli.hpp"

#include <algorithm>
#include <CLI11.hpp>
#include <functional>
#include <json.hpp>
#include <map>
#include <optional>
#include <sstream>

#include "homlie/bialgebra.hpp"
#include "homlie/coboundary.hpp"
#include "homlie/corpus.hpp"
#include "homlie/fuzz.hpp"
#include "homlie/operators.hpp"
#include "homlie/structure_file.hpp"
#include "rexpr.hpp"

namespace homlie::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string source;
  std::vector<std::string> checks;
  std::string format = "text";
  std::uint64_t seed = 20240611;
  std::string rmatrix;
  std::string rep;
  std::string cobracket;
  std::string which = "r1";
  std::string construction;
  bool corpus_json = false;
};

// Missing sections and bad option values; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void apply_overrides(Structure& s, const Options& o) {
  if (!o.rmatrix.empty()) {
    try {
      s.rmatrix = parse_r_expression(o.rmatrix, s.require_algebra().dim());
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--rmatrix: ") + e.what());
    }
  }
  if (o.cobracket == "zero") {
    s.cobracket = Tensor3(s.require_algebra().dim());
  } else if (o.cobracket == "r") {
    s.cobracket = cobracket_from_r(s.require_algebra(), s.require_rmatrix()).coeffs;
  } else if (!o.cobracket.empty()) {
    throw UsageError("--cobracket must be zero or r");
  }
}

Representation representation(const Structure& s, const Options& o) {
  if (o.rep == "adjoint") return adjoint_rep(s.require_algebra());
  if (o.rep == "left") return left_mult_rep(s.require_lsa());
  if (o.rep == "dual") return hom_dual_representation(s.require_representation(true));
  if (!o.rep.empty() && o.rep != "section") throw UsageError("--rep must be adjoint, left, dual or section");
  return s.require_representation(true);
}

OOperatorCandidate ooperator(const Structure& s, const Options& o) {
  if (o.rep.empty()) return s.require_ooperator();
  Structure copy = s;
  Representation rep = representation(s, o);
  copy.algebra = rep.base;
  copy.representation = RepresentationData{rep.beta, rep.action};
  return copy.require_ooperator();
}

CheckReport fuzz_suite(const Structure& s, std::uint64_t seed) {
  HomLieAlgebra a = s.require_algebra();
  Fuzzer fz(seed);
  CheckReport report(Condition::Agreement);
  report.message = "seed " + std::to_string(seed);
  if (!is_weakly_involutive(a).passed) {
    report.fail("algebra is not weakly involutive; the r-matrix identities do not apply");
    return report;
  }
  for (int trial = 0; trial < 50; ++trial) {
    Matrix r = fz.r_matrix(a.dim());
    auto defects = twist_defect_identities(a, r);
    if (!defects.passed()) report.add_part(defects.combined());
    Matrix skew = fz.skew_twist_compatible_r(a);
    CheckReport jac = jacobiator_identity(a, skew);
    if (!jac.passed) report.add_part(jac);
    Matrix compat = fz.twist_compatible_r(a);
    CoboundaryResult cob = coboundary_analysis(a, compat);
    if (cob.conditions != cob.dual_valid) report.add_part(cob.report);
  }
  return report;
}

using CheckFn = std::function<CheckReport(const Structure&, const Options&)>;

struct CheckEntry {
  std::string name;
  std::vector<std::string> aliases;
  CheckFn run;
};

const std::vector<CheckEntry>& checks() {
  static const std::vector<CheckEntry> table = {
      {"hom-lie", {}, [](const Structure& s, const Options&) { return validate_hom_lie(s.require_algebra()); }},
      {"weakly-involutive", {},
       [](const Structure& s, const Options&) { return is_weakly_involutive(s.require_algebra()); }},
      {"representation", {},
       [](const Structure& s, const Options& o) { return validate_representation(representation(s, o)); }},
      {"matched-pair", {},
       [](const Structure& s, const Options&) {
         return validate_matched_pair(bialgebra_matched_pair_unchecked(s.require_bialgebra()));
       }},
      {"manin-triple", {},
       [](const Structure& s, const Options&) {
         HomLieBialgebra bi = s.require_bialgebra();
         return validate_manin_triple(bialgebra_double(bi), bi.algebra.dim());
       }},
      {"bialgebra", {}, [](const Structure& s, const Options&) { return validate_bialgebra(s.require_bialgebra()); }},
      {"coboundary", {},
       [](const Structure& s, const Options&) {
         return validate_coboundary(s.require_algebra(), s.require_rmatrix()).report;
       }},
      {"twist-compat", {},
       [](const Structure& s, const Options&) { return check_twist_compat(s.require_algebra(), s.require_rmatrix()); }},
      {"chybe", {}, [](const Structure& s, const Options&) { return check_chybe(s.require_algebra(), s.require_rmatrix()); }},
      {"o-operator", {}, [](const Structure& s, const Options& o) { return validate_o_operator(ooperator(s, o)); }},
      {"lsa", {}, [](const Structure& s, const Options&) { return validate_hlsa(s.require_lsa()); }},
      {"square-twist", {},
       [](const Structure& s, const Options&) { return square_twist_o_operator_checks(s.require_lsa()); }},
      {"wedge-solutions", {},
       [](const Structure& s, const Options&) { return hlsa_wedge_solutions(s.require_lsa()).report; }},
      {"triple-equivalence", {},
       [](const Structure& s, const Options&) { return check_triple_equivalence(s.require_bialgebra()); }},
      {"hom-double", {}, [](const Structure& s, const Options&) { return hom_double(s.require_bialgebra()).report; }},
      {"twist-defect", {"lemma44"},
       [](const Structure& s, const Options&) {
         return twist_defect_identities(s.require_algebra(), s.require_rmatrix()).combined();
       }},
      {"jacobiator", {"lemma46"},
       [](const Structure& s, const Options&) { return jacobiator_identity(s.require_algebra(), s.require_rmatrix()); }},
      {"o-operator-r", {"thm58"}, [](const Structure& s, const Options& o) { return r_from_o_operator(ooperator(s, o)).report; }},
      {"dual-bracket", {},
       [](const Structure& s, const Options&) {
         return check_dual_bracket_routes(s.require_algebra(), s.require_rmatrix());
       }},
      {"r-sharp", {},
       [](const Structure& s, const Options&) {
         return r_sharp_bracket_defect(s.require_algebra(), s.require_rmatrix());
       }},
      {"fuzz", {}, [](const Structure& s, const Options& o) { return fuzz_suite(s, o.seed); }},
  };
  return table;
}

const CheckEntry* find_check(const std::string& name) {
  for (const auto& c : checks()) {
    if (c.name == name) return &c;
    for (const auto& a : c.aliases)
      if (a == name) return &c;
  }
  return nullptr;
}

std::vector<std::string> default_checks(const Structure& s) {
  std::vector<std::string> out;
  if (s.algebra || s.lsa) out.push_back("hom-lie");
  if (s.lsa) out.push_back("lsa");
  if (s.representation) out.push_back("representation");
  if (s.cobracket) out.push_back("bialgebra");
  if (s.rmatrix) out.push_back("chybe");
  if (s.ooperator) out.push_back("o-operator");
  return out;
}

json report_json(const CheckReport& r) { return json::parse(render_json(r)); }

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
  Structure s = load_structure(o.source);
  apply_overrides(s, o);
  std::vector<std::string> names = o.checks.empty() ? default_checks(s) : o.checks;
  if (names.empty()) throw UsageError("nothing to check: the structure has no sections");
  for (const auto& n : names)
    if (!find_check(n)) throw UsageError("unknown check \"" + n + "\"");

  bool all = true;
  json results = json::array();
  for (const auto& n : names) {
    const CheckEntry* c = find_check(n);
    CheckReport report;
    std::string error;
    try {
      report = c->run(s, o);
    } catch (const PreconditionError& e) {
      report = e.report();
      report.passed = false;
      error = e.what();
    }
    all = all && report.passed;
    if (o.format == "json") {
      json entry;
      entry["check"] = c->name;
      entry["passed"] = report.passed;
      if (!error.empty()) entry["precondition_error"] = error;
      entry["report"] = report_json(report);
      results.push_back(std::move(entry));
    } else {
      out << c->name << ": " << (report.passed ? "PASS" : "FAIL") << "\n";
      if (!error.empty()) out << "  precondition failed: " << error << "\n";
      std::istringstream body(render_text(report));
      for (std::string line; std::getline(body, line);) out << "  " << line << "\n";
    }
  }
  if (o.format == "json") {
    json doc;
    doc["structure"] = s.name;
    doc["passed"] = all;
    doc["checks"] = std::move(results);
    out << doc.dump(2) << "\n";
  }
  (void)err;
  return all ? kExitPass : kExitFail;
}

Structure algebra_structure(std::string name, const HomLieAlgebra& a) {
  Structure out;
  out.name = name;
  out.algebra = a.relabeled(std::move(name));
  return out;
}

Structure build(const Structure& s, const Options& o) {
  const std::string& c = o.construction;
  const std::string name = c + "(" + s.name + ")";
  if (c == "semidirect") return algebra_structure(name, semidirect_product(representation(s, o)));
  if (c == "dual") {
    HomLieBialgebra bi = s.require_bialgebra();
    return algebra_structure(name, dual_algebra(bi.cobracket));
  }
  if (c == "double") {
    HomLieBialgebra bi = s.require_bialgebra();
    return algebra_structure(name, double_from_matched_pair(bialgebra_matched_pair_unchecked(bi)));
  }
  if (c == "hom-double") {
    HomDouble hd = hom_double(s.require_bialgebra());
    if (!hd.report.passed) throw PreconditionError("hom-double assertions failed", hd.report);
    Structure out = algebra_structure(name, hd.bialgebra.algebra);
    out.cobracket = hd.bialgebra.cobracket.coeffs;
    out.rmatrix = hd.r;
    return out;
  }
  if (c == "cobracket") {
    Structure out = algebra_structure(name, s.require_algebra());
    out.rmatrix = s.require_rmatrix();
    out.cobracket = cobracket_from_r(*out.algebra, *out.rmatrix).coeffs;
    return out;
  }
  if (c == "commutator") return algebra_structure(name, commutator_hom_lie(s.require_lsa()));
  if (c == "hom-dual") {
    Representation dual = hom_dual_representation(representation(s, o));
    Structure out = algebra_structure(name, dual.base);
    out.representation = RepresentationData{dual.beta, dual.action};
    return out;
  }
  if (c == "o-operator-r") {
    OOperatorSolution sol = r_from_o_operator(ooperator(s, o));
    Structure out = algebra_structure(name, sol.algebra);
    out.rmatrix = sol.r;
    return out;
  }
  if (c == "wedge-solutions") {
    WedgeSolutions w = hlsa_wedge_solutions(s.require_lsa());
    if (o.which != "r1" && o.which != "r2") throw UsageError("--which must be r1 or r2");
    Structure out = algebra_structure(name + "." + o.which, w.algebra);
    out.rmatrix = o.which == "r1" ? w.r1 : w.r2;
    return out;
  }
  throw UsageError("unknown construction \"" + c + "\"");
}

int cmd_build(const Options& o, std::ostream& out, std::ostream& err) {
  Structure s = load_structure(o.source);
  apply_overrides(s, o);
  try {
    out << emit_structure(build(s, o));
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n"
        << (o.format == "json" ? render_json(e.report()) + "\n" : render_text(e.report()));
    return kExitFail;
  }
  return kExitPass;
}

int cmd_corpus(const Options& o, std::ostream& out) {
  if (o.corpus_json || o.format == "json") {
    json doc = json::array();
    for (const auto& e : corpus()) {
      json entry;
      entry["name"] = e.name;
      entry["aliases"] = e.aliases;
      entry["description"] = e.description;
      entry["valid"] = e.valid;
      doc.push_back(std::move(entry));
    }
    out << doc.dump(2) << "\n";
    return kExitPass;
  }
  for (const auto& e : corpus()) {
    std::string label = e.name;
    for (const auto& a : e.aliases) label += " (" + a + ")";
    // pad by code points, not bytes
    std::size_t width = std::count_if(label.begin(), label.end(), [](char c) { return (c & 0xC0) != 0x80; });
    out << label << std::string(width < 24 ? 24 - width : 1, ' ') << e.description << "\n";
  }
  return kExitPass;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& c : checks()) v.push_back(c.name);
    for (const auto& c : checks())
      for (const auto& a : c.aliases) v.push_back(a);
    return v;
  }();
  return names;
}

const std::vector<std::string>& construction_names() {
  static const std::vector<std::string> names = {"semidirect", "dual",       "double",       "hom-double",
                                                 "cobracket",  "commutator", "hom-dual",     "o-operator-r",
                                                 "wedge-solutions"};
  return names;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact construction and verification of Hom-Lie bialgebras", "homlie"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--rmatrix", o.rmatrix, "r in g (x) g, e.g. \"e1^e2\" or \"e1*e2 + e2*e1\"");
    sub->add_option("--rep", o.rep, "Representation: section, adjoint, left or dual");
    sub->add_option("--cobracket", o.cobracket, "Cobracket override: zero or r");
    sub->add_option("--seed", o.seed, "Seed for the fuzz suite");
  };

  auto* validate = app.add_subcommand("validate", "Run checks on a structure file or builtin:<name>");
  validate->add_option("source", o.source, "Structure file or builtin:<name>")->required();
  validate->add_option("--check", o.checks, "Checks to run (repeatable, comma separated)")->delimiter(',');
  add_common(validate);

  auto* build_cmd = app.add_subcommand("build", "Construct a new structure and print it");
  build_cmd->add_option("construction", o.construction, "Construction")
      ->required()
      ->check(CLI::IsMember(construction_names()));
  build_cmd->add_option("source", o.source, "Structure file or builtin:<name>")->required();
  build_cmd->add_option("--which", o.which, "Which wedge solution: r1 or r2");
  add_common(build_cmd);

  auto* corpus_cmd = app.add_subcommand("corpus", "List builtin structures");
  corpus_cmd->add_flag("--json", o.corpus_json, "Machine-readable catalog");
  corpus_cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(o, out, err);
    if (build_cmd->parsed()) return cmd_build(o, out, err);
    return cmd_corpus(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n" << render_text(e.report());
    return kExitFail;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace homlie::cli
