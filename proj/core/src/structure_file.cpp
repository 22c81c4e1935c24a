#include "homlie/structure_file.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "homlie/corpus.hpp"

namespace homlie {

using ojson = nlohmann::ordered_json;

ParseError::ParseError(const std::string& message, std::size_t line, std::string field)
    : std::runtime_error(message), line_(line), field_(std::move(field)) {}

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what, 0, path);
}

const ojson& member(const ojson& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) bad(path, "missing field \"" + key + "\"");
  return *it;
}

Rational rational(const ojson& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) bad(path, "expected a rational string \"p/q\"");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const std::invalid_argument&) {
    bad(path, "not a rational: \"" + v.get<std::string>() + "\"");
  }
}

std::size_t positive(const ojson& v, const std::string& path) {
  if (!v.is_number_unsigned() || v.get<std::size_t>() == 0) bad(path, "expected a positive integer");
  return v.get<std::size_t>();
}

std::size_t sparse_index(const ojson& v, std::size_t bound, const std::string& path) {
  if (!v.is_number_unsigned() || v.get<std::size_t>() < 1 || v.get<std::size_t>() > bound)
    bad(path, "index out of range 1.." + std::to_string(bound));
  return v.get<std::size_t>() - 1;
}

// {"entries": [[i, j, ..., "q"], ...]} with 1-based indices.
template <std::size_t Order, typename Sink>
void sparse(const ojson& v, const std::size_t (&bounds)[Order], const std::string& path, Sink sink) {
  const ojson& entries = member(v, "entries", path);
  if (!entries.is_array()) bad(path + ".entries", "expected an array");
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const std::string p = path + ".entries[" + std::to_string(e) + "]";
    const ojson& row = entries[e];
    if (!row.is_array() || row.size() != Order + 1) bad(p, "expected " + std::to_string(Order) + " indices and a value");
    std::size_t idx[Order];
    for (std::size_t s = 0; s < Order; ++s) idx[s] = sparse_index(row[s], bounds[s], p + "[" + std::to_string(s) + "]");
    sink(idx, rational(row[Order], p + "[" + std::to_string(Order) + "]"));
  }
}

Matrix matrix(const ojson& v, std::size_t rows, std::size_t cols, const std::string& path) {
  Matrix m(rows, cols);
  if (v.is_object()) {
    const std::size_t bounds[2] = {rows, cols};
    sparse<2>(v, bounds, path, [&](const std::size_t* i, Rational q) { m(i[0], i[1]) += q; });
    return m;
  }
  if (!v.is_array() || v.size() != rows) bad(path, "expected " + std::to_string(rows) + " rows");
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    if (!v[i].is_array() || v[i].size() != cols) bad(p, "expected " + std::to_string(cols) + " entries");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational(v[i][j], p + "[" + std::to_string(j) + "]");
  }
  return m;
}

Tensor3 tensor(const ojson& v, std::size_t n, const std::string& path) {
  Tensor3 t(n);
  if (v.is_object()) {
    const std::size_t bounds[3] = {n, n, n};
    sparse<3>(v, bounds, path, [&](const std::size_t* i, Rational q) { t(i[0], i[1], i[2]) += q; });
    return t;
  }
  if (!v.is_array() || v.size() != n) bad(path, "expected " + std::to_string(n) + " slices");
  for (std::size_t i = 0; i < n; ++i)
    t.set_slice(i, matrix(v[i], n, n, path + "[" + std::to_string(i) + "]"));
  return t;
}

ojson emit(const Matrix& m) {
  ojson out = ojson::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ojson row = ojson::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    out.push_back(std::move(row));
  }
  return out;
}

ojson emit(const Tensor3& t) {
  ojson out = ojson::array();
  for (std::size_t i = 0; i < t.dim1(); ++i) out.push_back(emit(t.slice(i)));
  return out;
}

// Like dump(2), but arrays of scalars stay on one line.
void write(std::ostream& os, const ojson& v, int depth) {
  const std::string pad(2 * depth, ' '), inner(2 * depth + 2, ' ');
  if (v.is_object()) {
    os << "{\n";
    std::size_t i = 0;
    for (auto it = v.begin(); it != v.end(); ++it, ++i) {
      os << inner << ojson(it.key()).dump() << ": ";
      write(os, it.value(), depth + 1);
      os << (i + 1 < v.size() ? ",\n" : "\n");
    }
    os << pad << "}";
  } else if (v.is_array()) {
    bool flat = std::none_of(v.begin(), v.end(), [](const ojson& e) { return e.is_structured(); });
    if (flat) {
      os << "[";
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].dump();
      os << "]";
      return;
    }
    os << "[\n";
    for (std::size_t i = 0; i < v.size(); ++i) {
      os << inner;
      write(os, v[i], depth + 1);
      os << (i + 1 < v.size() ? ",\n" : "\n");
    }
    os << pad << "]";
  } else {
    os << v.dump();
  }
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

// Dimension of the Hom-Lie algebra the structure's other sections refer to.
std::size_t base_dim(const Structure& s, const std::string& path) {
  if (s.algebra) return s.algebra->dim();
  if (s.lsa) return s.lsa->dim();
  bad(path, "needs an algebra or lsa section");
}

}  // namespace

Structure parse_structure(std::string_view text) {
  ojson doc;
  try {
    doc = ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    std::size_t line = line_of(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("line " + std::to_string(line) + ": " + e.what(), line, "");
  }
  if (!doc.is_object()) bad("$", "expected a JSON object");
  const ojson& version = member(doc, "version", "$");
  if (!version.is_number_integer() || version.get<long>() != 1) bad("version", "unsupported version (expected 1)");

  Structure s;
  if (auto it = doc.find("builtin"); it != doc.end()) {
    if (!it->is_string()) bad("builtin", "expected a string");
    auto b = builtin(it->get<std::string>());
    if (!b) bad("builtin", "unknown builtin \"" + it->get<std::string>() + "\"");
    s = *b;
    std::string name = it->get<std::string>();
    if (name.starts_with("builtin:")) name = name.substr(8);
    s.builtin = name;
  }
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) bad("name", "expected a string");
    s.name = it->get<std::string>();
  }

  try {
    if (auto it = doc.find("algebra"); it != doc.end()) {
      std::size_t n = positive(member(*it, "dim", "algebra"), "algebra.dim");
      s.algebra = HomLieAlgebra(s.name, tensor(member(*it, "bracket", "algebra"), n, "algebra.bracket"),
                                matrix(member(*it, "twist", "algebra"), n, n, "algebra.twist"));
    }
    if (auto it = doc.find("lsa"); it != doc.end()) {
      std::size_t m = positive(member(*it, "dim", "lsa"), "lsa.dim");
      s.lsa = HomLeftSymmetric(s.name, tensor(member(*it, "product", "lsa"), m, "lsa.product"),
                               matrix(member(*it, "psi", "lsa"), m, m, "lsa.psi"));
    }
    if (auto it = doc.find("representation"); it != doc.end()) {
      std::size_t n = base_dim(s, "representation");
      std::size_t m = positive(member(*it, "carrier_dim", "representation"), "representation.carrier_dim");
      RepresentationData rep;
      rep.beta = matrix(member(*it, "beta", "representation"), m, m, "representation.beta");
      const ojson& action = member(*it, "action", "representation");
      if (!action.is_array() || action.size() != n)
        bad("representation.action", "expected " + std::to_string(n) + " matrices");
      for (std::size_t i = 0; i < n; ++i)
        rep.action.push_back(matrix(action[i], m, m, "representation.action[" + std::to_string(i) + "]"));
      s.representation = std::move(rep);
    }
    if (auto it = doc.find("cobracket"); it != doc.end())
      s.cobracket = tensor(*it, base_dim(s, "cobracket"), "cobracket");
    if (auto it = doc.find("rmatrix"); it != doc.end()) {
      std::size_t n = base_dim(s, "rmatrix");
      s.rmatrix = matrix(*it, n, n, "rmatrix");
    }
    if (auto it = doc.find("ooperator"); it != doc.end()) {
      std::size_t n = base_dim(s, "ooperator");
      std::size_t m = s.representation ? s.representation->beta.rows() : n;
      s.ooperator = matrix(member(*it, "T", "ooperator"), n, m, "ooperator.T");
    }
  } catch (const ShapeError& e) {
    bad("$", e.what());
  }
  return s;
}

Structure load_structure(const std::string& source) {
  if (source.starts_with("builtin:")) {
    auto b = builtin(source);
    if (!b) throw ParseError("unknown builtin \"" + source.substr(8) + "\"", 0, "builtin");
    b->builtin = b->name;
    return *b;
  }
  std::ifstream in(source);
  if (!in) {
    if (auto b = builtin(source)) {
      b->builtin = b->name;
      return *b;
    }
    throw ParseError("cannot open " + source, 0, "");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_structure(buf.str());
}

std::string emit_structure(const Structure& s) {
  ojson doc;
  doc["version"] = 1;
  doc["name"] = s.name;
  if (s.builtin) doc["builtin"] = *s.builtin;
  if (s.algebra) {
    ojson a;
    a["dim"] = s.algebra->dim();
    a["bracket"] = emit(s.algebra->bracket());
    a["twist"] = emit(s.algebra->twist());
    doc["algebra"] = std::move(a);
  }
  if (s.representation) {
    ojson r;
    r["carrier_dim"] = s.representation->beta.rows();
    r["beta"] = emit(s.representation->beta);
    ojson action = ojson::array();
    for (const auto& m : s.representation->action) action.push_back(emit(m));
    r["action"] = std::move(action);
    doc["representation"] = std::move(r);
  }
  if (s.cobracket) doc["cobracket"] = emit(*s.cobracket);
  if (s.rmatrix) doc["rmatrix"] = emit(*s.rmatrix);
  if (s.lsa) {
    ojson l;
    l["dim"] = s.lsa->dim();
    l["product"] = emit(s.lsa->product);
    l["psi"] = emit(s.lsa->psi);
    doc["lsa"] = std::move(l);
  }
  if (s.ooperator) {
    ojson o;
    o["T"] = emit(*s.ooperator);
    doc["ooperator"] = std::move(o);
  }
  std::ostringstream os;
  write(os, doc, 0);
  os << "\n";
  return os.str();
}

}  // namespace homlie
