#include "io/operator_json.hpp"

#include <cstdio>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include "core/error.hpp"

namespace symcan {

namespace {

using json = nlohmann::json;

// Input iterator that reports how many bytes the parser has consumed.
class CountingIter {
 public:
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  CountingIter(const char* p, std::size_t* consumed) : p_(p), consumed_(consumed) {}
  reference operator*() const { return *p_; }
  CountingIter& operator++() {
    ++p_;
    ++*consumed_;
    return *this;
  }
  CountingIter operator++(int) {
    CountingIter old = *this;
    ++*this;
    return old;
  }
  bool operator==(const CountingIter& o) const { return p_ == o.p_; }
  bool operator!=(const CountingIter& o) const { return p_ != o.p_; }

 private:
  const char* p_;
  std::size_t* consumed_;
};

// Maps each JSON pointer of the document to the byte offset where its value starts.
class PositionIndex : public nlohmann::json_sax<json> {
 public:
  PositionIndex(const std::string& text, const std::size_t* consumed) : text_(text), consumed_(consumed) {}

  std::map<std::string, std::size_t> positions;

  bool null() override { return scalar(); }
  bool boolean(bool) override { return scalar(); }
  bool number_integer(number_integer_t) override { return scalar(); }
  bool number_unsigned(number_unsigned_t) override { return scalar(); }
  bool number_float(number_float_t, const string_t&) override { return scalar(); }
  bool string(string_t&) override { return scalar(); }
  bool binary(binary_t&) override { return scalar(); }
  bool start_object(std::size_t) override { return open(false); }
  bool key(string_t& k) override {
    frames_.back().key = k;
    return true;
  }
  bool end_object() override { return close(); }
  bool start_array(std::size_t) override { return open(true); }
  bool end_array() override { return close(); }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception&) override { return false; }

 private:
  struct Frame {
    bool array;
    std::size_t index = 0;
    std::string key;
  };

  std::string pointer() const {
    std::string p;
    for (const auto& f : frames_) p += "/" + (f.array ? std::to_string(f.index) : f.key);
    return p;
  }

  // Offset of the last token character before the parser's lookahead.
  std::size_t here() const {
    std::size_t pos = std::min(*consumed_, text_.size());
    while (pos > 0 && std::string_view(" \t\r\n,]}").find(text_[pos - 1]) != std::string_view::npos) --pos;
    return pos > 0 ? pos - 1 : 0;
  }

  bool scalar() {
    positions[pointer()] = here();
    advance();
    return true;
  }
  bool open(bool array) {
    positions[pointer()] = here();
    frames_.push_back({array, 0, {}});
    return true;
  }
  bool close() {
    frames_.pop_back();
    advance();
    return true;
  }
  void advance() {
    if (!frames_.empty() && frames_.back().array) ++frames_.back().index;
  }

  const std::string& text_;
  const std::size_t* consumed_;
  std::vector<Frame> frames_;
};

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

class Validator {
 public:
  Validator(const std::string& text, const std::string& source, std::map<std::string, std::size_t> pos)
      : text_(text), source_(source), pos_(std::move(pos)) {}

  [[noreturn]] void error(const std::string& pointer, const std::string& msg, ErrorCode code = ErrorCode::Validation) const {
    std::string where = source_;
    auto it = pos_.find(pointer);
    if (it != pos_.end()) {
      auto [line, col] = line_col(text_, it->second);
      where += ":" + std::to_string(line) + ":" + std::to_string(col);
    }
    fail(code, where + ": " + msg + (pointer.empty() ? "" : " (at " + pointer + ")"));
  }

  std::size_t count(const json& doc, const std::string& key, std::size_t lo, std::size_t hi) const {
    const std::string p = "/" + key;
    if (!doc.contains(key)) error("", "missing field '" + key + "'");
    const json& v = doc[key];
    if (!v.is_number_integer()) error(p, "'" + key + "' must be an integer");
    const long long x = v.get<long long>();
    if (x < static_cast<long long>(lo) || x > static_cast<long long>(hi))
      error(p, "'" + key + "' must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return static_cast<std::size_t>(x);
  }

  Rational rational(const json& v, const std::string& p) const {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) {
      try {
        return parse_rational(v.get<std::string>());
      } catch (const Error& e) {
        error(p, "not an exact rational: \"" + v.get<std::string>() + "\"");
      }
    }
    if (v.is_number_float()) error(p, "floating point entries are not exact; write rationals as strings");
    error(p, "expected a rational string");
  }

  QMatrix matrix(const json& v, const std::string& p, std::size_t rows, std::size_t cols) const {
    if (!v.is_array() || v.size() != rows) error(p, "expected " + std::to_string(rows) + " rows");
    QMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      const std::string pr = p + "/" + std::to_string(r);
      if (!v[r].is_array() || v[r].size() != cols) error(pr, "expected " + std::to_string(cols) + " entries");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational(v[r][c], pr + "/" + std::to_string(c));
    }
    return m;
  }

 private:
  const std::string& text_;
  const std::string& source_;
  std::map<std::string, std::size_t> pos_;
};

}  // namespace

OperatorFile parse_operator_json(const std::string& text, const std::string& source, SymbolOperator::ZeroPolicy zero) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string what = e.what();
    if (auto k = what.find("syntax error"); k != std::string::npos) what = what.substr(k);
    fail(ErrorCode::Parse, source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
  }
  std::size_t consumed = 0;
  PositionIndex index(text, &consumed);
  json::sax_parse(CountingIter(text.data(), &consumed), CountingIter(text.data() + text.size(), &consumed), &index);
  Validator v(text, source, std::move(index.positions));

  if (!doc.is_object()) v.error("", "top level must be an object");
  static const std::set<std::string> known = {"schema_version", "n", "dimV", "dimE", "order", "terms", "T", "metadata", "role"};
  for (const auto& [k, val] : doc.items())
    if (!known.count(k)) v.error("/" + k, "unknown field '" + k + "'");
  if (v.count(doc, "schema_version", 0, 1000) != static_cast<std::size_t>(kSchemaVersion))
    v.error("/schema_version", "unsupported schema_version (expected " + std::to_string(kSchemaVersion) + ")");
  const std::size_t n = v.count(doc, "n", 1, 16);
  const std::size_t dv = v.count(doc, "dimV", 1, 4096);
  const std::size_t de = v.count(doc, "dimE", 1, 4096);
  const std::size_t k = v.count(doc, "order", 1, 64);

  if (!doc.contains("terms") || !doc["terms"].is_array()) v.error("", "'terms' must be an array");
  SymbolOperator::Terms terms;
  for (std::size_t i = 0; i < doc["terms"].size(); ++i) {
    const std::string p = "/terms/" + std::to_string(i);
    const json& t = doc["terms"][i];
    if (!t.is_object() || !t.contains("alpha") || !t.contains("matrix")) v.error(p, "term needs 'alpha' and 'matrix'");
    for (const auto& [key, val] : t.items())
      if (key != "alpha" && key != "matrix") v.error(p + "/" + key, "unknown term field '" + key + "'");
    const json& a = t["alpha"];
    if (!a.is_array() || a.size() != n) v.error(p + "/alpha", "alpha must have n = " + std::to_string(n) + " entries");
    std::vector<unsigned> e;
    for (std::size_t j = 0; j < n; ++j) {
      if (!a[j].is_number_integer() || a[j].get<long long>() < 0 || a[j].get<long long>() > 64)
        v.error(p + "/alpha/" + std::to_string(j), "alpha entries must be integers in [0, 64]");
      e.push_back(a[j].get<unsigned>());
    }
    MultiIndex alpha(e);
    if (alpha.degree() != k) v.error(p + "/alpha", "|alpha| must equal order " + std::to_string(k));
    if (terms.count(alpha)) v.error(p + "/alpha", "duplicate alpha");
    terms.emplace(alpha, v.matrix(t["matrix"], p + "/matrix", de, dv));
  }

  OperatorFile out;
  out.source = source;
  if (doc.contains("role")) {
    const json& r = doc["role"];
    if (r == "operator") out.role = Role::Operator;
    else if (r == "constraint") out.role = Role::Constraint;
    else v.error("/role", "role must be \"operator\" or \"constraint\"");
  }
  // a constraint may be identically zero
  if (out.role == Role::Constraint) zero = SymbolOperator::ZeroPolicy::Allow;
  try {
    out.op = SymbolOperator(n, dv, de, static_cast<unsigned>(k), std::move(terms), zero);
  } catch (const Error& e) {
    v.error("/terms", e.what());
  }
  if (doc.contains("T")) {
    const json& t = doc["T"];
    if (!t.is_array() || t.empty()) v.error("/T", "T must be a non-empty matrix with dimE columns");
    out.t = v.matrix(t, "/T", t.size(), de);
  }
  if (doc.contains("metadata")) out.metadata = doc["metadata"];
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Parse, path + ": cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

OperatorFile load_operator(const std::string& spec) {
  static const std::string scheme = "catalog:";
  if (spec.rfind(scheme, 0) == 0) {
    CatalogItem item = catalog_from_query(spec.substr(scheme.size()));
    OperatorFile out;
    out.source = scheme + catalog_query(item.name, item.params);
    out.op = item.op;
    out.t = item.constraint;
    out.role = item.role;
    return out;
  }
  return parse_operator_json(read_file(spec), spec);
}

ojson to_json(const Rational& q) { return to_string(q); }

ojson to_json(const QVector& v) {
  ojson a = ojson::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

ojson to_json(const QMatrix& m) {
  ojson a = ojson::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ojson row = ojson::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    a.push_back(std::move(row));
  }
  return a;
}

ojson to_json(const Subspace& s) {
  ojson a = ojson::array();
  for (std::size_t j = 0; j < s.dim(); ++j) a.push_back(to_json(s.basis_vector(j)));
  return a;
}

ojson to_json(const MultiIndex& alpha) {
  ojson a = ojson::array();
  for (std::size_t i = 0; i < alpha.size(); ++i) a.push_back(alpha[i]);
  return a;
}

ojson operator_to_json(const SymbolOperator& op, const std::optional<QMatrix>& t) {
  ojson j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = op.n();
  j["dimV"] = op.dim_v();
  j["dimE"] = op.dim_e();
  j["order"] = op.order();
  ojson terms = ojson::array();
  for (const auto& [alpha, m] : op.terms()) terms.push_back({{"alpha", to_json(alpha)}, {"matrix", to_json(m)}});
  j["terms"] = std::move(terms);
  if (t) j["T"] = to_json(*t);
  return j;
}

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(ErrorCode::Validation, "expected a rational string");
  return parse_rational(j.get<std::string>());
}

QVector qvector_from_json(const nlohmann::json& j) {
  if (!j.is_array()) fail(ErrorCode::Validation, "expected a vector");
  QVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

QMatrix qmatrix_from_json(const nlohmann::json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) fail(ErrorCode::Validation, "matrix has the wrong number of rows");
  QMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) fail(ErrorCode::Validation, "matrix row has the wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(j[r][c]);
  }
  return m;
}

SymbolOperator operator_from_json(const nlohmann::json& j) {
  return parse_operator_json(j.dump(2), "<embedded>").op;
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string digest(const ojson& j) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(j.dump())));
  return buf;
}

}  // namespace symcan
