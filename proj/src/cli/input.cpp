#include "gon/cli/input.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "gon/error.hpp"

namespace gon::cli {

namespace {

[[noreturn]] void Fail(const std::string& message) { throw Error(ErrorKind::kParse, message); }

// expr := term (('+' | '-') term)*
// term := unary (('*' | '/') unary)*
// unary := '-' unary | power
// power := primary ('^' primary)?   exponent must be rational
// primary := number | name | name '(' expr ')' | '(' expr ')'
class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  Real Parse() {
    Real value = Expr();
    Skip();
    if (pos_ != text_.size()) Fail("unexpected '" + std::string(text_.substr(pos_)) + "'");
    return value;
  }

 private:
  void Skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool Accept(char c) {
    Skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void Expect(char c) {
    if (!Accept(c)) Fail(std::string("expected '") + c + "' in '" + std::string(text_) + "'");
  }

  Real Expr() {
    Real value = Term();
    for (;;) {
      if (Accept('+')) {
        value = value + Term();
      } else if (Accept('-')) {
        value = value - Term();
      } else {
        return value;
      }
    }
  }

  Real Term() {
    Real value = Unary();
    for (;;) {
      if (Accept('*')) {
        value = value * Unary();
      } else if (Accept('/')) {
        const Real divisor = Unary();
        if (divisor.exact() && *divisor.exact() == 0) Fail("division by zero");
        value = value / divisor;
      } else {
        return value;
      }
    }
  }

  Real Unary() {
    if (Accept('-')) return -Unary();
    if (Accept('+')) return Unary();
    return Power();
  }

  Real Power() {
    Real base = Primary();
    if (!Accept('^')) return base;
    const Real exponent = Accept('-') ? -Primary() : Primary();
    if (!exponent.exact()) Fail("exponent must be rational");
    return Real::Pow(base, *exponent.exact());
  }

  Real Primary() {
    Skip();
    if (pos_ >= text_.size()) Fail("unexpected end of '" + std::string(text_) + "'");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Real value = Expr();
      Expect(')');
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return Number();
    if (std::isalpha(static_cast<unsigned char>(c))) return Named();
    Fail(std::string("unexpected '") + c + "'");
  }

  Real Number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
      ++pos_;
    }
    // Scientific suffix: e, optional sign, digits.
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t q = pos_ + 1;
      if (q < text_.size() && (text_[q] == '+' || text_[q] == '-')) ++q;
      if (q < text_.size() && std::isdigit(static_cast<unsigned char>(text_[q]))) {
        pos_ = q;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
    }
    return Real(ParseRat(text_.substr(start, pos_ - start)));
  }

  Real Named() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    if (name == "pi") return Real::Pi();
    if (name == "gamma") return Real::EulerGamma();
    if (name == "sqrt" && pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      return Real::Sqrt(Number());  // sqrt2 shorthand
    }
    if (name == "sqrt" || name == "log") {
      Expect('(');
      const Real arg = Expr();
      Expect(')');
      if (arg.exact() && (name == "sqrt" ? *arg.exact() < 0 : *arg.exact() <= 0)) {
        Fail(name + " of a value outside its domain");
      }
      return name == "sqrt" ? Real::Sqrt(arg) : Real::Log(arg);
    }
    Fail("unknown name '" + name + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<std::string> SplitCommas(std::string_view text) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string current;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

const nlohmann::json& Field(const nlohmann::json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) Fail(std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::size_t JsonSize(const nlohmann::json& value) {
  if (!value.is_number_integer() || value.get<std::int64_t>() < 0) Fail("expected a non-negative integer");
  return value.get<std::size_t>();
}

// Rethrows library validation failures on malformed input data as parse
// errors.
template <typename F>
auto AsParse(const char* what, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kParse) throw;
    Fail(std::string("invalid ") + what + ": " + e.what());
  }
}

}  // namespace

Real ParseRealExpr(std::string_view text) { return ExprParser(text).Parse(); }

std::vector<Real> ParseRealList(std::string_view text) {
  std::vector<Real> out;
  for (const std::string& part : SplitCommas(text)) out.push_back(ParseRealExpr(part));
  return out;
}

RatVec ParseRatList(std::string_view text) {
  RatVec out;
  for (const std::string& part : SplitCommas(text)) {
    const Real value = ParseRealExpr(part);
    if (!value.exact()) Fail("expected a rational, got '" + part + "'");
    out.push_back(*value.exact());
  }
  return out;
}

Rat JsonRat(const nlohmann::json& value) {
  if (value.is_number_integer()) return Rat(Int(value.dump(), 10));
  if (value.is_string()) return ParseRat(value.get<std::string>());
  Fail("expected an integer or a rational string, got " + value.dump());
}

RatVec JsonRatVec(const nlohmann::json& value) {
  if (!value.is_array()) Fail("expected an array, got " + value.dump());
  RatVec out;
  for (const auto& entry : value) out.push_back(JsonRat(entry));
  return out;
}

RatMatrix JsonMatrix(const nlohmann::json& value) {
  if (!value.is_array() || value.empty()) Fail("expected a non-empty array of rows");
  const std::size_t cols = value[0].size();
  RatMatrix m(value.size(), cols);
  for (std::size_t r = 0; r < value.size(); ++r) {
    const RatVec row = JsonRatVec(value[r]);
    if (row.size() != cols || cols == 0) Fail("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

nlohmann::json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    Fail("'" + path + "': " + e.what());
  }
}

Lattice LatticeFromJson(const nlohmann::json& doc) {
  if (doc.is_object() && doc.contains("preset")) {
    return PresetByName(doc.at("preset").get<std::string>()).lattice();
  }
  if (doc.is_object() && doc.contains("basis")) {
    const RatMatrix rows = JsonMatrix(doc.at("basis"));
    return AsParse("lattice", [&] { return Lattice::FromBasis(rows.Transpose()); });
  }
  const RatMatrix gram = JsonMatrix(Field(doc, "gram"));
  return AsParse("lattice", [&] { return Lattice::FromGram(gram); });
}

ConvexBody BodyFromJson(const nlohmann::json& doc) {
  const std::string type = Field(doc, "type").get<std::string>();
  return AsParse("body", [&] {
    if (type == "box") return ConvexBody::Box(JsonRatVec(Field(doc, "halfwidths")));
    if (type == "cube") {
      return ConvexBody::Cube(JsonSize(Field(doc, "n")), JsonRat(Field(doc, "halfwidth")));
    }
    if (type == "ball") {
      const Rat r2 = doc.contains("radius_squared") ? JsonRat(doc.at("radius_squared")) : Rat(1);
      return ConvexBody::Ball(JsonSize(Field(doc, "n")), r2);
    }
    if (type == "ellipsoid") {
      return ConvexBody::EllipsoidBody(QuadraticForm(JsonMatrix(Field(doc, "q"))),
                                       JsonRat(Field(doc, "level")));
    }
    if (type == "forms") {
      return ConvexBody::Forms(JsonMatrix(Field(doc, "a")), JsonRatVec(Field(doc, "lambda")));
    }
    if (type == "polytope") {
      std::vector<RatVec> vertices;
      for (const auto& v : Field(doc, "vertices")) vertices.push_back(JsonRatVec(v));
      return ConvexBody::Polytope(vertices);
    }
    Fail("unknown body type '" + type + "'");
  });
}

LatticePolygon PolygonFromJson(const nlohmann::json& doc) {
  const nlohmann::json& list = doc.is_array() ? doc : Field(doc, "vertices");
  if (!list.is_array()) Fail("vertices must be an array");
  std::vector<LatticePoint2> vertices;
  for (const auto& v : list) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer()) {
      Fail("polygon vertices must be integer pairs, got " + v.dump());
    }
    vertices.push_back({v[0].get<std::int64_t>(), v[1].get<std::int64_t>()});
  }
  return AsParse("polygon", [&] { return LatticePolygon(std::move(vertices)); });
}

Lattice Preset::lattice() const {
  return basis ? Lattice::FromBasis(*basis) : Lattice::FromGram(gram);
}

nlohmann::ordered_json Preset::ToJson() const {
  nlohmann::ordered_json doc;
  doc["preset"] = name;
  if (basis) doc["basis"] = MatrixJson(basis->Transpose());
  doc["gram"] = MatrixJson(gram);
  return doc;
}

Preset PresetByName(std::string_view name) {
  if (name == "hexagonal") {
    return {"hexagonal", std::nullopt, RatMatrix{{1, Rat(1, 2)}, {Rat(1, 2), 1}}};
  }
  if (name == "fcc") {
    const RatMatrix b = RatMatrix::FromColumns({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
    return {"fcc", b, b.Transpose() * b};
  }
  if (name == "even-sum-2d") {
    const RatMatrix b = RatMatrix::FromColumns({{2, 0}, {1, 1}});
    return {"even-sum-2d", b, b.Transpose() * b};
  }
  if (name.size() >= 5 && name.substr(0, 3) == "zn(" && name.back() == ')') {
    const std::string digits(name.substr(3, name.size() - 4));
    if (digits.size() == 1 && digits[0] >= '2' && digits[0] <= '8') {
      const auto id = RatMatrix::Identity(static_cast<std::size_t>(digits[0] - '0'));
      return {std::string(name), id, id};
    }
  }
  Fail("unknown preset '" + std::string(name) + "' (known: hexagonal, fcc, zn(2..8), even-sum-2d)");
}

std::vector<std::string> PresetNames() {
  return {"hexagonal", "fcc", "zn(2)", "zn(3)", "zn(4)", "even-sum-2d"};
}

std::string VecText(const IntVec& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
  return out.str();
}

std::string VecText(const RatVec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + ToString(v[i]);
  return out;
}

nlohmann::ordered_json RatJson(const Rat& value) {
  if (value.get_den() == 1 && value.get_num().fits_slong_p()) return value.get_num().get_si();
  return ToString(value);
}

nlohmann::ordered_json MatrixJson(const RatMatrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(RatJson(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace gon::cli
