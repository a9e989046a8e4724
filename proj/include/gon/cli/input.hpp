#pragma once

// Parsing of command-line values and JSON input files. Every failure raises
// Error(kParse) so the driver can map it to exit status 2.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gon/body.hpp"
#include "gon/exact.hpp"
#include "gon/lattice.hpp"
#include "gon/matrix.hpp"
#include "json.hpp"

namespace gon::cli {

// Real expressions over rationals ("3", "-1/2", "1.25", "1e6"), the
// constants pi and gamma, sqrt(...), log(...), the shorthand sqrtN, the
// operators + - * / and integer or rational powers "x^(1/3)".
Real ParseRealExpr(std::string_view text);
// Comma separated lists.
std::vector<Real> ParseRealList(std::string_view text);
RatVec ParseRatList(std::string_view text);

// JSON numbers must be integers; rationals are written as strings "a/b".
Rat JsonRat(const nlohmann::json& value);
RatVec JsonRatVec(const nlohmann::json& value);
// Array of rows.
RatMatrix JsonMatrix(const nlohmann::json& value);

nlohmann::json ReadJsonFile(const std::string& path);

// {"basis": [v1, ..., vn]} with basis vectors as rows of the array, or
// {"gram": [[...], ...]}, or {"preset": name}.
Lattice LatticeFromJson(const nlohmann::json& doc);
// {"type": "box", "halfwidths": [...]}, {"type": "cube", "n", "halfwidth"},
// {"type": "ball", "n", "radius_squared"}, {"type": "ellipsoid", "q",
// "level"}, {"type": "forms", "a", "lambda"}, {"type": "polytope",
// "vertices"}.
ConvexBody BodyFromJson(const nlohmann::json& doc);
// {"vertices": [[x, y], ...]} or the bare vertex array.
LatticePolygon PolygonFromJson(const nlohmann::json& doc);

struct Preset {
  std::string name;
  std::optional<RatMatrix> basis;  // columns
  RatMatrix gram;

  Lattice lattice() const;
  nlohmann::ordered_json ToJson() const;
};
// hexagonal, fcc, zn(n) for n in 2..8, even-sum-2d.
Preset PresetByName(std::string_view name);
std::vector<std::string> PresetNames();

// Rendering helpers shared by commands and suites.
std::string VecText(const IntVec& v);   // "1 0 -2"
std::string VecText(const RatVec& v);   // "1/2 3"
nlohmann::ordered_json RatJson(const Rat& value);  // integer when possible
nlohmann::ordered_json MatrixJson(const RatMatrix& m);

}  // namespace gon::cli
