#include "reachkit/convexset_json.hpp"

#include "json.hpp"
#include "reachkit/error.hpp"

namespace reachkit {
namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& why) { throw Error(ErrorCode::kParseError, "convex set JSON: " + why); }

Vector<double> read_vector(const json& j, const char* field) {
  if (!j.is_array()) malformed(std::string("'") + field + "' must be an array of numbers");
  Vector<double> v;
  for (const auto& x : j) {
    if (!x.is_number()) malformed(std::string("'") + field + "' must be an array of numbers");
    v.push_back(x.get<double>());
  }
  return v;
}

Matrix<double> read_matrix(const json& j, const char* field) {
  if (!j.is_array() || j.empty()) malformed(std::string("'") + field + "' must be a non-empty array of rows");
  std::vector<std::vector<double>> rows;
  for (const auto& row : j) rows.push_back(read_vector(row, field));
  return Matrix<double>::from_rows(rows);
}

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) malformed(std::string("missing field '") + name + "'");
  return *it;
}

ConvexSet parse(const json& j) {
  if (j.is_array()) return ConvexSet::singleton(read_vector(j, "point"));
  if (!j.is_object()) malformed("expected an object or an array");
  const std::string type = field(j, "type").get<std::string>();
  if (type == "singleton") {
    return ConvexSet::singleton(read_vector(j.contains("center") ? j["center"] : field(j, "point"), "center"));
  }
  if (type == "box") {
    return ConvexSet::box(read_vector(field(j, "center"), "center"), read_vector(field(j, "halfwidths"), "halfwidths"));
  }
  if (type == "ellipsoid") {
    return ConvexSet::ellipsoid(read_vector(field(j, "center"), "center"), read_matrix(field(j, "shape"), "shape"));
  }
  if (type == "zonotope") {
    Zonotope z{read_vector(field(j, "center"), "center"), {}};
    const json& gens = field(j, "generators");
    if (!gens.is_array()) malformed("'generators' must be an array");
    for (const auto& g : gens) z.generators.push_back(read_vector(g, "generators"));
    return ConvexSet::zonotope(std::move(z));
  }
  if (type == "linear_image") {
    Matrix<double> map = read_matrix(field(j, "matrix"), "matrix");
    Vector<double> offset =
        j.contains("offset") ? read_vector(j["offset"], "offset") : Vector<double>(map.rows(), 0.0);
    return ConvexSet::linear_image(std::move(map), parse(field(j, "inner")), std::move(offset));
  }
  if (type == "minkowski_sum") {
    const json& terms = field(j, "terms");
    if (!terms.is_array()) malformed("'terms' must be an array");
    std::vector<ConvexSet> sets;
    for (const auto& t : terms) sets.push_back(parse(t));
    return ConvexSet::minkowski_sum(std::move(sets));
  }
  malformed("unknown type '" + type + "'");
}

json matrix_json(const Matrix<double>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json emit(const ConvexSet& set) {
  const auto& v = set.variant();
  json j;
  j["type"] = set.kind();
  if (const auto* s = std::get_if<Singleton>(&v)) {
    j["center"] = s->point;
  } else if (const auto* b = std::get_if<Box>(&v)) {
    j["center"] = b->center;
    j["halfwidths"] = b->halfwidths;
  } else if (const auto* e = std::get_if<Ellipsoid>(&v)) {
    j["center"] = e->center;
    j["shape"] = matrix_json(e->shape);
  } else if (const auto* z = std::get_if<Zonotope>(&v)) {
    j["center"] = z->center;
    j["generators"] = z->generators;
  } else if (const auto* li = std::get_if<LinearImage>(&v)) {
    j["matrix"] = matrix_json(li->map);
    j["offset"] = li->offset;
    j["inner"] = emit(*li->inner);
  } else if (const auto* ms = std::get_if<MinkowskiSum>(&v)) {
    j["terms"] = json::array();
    for (const auto& t : ms->terms) j["terms"].push_back(emit(*t));
  }
  return j;
}

}  // namespace

ConvexSet convex_set_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    malformed(e.what());
  }
  try {
    return parse(j);
  } catch (const json::exception& e) {
    malformed(e.what());
  }
}

std::string convex_set_to_json(const ConvexSet& set) { return emit(set).dump(); }

}  // namespace reachkit
