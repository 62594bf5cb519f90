#include "lefkit/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace lefkit {

namespace {

nlohmann::json parse_json(std::istream& in) {
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(),
                     static_cast<std::size_t>(e.byte));
  }
}

nlohmann::json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  return parse_json(in);
}

PointSet point_set_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("field") || !j.contains("ambient_dim") ||
      !j.contains("points"))
    throw ParseError("point file needs 'field', 'ambient_dim', 'points'", 0);
  PrimeField field(j.at("field").get<Fp>());
  std::size_t n = j.at("ambient_dim").get<std::size_t>();
  std::vector<std::vector<Fp>> pts;
  for (const auto& row : j.at("points")) {
    std::vector<Fp> p;
    for (const auto& c : row) p.push_back(field.from_int(c.get<std::int64_t>()));
    pts.push_back(std::move(p));
  }
  return PointSet(field, n, std::move(pts));
}

IdealData ideal_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("field") || !j.contains("variables") ||
      !j.contains("generators"))
    throw ParseError("ideal file needs 'field', 'variables', 'generators'", 0);
  IdealData data{PrimeField(j.at("field").get<Fp>()), {}, {}};
  for (const auto& v : j.at("variables"))
    data.variables.push_back(v.get<std::string>());
  if (data.variables.empty())
    throw ParseError("ideal file has no variables", 0);
  for (const auto& g : j.at("generators"))
    data.generators.push_back(
        parse_polynomial(g.get<std::string>(), data.variables, data.field));
  return data;
}

} // namespace

PointSet read_point_set(std::istream& in) {
  return point_set_from_json(parse_json(in));
}

PointSet load_point_file(const std::string& path) {
  return point_set_from_json(parse_json_file(path));
}

std::string point_set_to_json(const PointSet& X) {
  nlohmann::ordered_json j;
  j["field"] = X.field().modulus();
  j["ambient_dim"] = X.ambient_dim();
  j["points"] = nlohmann::json::array();
  for (const auto& p : X.points()) j["points"].push_back(p);
  return j.dump(2) + "\n";
}

void save_point_file(const PointSet& X, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write file: " + path);
  out << point_set_to_json(X);
}

IdealData read_ideal(std::istream& in) { return ideal_from_json(parse_json(in)); }

IdealData load_ideal_file(const std::string& path) {
  return ideal_from_json(parse_json_file(path));
}

std::string ideal_to_json(const IdealData& ideal) {
  nlohmann::ordered_json j;
  j["field"] = ideal.field.modulus();
  j["variables"] = ideal.variables;
  j["generators"] = nlohmann::json::array();
  for (const auto& g : ideal.generators)
    j["generators"].push_back(polynomial_to_string(g, ideal.variables));
  return j.dump(2) + "\n";
}

void save_ideal_file(const IdealData& ideal, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write file: " + path);
  out << ideal_to_json(ideal);
}

InputKind classify_input_file(const std::string& path) {
  nlohmann::json j = parse_json_file(path);
  if (j.is_object() && j.contains("points")) return InputKind::points;
  if (j.is_object() && j.contains("generators")) return InputKind::ideal;
  throw ParseError("file is neither a point file nor an ideal file", 0);
}

} // namespace lefkit
