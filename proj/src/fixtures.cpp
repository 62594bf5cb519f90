#include "lefkit/fixtures.hpp"

#include <algorithm>

namespace lefkit {

namespace {

std::vector<std::vector<Fp>> example1_columns() {
  return {
      {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 0, 0},
      {1, 0, 1, 0}, {0, 1, 1, 0}, {1, 1, 1, 0}, {0, 0, 0, 1},
  };
}

std::vector<std::vector<Fp>> example3_columns() {
  return {
      {1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0},
      {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 1, 1},
  };
}

const std::vector<std::string> kWlpIdealGenerators = {
    "x4^2",
    "x3*x4",
    "x3^3",
    "x2*x3^2 - x2^2*x4",
    "x1*x3^2 - x1*x2*x4 + x2^2*x4",
    "x2^2*x3",
    "x2^3",
    "x1^3*x4 - x1^2*x2*x4 + x1*x2^2*x4",
    "x1^3*x3",
    "x1^3*x2 - x1^2*x2^2",
    "x1^4",
};

const std::vector<std::string> kFailWlpIdealGenerators = {
    "x1*x4",
    "x1^2",
    "x3*x4^2",
    "x2*x4^2",
    "x2^2*x4",
    "x1*x3^2",
    "x1*x2^2 - x3^2*x4",
    "x3^4",
    "x2*x3^3 - x4^4",
    "x2^2*x3^2",
    "x2^4",
};

} // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "example1", "example1_Xf", "example3", "sec3_wlp_ideal",
      "sec3_failwlp_ideal"};
  return names;
}

FixtureKind fixture_kind(const std::string& name) {
  if (name == "example1" || name == "example1_Xf" || name == "example3")
    return FixtureKind::points;
  if (name == "sec3_wlp_ideal" || name == "sec3_failwlp_ideal")
    return FixtureKind::ideal;
  throw Error("unknown fixture: " + name);
}

PointSet fixture_points(const PrimeField& field, const std::string& name) {
  if (name == "example1") return PointSet(field, 3, example1_columns());
  if (name == "example1_Xf") {
    std::vector<std::vector<Fp>> pts = example1_columns();
    pts.pop_back();
    return PointSet(field, 3, std::move(pts));
  }
  if (name == "example3") return PointSet(field, 3, example3_columns());
  throw Error("fixture is not a point set: " + name);
}

IdealData fixture_ideal(const PrimeField& field, const std::string& name) {
  const std::vector<std::string>* gens = nullptr;
  if (name == "sec3_wlp_ideal")
    gens = &kWlpIdealGenerators;
  else if (name == "sec3_failwlp_ideal")
    gens = &kFailWlpIdealGenerators;
  else
    throw Error("fixture is not an ideal: " + name);

  IdealData data{field, default_var_names(4, 1), {}};
  for (const std::string& g : *gens)
    data.generators.push_back(parse_polynomial(g, data.variables, field));
  return data;
}

} // namespace lefkit
