#ifndef LEFKIT_IO_HPP
#define LEFKIT_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "lefkit/point_set.hpp"
#include "lefkit/polynomial.hpp"

namespace lefkit {

// Ideal file contents: the ring (field + ordered variable names) and the
// parsed homogeneous generators.
struct IdealData {
  PrimeField field;
  std::vector<std::string> variables;
  std::vector<Polynomial> generators;
};

// Point file: {"field": p, "ambient_dim": n, "points": [[..n+1 ints..]]}.
// Integers are reduced mod p on load.
PointSet read_point_set(std::istream& in);
PointSet load_point_file(const std::string& path);
std::string point_set_to_json(const PointSet& X);
void save_point_file(const PointSet& X, const std::string& path);

// Ideal file: {"field": p, "variables": [names], "generators": [strings]}.
IdealData read_ideal(std::istream& in);
IdealData load_ideal_file(const std::string& path);
std::string ideal_to_json(const IdealData& ideal);
void save_ideal_file(const IdealData& ideal, const std::string& path);

// Peeks at the parsed object to decide which loader applies.
enum class InputKind { points, ideal };
InputKind classify_input_file(const std::string& path);

} // namespace lefkit

#endif
