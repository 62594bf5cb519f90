#ifndef LEFKIT_FIXTURES_HPP
#define LEFKIT_FIXTURES_HPP

#include <string>
#include <vector>

#include "lefkit/io.hpp"
#include "lefkit/point_set.hpp"

namespace lefkit {

// Bundled example inputs, keyed by the names the CLI accepts.
//   example1      8 points in P^3 (7 on a plane, 1 off)
//   example1_Xf   the 7 coplanar points of example1
//   example3      6 points in P^3 on two skew lines
//   sec3_wlp_ideal / sec3_failwlp_ideal
//                 two Artinian ideals in x1..x4 sharing one Betti table
enum class FixtureKind { points, ideal };

const std::vector<std::string>& fixture_names();
FixtureKind fixture_kind(const std::string& name);

PointSet fixture_points(const PrimeField& field, const std::string& name);
IdealData fixture_ideal(const PrimeField& field, const std::string& name);

} // namespace lefkit

#endif
