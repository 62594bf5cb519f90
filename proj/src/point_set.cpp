#include "lefkit/point_set.hpp"

#include <algorithm>

namespace lefkit {

std::vector<Fp> PointSet::normalize(const PrimeField& field,
                                    std::vector<Fp> coords) {
  std::size_t lead = 0;
  while (lead < coords.size() && coords[lead] == 0) ++lead;
  if (lead == coords.size())
    throw Error("projective point has no nonzero coordinate");
  Fp scale = field.inv(coords[lead]);
  for (Fp& c : coords) c = field.mul(c, scale);
  return coords;
}

PointSet::PointSet(PrimeField field, std::size_t ambient_dim,
                   std::vector<std::vector<Fp>> points)
    : field_(field), ambient_dim_(ambient_dim) {
  points_.reserve(points.size());
  for (auto& p : points) {
    if (p.size() != ambient_dim_ + 1)
      throw Error("point has wrong coordinate count");
    points_.push_back(normalize(field_, std::move(p)));
  }
  for (std::size_t i = 0; i < points_.size(); ++i)
    for (std::size_t k = i + 1; k < points_.size(); ++k)
      if (points_[i] == points_[k])
        throw Error("points are not pairwise distinct (indices " +
                    std::to_string(i) + ", " + std::to_string(k) + ")");
}

bool PointSet::contains(const std::vector<Fp>& coords) const {
  std::vector<Fp> n = normalize(field_, coords);
  return std::find(points_.begin(), points_.end(), n) != points_.end();
}

} // namespace lefkit
