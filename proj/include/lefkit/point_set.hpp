#ifndef LEFKIT_POINT_SET_HPP
#define LEFKIT_POINT_SET_HPP

#include <vector>

#include "lefkit/prime_field.hpp"

namespace lefkit {

// Distinct points in P^n over GF(p), stored with the first nonzero
// coordinate normalized to 1.
class PointSet {
public:
  PointSet(PrimeField field, std::size_t ambient_dim,
           std::vector<std::vector<Fp>> points);

  const PrimeField& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<std::vector<Fp>>& points() const { return points_; }
  const std::vector<Fp>& point(std::size_t i) const { return points_[i]; }

  bool contains(const std::vector<Fp>& coords) const;

  // Scales so the first nonzero coordinate is 1; rejects the zero vector.
  static std::vector<Fp> normalize(const PrimeField& field,
                                   std::vector<Fp> coords);

private:
  PrimeField field_;
  std::size_t ambient_dim_;
  std::vector<std::vector<Fp>> points_;
};

} // namespace lefkit

#endif
