#ifndef LEFKIT_RNG_HPP
#define LEFKIT_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "lefkit/prime_field.hpp"

namespace lefkit {

// Explicit seeded generator; never global state.  mt19937_64 is fully
// specified, so sequences are reproducible across platforms.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  Fp field_element(const PrimeField& field) {
    return static_cast<Fp>(gen_() % field.modulus());
  }

  Fp nonzero_field_element(const PrimeField& field) {
    return static_cast<Fp>(1 + gen_() % (field.modulus() - 1));
  }

  std::vector<Fp> field_vector(const PrimeField& field, std::size_t n) {
    std::vector<Fp> v(n);
    for (auto& e : v) e = field_element(field);
    return v;
  }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(gen_() % n); }

private:
  std::mt19937_64 gen_;
};

} // namespace lefkit

#endif
