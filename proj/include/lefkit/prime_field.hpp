#ifndef LEFKIT_PRIME_FIELD_HPP
#define LEFKIT_PRIME_FIELD_HPP

#include <cstdint>
#include <vector>

#include "lefkit/errors.hpp"

namespace lefkit {

// An element of GF(p), stored fully reduced in [0, p).  The modulus lives in
// the PrimeField context, not in the element.
using Fp = std::uint32_t;

constexpr Fp kDefaultModulus = 32003;

// Arithmetic context for GF(p).  p is checked to be prime at construction
// and must fit in 31 bits so products fit in uint64_t.
class PrimeField {
public:
  explicit PrimeField(Fp p = kDefaultModulus);

  Fp modulus() const { return p_; }

  Fp add(Fp a, Fp b) const {
    Fp s = a + b;
    return s >= p_ ? s - p_ : s;
  }

  Fp sub(Fp a, Fp b) const { return a >= b ? a - b : a + p_ - b; }

  Fp neg(Fp a) const { return a == 0 ? 0 : p_ - a; }

  Fp mul(Fp a, Fp b) const {
    return static_cast<Fp>(std::uint64_t(a) * b % p_);
  }

  // Multiplicative inverse via extended Euclid.  Throws on zero input.
  Fp inv(Fp a) const;

  Fp div(Fp a, Fp b) const { return mul(a, inv(b)); }

  Fp pow(Fp base, std::uint64_t e) const;

  // Reduce an arbitrary signed integer into [0, p).
  Fp from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Fp>(r);
  }

  bool operator==(const PrimeField& other) const { return p_ == other.p_; }
  bool operator!=(const PrimeField& other) const { return p_ != other.p_; }

private:
  Fp p_;
};

bool is_prime(std::uint64_t n);

} // namespace lefkit

#endif
