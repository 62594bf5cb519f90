#include "lefkit/prime_field.hpp"

namespace lefkit {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(Fp p) : p_(p) {
  if (p >= (1u << 31))
    throw Error("field modulus too large: " + std::to_string(p));
  if (!is_prime(p))
    throw Error("field modulus is not prime: " + std::to_string(p));
}

Fp PrimeField::inv(Fp a) const {
  if (a == 0) throw Error("division by zero in GF(" + std::to_string(p_) + ")");
  // extended Euclid on (a, p); invariants a*x0 = r0, a*x1 = r1 (mod p)
  std::int64_t r0 = a, r1 = p_, x0 = 1, x1 = 0;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t x2 = x0 - q * x1;
    r0 = r1; r1 = r2;
    x0 = x1; x1 = x2;
  }
  if (x0 < 0) x0 += p_;
  return static_cast<Fp>(x0);
}

Fp PrimeField::pow(Fp base, std::uint64_t e) const {
  Fp result = 1;
  Fp b = base % p_;
  while (e > 0) {
    if (e & 1) result = mul(result, b);
    b = mul(b, b);
    e >>= 1;
  }
  return result;
}

} // namespace lefkit
