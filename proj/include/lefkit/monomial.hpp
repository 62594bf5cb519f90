#ifndef LEFKIT_MONOMIAL_HPP
#define LEFKIT_MONOMIAL_HPP

#include <vector>

#include "lefkit/errors.hpp"

namespace lefkit {

// Exponent vector with cached total degree.
class Monomial {
public:
  explicit Monomial(std::size_t n_vars) : exponents_(n_vars, 0), degree_(0) {}

  explicit Monomial(std::vector<int> exponents);

  static Monomial variable(std::size_t n_vars, std::size_t k);

  std::size_t n_vars() const { return exponents_.size(); }
  int degree() const { return degree_; }
  int exponent(std::size_t i) const { return exponents_[i]; }
  const std::vector<int>& exponents() const { return exponents_; }

  bool is_one() const { return degree_ == 0; }

  Monomial times(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  Monomial quotient_of(const Monomial& numerator) const; // numerator / *this
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  // Removes variable k from the exponent vector (requires exponent 0 there).
  Monomial drop_variable(std::size_t k) const;

  bool operator==(const Monomial& other) const {
    return exponents_ == other.exponents_;
  }
  bool operator!=(const Monomial& other) const { return !(*this == other); }

private:
  std::vector<int> exponents_;
  int degree_;
};

// Graded reverse lexicographic comparison: higher total degree first; ties
// broken by the last nonzero entry of a-b being negative.
// Returns +1 if a > b, 0 if equal, -1 if a < b.
int grevlex_compare(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_compare(a, b) > 0;
  }
};

// All monomials of degree d in n_vars variables, grevlex descending.
std::vector<Monomial> monomial_basis(std::size_t n_vars, int d);

// Binomial coefficient as a plain integer (small desk-scale arguments).
long long binomial(long long n, long long k);

} // namespace lefkit

#endif
