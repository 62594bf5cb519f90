#ifndef LEFKIT_GROEBNER_HPP
#define LEFKIT_GROEBNER_HPP

#include <vector>

#include "lefkit/polynomial.hpp"

namespace lefkit {

// Reduced Gröbner basis w.r.t. grevlex: monic generators, no leading term
// divides another, every tail in normal form.  Construct via buchberger().
class GroebnerBasis {
public:
  GroebnerBasis(PrimeField field, std::size_t n_vars,
                std::vector<Polynomial> generators)
      : field_(field), n_vars_(n_vars), generators_(std::move(generators)) {}

  const PrimeField& field() const { return field_; }
  std::size_t n_vars() const { return n_vars_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  bool operator==(const GroebnerBasis& other) const {
    return n_vars_ == other.n_vars_ && generators_ == other.generators_;
  }

private:
  PrimeField field_;
  std::size_t n_vars_;
  std::vector<Polynomial> generators_;
};

// Buchberger's algorithm with the normal selection strategy (lowest lcm
// degree first) and both pair-elimination criteria.  Inputs must be
// homogeneous and share the ring; zero generators are ignored.
GroebnerBasis buchberger(const PrimeField& field, std::size_t n_vars,
                         const std::vector<Polynomial>& gens);

// Remainder of full division: no term of the result is divisible by any
// leading term of gb, and f - result lies in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

// Degree-d monomials not divisible by any leading term, grevlex descending.
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, int d);

// dim_K (R/I)_d for d = 0..through, by the standard-monomial sieve.
std::vector<long long> hilbert_function(const GroebnerBasis& gb, int through);

} // namespace lefkit

#endif
