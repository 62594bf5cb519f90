#ifndef LEFKIT_POLYNOMIAL_HPP
#define LEFKIT_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lefkit/matrix.hpp"
#include "lefkit/monomial.hpp"
#include "lefkit/prime_field.hpp"

namespace lefkit {

struct Term {
  Monomial mono;
  Fp coeff;
};

// Sparse multivariate polynomial over GF(p): terms strictly descending in
// grevlex, no duplicate monomials, no zero coefficients.
class Polynomial {
public:
  Polynomial(PrimeField field, std::size_t n_vars)
      : field_(field), n_vars_(n_vars) {}

  // Normalizes arbitrary term lists (sorts, merges, drops zeros).
  Polynomial(PrimeField field, std::size_t n_vars, std::vector<Term> terms);

  static Polynomial zero(PrimeField field, std::size_t n_vars) {
    return Polynomial(field, n_vars);
  }
  static Polynomial constant(PrimeField field, std::size_t n_vars, Fp c);
  static Polynomial monomial(PrimeField field, Monomial m, Fp c = 1);
  static Polynomial variable(PrimeField field, std::size_t n_vars,
                             std::size_t k);

  const PrimeField& field() const { return field_; }
  std::size_t n_vars() const { return n_vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  const Term& leading_term() const;
  int degree() const; // max term degree; -1 for the zero polynomial
  bool is_homogeneous() const;

  Polynomial add(const Polynomial& other) const;
  Polynomial sub(const Polynomial& other) const;
  Polynomial negate() const;
  Polynomial scale(Fp c) const;
  Polynomial times_term(const Monomial& m, Fp c) const;
  Polynomial multiply(const Polynomial& other) const;
  Polynomial pow(int e) const;
  Polynomial monic() const;

  Fp evaluate(const std::vector<Fp>& point) const;

  // Coefficient vector over the given monomial basis (all terms must occur
  // in the basis; intended for homogeneous slices).
  std::vector<Fp> coefficient_vector(const std::vector<Monomial>& basis) const;

  static Polynomial from_coefficient_vector(PrimeField field,
                                            std::size_t n_vars,
                                            const std::vector<Monomial>& basis,
                                            const std::vector<Fp>& coords);

  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

private:
  void check_arity(const Polynomial& other) const;

  PrimeField field_;
  std::size_t n_vars_;
  std::vector<Term> terms_;
};

// Nonzero linear form sum a_i x_i, stored as its coefficient vector.
class LinearForm {
public:
  LinearForm(PrimeField field, std::vector<Fp> coefficients);

  const PrimeField& field() const { return field_; }
  std::size_t n_vars() const { return coefficients_.size(); }
  const std::vector<Fp>& coefficients() const { return coefficients_; }
  Fp coefficient(std::size_t i) const { return coefficients_[i]; }

  Fp evaluate(const std::vector<Fp>& point) const;
  Polynomial to_polynomial() const;

private:
  PrimeField field_;
  std::vector<Fp> coefficients_;
};

// Substitutes x_k := -(1/a_k) * sum_{i != k} a_i x_i and re-indexes the
// remaining variables to n_vars-1.  Homogeneity is preserved.
Polynomial eliminate_variable(const Polynomial& f, const LinearForm& L,
                              std::size_t k);

// Text grammar used by ideal files: sum of signed terms, a term being an
// optional integer coefficient followed by var(^exp)? factors joined by '*'
// (the '*' after the coefficient may be omitted).  Variable tokens are looked
// up in var_names.
Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& var_names,
                            const PrimeField& field);

std::string polynomial_to_string(const Polynomial& f,
                                 const std::vector<std::string>& var_names);

// x0..x{n-1} / x1..xn token lists.
std::vector<std::string> default_var_names(std::size_t n_vars,
                                           std::size_t start_index = 0);

} // namespace lefkit

#endif
