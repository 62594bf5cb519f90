#ifndef LEFKIT_ARTINIAN_HPP
#define LEFKIT_ARTINIAN_HPP

#include <vector>

#include "lefkit/groebner.hpp"
#include "lefkit/matrix.hpp"

namespace lefkit {

// Thrown when a quotient expected to be finite-dimensional is not.
class NonArtinianError : public Error {
public:
  NonArtinianError(std::size_t variable_index, const std::string& msg)
      : Error(msg), variable_index_(variable_index) {}
  std::size_t variable_index() const { return variable_index_; }

private:
  std::size_t variable_index_;
};

// Finite-dimensional graded quotient R/I presented by a Gröbner basis, with
// cached standard-monomial bases per degree and the h-vector.
class ArtinianAlgebra {
public:
  const GroebnerBasis& gb() const { return gb_; }
  const PrimeField& field() const { return gb_.field(); }
  std::size_t n_vars() const { return gb_.n_vars(); }

  int socle_degree() const { return socle_degree_; }
  const std::vector<long long>& h_vector() const { return h_vector_; }

  long long dim(int d) const {
    return d >= 0 && d <= socle_degree_ ? h_vector_[d] : 0;
  }
  // Standard-monomial basis of degree d (empty above the socle degree).
  const std::vector<Monomial>& basis(int d) const;

  Polynomial nf(const Polynomial& f) const { return normal_form(f, gb_); }

  // Coordinates of a normal-form homogeneous polynomial of degree d.
  std::vector<Fp> coordinates(const Polynomial& f, int d) const;

  // Matrix of multiplication by x_k from A_d to A_{d+1}.
  Matrix variable_multiplication(std::size_t k, int d) const;

private:
  friend ArtinianAlgebra make_artinian_algebra(const GroebnerBasis& gb);
  explicit ArtinianAlgebra(GroebnerBasis gb) : gb_(std::move(gb)) {}

  GroebnerBasis gb_;
  std::vector<std::vector<Monomial>> std_monomials_;
  std::vector<long long> h_vector_;
  int socle_degree_ = 0;
};

// Verifies the quotient is finite-dimensional (a pure power of every
// variable appears among the leading terms) and caches the graded data.
ArtinianAlgebra make_artinian_algebra(const GroebnerBasis& gb);

// Per-degree dimension of {a in A_d : x_j a = 0 for all j}, via the kernel
// intersection of the variable multiplication matrices.
std::vector<long long> socle_dimensions(const ArtinianAlgebra& A);

} // namespace lefkit

#endif
