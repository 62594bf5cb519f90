#ifndef LEFKIT_GEOMETRY_HPP
#define LEFKIT_GEOMETRY_HPP

#include <cstdint>
#include <vector>

#include "lefkit/artinian.hpp"
#include "lefkit/matrix.hpp"
#include "lefkit/point_set.hpp"
#include "lefkit/polynomial.hpp"
#include "lefkit/rng.hpp"

namespace lefkit {

// |X| x C(n+d, d) matrix: entry (i, j) is the j-th degree-d monomial of the
// ambient ring evaluated at point i.  Its kernel is (I_X)_d.
Matrix evaluation_matrix(const PointSet& X, int d);

// Graded pieces of a vanishing ideal, computed degree by degree, plus the
// minimal generators extracted against S_1 * (previous degree).
struct GradedIdealSlices {
  std::size_t n_vars; // ambient ring variable count (ambient_dim + 1)
  std::vector<std::vector<Polynomial>> slices;  // basis of (I_X)_d per degree
  std::vector<Polynomial> minimal_generators;   // ascending degree
  std::vector<long long> hilbert;               // dim (S/I_X)_d per degree
  int regularity_index; // least d with hilbert[d] == |X|
};

GradedIdealSlices vanishing_ideal(const PointSet& X);

// An Artinian reduction together with the linear form that produced it.
struct ArtinianReduction {
  ArtinianAlgebra algebra;
  LinearForm form;            // sampled form on the ambient ring
  std::size_t eliminated = 0; // index of the substituted variable
};

// Samples a linear form nonvanishing on X (and with a usable leading
// coefficient), eliminates one variable, and packages R/J_X.
ArtinianReduction artinian_reduction(const PointSet& X, std::uint64_t seed);

// Quotients an Artinian algebra by one more random linear form, landing in
// one fewer variable.
ArtinianAlgebra further_quotient(const ArtinianAlgebra& A, std::uint64_t seed);

// Configuration with all but one point on a unique degree-d hypersurface:
// points = X_f (unique hypersurface), then q = [1:0:...:0] off V(f), then
// the extra points filling the degree-(d+1) dimension count.
struct AllButOneConfiguration {
  PointSet points;
  Polynomial hypersurface;              // f, the unique degree-d form on X_f
  std::size_t n_determining;            // |X_f| = C(n+d,d) - 1
  std::size_t n_extra;                  // C(n+d,d+1) - n further points on V(f)
  std::size_t off_index;                // position of q in points
  long long dim_Id;                     // verified: 0
  long long dim_Id1;                    // verified: n
};

AllButOneConfiguration construct_all_but_one(const PrimeField& field, int n,
                                             int d, std::uint64_t seed);

// Same hypersurface part, but instead of the single point q it places
// `line_count` points on a random line disjoint from V(f).
struct HypersurfaceLineConfiguration {
  PointSet points;
  Polynomial hypersurface;
  std::size_t n_on_hypersurface; // determining + extra points
  std::size_t n_on_line;
};

HypersurfaceLineConfiguration construct_hypersurface_plus_line(
    const PrimeField& field, int n, int d, int line_count, std::uint64_t seed);

// Random point of V(f): all but one coordinate fixed at random, the free one
// found by scanning GF(p).
std::vector<Fp> sample_point_on_hypersurface(const Polynomial& f, Rng& rng);

} // namespace lefkit

#endif
