#ifndef LEFKIT_LEFSCHETZ_HPP
#define LEFKIT_LEFSCHETZ_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lefkit/artinian.hpp"
#include "lefkit/betti.hpp"
#include "lefkit/geometry.hpp"

namespace lefkit {

enum class LefschetzProperty { wlp, slp };

// One multiplication map l^k : A_i -> A_{i+k}, with the best rank achieved
// over the sampled forms.
struct LefschetzMapRecord {
  int source_degree = 0;
  int power = 1;
  long long dim_source = 0;
  long long dim_target = 0;
  long long rank = 0;
  bool full_rank = false;
  bool injective = false;
  bool surjective = false;
};

struct LefschetzReport {
  LefschetzProperty property = LefschetzProperty::wlp;
  bool holds = true;
  std::vector<LefschetzMapRecord> records;
  std::vector<int> failure_degrees; // source degrees of non-full-rank maps
  int trials = 0;
  std::uint64_t seed = 0;
};

// Matrix of multiplication by l^k from the standard-monomial basis of A_i
// to that of A_{i+k}.
Matrix multiplication_matrix(const ArtinianAlgebra& A, const LinearForm& l,
                             int i, int k);

// Rank per degree is the max over `trials` random linear forms; the verdict
// holds iff every map has full rank.  Random forms attain the generic rank
// off a proper closed locus, so the max is the generic rank with
// overwhelming probability at large p.
LefschetzReport wlp(const ArtinianAlgebra& A, int trials, std::uint64_t seed);

// As wlp, over all pairs (i, k) with k >= 1 and i + k <= socle degree; one
// form per trial is reused across all pairs.
LefschetzReport slp(const ArtinianAlgebra& A, int trials, std::uint64_t seed);

std::string render_report(const LefschetzReport& report);

// Builds the all-but-one-point configuration, reduces, and checks the
// forced WLP failure at degree d, the dimension counts, and that the
// reduced hypersurface form spans kernel directions.  Throws
// VerificationError with a witness dump when a check fails.
struct Theorem1Record {
  AllButOneConfiguration config;
  std::vector<long long> h_vector;
  long long dim_Ad = 0;
  long long dim_Ad1 = 0;
  long long expected_dim_Ad = 0;
  long long expected_dim_Ad1 = 0;
  LefschetzReport wlp_report;
  bool kernel_witness = false;
};

Theorem1Record verify_theorem1(const PrimeField& field, int n, int d,
                               std::uint64_t seed, int trials = 3);

// Computes the Betti table; when a maximal Koszul tail (n, d) is present,
// asserts that WLP fails with a non-full-rank map at degree d.
struct Theorem2Record {
  BettiTable table;
  KoszulTailReport tails;
  bool applicable = false; // maximal tail present
  std::optional<LefschetzReport> wlp_report;
};

Theorem2Record verify_theorem2(const ArtinianAlgebra& A, int trials = 3,
                               std::uint64_t seed = 0);

} // namespace lefkit

#endif
