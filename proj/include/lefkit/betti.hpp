#ifndef LEFKIT_BETTI_HPP
#define LEFKIT_BETTI_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lefkit/artinian.hpp"
#include "lefkit/matrix.hpp"

namespace lefkit {

// Graded Betti numbers beta_{i,j} (i homological degree, j internal degree),
// zeros omitted.  Displayed with rows j-i and columns i.
struct BettiTable {
  std::size_t n_vars = 0;
  bool artinian = false;
  std::map<std::pair<int, int>, long long> entries;

  long long beta(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
  int max_row() const; // max j-i over the stored entries
  int max_col() const; // max i

  bool operator==(const BettiTable& other) const {
    return n_vars == other.n_vars && entries == other.entries;
  }
};

// Matrix of the Koszul differential (A (x) Lambda^i)_j -> (A (x) Lambda^{i-1})_j
// in the bases {m (x) e_S}: m (x) e_S maps to
// sum_t (-1)^{t+1} NF(x_{s_t} m) (x) e_{S \ s_t}.
Matrix koszul_strand(const ArtinianAlgebra& A, int i, int j);

// beta_{i,j} = dim ker strand(i,j) - rank strand(i+1,j); these are the
// graded Betti numbers of the minimal free resolution.
BettiTable betti_table(const ArtinianAlgebra& A);

// Alternating column sums against h-vector x (1-t)^n_vars.
bool euler_check(const BettiTable& B, const std::vector<long long>& h);

struct KoszulTailReport {
  // (width n', row d): upper-left block equal to the length-n' Koszul
  // resolution pattern shifted to row d
  std::vector<std::pair<int, int>> tails;
  std::optional<int> maximal; // d when a width-n_vars tail sits on an
                              // Artinian table
};

KoszulTailReport detect_koszul_tails(const BettiTable& B);

// Text rendering: header of homological degrees, rows labeled by j-i,
// right-aligned entries, "." for zero.
std::string render_betti_table(const BettiTable& B);

} // namespace lefkit

#endif
