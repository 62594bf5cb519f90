#include "lefkit/betti.hpp"

#include <algorithm>
#include <sstream>

namespace lefkit {

int BettiTable::max_row() const {
  int r = 0;
  for (const auto& [key, value] : entries) r = std::max(r, key.second - key.first);
  return r;
}

int BettiTable::max_col() const {
  int c = 0;
  for (const auto& [key, value] : entries) c = std::max(c, key.first);
  return c;
}

namespace {

// size-i subsets of {0..n-1} in lexicographic order
std::vector<std::vector<std::size_t>> subsets(std::size_t n, int i) {
  std::vector<std::vector<std::size_t>> out;
  if (i < 0 || static_cast<std::size_t>(i) > n) return out;
  std::vector<std::size_t> cur;
  // iterative combination enumeration
  std::vector<std::size_t> idx(i);
  for (int t = 0; t < i; ++t) idx[t] = t;
  if (i == 0) {
    out.push_back({});
    return out;
  }
  while (true) {
    out.push_back(idx);
    int t = i - 1;
    while (t >= 0 && idx[t] == n - static_cast<std::size_t>(i - t)) --t;
    if (t < 0) break;
    ++idx[t];
    for (int s = t + 1; s < i; ++s) idx[s] = idx[s - 1] + 1;
  }
  return out;
}

std::size_t subset_rank(const std::vector<std::vector<std::size_t>>& all,
                        const std::vector<std::size_t>& s) {
  auto it = std::lower_bound(all.begin(), all.end(), s);
  return static_cast<std::size_t>(it - all.begin());
}

// columns of multiplication by x_k on A_d, cached per algebra walk
struct VariableMaps {
  std::vector<std::vector<Matrix>> by_degree; // [d][k]
  static VariableMaps build(const ArtinianAlgebra& A) {
    VariableMaps maps;
    for (int d = 0; d <= A.socle_degree(); ++d) {
      std::vector<Matrix> row;
      for (std::size_t k = 0; k < A.n_vars(); ++k)
        row.push_back(A.variable_multiplication(k, d));
      maps.by_degree.push_back(std::move(row));
    }
    return maps;
  }
};

Matrix strand_with_maps(const ArtinianAlgebra& A, const VariableMaps& maps,
                        int i, int j) {
  std::size_t n = A.n_vars();
  const std::vector<Monomial>& src_mons = A.basis(j - i);
  const std::vector<Monomial>& dst_mons = A.basis(j - i + 1);
  auto src_sets = subsets(n, i);
  auto dst_sets = subsets(n, i - 1);

  std::size_t cols = src_mons.size() * src_sets.size();
  std::size_t rows = dst_mons.size() * dst_sets.size();
  Matrix m(A.field(), rows, cols);
  if (i <= 0 || src_mons.empty() || dst_mons.empty()) return m;

  int d = j - i;
  for (std::size_t s = 0; s < src_sets.size(); ++s) {
    const auto& S = src_sets[s];
    for (std::size_t t = 0; t < S.size(); ++t) {
      std::size_t var = S[t];
      std::vector<std::size_t> rest;
      for (std::size_t u = 0; u < S.size(); ++u)
        if (u != t) rest.push_back(S[u]);
      std::size_t block = subset_rank(dst_sets, rest);
      bool positive = t % 2 == 0; // sign (-1)^{t+1} with 1-based t
      const Matrix& mul = maps.by_degree[d][var];
      for (std::size_t col = 0; col < src_mons.size(); ++col)
        for (std::size_t row = 0; row < dst_mons.size(); ++row) {
          Fp v = mul.at(row, col);
          if (v == 0) continue;
          std::size_t r = block * dst_mons.size() + row;
          std::size_t c = s * src_mons.size() + col;
          m.at(r, c) = positive ? A.field().add(m.at(r, c), v)
                                : A.field().sub(m.at(r, c), v);
        }
    }
  }
  return m;
}

} // namespace

Matrix koszul_strand(const ArtinianAlgebra& A, int i, int j) {
  if (i < 0 || static_cast<std::size_t>(i) > A.n_vars() + 1)
    throw Error("koszul_strand: homological degree out of range");
  VariableMaps maps = VariableMaps::build(A);
  return strand_with_maps(A, maps, i, j);
}

BettiTable betti_table(const ArtinianAlgebra& A) {
  std::size_t n = A.n_vars();
  int max_j = A.socle_degree() + static_cast<int>(n);
  VariableMaps maps = VariableMaps::build(A);

  BettiTable table;
  table.n_vars = n;
  table.artinian = true;

  for (int j = 0; j <= max_j; ++j) {
    // rank of every strand at internal degree j, including the empty one
    std::vector<long long> rank(n + 2, 0);
    std::vector<long long> cols(n + 2, 0);
    for (int i = 0; i <= static_cast<int>(n) + 1; ++i) {
      Matrix s = strand_with_maps(A, maps, i, j);
      cols[i] = static_cast<long long>(s.cols());
      rank[i] = i == 0 ? 0 : static_cast<long long>(s.rank());
    }
    for (int i = 0; i <= static_cast<int>(n); ++i) {
      long long beta = cols[i] - rank[i] - rank[i + 1];
      if (beta < 0)
        throw Error("betti_table: negative Betti number (internal error)");
      if (beta > 0) table.entries[{i, j}] = beta;
    }
  }
  return table;
}

bool euler_check(const BettiTable& B, const std::vector<long long>& h) {
  int n = static_cast<int>(B.n_vars);
  int max_j = B.max_row() + B.max_col();
  max_j = std::max(max_j, static_cast<int>(h.size()) - 1 + n);
  for (int j = 0; j <= max_j; ++j) {
    long long lhs = 0;
    for (int i = 0; i <= n; ++i)
      lhs += (i % 2 == 0 ? 1 : -1) * B.beta(i, j);
    long long rhs = 0;
    for (int k = 0; k < static_cast<int>(h.size()); ++k) {
      int r = j - k;
      if (r < 0 || r > n) continue;
      long long c = binomial(n, r);
      rhs += (r % 2 == 0 ? 1 : -1) * h[k] * c;
    }
    if (lhs != rhs) return false;
  }
  return true;
}

KoszulTailReport detect_koszul_tails(const BettiTable& B) {
  if (B.beta(0, 0) != 1)
    throw Error("detect_koszul_tails: table is not from a cyclic quotient "
                "(beta_{0,0} != 1)");
  for (const auto& [key, value] : B.entries)
    if (key.first == 0 && key.second > 0)
      throw Error("detect_koszul_tails: table is not from a cyclic quotient "
                  "(beta_{0,j} != 0 for j > 0)");

  KoszulTailReport report;
  int n = static_cast<int>(B.n_vars);
  int max_d = B.max_row();
  for (int width = 2; width <= n; ++width) {
    for (int d = 1; d <= max_d; ++d) {
      bool ok = true;
      // rows 0..d-1 inside columns 0..width vanish (beta_{0,0} excepted)
      for (int i = 1; i <= width && ok; ++i)
        if (B.beta(i, i) != 0) ok = false;
      for (int r = 1; r < d && ok; ++r)
        for (int i = 0; i <= width && ok; ++i)
          if (B.beta(i, i + r) != 0) ok = false;
      // row d carries the Koszul binomials
      for (int i = 1; i <= width && ok; ++i)
        if (B.beta(i, i + d) != binomial(width, i)) ok = false;
      if (ok) {
        report.tails.push_back({width, d});
        if (width == n && B.artinian) report.maximal = d;
      }
    }
  }
  return report;
}

std::string render_betti_table(const BettiTable& B) {
  int max_i = std::max(B.max_col(), 0);
  int max_r = std::max(B.max_row(), 0);

  std::vector<std::vector<std::string>> cells(max_r + 1);
  for (int r = 0; r <= max_r; ++r) {
    cells[r].resize(max_i + 1);
    for (int i = 0; i <= max_i; ++i) {
      long long b = B.beta(i, i + r);
      cells[r][i] = b == 0 ? "." : std::to_string(b);
    }
  }

  std::vector<std::size_t> width(max_i + 1);
  for (int i = 0; i <= max_i; ++i) {
    width[i] = std::to_string(i).size();
    for (int r = 0; r <= max_r; ++r)
      width[i] = std::max(width[i], cells[r][i].size());
  }
  std::size_t label_width = std::to_string(max_r).size();

  std::ostringstream out;
  out << std::string(label_width + 1, ' ');
  for (int i = 0; i <= max_i; ++i) {
    std::string h = std::to_string(i);
    out << "  " << std::string(width[i] - h.size(), ' ') << h;
  }
  out << "\n";
  for (int r = 0; r <= max_r; ++r) {
    std::string label = std::to_string(r);
    out << std::string(label_width - label.size(), ' ') << label << ":";
    for (int i = 0; i <= max_i; ++i)
      out << "  " << std::string(width[i] - cells[r][i].size(), ' ')
          << cells[r][i];
    out << "\n";
  }
  return out.str();
}

} // namespace lefkit
