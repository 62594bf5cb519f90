#include "lefkit/lefschetz.hpp"

#include <algorithm>
#include <sstream>

#include "lefkit/rng.hpp"

namespace lefkit {

Matrix multiplication_matrix(const ArtinianAlgebra& A, const LinearForm& l,
                             int i, int k) {
  if (i < 0 || k < 1) throw Error("multiplication_matrix: need i >= 0, k >= 1");
  if (l.n_vars() != A.n_vars())
    throw Error("multiplication_matrix: arity mismatch");
  const std::vector<Monomial>& src = A.basis(i);
  const std::vector<Monomial>& dst = A.basis(i + k);
  Matrix m(A.field(), dst.size(), src.size());
  if (src.empty() || dst.empty()) return m;

  Polynomial lk = l.to_polynomial().pow(k);
  for (std::size_t col = 0; col < src.size(); ++col) {
    Polynomial image = A.nf(lk.times_term(src[col], 1));
    std::vector<Fp> coords = image.coefficient_vector(dst);
    for (std::size_t row = 0; row < dst.size(); ++row)
      m.at(row, col) = coords[row];
  }
  return m;
}

namespace {

LinearForm random_form(const PrimeField& field, std::size_t n_vars, Rng& rng) {
  while (true) {
    std::vector<Fp> coeffs = rng.field_vector(field, n_vars);
    if (std::any_of(coeffs.begin(), coeffs.end(),
                    [](Fp c) { return c != 0; }))
      return LinearForm(field, coeffs);
  }
}

LefschetzReport run_rank_trials(const ArtinianAlgebra& A,
                                const std::vector<std::pair<int, int>>& maps,
                                LefschetzProperty property, int trials,
                                std::uint64_t seed) {
  if (trials < 1) throw Error("rank trials: need trials >= 1");
  LefschetzReport report;
  report.property = property;
  report.trials = trials;
  report.seed = seed;

  std::vector<long long> best(maps.size(), 0);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    LinearForm l = random_form(A.field(), A.n_vars(), rng);
    for (std::size_t m = 0; m < maps.size(); ++m) {
      auto [i, k] = maps[m];
      long long limit =
          std::min(A.dim(i), A.dim(i + k));
      if (best[m] >= limit) continue; // already full
      Matrix mat = multiplication_matrix(A, l, i, k);
      best[m] = std::max(best[m], static_cast<long long>(mat.rank()));
    }
  }

  for (std::size_t m = 0; m < maps.size(); ++m) {
    auto [i, k] = maps[m];
    LefschetzMapRecord rec;
    rec.source_degree = i;
    rec.power = k;
    rec.dim_source = A.dim(i);
    rec.dim_target = A.dim(i + k);
    rec.rank = best[m];
    rec.full_rank = rec.rank == std::min(rec.dim_source, rec.dim_target);
    rec.injective = rec.rank == rec.dim_source;
    rec.surjective = rec.rank == rec.dim_target;
    if (!rec.full_rank) {
      report.holds = false;
      if (std::find(report.failure_degrees.begin(),
                    report.failure_degrees.end(),
                    i) == report.failure_degrees.end())
        report.failure_degrees.push_back(i);
    }
    report.records.push_back(rec);
  }
  return report;
}

} // namespace

LefschetzReport wlp(const ArtinianAlgebra& A, int trials, std::uint64_t seed) {
  std::vector<std::pair<int, int>> maps;
  for (int i = 0; i < A.socle_degree(); ++i) maps.push_back({i, 1});
  return run_rank_trials(A, maps, LefschetzProperty::wlp, trials, seed);
}

LefschetzReport slp(const ArtinianAlgebra& A, int trials, std::uint64_t seed) {
  std::vector<std::pair<int, int>> maps;
  for (int k = 1; k <= A.socle_degree(); ++k)
    for (int i = 0; i + k <= A.socle_degree(); ++i) maps.push_back({i, k});
  return run_rank_trials(A, maps, LefschetzProperty::slp, trials, seed);
}

std::string render_report(const LefschetzReport& report) {
  std::ostringstream out;
  const char* name = report.property == LefschetzProperty::wlp ? "WLP" : "SLP";
  out << "seed: " << report.seed << "\n";
  out << "trials: " << report.trials << "\n";
  for (const auto& rec : report.records) {
    out << "  ";
    if (report.property == LefschetzProperty::slp)
      out << "l^" << rec.power << ": ";
    out << "A_" << rec.source_degree << " -> A_"
        << rec.source_degree + rec.power << ": dim " << rec.dim_source
        << " -> " << rec.dim_target << ", rank " << rec.rank << " ["
        << (rec.full_rank ? "full" : "NOT full") << "]";
    if (rec.full_rank)
      out << (rec.injective && rec.surjective
                  ? " (bijective)"
                  : (rec.injective ? " (injective)" : " (surjective)"));
    out << "\n";
  }
  out << name << ": " << (report.holds ? "holds" : "FAILS");
  if (!report.holds) {
    out << " (failure at degree";
    if (report.failure_degrees.size() > 1) out << "s";
    for (std::size_t i = 0; i < report.failure_degrees.size(); ++i)
      out << (i == 0 ? " " : ", ") << report.failure_degrees[i] << "->"
          << report.failure_degrees[i] + 1;
    out << ")";
  }
  out << "\n";
  return out.str();
}

Theorem1Record verify_theorem1(const PrimeField& field, int n, int d,
                               std::uint64_t seed, int trials) {
  if (n < 3 || d < 1) throw Error("verify_theorem1: need n >= 3, d >= 1");
  Theorem1Record rec{construct_all_but_one(field, n, d, seed),
                     {}, 0, 0, 0, 0, {}, false};
  ArtinianReduction reduction = artinian_reduction(rec.config.points, seed);
  const ArtinianAlgebra& A = reduction.algebra;
  rec.h_vector = A.h_vector();

  rec.dim_Ad = A.dim(d);
  rec.dim_Ad1 = A.dim(d + 1);
  rec.expected_dim_Ad = binomial(n - 1 + d, n - 1);
  rec.expected_dim_Ad1 = binomial(n + d, n - 1) - n;

  auto fail = [&](const std::string& what) {
    std::ostringstream out;
    out << "theorem 1 violated (" << what << ") for n=" << n << " d=" << d
        << " seed=" << seed << "\n";
    out << "points:\n";
    for (const auto& p : rec.config.points.points()) {
      out << "  [";
      for (std::size_t i = 0; i < p.size(); ++i)
        out << (i ? ":" : "") << p[i];
      out << "]\n";
    }
    out << "h-vector:";
    for (long long h : rec.h_vector) out << " " << h;
    out << "\n" << render_report(rec.wlp_report);
    throw VerificationError(out.str());
  };

  if (rec.dim_Ad != rec.expected_dim_Ad) fail("dim A_d mismatch");
  if (rec.dim_Ad1 != rec.expected_dim_Ad1) fail("dim A_{d+1} mismatch");

  rec.wlp_report = wlp(A, trials, seed);
  bool fails_at_d =
      !rec.wlp_report.holds &&
      std::find(rec.wlp_report.failure_degrees.begin(),
                rec.wlp_report.failure_degrees.end(),
                d) != rec.wlp_report.failure_degrees.end();
  if (!fails_at_d) fail("WLP failure at degree d not observed");

  // the reduced hypersurface form is annihilated by every variable
  Polynomial f_bar =
      eliminate_variable(rec.config.hypersurface, reduction.form, 0);
  Polynomial f_nf = A.nf(f_bar);
  rec.kernel_witness = !f_nf.is_zero();
  for (std::size_t v = 0; v < A.n_vars() && rec.kernel_witness; ++v)
    if (!A.nf(f_nf.times_term(Monomial::variable(A.n_vars(), v), 1)).is_zero())
      rec.kernel_witness = false;
  if (!rec.kernel_witness) fail("reduced form is not a kernel witness");

  return rec;
}

Theorem2Record verify_theorem2(const ArtinianAlgebra& A, int trials,
                               std::uint64_t seed) {
  if (A.n_vars() < 3)
    throw Error("verify_theorem2: needs at least 3 variables (two-variable "
                "Artinian quotients always have WLP)");
  Theorem2Record rec;
  rec.table = betti_table(A);
  rec.tails = detect_koszul_tails(rec.table);
  if (!rec.tails.maximal) return rec; // not applicable

  rec.applicable = true;
  int d = *rec.tails.maximal;
  rec.wlp_report = wlp(A, trials, seed);
  bool fails_at_d =
      !rec.wlp_report->holds &&
      std::find(rec.wlp_report->failure_degrees.begin(),
                rec.wlp_report->failure_degrees.end(),
                d) != rec.wlp_report->failure_degrees.end();
  if (!fails_at_d) {
    std::ostringstream out;
    out << "theorem 2 violated: maximal (" << A.n_vars() << "," << d
        << ") Koszul tail without WLP failure at degree " << d << "\n";
    out << render_betti_table(rec.table) << render_report(*rec.wlp_report);
    throw VerificationError(out.str());
  }
  return rec;
}

} // namespace lefkit
