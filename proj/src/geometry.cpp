#include "lefkit/geometry.hpp"

#include <algorithm>
#include <string>

namespace lefkit {

Matrix evaluation_matrix(const PointSet& X, int d) {
  std::size_t n_vars = X.ambient_dim() + 1;
  std::vector<Monomial> mons = monomial_basis(n_vars, d);
  const PrimeField& field = X.field();
  Matrix m(field, X.size(), mons.size());
  for (std::size_t i = 0; i < X.size(); ++i) {
    const std::vector<Fp>& p = X.point(i);
    // powers[v][e] = p[v]^e
    int max_e = d;
    std::vector<std::vector<Fp>> powers(n_vars, std::vector<Fp>(max_e + 1, 1));
    for (std::size_t v = 0; v < n_vars; ++v)
      for (int e = 1; e <= max_e; ++e)
        powers[v][e] = field.mul(powers[v][e - 1], p[v]);
    for (std::size_t j = 0; j < mons.size(); ++j) {
      Fp val = 1;
      for (std::size_t v = 0; v < n_vars; ++v)
        val = field.mul(val, powers[v][mons[j].exponent(v)]);
      m.at(i, j) = val;
    }
  }
  return m;
}

GradedIdealSlices vanishing_ideal(const PointSet& X) {
  if (X.size() == 0) throw Error("vanishing_ideal: empty point set");
  const PrimeField& field = X.field();
  std::size_t n_vars = X.ambient_dim() + 1;
  long long target = static_cast<long long>(X.size());

  GradedIdealSlices out;
  out.n_vars = n_vars;
  out.regularity_index = -1;

  // kernel slices until the Hilbert function reaches |X|, then two more
  // degrees: r+1 for the last possible generators, r+2 as a verification
  // degree that must contribute nothing new
  int guard = static_cast<int>(X.size()) + 2;
  std::vector<std::vector<std::vector<Fp>>> kernels; // coefficient vectors
  for (int d = 0;; ++d) {
    Matrix ev = evaluation_matrix(X, d);
    std::vector<std::vector<Fp>> ker = ev.kernel_basis();
    long long hf = static_cast<long long>(ev.cols() - ker.size());
    out.hilbert.push_back(hf);
    kernels.push_back(std::move(ker));
    if (out.regularity_index < 0 && hf == target) out.regularity_index = d;
    if (out.regularity_index >= 0 && d >= out.regularity_index + 2) break;
    if (d > guard)
      throw Error("vanishing_ideal: Hilbert function failed to stabilize");
  }

  std::vector<std::vector<Monomial>> bases;
  for (std::size_t d = 0; d < kernels.size(); ++d)
    bases.push_back(monomial_basis(n_vars, static_cast<int>(d)));

  for (std::size_t d = 0; d < kernels.size(); ++d) {
    std::vector<Polynomial> slice;
    for (const auto& v : kernels[d])
      slice.push_back(
          Polynomial::from_coefficient_vector(field, n_vars, bases[d], v));
    out.slices.push_back(std::move(slice));
  }

  for (std::size_t d = 0; d < kernels.size(); ++d) {
    if (kernels[d].empty()) continue;
    std::vector<std::vector<Fp>> products;
    if (d > 0)
      for (const Polynomial& g : out.slices[d - 1])
        for (std::size_t v = 0; v < n_vars; ++v)
          products.push_back(
              g.times_term(Monomial::variable(n_vars, v), 1)
                  .coefficient_vector(bases[d]));
    std::vector<std::vector<Fp>> fresh =
        extend_basis(field, products, kernels[d], bases[d].size());
    if (static_cast<int>(d) == out.regularity_index + 2 && !fresh.empty())
      throw Error("vanishing_ideal: generator found past the regularity "
                  "cutoff (degree " + std::to_string(d) + ")");
    if (static_cast<int>(d) <= out.regularity_index + 1)
      for (const auto& v : fresh)
        out.minimal_generators.push_back(
            Polynomial::from_coefficient_vector(field, n_vars, bases[d], v));
  }
  return out;
}

namespace {

LinearForm sample_nonvanishing_form(const PointSet& X, Rng& rng) {
  const PrimeField& field = X.field();
  std::size_t n_vars = X.ambient_dim() + 1;
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Fp> coeffs = rng.field_vector(field, n_vars);
    if (coeffs[0] == 0) continue; // variable 0 gets eliminated
    LinearForm L(field, coeffs);
    bool misses_all = true;
    for (const auto& p : X.points())
      if (L.evaluate(p) == 0) {
        misses_all = false;
        break;
      }
    if (misses_all) return L;
  }
  throw GenericityError(
      "no linear form missing all points found after 100 samples");
}

} // namespace

ArtinianReduction artinian_reduction(const PointSet& X, std::uint64_t seed) {
  Rng rng(seed);
  LinearForm L = sample_nonvanishing_form(X, rng);
  GradedIdealSlices ideal = vanishing_ideal(X);
  std::vector<Polynomial> reduced;
  for (const Polynomial& g : ideal.minimal_generators) {
    Polynomial h = eliminate_variable(g, L, 0);
    if (!h.is_zero()) reduced.push_back(h);
  }
  GroebnerBasis gb =
      buchberger(X.field(), X.ambient_dim(), reduced);
  return ArtinianReduction{make_artinian_algebra(gb), L, 0};
}

ArtinianAlgebra further_quotient(const ArtinianAlgebra& A,
                                 std::uint64_t seed) {
  if (A.n_vars() == 0)
    throw Error("further_quotient: no variables left to quotient");
  const PrimeField& field = A.field();
  Rng rng(seed);
  std::vector<Fp> coeffs;
  do {
    coeffs = rng.field_vector(field, A.n_vars());
  } while (coeffs[0] == 0);
  LinearForm L(field, coeffs);

  std::vector<Polynomial> reduced;
  for (const Polynomial& g : A.gb().generators()) {
    Polynomial h = eliminate_variable(g, L, 0);
    if (!h.is_zero()) reduced.push_back(h);
  }
  GroebnerBasis gb = buchberger(field, A.n_vars() - 1, reduced);
  return make_artinian_algebra(gb);
}

std::vector<Fp> sample_point_on_hypersurface(const Polynomial& f, Rng& rng) {
  if (f.is_zero()) throw Error("sample_point_on_hypersurface: zero polynomial");
  const PrimeField& field = f.field();
  std::size_t n_vars = f.n_vars();
  Fp p = field.modulus();
  int deg = f.degree();

  for (int attempt = 0; attempt < 200; ++attempt) {
    std::size_t free_var = rng.index(n_vars);
    std::vector<Fp> coords = rng.field_vector(field, n_vars);

    // univariate restriction in the free coordinate
    std::vector<Fp> c(deg + 1, 0);
    for (const Term& t : f.terms()) {
      Fp v = t.coeff;
      for (std::size_t i = 0; i < n_vars; ++i) {
        if (i == free_var) continue;
        int e = t.mono.exponent(i);
        if (e > 0) v = field.mul(v, field.pow(coords[i], e));
      }
      int e = t.mono.exponent(free_var);
      c[e] = field.add(c[e], v);
    }

    for (Fp x = 0; x < p; ++x) {
      Fp val = 0;
      for (int e = deg; e >= 0; --e) val = field.add(field.mul(val, x), c[e]);
      if (val == 0) {
        coords[free_var] = x;
        bool nonzero = std::any_of(coords.begin(), coords.end(),
                                   [](Fp a) { return a != 0; });
        if (!nonzero) break; // zero vector; resample
        return PointSet::normalize(field, coords);
      }
    }
  }
  throw GenericityError(
      "no point found on the hypersurface after bounded resampling");
}

namespace {

// Distinct random points determining a unique degree-d hypersurface with no
// lower-degree vanishing.  Returns the points and the hypersurface form; the
// caller retries on failure (empty optional by convention of f.is_zero()).
struct DeterminedHypersurface {
  std::vector<std::vector<Fp>> points;
  Polynomial f;
  bool ok = false;
};

DeterminedHypersurface sample_unique_hypersurface(const PrimeField& field,
                                                  int n, int d, Rng& rng) {
  DeterminedHypersurface out{{}, Polynomial::zero(field, n + 1)};
  std::size_t n_vars = static_cast<std::size_t>(n) + 1;
  long long count = binomial(n + d, d) - 1;

  std::vector<std::vector<Fp>> pts;
  int guard = 0;
  while (static_cast<long long>(pts.size()) < count) {
    if (++guard > 20 * count) return out;
    std::vector<Fp> p = rng.field_vector(field, n_vars);
    if (std::all_of(p.begin(), p.end(), [](Fp a) { return a == 0; })) continue;
    p = PointSet::normalize(field, std::move(p));
    if (std::find(pts.begin(), pts.end(), p) == pts.end())
      pts.push_back(std::move(p));
  }

  PointSet X(field, n, pts);
  for (int e = 1; e < d; ++e)
    if (!evaluation_matrix(X, e).kernel_basis().empty()) return out;
  std::vector<std::vector<Fp>> ker = evaluation_matrix(X, d).kernel_basis();
  if (ker.size() != 1) return out;
  out.points = std::move(pts);
  out.f = Polynomial::from_coefficient_vector(field, n_vars,
                                              monomial_basis(n_vars, d), ker[0]);
  out.ok = true;
  return out;
}

// Adds `count` distinct points of V(f) that avoid everything in `existing`.
void add_points_on_hypersurface(std::vector<std::vector<Fp>>& existing,
                                const Polynomial& f, long long count,
                                Rng& rng) {
  long long added = 0;
  int guard = 0;
  while (added < count) {
    if (++guard > 50 * count)
      throw GenericityError("could not collect enough distinct points on the "
                            "hypersurface");
    std::vector<Fp> p = sample_point_on_hypersurface(f, rng);
    if (std::find(existing.begin(), existing.end(), p) != existing.end())
      continue;
    existing.push_back(std::move(p));
    ++added;
  }
}

} // namespace

AllButOneConfiguration construct_all_but_one(const PrimeField& field, int n,
                                             int d, std::uint64_t seed) {
  if (n < 3) throw Error("construct_all_but_one: ambient dimension must be >= 3");
  if (d < 1) throw Error("construct_all_but_one: hypersurface degree must be >= 1");
  std::size_t n_vars = static_cast<std::size_t>(n) + 1;
  long long determining = binomial(n + d, d) - 1;
  long long extra = binomial(n + d, d + 1) - n;
  Rng rng(seed);

  for (int attempt = 0; attempt < 32; ++attempt) {
    DeterminedHypersurface base = sample_unique_hypersurface(field, n, d, rng);
    if (!base.ok) continue;

    // q = [1:0:...:0] must avoid V(f); otherwise resample the base points
    std::vector<Fp> q(n_vars, 0);
    q[0] = 1;
    if (base.f.evaluate(q) == 0) continue;

    std::vector<std::vector<Fp>> pts = base.points;
    pts.push_back(q);
    std::size_t off_index = pts.size() - 1;
    add_points_on_hypersurface(pts, base.f, extra, rng);

    PointSet X(field, n, pts);
    long long dim_d =
        static_cast<long long>(evaluation_matrix(X, d).kernel_basis().size());
    long long dim_d1 = static_cast<long long>(
        evaluation_matrix(X, d + 1).kernel_basis().size());
    if (dim_d != 0 || dim_d1 != n) continue;

    return AllButOneConfiguration{std::move(X),
                                  base.f,
                                  static_cast<std::size_t>(determining),
                                  static_cast<std::size_t>(extra),
                                  off_index,
                                  dim_d,
                                  dim_d1};
  }
  throw GenericityError("construct_all_but_one: verified construction failed "
                        "after bounded retries; reseed");
}

HypersurfaceLineConfiguration construct_hypersurface_plus_line(
    const PrimeField& field, int n, int d, int line_count,
    std::uint64_t seed) {
  if (n < 3) throw Error("construct_hypersurface_plus_line: ambient dimension "
                         "must be >= 3");
  if (d < 1 || line_count < 1)
    throw Error("construct_hypersurface_plus_line: bad parameters");
  std::size_t n_vars = static_cast<std::size_t>(n) + 1;
  long long extra = binomial(n + d, d + 1) - n;
  Rng rng(seed);

  for (int attempt = 0; attempt < 32; ++attempt) {
    DeterminedHypersurface base = sample_unique_hypersurface(field, n, d, rng);
    if (!base.ok) continue;

    std::vector<std::vector<Fp>> pts = base.points;
    add_points_on_hypersurface(pts, base.f, extra, rng);
    std::size_t on_hypersurface = pts.size();

    // random line spanned by a and b; take points a + t*b with f != 0
    std::vector<Fp> a = rng.field_vector(field, n_vars);
    std::vector<Fp> b = rng.field_vector(field, n_vars);
    bool degenerate = false;
    int collected = 0;
    int guard = 0;
    while (collected < line_count && !degenerate) {
      if (++guard > 200) degenerate = true;
      Fp t = rng.field_element(field);
      std::vector<Fp> p(n_vars);
      for (std::size_t i = 0; i < n_vars; ++i)
        p[i] = field.add(a[i], field.mul(t, b[i]));
      if (std::all_of(p.begin(), p.end(), [](Fp c) { return c == 0; }))
        continue;
      p = PointSet::normalize(field, std::move(p));
      if (base.f.evaluate(p) == 0) continue;
      if (std::find(pts.begin(), pts.end(), p) != pts.end()) continue;
      pts.push_back(std::move(p));
      ++collected;
    }
    if (degenerate) continue;

    PointSet X(field, n, pts);
    if (!evaluation_matrix(X, d).kernel_basis().empty()) continue;
    return HypersurfaceLineConfiguration{
        std::move(X), base.f, on_hypersurface,
        static_cast<std::size_t>(line_count)};
  }
  throw GenericityError("construct_hypersurface_plus_line: verified "
                        "construction failed after bounded retries; reseed");
}

} // namespace lefkit
