#include "lefkit/groebner.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <set>
#include <utility>

namespace lefkit {

namespace {

// Full division against an arbitrary monic generator list.
Polynomial reduce_against(const Polynomial& f,
                          const std::vector<Polynomial>& basis) {
  Polynomial work = f;
  std::vector<Term> remainder;
  while (!work.is_zero()) {
    const Term& lt = work.leading_term();
    const Polynomial* reducer = nullptr;
    for (const Polynomial& g : basis) {
      if (g.leading_term().mono.divides(lt.mono)) {
        reducer = &g;
        break;
      }
    }
    if (reducer == nullptr) {
      remainder.push_back(lt);
      work = work.sub(Polynomial::monomial(work.field(), lt.mono, lt.coeff));
    } else {
      Monomial q = reducer->leading_term().mono.quotient_of(lt.mono);
      work = work.sub(reducer->times_term(q, lt.coeff));
    }
  }
  return Polynomial(f.field(), f.n_vars(), std::move(remainder));
}

struct SPair {
  std::size_t i, j; // i < j
  Monomial lcm;
};

// Normal strategy: lowest lcm degree first, deterministic tie-breaks.
struct SPairLess {
  bool operator()(const SPair& a, const SPair& b) const {
    if (a.lcm.degree() != b.lcm.degree())
      return a.lcm.degree() < b.lcm.degree();
    int c = grevlex_compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

bool all_monomials_divisible(std::size_t n_vars, int d,
                             const std::vector<Polynomial>& basis) {
  for (const Monomial& m : monomial_basis(n_vars, d)) {
    bool divisible = false;
    for (const Polynomial& g : basis)
      if (g.leading_term().mono.divides(m)) {
        divisible = true;
        break;
      }
    if (!divisible) return false;
  }
  return true;
}

// Smallest degree e at which the leading terms cover every monomial, if any.
// Pairs with lcm degree >= e have S-polynomials that reduce to zero, so the
// queue can drop them.
std::optional<int> saturation_degree(std::size_t n_vars,
                                     const std::vector<Polynomial>& basis) {
  if (n_vars == 0) return std::nullopt;
  long long bound = 1;
  int low = 0;
  for (std::size_t v = 0; v < n_vars; ++v) {
    int best = std::numeric_limits<int>::max();
    for (const Polynomial& g : basis) {
      const Monomial& lt = g.leading_term().mono;
      if (lt.exponent(v) == lt.degree()) best = std::min(best, lt.degree());
    }
    // pure power x_v^k is the only possible divisor of x_v^e, so coverage
    // cannot start below the largest such k
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    bound += best - 1;
    low = std::max(low, best);
  }
  for (int e = low; e <= bound; ++e)
    if (all_monomials_divisible(n_vars, e, basis)) return e;
  return static_cast<int>(bound);
}

} // namespace

GroebnerBasis buchberger(const PrimeField& field, std::size_t n_vars,
                         const std::vector<Polynomial>& gens) {
  // Inserting each input fully reduced keeps leading terms pairwise
  // distinct, which the final minimalization step relies on.
  std::vector<Polynomial> basis;
  for (const Polynomial& g : gens) {
    if (g.is_zero()) continue;
    if (g.n_vars() != n_vars) throw Error("buchberger: arity mismatch");
    if (!g.is_homogeneous()) throw Error("buchberger: inhomogeneous generator");
    Polynomial r = reduce_against(g, basis);
    if (!r.is_zero()) basis.push_back(r.monic());
  }

  std::set<SPair, SPairLess> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto push_pairs_with = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      SPair p{i, j,
              basis[i].leading_term().mono.lcm(basis[j].leading_term().mono)};
      queue.insert(p);
      pending.insert({i, j});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) push_pairs_with(j);

  std::optional<int> sat = saturation_degree(n_vars, basis);
  bool sat_valid = true;

  while (!queue.empty()) {
    SPair pair = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pair.i, pair.j});

    if (!sat_valid) {
      sat = saturation_degree(n_vars, basis);
      sat_valid = true;
    }
    if (sat && pair.lcm.degree() >= *sat) continue;

    const Monomial& lt_i = basis[pair.i].leading_term().mono;
    const Monomial& lt_j = basis[pair.j].leading_term().mono;
    if (lt_i.coprime(lt_j)) continue; // first Buchberger criterion
    bool chained = false;             // second (chain) criterion
    for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (!basis[k].leading_term().mono.divides(pair.lcm)) continue;
      auto ik = std::minmax(pair.i, k);
      auto jk = std::minmax(pair.j, k);
      if (!pending.count({ik.first, ik.second}) &&
          !pending.count({jk.first, jk.second}))
        chained = true;
    }
    if (chained) continue;

    Polynomial spoly =
        basis[pair.i]
            .times_term(lt_i.quotient_of(pair.lcm), 1)
            .sub(basis[pair.j].times_term(lt_j.quotient_of(pair.lcm), 1));
    Polynomial reduced = reduce_against(spoly, basis);
    if (reduced.is_zero()) continue;
    basis.push_back(reduced.monic());
    push_pairs_with(basis.size() - 1);
    sat_valid = false;
  }

  // minimalize: drop elements whose leading term another one divides
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k)
      if (k != i &&
          basis[k].leading_term().mono.divides(basis[i].leading_term().mono))
        redundant = true;
    if (!redundant) minimal.push_back(basis[i]);
  }

  // tail-reduce each element against the others
  std::vector<Polynomial> reduced_basis;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t k = 0; k < minimal.size(); ++k)
      if (k != i) others.push_back(minimal[k]);
    reduced_basis.push_back(reduce_against(minimal[i], others).monic());
  }

  std::sort(reduced_basis.begin(), reduced_basis.end(),
            [](const Polynomial& a, const Polynomial& b) {
              return grevlex_compare(a.leading_term().mono,
                                     b.leading_term().mono) < 0;
            });
  return GroebnerBasis(field, n_vars, std::move(reduced_basis));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (f.n_vars() != gb.n_vars()) throw Error("normal_form: arity mismatch");
  return reduce_against(f, gb.generators());
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, int d) {
  std::vector<Monomial> out;
  for (const Monomial& m : monomial_basis(gb.n_vars(), d)) {
    bool divisible = false;
    for (const Polynomial& g : gb.generators())
      if (g.leading_term().mono.divides(m)) {
        divisible = true;
        break;
      }
    if (!divisible) out.push_back(m);
  }
  return out;
}

std::vector<long long> hilbert_function(const GroebnerBasis& gb, int through) {
  std::vector<long long> hf;
  for (int d = 0; d <= through; ++d)
    hf.push_back(static_cast<long long>(standard_monomials(gb, d).size()));
  return hf;
}

} // namespace lefkit
