#include "lefkit/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace lefkit {

Monomial::Monomial(std::vector<int> exponents)
    : exponents_(std::move(exponents)) {
  degree_ = 0;
  for (int e : exponents_) {
    if (e < 0) throw Error("monomial exponent must be non-negative");
    degree_ += e;
  }
}

Monomial Monomial::variable(std::size_t n_vars, std::size_t k) {
  Monomial m(n_vars);
  m.exponents_[k] = 1;
  m.degree_ = 1;
  return m;
}

Monomial Monomial::times(const Monomial& other) const {
  if (n_vars() != other.n_vars()) throw Error("monomial product: arity mismatch");
  Monomial out(*this);
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    out.exponents_[i] += other.exponents_[i];
  out.degree_ = degree_ + other.degree_;
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  if (n_vars() != other.n_vars()) throw Error("monomial divides: arity mismatch");
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] > other.exponents_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& numerator) const {
  Monomial out(numerator);
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    out.exponents_[i] -= exponents_[i];
    if (out.exponents_[i] < 0) throw Error("monomial quotient: not divisible");
  }
  out.degree_ = numerator.degree_ - degree_;
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out(*this);
  out.degree_ = 0;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    out.exponents_[i] = std::max(exponents_[i], other.exponents_[i]);
    out.degree_ += out.exponents_[i];
  }
  return out;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] > 0 && other.exponents_[i] > 0) return false;
  return true;
}

Monomial Monomial::drop_variable(std::size_t k) const {
  if (exponents_[k] != 0)
    throw Error("drop_variable: exponent not zero at dropped index");
  std::vector<int> e = exponents_;
  e.erase(e.begin() + k);
  return Monomial(std::move(e));
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.n_vars() != b.n_vars()) throw Error("grevlex_compare: arity mismatch");
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (std::size_t i = a.n_vars(); i-- > 0;) {
    int d = a.exponent(i) - b.exponent(i);
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

namespace {
void enumerate(std::size_t n_vars, int d, std::size_t pos, std::vector<int>& acc,
               std::vector<Monomial>& out) {
  if (pos + 1 == n_vars) {
    acc[pos] = d;
    out.push_back(Monomial(acc));
    return;
  }
  for (int e = d; e >= 0; --e) {
    acc[pos] = e;
    enumerate(n_vars, d - e, pos + 1, acc, out);
  }
}
} // namespace

std::vector<Monomial> monomial_basis(std::size_t n_vars, int d) {
  if (d < 0) throw Error("monomial_basis: negative degree");
  if (n_vars == 0) {
    if (d == 0) return {Monomial(std::vector<int>{})};
    return {};
  }
  std::vector<Monomial> out;
  std::vector<int> acc(n_vars, 0);
  enumerate(n_vars, d, 0, acc, out);
  std::sort(out.begin(), out.end(), GrevlexGreater{});
  return out;
}

long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

} // namespace lefkit
