#include <doctest.h>

#include <vector>

#include "lefkit/polynomial.hpp"
#include "lefkit/rng.hpp"

using namespace lefkit;

namespace {

// independent binomial oracle: Pascal's triangle
long long pascal(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::vector<long long>> t(n + 1);
  for (int i = 0; i <= n; ++i) {
    t[i].assign(i + 1, 1);
    for (int j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
  }
  return t[n][k];
}

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

Polynomial parse(const std::string& text, std::size_t n_vars,
                 const PrimeField& field) {
  return parse_polynomial(text, default_var_names(n_vars), field);
}

} // namespace

TEST_CASE("grevlex compare on the stated pairs") {
  CHECK(grevlex_compare(mono({2, 0, 0}), mono({1, 1, 0})) > 0); // x0^2 > x0x1
  CHECK(grevlex_compare(mono({1, 1, 0}), mono({1, 1, 0})) == 0);
  CHECK(grevlex_compare(mono({1, 0, 1}), mono({0, 2, 0})) < 0); // x0x2 < x1^2
  CHECK(grevlex_compare(mono({3, 0}), mono({0, 1})) > 0);       // degree first
  CHECK_THROWS_AS(grevlex_compare(mono({1, 0}), mono({1, 0, 0})), Error);
}

TEST_CASE("grevlex is a total order compatible with multiplication") {
  // exhaustive over all degree <= 3 monomials in <= 4 variables
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<Monomial> all;
    for (int d = 0; d <= 3; ++d)
      for (const Monomial& m : monomial_basis(n, d)) all.push_back(m);
    for (const Monomial& a : all)
      for (const Monomial& b : all) {
        int ab = grevlex_compare(a, b);
        CHECK(ab == -grevlex_compare(b, a)); // antisymmetry
        if (ab == 0) CHECK(a == b);
        for (const Monomial& c : all) {
          if (ab > 0) {
            CHECK(grevlex_compare(a.times(c), b.times(c)) > 0); // multiplicative
            if (grevlex_compare(b, c) > 0)
              CHECK(grevlex_compare(a, c) > 0); // transitivity
          }
        }
      }
  }
}

TEST_CASE("monomial_basis counts and order") {
  CHECK(monomial_basis(2, 3).size() == 4);
  CHECK(monomial_basis(4, 2).size() == 10);
  auto unit = monomial_basis(3, 0);
  REQUIRE(unit.size() == 1);
  CHECK(unit[0].is_one());

  for (std::size_t n = 1; n <= 6; ++n)
    for (int d = 0; d <= 8; ++d) {
      auto basis = monomial_basis(n, d);
      CHECK(static_cast<long long>(basis.size()) ==
            pascal(static_cast<int>(n) - 1 + d, d));
      for (std::size_t i = 0; i + 1 < basis.size(); ++i)
        CHECK(grevlex_compare(basis[i], basis[i + 1]) > 0); // strictly sorted
    }
}

TEST_CASE("polynomial multiply") {
  PrimeField f7(7);
  Polynomial x0 = Polynomial::variable(f7, 3, 0);
  Polynomial x1 = Polynomial::variable(f7, 3, 1);
  Polynomial x2 = Polynomial::variable(f7, 3, 2);
  Polynomial one = Polynomial::constant(f7, 3, 1);

  Polynomial g = x0.add(x1);
  CHECK(g.multiply(one) == g);
  CHECK(x2.multiply(x0.add(x1)) == x0.multiply(x2).add(x1.multiply(x2)));

  Polynomial diff = x0.sub(x1);
  Polynomial sum = x0.add(x1);
  CHECK(diff.multiply(sum) == x0.multiply(x0).sub(x1.multiply(x1)));
}

TEST_CASE("evaluate") {
  PrimeField f(32003);
  Polynomial x0x3 = parse("x0*x3", 4, f);
  CHECK(x0x3.evaluate({1, 0, 0, 0}) == 0);
  CHECK(Polynomial::constant(f, 2, 1).evaluate({5, 9}) == 1);

  PrimeField f7(7);
  Polynomial g = parse("x0^2 + x1", 2, f7);
  CHECK(g.evaluate({3, 5}) == 0); // 9 + 5 = 14 = 0 mod 7
  CHECK_THROWS_AS(g.evaluate({1, 2, 3}), Error);
}

TEST_CASE("evaluate is multiplicative on random inputs") {
  PrimeField f(32003);
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    std::size_t n = 2 + rng.index(3);
    std::vector<Term> terms_f, terms_g;
    for (int s = 0; s < 4; ++s) {
      std::vector<int> e(n), e2(n);
      for (auto& x : e) x = static_cast<int>(rng.index(3));
      for (auto& x : e2) x = static_cast<int>(rng.index(3));
      terms_f.push_back({Monomial(e), rng.field_element(f)});
      terms_g.push_back({Monomial(e2), rng.field_element(f)});
    }
    Polynomial a(f, n, terms_f), b(f, n, terms_g);
    std::vector<Fp> p = rng.field_vector(f, n);
    CHECK(a.multiply(b).evaluate(p) == f.mul(a.evaluate(p), b.evaluate(p)));
  }
}

TEST_CASE("eliminate_variable") {
  PrimeField f(32003);

  SUBCASE("x0 with L = x0 + x1") {
    Polynomial g = parse("x0", 2, f);
    LinearForm L(f, {1, 1});
    Polynomial r = eliminate_variable(g, L, 0);
    CHECK(r.n_vars() == 1);
    CHECK(r == parse("-x0", 1, f)); // the surviving variable, re-indexed
  }
  SUBCASE("x0*x3 with L = x0+x1+x2+x3") {
    Polynomial g = parse("x0*x3", 4, f);
    LinearForm L(f, {1, 1, 1, 1});
    Polynomial r = eliminate_variable(g, L, 0);
    // -(y0+y1+y2)*y2 in the re-indexed ring
    CHECK(r == parse("-x0*x2 - x1*x2 - x2^2", 3, f));
  }
  SUBCASE("polynomial without the eliminated variable is only re-indexed") {
    Polynomial g = parse("x1^2 + x2*x3", 4, f);
    LinearForm L(f, {1, 2, 3, 4});
    CHECK(eliminate_variable(g, L, 0) == parse("x0^2 + x1*x2", 3, f));
  }
  SUBCASE("zero coefficient at the eliminated variable") {
    Polynomial g = parse("x0", 2, f);
    LinearForm L(f, {0, 1});
    CHECK_THROWS_AS(eliminate_variable(g, L, 0), Error);
  }
}

TEST_CASE("elimination is a ring map on random inputs") {
  PrimeField f(32003);
  Rng rng(17);
  for (int t = 0; t < 30; ++t) {
    std::size_t n = 3 + rng.index(2);
    std::vector<Term> tf, tg;
    for (int s = 0; s < 3; ++s) {
      std::vector<int> e(n), e2(n);
      for (auto& x : e) x = static_cast<int>(rng.index(3));
      for (auto& x : e2) x = static_cast<int>(rng.index(3));
      tf.push_back({Monomial(e), rng.field_element(f)});
      tg.push_back({Monomial(e2), rng.field_element(f)});
    }
    Polynomial a(f, n, tf), b(f, n, tg);
    std::vector<Fp> coeffs = rng.field_vector(f, n);
    coeffs[0] = rng.nonzero_field_element(f);
    LinearForm L(f, coeffs);
    CHECK(eliminate_variable(a.multiply(b), L, 0) ==
          eliminate_variable(a, L, 0).multiply(eliminate_variable(b, L, 0)));
  }
}

TEST_CASE("polynomial text grammar") {
  PrimeField f(32003);
  CHECK(parse("x0*x2 - x1^2", 3, f) ==
        Polynomial(f, 3, {{mono({1, 0, 1}), 1}, {mono({0, 2, 0}), 32002}}));
  CHECK(parse("3x1^2*x3", 4, f) ==
        Polynomial(f, 4, {{mono({0, 2, 0, 1}), 3}}));
  CHECK(parse("-x2^3", 3, f) == Polynomial(f, 3, {{mono({0, 0, 3}), 32002}}));
  CHECK(parse("  x0 \n+ 2 * x1 ", 2, f) ==
        Polynomial(f, 2, {{mono({1, 0}), 1}, {mono({0, 1}), 2}}));
  CHECK(parse("x0*x0", 2, f) == parse("x0^2", 2, f));
  CHECK(parse("5", 2, f) == Polynomial::constant(f, 2, 5));
  CHECK(parse("x0 - x0", 2, f).is_zero());

  CHECK_THROWS_AS(parse("x9", 3, f), ParseError);   // unknown variable
  CHECK_THROWS_AS(parse("x0 +", 3, f), ParseError);
  CHECK_THROWS_AS(parse("x0 x1", 3, f), ParseError); // missing operator
  CHECK_THROWS_AS(parse("^2", 3, f), ParseError);

  // ideal-file style names starting at x1
  Polynomial g =
      parse_polynomial("x1*x4 - x2*x3", default_var_names(4, 1), f);
  CHECK(g == Polynomial(f, 4, {{mono({1, 0, 0, 1}), 1}, {mono({0, 1, 1, 0}), 32002}}));
}

TEST_CASE("printer round-trips through the parser") {
  PrimeField f(32003);
  Rng rng(29);
  auto names = default_var_names(3);
  for (int t = 0; t < 40; ++t) {
    std::vector<Term> terms;
    for (int s = 0; s < 5; ++s) {
      std::vector<int> e(3);
      for (auto& x : e) x = static_cast<int>(rng.index(4));
      terms.push_back({Monomial(e), rng.field_element(f)});
    }
    Polynomial a(f, 3, terms);
    CHECK(parse_polynomial(polynomial_to_string(a, names), names, f) == a);
  }
  CHECK(polynomial_to_string(Polynomial::zero(f, 3), names) == "0");
}
