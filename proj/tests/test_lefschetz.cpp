#include <doctest.h>

#include <algorithm>

#include "lefkit/fixtures.hpp"
#include "lefkit/lefschetz.hpp"
#include "lefkit/rng.hpp"

using namespace lefkit;

namespace {

const PrimeField kField(32003);

Polynomial parse(const std::string& text, std::size_t n_vars) {
  return parse_polynomial(text, default_var_names(n_vars), kField);
}

ArtinianAlgebra algebra_of(const char* fixture, std::uint64_t seed = 0) {
  return artinian_reduction(fixture_points(kField, fixture), seed).algebra;
}

ArtinianAlgebra algebra_of_ideal(const char* fixture) {
  IdealData data = fixture_ideal(kField, fixture);
  return make_artinian_algebra(
      buchberger(kField, data.variables.size(), data.generators));
}

bool fails_exactly_at(const LefschetzReport& r, int d) {
  return !r.holds && std::find(r.failure_degrees.begin(),
                               r.failure_degrees.end(),
                               d) != r.failure_degrees.end();
}

} // namespace

TEST_CASE("multiplication matrix") {
  SUBCASE("one-variable chain") {
    ArtinianAlgebra A =
        make_artinian_algebra(buchberger(kField, 1, {parse("x0^3", 1)}));
    LinearForm x(kField, {1});
    Matrix m = multiplication_matrix(A, x, 0, 2);
    REQUIRE(m.rows() == 1);
    REQUIRE(m.cols() == 1);
    CHECK(m.at(0, 0) == 1);
  }
  SUBCASE("degrees past the socle give empty shapes") {
    ArtinianAlgebra A =
        make_artinian_algebra(buchberger(kField, 1, {parse("x0^3", 1)}));
    LinearForm x(kField, {1});
    Matrix m = multiplication_matrix(A, x, 2, 1); // A_2 -> A_3 = 0
    CHECK(m.rows() == 0);
    CHECK(m.cols() == 1);
    CHECK(multiplication_matrix(A, x, 7, 1).cols() == 0);
  }
  SUBCASE("eight-point fixture: the reduced x3 column vanishes") {
    ArtinianAlgebra A = algebra_of("example1");
    Rng rng(77);
    std::vector<Fp> coeffs = rng.field_vector(kField, 3);
    LinearForm l(kField, coeffs);
    Matrix m = multiplication_matrix(A, l, 1, 1);
    REQUIRE(m.rows() == 3);
    REQUIRE(m.cols() == 3);
    CHECK(m.rank() == 2);
    // basis of A_1 is x1 > x2 > x3; the image of x3 is zero
    for (std::size_t r = 0; r < 3; ++r) CHECK(m.at(r, 2) == 0);
  }
}

TEST_CASE("wlp verdicts on the fixtures") {
  SUBCASE("eight points: fails at 1 -> 2 with rank 2 of 3") {
    LefschetzReport r = wlp(algebra_of("example1"), 3, 0);
    CHECK_FALSE(r.holds);
    CHECK(r.failure_degrees == std::vector<int>{1});
    REQUIRE(r.records.size() == 3);
    CHECK(r.records[1].dim_source == 3);
    CHECK(r.records[1].dim_target == 3);
    CHECK(r.records[1].rank == 2);
    CHECK_FALSE(r.records[1].injective);
    CHECK_FALSE(r.records[1].surjective);
  }
  SUBCASE("skew lines: holds") {
    LefschetzReport r = wlp(algebra_of("example3"), 3, 0);
    CHECK(r.holds);
    CHECK(r.failure_degrees.empty());
  }
  SUBCASE("the two printed ideals differ") {
    CHECK(wlp(algebra_of_ideal("sec3_wlp_ideal"), 3, 0).holds);
    LefschetzReport r = wlp(algebra_of_ideal("sec3_failwlp_ideal"), 3, 0);
    CHECK_FALSE(r.holds);
  }
}

TEST_CASE("wlp ranks are monotone in trials and stable across seeds") {
  ArtinianAlgebra A = algebra_of_ideal("sec3_failwlp_ideal");
  LefschetzReport one = wlp(A, 1, 11);
  LefschetzReport three = wlp(A, 3, 11);
  REQUIRE(one.records.size() == three.records.size());
  for (std::size_t i = 0; i < one.records.size(); ++i)
    CHECK(one.records[i].rank <= three.records[i].rank);

  LefschetzReport a = wlp(A, 3, 101);
  LefschetzReport b = wlp(A, 3, 202);
  CHECK(a.holds == b.holds);
  CHECK(a.failure_degrees == b.failure_degrees);
}

TEST_CASE("slp") {
  SUBCASE("one-variable algebras have SLP") {
    for (int m = 1; m <= 5; ++m) {
      ArtinianAlgebra A = make_artinian_algebra(
          buchberger(kField, 1, {parse("x0^" + std::to_string(m), 1)}));
      CHECK(slp(A, 2, 0).holds);
    }
  }
  SUBCASE("monomial complete intersection has SLP") {
    ArtinianAlgebra A = make_artinian_algebra(buchberger(
        kField, 3, {parse("x0^2", 3), parse("x1^2", 3), parse("x2^2", 3)}));
    LefschetzReport r = slp(A, 3, 0);
    CHECK(r.holds);
    // maps (i,k) for all i+k <= 3, k >= 1
    CHECK(r.records.size() == 6);
  }
  SUBCASE("a WLP failure is an SLP failure") {
    ArtinianAlgebra A = algebra_of("example1");
    LefschetzReport w = wlp(A, 3, 0);
    LefschetzReport s = slp(A, 3, 0);
    CHECK_FALSE(w.holds);
    CHECK_FALSE(s.holds);
    for (int d : w.failure_degrees)
      CHECK(std::find(s.failure_degrees.begin(), s.failure_degrees.end(), d) !=
            s.failure_degrees.end());
  }
}

TEST_CASE("verify_theorem1 on small cases") {
  Theorem1Record r1 = verify_theorem1(kField, 3, 1, 5);
  CHECK(r1.dim_Ad == 3);
  CHECK(r1.dim_Ad1 == 3);
  CHECK(r1.kernel_witness);
  CHECK_FALSE(r1.wlp_report.holds);

  Theorem1Record r2 = verify_theorem1(kField, 3, 2, 5);
  CHECK(r2.dim_Ad == 6);
  CHECK(r2.dim_Ad1 == 7);

  Theorem1Record r3 = verify_theorem1(kField, 4, 2, 5);
  CHECK(r3.dim_Ad == 10);
  CHECK(r3.dim_Ad1 == binomial(6, 3) - 4);

  CHECK_THROWS_AS(verify_theorem1(kField, 2, 1, 0), Error);
}

TEST_CASE("verify_theorem1 reproduces the 34/31/1 cubic configuration") {
  Theorem1Record r = verify_theorem1(kField, 4, 3, 2);
  CHECK(r.config.n_determining == 34);
  CHECK(r.config.n_extra == 31);
  CHECK(r.config.points.size() == 66);
  CHECK(fails_exactly_at(r.wlp_report, 3));
}

TEST_CASE("verify_theorem2") {
  SUBCASE("applicable on the eight-point fixture") {
    Theorem2Record r = verify_theorem2(algebra_of("example1"));
    CHECK(r.applicable);
    REQUIRE(r.tails.maximal.has_value());
    CHECK(*r.tails.maximal == 1);
    REQUIRE(r.wlp_report.has_value());
    CHECK_FALSE(r.wlp_report->holds);
  }
  SUBCASE("not applicable on the skew-lines fixture") {
    Theorem2Record r = verify_theorem2(algebra_of("example3"));
    CHECK_FALSE(r.applicable);
    CHECK_FALSE(r.wlp_report.has_value());
  }
  SUBCASE("not applicable on either printed ideal") {
    Theorem2Record a = verify_theorem2(algebra_of_ideal("sec3_wlp_ideal"));
    Theorem2Record b = verify_theorem2(algebra_of_ideal("sec3_failwlp_ideal"));
    CHECK_FALSE(a.applicable);
    CHECK_FALSE(b.applicable);
    // both share a (2,1) tail, which is not maximal in four variables
    CHECK(a.tails.tails == std::vector<std::pair<int, int>>{{2, 1}});
    CHECK(b.tails.tails == std::vector<std::pair<int, int>>{{2, 1}});
  }
  SUBCASE("two-variable algebras are rejected") {
    ArtinianAlgebra A = make_artinian_algebra(
        buchberger(kField, 2, {parse("x0^2", 2), parse("x1^2", 2)}));
    CHECK_THROWS_AS(verify_theorem2(A), Error);
  }
}

TEST_CASE("two-variable quotients have WLP (spot check)") {
  Rng rng(31);
  for (int t = 0; t < 30; ++t) {
    int a = 1 + static_cast<int>(rng.index(5));
    int b = 1 + static_cast<int>(rng.index(5));
    std::vector<Polynomial> gens = {parse("x0^" + std::to_string(a), 2),
                                    parse("x1^" + std::to_string(b), 2)};
    int extras = static_cast<int>(rng.index(3));
    for (int s = 0; s < extras; ++s) {
      int d = 1 + static_cast<int>(rng.index(4));
      int e0 = static_cast<int>(rng.index(d + 1));
      std::vector<Term> terms = {
          {Monomial({e0, d - e0}), rng.nonzero_field_element(kField)}};
      int e1 = static_cast<int>(rng.index(d + 1));
      terms.push_back({Monomial({e1, d - e1}), rng.field_element(kField)});
      gens.push_back(Polynomial(kField, 2, terms));
    }
    ArtinianAlgebra A =
        make_artinian_algebra(buchberger(kField, 2, gens));
    CHECK(wlp(A, 2, 1000 + t).holds);
  }
}
