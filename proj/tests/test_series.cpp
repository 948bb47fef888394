#include <doctest.h>

#include <random>

#include <macmahon/errors.hpp>
#include <macmahon/qtoolkit.hpp>
#include <macmahon/series.hpp>

#include "test_support.hpp"

using namespace macmahon;
using test_support::coeff_vector;
using test_support::naive_product;
using test_support::series_of;

namespace {

ExactSeries random_series(std::mt19937_64 &rng, int order, bool unit_constant = false) {
  std::uniform_int_distribution<long> dist(-50, 50);
  std::vector<Integer> c;
  for (int n = 0; n <= order; ++n) {
    c.emplace_back(dist(rng));
  }
  if (unit_constant) {
    c[0] = (rng() & 1) ? 1 : -1;
  }
  return ExactSeries(std::move(c));
}

// Partition numbers from Euler's pentagonal recurrence, in plain integers.
std::vector<Integer> partition_numbers(int n) {
  std::vector<Integer> p(static_cast<std::size_t>(n) + 1, Integer(0));
  p[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1;; ++j) {
      const int g1 = j * (3 * j - 1) / 2;
      const int g2 = j * (3 * j + 1) / 2;
      if (g1 > i) {
        break;
      }
      const int sign = (j % 2 == 1) ? 1 : -1;
      p[i] += sign * p[i - g1];
      if (g2 <= i) {
        p[i] += sign * p[i - g2];
      }
    }
  }
  return p;
}

} // namespace

TEST_CASE("monomial") {
  CHECK(ExactSeries::monomial(1, 0, 4) == series_of({1, 0, 0, 0, 0}));
  CHECK(ExactSeries::monomial(-2, 3, 4) == series_of({0, 0, 0, -2, 0}));
  CHECK(ExactSeries::monomial(5, 7, 4).is_zero());
  CHECK(ExactSeries::monomial(5, 7, 4).order() == 4);
  CHECK_THROWS_AS(ExactSeries::monomial(1, -1, 4), DomainError);
  CHECK_THROWS_AS(ExactSeries(-1), DomainError);
}

TEST_CASE("add and sub") {
  CHECK(add(series_of({1, 1}), series_of({1, -1})) == series_of({2, 0}));
  const auto a = series_of({3, -1, 4, 1});
  CHECK(a + ExactSeries::zero(3) == a);
  CHECK(series_of({1, 2, 3}) + series_of({0, 0, -3}) == series_of({1, 2, 0}));
  CHECK((a - a).is_zero());
  CHECK(-(-a) == a);
}

TEST_CASE("mixed orders reconcile to the smaller one") {
  const auto a = ExactSeries::from_coeffs({1, 1, 1, 1, 1, 1}, 5);
  const auto b = ExactSeries::from_coeffs({1, 1}, 2);
  CHECK((a + b).order() == 2);
  CHECK((a * b).order() == 2);
  CHECK(a + b == series_of({2, 2, 1}));
}

TEST_CASE("mul") {
  CHECK(series_of({1, 1, 0, 0, 0}) * series_of({1, -1, 0, 0, 0}) == series_of({1, 0, -1, 0, 0}));
  const auto a = series_of({2, 7, 1, 8});
  CHECK(a * ExactSeries::one(3) == a);
  const auto sq = series_of({1, 1, 1, 0, 0});
  CHECK(sq * sq == ExactSeries(naive_product(coeff_vector(sq), coeff_vector(sq), 4)));
  CHECK(sq * sq == series_of({1, 2, 3, 2, 1}));
}

TEST_CASE("invert") {
  CHECK(invert(series_of({1, -1, 0, 0, 0})) == series_of({1, 1, 1, 1, 1}));
  CHECK(invert(ExactSeries::one(6)) == ExactSeries::one(6));
  const auto sq = series_of({1, -2, 1, 0});
  CHECK(invert(sq) == series_of({1, 2, 3, 4}));
  CHECK(invert(sq) * sq == ExactSeries::one(3));
  CHECK(invert(series_of({-1, 1})) == series_of({-1, -1}));
  CHECK_THROWS_AS(invert(series_of({2, 1})), NonUnitConstantTerm);
  CHECK_THROWS_AS(invert(series_of({0, 1})), NonUnitConstantTerm);
}

TEST_CASE("substitute_power, shift, pow") {
  CHECK(substitute_power(series_of({1, 1, 1, 0, 0}), 2) == series_of({1, 0, 1, 0, 1}));
  const auto a = series_of({5, 4, 3, 2});
  CHECK(substitute_power(a, 1) == a);
  CHECK(substitute_power(series_of({1, 3, 0, 0, 0}), 3) == series_of({1, 0, 0, 3, 0}));
  CHECK_THROWS_AS(substitute_power(a, 0), DomainError);
  CHECK(shift(a, 2) == series_of({0, 0, 5, 4}));
  CHECK(shift(a, 9).is_zero());
  CHECK(pow(a, 0) == ExactSeries::one(3));
  CHECK(pow(a, 3) == a * a * a);
}

TEST_CASE("coeff access") {
  const auto a = series_of({1, 4, 12});
  CHECK(a.coeff(1) == 4);
  CHECK(ExactSeries::zero(9).coeff(9) == 0);
  CHECK_THROWS_AS(a.coeff(3), ExponentOutOfOrder);
  CHECK_THROWS_AS(a.coeff(-1), ExponentOutOfOrder);
}

TEST_CASE("valuation, truncation, printing") {
  CHECK(series_of({0, 0, 3, 1}).valuation() == 2);
  CHECK_FALSE(ExactSeries::zero(5).valuation().has_value());
  CHECK(series_of({1, 2, 3, 4}).truncated(1) == series_of({1, 2}));
  CHECK_THROWS_AS(series_of({1, 2}).truncated(4), DomainError);
  CHECK(series_of({1, 2, 1}).to_string() == "1 + 2q + q^2 + O(q^3)");
  CHECK(series_of({0, -1, 0, -3}).to_string() == "-q - 3q^3 + O(q^4)");
  CHECK(ExactSeries::zero(2).to_string() == "0 + O(q^3)");
}

TEST_CASE("ring laws on random series") {
  std::mt19937_64 rng(20240521);
  for (int trial = 0; trial < 40; ++trial) {
    const int order = static_cast<int>(rng() % 25);
    const auto a = random_series(rng, order);
    const auto b = random_series(rng, order);
    const auto c = random_series(rng, order);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == ExactSeries(naive_product(coeff_vector(a), coeff_vector(b), order)));
    const auto u = random_series(rng, order, true);
    CHECK(invert(u) * u == ExactSeries::one(order));
    CHECK(invert(invert(u)) == u);
    CHECK(substitute_power(substitute_power(a, 2), 3) == substitute_power(a, 6));
    CHECK(substitute_power(a * b, 2) == substitute_power(a, 2) * substitute_power(b, 2));
  }
}

TEST_CASE("coefficients beyond 64 bits stay exact") {
  const int order = 300;
  const auto euler = pochhammer({.sign = Sign::plus, .offset = 1, .step = 1, .length = kUnbounded}, order);
  const auto inv_sq = invert(euler * euler);
  const auto p = partition_numbers(order);
  Integer expected = 0;
  for (int i = 0; i <= order; ++i) {
    expected += p[i] * p[order - i];
  }
  CHECK(inv_sq.coeff(order) == expected);
  const Integer two64 = Integer(1) << 64;
  CHECK(inv_sq.coeff(order) > two64);
  // every coefficient, not just the last
  for (int n = 250; n <= order; ++n) {
    Integer pp = 0;
    for (int i = 0; i <= n; ++i) {
      pp += p[i] * p[n - i];
    }
    CHECK(inv_sq.coeff(n) == pp);
  }
}
