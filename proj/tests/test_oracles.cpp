#include <doctest.h>

#include <macmahon/errors.hpp>
#include <macmahon/families.hpp>
#include <macmahon/oracles.hpp>
#include <macmahon/qtoolkit.hpp>

using namespace macmahon;

TEST_CASE("chain oracle values") {
  CHECK(v_oracle(Sign::plus, 3, kUnbounded, 5) == 27);
  CHECK(v_oracle(Sign::minus, 3, kUnbounded, 5) == 19);
  CHECK(v_oracle(Sign::plus, 1, kUnbounded, 6) == 12);
  CHECK(w_oracle(Sign::plus, 3, kUnbounded, 5) == 22);
  CHECK(w_oracle(Sign::minus, 3, kUnbounded, 5) == 22);
  CHECK(w_oracle(Sign::plus, 1, kUnbounded, 4) == 4);
  CHECK(v_oracle(Sign::plus, 0, kUnbounded, 0) == 1);
  CHECK(v_oracle(Sign::plus, 0, kUnbounded, 3) == 0);
  CHECK_THROWS_AS(v_oracle(Sign::plus, -1, kUnbounded, 3), DomainError);
}

TEST_CASE("chain terms for three magnitudes summing to five") {
  const auto terms = chain_terms(Family::V, Sign::plus, 3, kUnbounded, 5);
  Integer total = 0;
  for (const auto &t : terms) {
    long sum = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      sum += static_cast<long>(t.magnitudes[i]) * t.multiplicities[i];
      if (i > 0) {
        CHECK(t.magnitudes[i - 1] <= t.magnitudes[i]);
      }
    }
    CHECK(sum == 5);
    total += t.weight;
  }
  CHECK(total == 27);
}

TEST_CASE("oracles agree with family series") {
  const int order = 15;
  for (Sign s : {Sign::plus, Sign::minus}) {
    for (int k = 0; k <= 3; ++k) {
      for (Bound m : {Bound(1), Bound(2), Bound(3), kUnbounded}) {
        const auto v = family_series({Family::V, s, k, m}, order);
        const auto w = family_series({Family::W, s, k, m}, order);
        for (int n = 0; n <= order; ++n) {
          CHECK(v_oracle(s, k, m, n) == v.coeff(n));
          CHECK(w_oracle(s, k, m, n) == w.coeff(n));
        }
      }
    }
  }
}

TEST_CASE("sigma and parity through the oracle") {
  for (int n = 1; n <= 30; ++n) {
    CHECK(v_oracle(Sign::plus, 1, kUnbounded, n) == divisor_sigma(n));
  }
  for (int k = 0; k <= 3; ++k) {
    for (int n = 0; n <= 15; ++n) {
      const Integer plus = w_oracle(Sign::plus, k, kUnbounded, n);
      CHECK(w_oracle(Sign::minus, k, kUnbounded, n) == ((n + k) % 2 == 0 ? plus : Integer(-plus)));
    }
  }
}

TEST_CASE("partition counts") {
  const std::vector<long> p = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) {
    CHECK(partition_count(n) == p[n]);
  }
  CHECK(overpartitions(3) == 8);
  CHECK(overpartition_pairs(0) == 1);
  CHECK(overpartition_pairs(1) == 4);
  CHECK(overpartition_pairs(2) == 12);
  CHECK(pod_bipartitions(0) == 1);
  CHECK(pod_bipartitions(1) == 2);
  // pod(0..3) = 1, 1, 1, 2, so the convolution at 3 is 2 + 1 + 1 + 2
  CHECK(pod_bipartitions(3) == 6);
  const std::vector<long> pod2 = {1, 2, 3, 6, 11, 18, 28, 44};
  const auto table = pod_bipartitions_upto(7);
  for (int n = 0; n <= 7; ++n) {
    CHECK(table[n] == pod2[n]);
  }
}

TEST_CASE("generating functions of the pair counts") {
  const int order = 20;
  const auto plus = pochhammer({.sign = Sign::minus, .offset = 1, .step = 1, .length = kUnbounded}, order);
  const auto euler = pochhammer({.sign = Sign::plus, .offset = 1, .step = 1, .length = kUnbounded}, order);
  const auto pp = pow(plus, 2) * invert(pow(euler, 2));
  const auto odd = pochhammer({.sign = Sign::minus, .offset = 1, .step = 2, .length = kUnbounded}, order);
  const auto even = pochhammer({.sign = Sign::plus, .offset = 2, .step = 2, .length = kUnbounded}, order);
  const auto pod2 = pow(odd, 2) * invert(pow(even, 2));
  const auto pp_table = overpartition_pairs_upto(order);
  const auto pod_table = pod_bipartitions_upto(order);
  for (int n = 0; n <= order; ++n) {
    CHECK(pp.coeff(n) == pp_table[n]);
    CHECK(pod2.coeff(n) == pod_table[n]);
  }
}

TEST_CASE("divisor sums and triangular numbers") {
  CHECK(divisor_sigma(1) == 1);
  CHECK(divisor_sigma(6) == 12);
  CHECK(divisor_sigma(12) == 28);
  CHECK_THROWS_AS(divisor_sigma(0), DomainError);
  CHECK(triangular(0) == 0);
  CHECK(triangular(3) == 6);
  CHECK(triangular(7) == 28);
  CHECK_THROWS_AS(triangular(-1), DomainError);
}
