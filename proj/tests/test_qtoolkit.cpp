#include <doctest.h>

#include <thread>

#include <macmahon/errors.hpp>
#include <macmahon/qtoolkit.hpp>

#include "test_support.hpp"

using namespace macmahon;
using test_support::series_of;

namespace {

// Partitions of n with at most `rows` parts, each at most `cols`: the
// classical combinatorial reading of [rows+cols, rows]_q.
std::vector<Integer> box_partitions(int rows, int cols, int order) {
  // f[r][n] counts partitions of n into at most r parts of size <= c, built
  // one allowed part size at a time
  std::vector<std::vector<Integer>> f(static_cast<std::size_t>(rows) + 1,
                                      std::vector<Integer>(static_cast<std::size_t>(order) + 1, Integer(0)));
  for (int r = 0; r <= rows; ++r) {
    f[r][0] = 1;
  }
  for (int c = 1; c <= cols; ++c) {
    // add parts of size c: g[r][n] = sum_{t>=0} f[r-t][n-tc]
    auto g = f;
    for (int r = 0; r <= rows; ++r) {
      for (int n = 0; n <= order; ++n) {
        Integer v = 0;
        for (int t = 0; t <= r && t * c <= n; ++t) {
          v += f[r - t][n - t * c];
        }
        g[r][n] = v;
      }
    }
    f = std::move(g);
  }
  return f[rows];
}

ExactSeries gaussian_oracle(int m, int k, int d, int order) {
  std::vector<Integer> out(static_cast<std::size_t>(order) + 1, Integer(0));
  if (k < 0 || k > m) {
    return ExactSeries(std::move(out));
  }
  const auto box = box_partitions(k, m - k, order);
  for (int n = 0; n * d <= order; ++n) {
    out[n * d] = box[n];
  }
  return ExactSeries(std::move(out));
}

// Kernel by direct summation of Gaussian products from the box oracle.
ExactSeries kernel_oracle(int k, int m, int d, int s, int order) {
  ExactSeries total = ExactSeries::zero(order);
  for (int j = 0; s * j <= order; ++j) {
    const auto term = gaussian_oracle(m - 1 + j, j, d, order) * gaussian_oracle(m - 1 + k + j, k + j, d, order);
    total = total + shift(term, s * j);
  }
  return total;
}

} // namespace

TEST_CASE("pochhammer products") {
  CHECK(pochhammer({.sign = Sign::plus, .offset = 1, .step = 1, .length = 2}, 4) ==
        series_of({1, -1, -1, 1, 0}));
  CHECK(pochhammer({.sign = Sign::minus, .offset = 3, .step = 2, .length = 0}, 5) == ExactSeries::one(5));
  CHECK(pochhammer({.sign = Sign::minus, .offset = 1, .step = 2, .length = kUnbounded}, 4) ==
        series_of({1, 1, 0, 1, 1}));
  const PochSpec euler{.sign = Sign::plus, .offset = 1, .step = 1, .length = kUnbounded};
  // pentagonal numbers 1, 2, 5, 7, 12, 15
  CHECK(pochhammer(euler, 15) == series_of({1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1}));
  CHECK(reciprocal_pochhammer(euler, 30) == invert(pochhammer(euler, 30)));
  const PochSpec finite{.sign = Sign::minus, .offset = 2, .step = 3, .length = 4};
  CHECK(reciprocal_pochhammer(finite, 30) * pochhammer(finite, 30) == ExactSeries::one(30));
}

TEST_CASE("gaussian binomial examples") {
  CHECK(gaussian_binomial(4, 2, 1, 6) == series_of({1, 1, 2, 1, 1, 0, 0}));
  CHECK(gaussian_binomial(3, 5, 1, 6).is_zero());
  CHECK(gaussian_binomial(3, -1, 1, 6).is_zero());
  CHECK(gaussian_binomial(5, 0, 2, 6) == ExactSeries::one(6));
  CHECK(gaussian_binomial(-1, 0, 1, 6).is_zero());
}

TEST_CASE("gaussian binomial matches the box-partition count, symmetry and q-Pascal") {
  const int order = 40;
  for (int d = 1; d <= 2; ++d) {
    for (int m = 0; m <= 8; ++m) {
      for (int k = 0; k <= m; ++k) {
        const auto g = gaussian_binomial(m, k, d, order);
        CHECK(g == gaussian_oracle(m, k, d, order));
        CHECK(g == gaussian_binomial(m, m - k, d, order));
        if (m >= 1 && d == 1) {
          CHECK(g == gaussian_binomial(m - 1, k - 1, 1, order) +
                         shift(gaussian_binomial(m - 1, k, 1, order), k));
        }
      }
    }
  }
}

TEST_CASE("gaussian memo is safe to use from several threads") {
  const auto expected = gaussian_binomial(20, 9, 1, 120);
  std::vector<std::thread> workers;
  std::vector<int> ok(8, 0);
  for (int t = 0; t < 8; ++t) {
    workers.emplace_back([&, t] {
      bool good = true;
      for (int rep = 0; rep < 5; ++rep) {
        good = good && gaussian_binomial(20, 9, 1, 120) == expected;
      }
      ok[t] = good ? 1 : 0;
    });
  }
  for (auto &w : workers) {
    w.join();
  }
  for (int v : ok) {
    CHECK(v == 1);
  }
}

TEST_CASE("kernel_h small cases") {
  CHECK(kernel_h(0, 1, 1, 2, 6) == series_of({1, 0, 1, 0, 1, 0, 1}));
  // direct sum of [1+j, j][2+j, 1+j] q^{2j}: (1+q) + q^2(1+q)(1+q+q^2) + q^4
  CHECK(kernel_h(1, 2, 1, 2, 4) == series_of({1, 1, 1, 2, 3}));
  CHECK(kernel_h(1, 2, 1, 2, 4) == kernel_oracle(1, 2, 1, 2, 4));
  for (int k = 0; k <= 3; ++k) {
    CHECK(kernel_h(k, 0, 1, 2, 10).is_zero());
  }
}

TEST_CASE("kernel_h agrees with direct Gaussian sums") {
  for (int d = 1; d <= 2; ++d) {
    for (int k = 0; k <= 3; ++k) {
      for (int m = 1; m <= 4; ++m) {
        CHECK(kernel_h(k, m, d, 2, 24) == kernel_oracle(k, m, d, 2, 24));
      }
    }
  }
}

TEST_CASE("unbounded kernel is the limit of the bounded ones") {
  // [m-1+j, j] agrees with 1/(q;q)_j below q^m, so m = N+1 already equals the limit
  const int order = 20;
  for (int k = 0; k <= 3; ++k) {
    CHECK(kernel_h(k, kUnbounded, 1, 2, order) == kernel_h(k, order + 1, 1, 2, order));
    CHECK(kernel_h(k, kUnbounded, 2, 2, order) == kernel_h(k, order + 1, 2, 2, order));
  }
}

TEST_CASE("phi2_1") {
  CHECK(phi2_1(1, 1, 1, 1, 1, 3) == series_of({1, 1, 1, 1}));
  CHECK(phi2_1(2, 3, 4, 1, 5, 4) == ExactSeries::one(4));
  CHECK_THROWS_AS(phi2_1(0, 1, 1, 1, 1, 5), DomainError);
  CHECK_THROWS_AS(phi2_1(1, 1, 1, 1, 0, 5), DomainError);
}

TEST_CASE("kernel_h equals its 2phi1 closed form") {
  const int order = 20;
  for (int k = 0; k <= 3; ++k) {
    for (int m = 1; m <= 3; ++m) {
      const auto num = pochhammer({.sign = Sign::plus, .offset = m, .step = 1, .length = k}, order);
      const auto den = reciprocal_pochhammer({.sign = Sign::plus, .offset = 1, .step = 1, .length = k}, order);
      const auto closed = num * den * phi2_1(m, m + k, k + 1, 1, 2, order);
      CHECK(closed == kernel_h(k, m, 1, 2, order));
    }
  }
}

TEST_CASE("theta series") {
  CHECK(theta_phi_neg(4) == series_of({1, -2, 0, 0, 2}));
  CHECK(theta_phi_neg(0) == ExactSeries::one(0));
  CHECK(theta_psi(6) == series_of({1, 1, 0, 1, 0, 0, 1}));
  CHECK(theta_psi(0) == ExactSeries::one(0));
  const int order = 60;
  const auto euler = pochhammer({.sign = Sign::plus, .offset = 1, .step = 1, .length = kUnbounded}, order);
  const auto neg_euler = pochhammer({.sign = Sign::minus, .offset = 1, .step = 1, .length = kUnbounded}, order);
  CHECK(theta_phi_neg(order) == euler * invert(neg_euler));
  const auto even = pochhammer({.sign = Sign::plus, .offset = 2, .step = 2, .length = kUnbounded}, order);
  const auto odd = pochhammer({.sign = Sign::plus, .offset = 1, .step = 2, .length = kUnbounded}, order);
  CHECK(theta_psi(order) == even * invert(odd));
}

TEST_CASE("alternating triangular sums") {
  CHECK(alt_triangular_sum(0, TriangularVariant::half, 10) == series_of({1, -1, 0, 1, 0, 0, -1, 0, 0, 0, 1}));
  CHECK(alt_triangular_sum(0, TriangularVariant::whole, 6) == series_of({1, 0, -1, 0, 0, 0, 1}));
  CHECK(alt_triangular_sum(2, TriangularVariant::half, 7) == series_of({1, 0, 0, -1, 0, 0, 0, 1}));
  // whole, k=2: j(j+1) - 4 for j = 2, 3, 4 gives 2, 8, 16
  CHECK(alt_triangular_sum(2, TriangularVariant::whole, 16) ==
        series_of({0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 1}));
}

TEST_CASE("Cauchy, Euler expansions") {
  const int order = 24;
  for (int n = 1; n <= 6; ++n) {
    for (int s = 1; s <= 3; ++s) {
      ExactSeries lhs = ExactSeries::zero(order);
      for (int k = 0; s * k <= order; ++k) {
        lhs = lhs + shift(gaussian_binomial(n - 1 + k, k, 1, order), s * k);
      }
      CHECK(lhs == reciprocal_pochhammer({.sign = Sign::plus, .offset = s, .step = 1, .length = n}, order));
    }
  }
  const int n30 = 30;
  for (int e = 1; e <= 3; ++e) {
    ExactSeries sum = ExactSeries::zero(n30);
    for (int j = 0; j * (j - 1) / 2 + j * e <= n30; ++j) {
      const auto term = shift(reciprocal_pochhammer({.sign = Sign::plus, .offset = 1, .step = 1, .length = j}, n30),
                              j * (j - 1) / 2 + j * e);
      sum = j % 2 == 0 ? sum + term : sum - term;
    }
    CHECK(sum == pochhammer({.sign = Sign::plus, .offset = e, .step = 1, .length = kUnbounded}, n30));
  }
  for (int e = 1; e <= 2; ++e) {
    ExactSeries sum = ExactSeries::zero(n30);
    for (int j = 0; j * e <= n30; ++j) {
      sum = sum + shift(reciprocal_pochhammer({.sign = Sign::plus, .offset = 1, .step = 1, .length = j}, n30), j * e);
    }
    CHECK(sum == reciprocal_pochhammer({.sign = Sign::plus, .offset = e, .step = 1, .length = kUnbounded}, n30));
  }
}
