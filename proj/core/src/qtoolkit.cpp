#include <macmahon/qtoolkit.hpp>

#include <string>
#include <unordered_map>
#include <utility>

#include <macmahon/errors.hpp>

#include "factor_ops.hpp"

namespace macmahon {

namespace {

void validate(const PochSpec &spec) {
  if (spec.offset < 1 || spec.step < 1) {
    throw DomainError("Pochhammer offset and step must be >= 1");
  }
  if (spec.length && *spec.length < 0) {
    throw DomainError("Pochhammer length must be non-negative");
  }
}

// Calls f(exponent) for every factor of spec that is visible at the given order.
template <typename F> void for_each_factor(const PochSpec &spec, int order, F &&f) {
  for (long long r = 0; !spec.length || r < *spec.length; ++r) {
    const long long e = spec.offset + r * spec.step;
    if (e > order) {
      break;
    }
    f(static_cast<int>(e));
  }
}

// Per-thread memo of Gaussian binomials in base q. rows[m][k] = [m, k]_q at a
// fixed order; rows grow on demand through the q-Pascal recurrence
//   [m, k] = [m-1, k-1] + q^k [m-1, k].
class GaussianTable {
public:
  explicit GaussianTable(int order) : order_(order) {}

  ExactSeries get(int m, int k) {
    while (static_cast<int>(rows_.size()) <= m) {
      extend();
    }
    return rows_[m][k];
  }

private:
  void extend() {
    const int r = static_cast<int>(rows_.size());
    std::vector<ExactSeries> row;
    row.reserve(static_cast<std::size_t>(r) + 1);
    for (int k = 0; k <= r; ++k) {
      if (k == 0 || k == r) {
        row.push_back(ExactSeries::one(order_));
      } else {
        const auto &prev = rows_[r - 1];
        row.push_back(add(prev[k - 1], shift(prev[k], k)));
      }
    }
    rows_.push_back(std::move(row));
  }

  int order_;
  std::vector<std::vector<ExactSeries>> rows_;
};

ExactSeries gaussian_base_q(int m, int k, int order) {
  thread_local std::unordered_map<int, GaussianTable> tables;
  auto it = tables.try_emplace(order, order).first;
  return it->second.get(m, k);
}

} // namespace

ExactSeries pochhammer(const PochSpec &spec, int order) {
  validate(spec);
  auto c = detail::unit_vector(order);
  for_each_factor(spec, order, [&](int e) { detail::mul_one_minus(c, value(spec.sign), e); });
  return ExactSeries(std::move(c));
}

ExactSeries reciprocal_pochhammer(const PochSpec &spec, int order) {
  validate(spec);
  auto c = detail::unit_vector(order);
  for_each_factor(spec, order, [&](int e) { detail::div_one_minus(c, value(spec.sign), e); });
  return ExactSeries(std::move(c));
}

ExactSeries gaussian_binomial(int m, int k, int d, int order) {
  if (d < 1) {
    throw DomainError("Gaussian binomial base power must be >= 1");
  }
  if (m < 0 || k < 0 || k > m) {
    return ExactSeries::zero(order);
  }
  ExactSeries base = gaussian_base_q(m, k, order);
  return d == 1 ? base : substitute_power(base, d);
}

ExactSeries kernel_h(int k, Bound m, int d, int s, int order) {
  if (k < 0 || (m && *m < 0) || d < 1 || s < 1) {
    throw DomainError("kernel_h needs k >= 0, m >= 0, d >= 1, s >= 1");
  }
  ExactSeries total = ExactSeries::zero(order);
  if (m && *m == 0) {
    return total;
  }
  for (int j = 0; static_cast<long long>(s) * j <= order; ++j) {
    ExactSeries term = ExactSeries::zero(order);
    if (m) {
      term = mul(gaussian_binomial(*m - 1 + j, j, d, order),
                 gaussian_binomial(*m - 1 + k + j, k + j, d, order));
    } else {
      auto c = detail::unit_vector(order);
      for (int i = 1; i <= j; ++i) {
        if (static_cast<long long>(d) * i > order) break;
        detail::div_one_minus(c, 1, d * i);
      }
      for (int i = 1; i <= j + k; ++i) {
        if (static_cast<long long>(d) * i > order) break;
        detail::div_one_minus(c, 1, d * i);
      }
      term = ExactSeries(std::move(c));
    }
    total = add(total, shift(term, s * j));
  }
  return total;
}

ExactSeries phi2_1(int a_exp, int b_exp, int c_exp, int d, int s, int order) {
  if (a_exp < 1 || b_exp < 1 || c_exp < 1 || d < 1 || s < 1) {
    throw DomainError("phi2_1 needs all exponents >= 1");
  }
  auto term = detail::unit_vector(order);
  std::vector<Integer> total = term;
  for (int n = 1; static_cast<long long>(s) * n <= order; ++n) {
    // term_n = term_{n-1} * (1-p^{a+n-1})(1-p^{b+n-1}) / ((1-p^n)(1-p^{c+n-1})) * q^s
    const long long num1 = static_cast<long long>(d) * (a_exp + n - 1);
    const long long num2 = static_cast<long long>(d) * (b_exp + n - 1);
    const long long den1 = static_cast<long long>(d) * n;
    const long long den2 = static_cast<long long>(d) * (c_exp + n - 1);
    if (den1 < 1 || den2 < 1) {
      throw DivisionNotExact("phi2_1 denominator factor has no unit constant term");
    }
    if (num1 <= order) detail::mul_one_minus(term, 1, static_cast<int>(num1));
    if (num2 <= order) detail::mul_one_minus(term, 1, static_cast<int>(num2));
    if (den1 <= order) detail::div_one_minus(term, 1, static_cast<int>(den1));
    if (den2 <= order) detail::div_one_minus(term, 1, static_cast<int>(den2));
    for (int i = order; i >= 0; --i) {
      term[i] = (i >= s) ? term[i - s] : Integer(0);
    }
    for (int i = 0; i <= order; ++i) {
      total[i] += term[i];
    }
  }
  return ExactSeries(std::move(total));
}

ExactSeries theta_phi_neg(int order) {
  std::vector<Integer> c(static_cast<std::size_t>(order) + 1, Integer(0));
  c[0] = 1;
  for (long long k = 1; k * k <= order; ++k) {
    c[k * k] = 2 * parity_sign(k);
  }
  return ExactSeries(std::move(c));
}

ExactSeries theta_psi(int order) {
  std::vector<Integer> c(static_cast<std::size_t>(order) + 1, Integer(0));
  for (long long k = 0; k * (k + 1) / 2 <= order; ++k) {
    c[k * (k + 1) / 2] = 1;
  }
  return ExactSeries(std::move(c));
}

ExactSeries alt_triangular_sum(int k, TriangularVariant variant, int order) {
  if (k < 0) {
    throw DomainError("alt_triangular_sum needs k >= 0");
  }
  std::vector<Integer> c(static_cast<std::size_t>(order) + 1, Integer(0));
  const long long kk = k;
  for (long long j = kk;; ++j) {
    const long long e = (variant == TriangularVariant::half)
                            ? j * (j + 1) / 2 - kk * (kk + 1) / 2
                            : j * (j + 1) - kk * kk;
    if (e > order) {
      break;
    }
    c[e] += parity_sign(j - kk);
  }
  return ExactSeries(std::move(c));
}

} // namespace macmahon
