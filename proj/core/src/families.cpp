#include <macmahon/families.hpp>

#include <algorithm>
#include <utility>

#include <macmahon/errors.hpp>
#include <macmahon/qtoolkit.hpp>

namespace macmahon {

namespace {

void require_v_or_w(Family family) {
  if (is_strict(family)) {
    throw InvalidSpec("only the V and W families have truncated combinations");
  }
}

int base_power(Family family) { return is_odd_parts(family) ? 2 : 1; }

} // namespace

ExactSeries atom(Family family, Sign sign, int n, int order) {
  if (n < 1) {
    throw DomainError("atom magnitude must be >= 1");
  }
  const long long e = is_odd_parts(family) ? 2LL * n - 1 : n;
  std::vector<Integer> c(static_cast<std::size_t>(order) + 1, Integer(0));
  // q^e/(1 - s q^e)^2 = sum_{t>=1} t s^{t+1} q^{e t}
  for (long long t = 1; e * t <= order; ++t) {
    const bool negative = sign == Sign::minus && t % 2 == 0;
    c[e * t] = static_cast<long>(negative ? -t : t);
  }
  return ExactSeries(std::move(c));
}

int effective_bound(Family family, Bound m, int order) {
  const int visible = is_odd_parts(family) ? (order + 2) / 2 : order;
  return m ? std::min(*m, visible) : visible;
}

std::vector<ExactSeries> family_table(Family family, Sign sign, int max_k, Bound m, int order) {
  if (max_k < 0) {
    throw DomainError("family index k must be non-negative");
  }
  if (m && *m < 0) {
    throw DomainError("magnitude bound must be non-negative");
  }
  if (is_strict(family) && m) {
    throw InvalidSpec("the " + to_string(family) + " family takes no finite bound m");
  }

  const int bound = effective_bound(family, m, order);
  std::vector<ExactSeries> atoms;
  atoms.reserve(static_cast<std::size_t>(bound));
  for (int r = 1; r <= bound; ++r) {
    atoms.push_back(atom(family, sign, r, order));
  }

  std::vector<ExactSeries> result;
  result.reserve(static_cast<std::size_t>(max_k) + 1);
  result.push_back(ExactSeries::one(order));

  // level[n] = S_i(n): the chain sum over magnitudes in 1..n.
  std::vector<ExactSeries> level(static_cast<std::size_t>(bound) + 1, ExactSeries::one(order));
  const bool strict = is_strict(family);
  for (int i = 1; i <= max_k; ++i) {
    // each chain of i atoms has valuation >= i
    if (i > order) {
      result.push_back(ExactSeries::zero(order));
      continue;
    }
    std::vector<ExactSeries> next(level.size(), ExactSeries::zero(order));
    for (int n = 1; n <= bound; ++n) {
      const ExactSeries &below = strict ? level[n - 1] : level[n];
      next[n] = add(next[n - 1], mul(atoms[n - 1], below));
    }
    level = std::move(next);
    result.push_back(level[bound]);
  }
  return result;
}

ExactSeries family_series(const FamilySpec &spec, int order) {
  return family_table(spec.family, spec.sign, spec.k, spec.m, order).back();
}

Integer b_coefficient(int k, int j) {
  if (k < 0 || j < 0) {
    throw DomainError("B coefficients need k, j >= 0");
  }
  if (j == 0) {
    return k == 0 ? Integer(1) : Integer(2);
  }
  if (k < j) {
    return 0;
  }
  Integer num = binomial(k + j, 2 * j);
  num *= 2 * k;
  Integer q;
  mpz_divexact_ui(q.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(k + j));
  return q;
}

ExactSeries binomial_combination(Family family, Sign sign, int k, Bound m, int order) {
  require_v_or_w(family);
  if (k < 0) {
    throw DomainError("binomial_combination needs k >= 0");
  }
  ExactSeries total = ExactSeries::zero(order);
  if (k > order) {
    return total;
  }
  // F_{j,m} has valuation >= j, so j <= order suffices.
  const auto table = family_table(family, sign, order, m, order);
  for (int j = k; j <= order; ++j) {
    Integer w = binomial(2 * j, j - k);
    if (sign == Sign::plus && (j - k) % 2 != 0) {
      w = -w;
    }
    total = add(total, scale(table[j], w));
  }
  return total;
}

ExactSeries family_prefactor(Family family, Sign sign, Bound m, int order) {
  require_v_or_w(family);
  const PochSpec spec{.sign = sign, .offset = 1, .step = base_power(family), .length = m};
  const ExactSeries p = pochhammer(spec, order);
  return mul(p, p);
}

ExactSeries reconstruct_family(Family family, Sign sign, int j, Bound m, int order) {
  require_v_or_w(family);
  if (j < 0) {
    throw DomainError("reconstruct_family needs j >= 0");
  }
  const int d = base_power(family);
  ExactSeries sum = ExactSeries::zero(order);
  // term k has valuation >= k
  for (int k = j; k <= order; ++k) {
    Integer b = b_coefficient(k, j);
    if (sign == Sign::minus && (k - j) % 2 != 0) {
      b = -b;
    }
    sum = add(sum, scale(shift(kernel_h(k, m, d, 2, order), k), b));
  }
  return mul(family_prefactor(family, sign, m, order), sum);
}

} // namespace macmahon
