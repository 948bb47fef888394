#include <macmahon/series.hpp>

#include <algorithm>
#include <sstream>
#include <utility>

#include <macmahon/errors.hpp>

namespace macmahon {

namespace {

int common_order(const ExactSeries &a, const ExactSeries &b) {
  return std::min(a.order(), b.order());
}

void check_order(int order) {
  if (order < 0) {
    throw DomainError("series order must be non-negative, got " + std::to_string(order));
  }
}

} // namespace

ExactSeries::ExactSeries(int order) {
  check_order(order);
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Integer(0));
}

ExactSeries::ExactSeries(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw DomainError("a series needs at least its constant coefficient");
  }
}

ExactSeries ExactSeries::from_coeffs(std::initializer_list<long> coeffs, int order) {
  check_order(order);
  std::vector<Integer> c(static_cast<std::size_t>(order) + 1, Integer(0));
  std::size_t i = 0;
  for (long v : coeffs) {
    if (i == c.size()) {
      break;
    }
    c[i++] = v;
  }
  return ExactSeries(std::move(c));
}

ExactSeries ExactSeries::monomial(const Integer &c, int exponent, int order) {
  if (exponent < 0) {
    throw DomainError("monomial exponent must be non-negative");
  }
  ExactSeries s(order);
  if (exponent <= order) {
    s.coeffs_[static_cast<std::size_t>(exponent)] = c;
  }
  return s;
}

const Integer &ExactSeries::coeff(int n) const {
  if (n < 0 || n > order()) {
    throw ExponentOutOfOrder("exponent " + std::to_string(n) + " outside series of order " +
                             std::to_string(order()));
  }
  return coeffs_[static_cast<std::size_t>(n)];
}

bool ExactSeries::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer &c) { return sgn(c) == 0; });
}

std::optional<int> ExactSeries::valuation() const noexcept {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) {
      return static_cast<int>(i);
    }
  }
  return std::nullopt;
}

ExactSeries ExactSeries::truncated(int order) const {
  check_order(order);
  if (order > this->order()) {
    throw DomainError("cannot extend a series from order " + std::to_string(this->order()) +
                      " to " + std::to_string(order));
  }
  return ExactSeries(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

std::string ExactSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    const Integer &c = coeffs_[n];
    if (sgn(c) == 0) {
      continue;
    }
    Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0) {
        os << "-";
      }
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (n == 0 || mag != 1) {
      os << mag.get_str();
    }
    if (n >= 1) {
      os << "q";
      if (n >= 2) {
        os << "^" << n;
      }
    }
    first = false;
  }
  if (first) {
    os << "0";
  }
  os << " + O(q^" << coeffs_.size() << ")";
  return os.str();
}

bool operator==(const ExactSeries &a, const ExactSeries &b) {
  const int n = common_order(a, b);
  return std::equal(a.coeffs_.begin(), a.coeffs_.begin() + n + 1, b.coeffs_.begin());
}

std::ostream &operator<<(std::ostream &os, const ExactSeries &s) { return os << s.to_string(); }

ExactSeries add(const ExactSeries &a, const ExactSeries &b) {
  const int n = common_order(a, b);
  std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    c[i] = a.coeffs()[i] + b.coeffs()[i];
  }
  return ExactSeries(std::move(c));
}

ExactSeries sub(const ExactSeries &a, const ExactSeries &b) {
  const int n = common_order(a, b);
  std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    c[i] = a.coeffs()[i] - b.coeffs()[i];
  }
  return ExactSeries(std::move(c));
}

ExactSeries negate(const ExactSeries &a) {
  std::vector<Integer> c(a.coeffs().begin(), a.coeffs().end());
  for (auto &x : c) {
    x = -x;
  }
  return ExactSeries(std::move(c));
}

ExactSeries scale(const ExactSeries &a, const Integer &k) {
  std::vector<Integer> c(a.coeffs().begin(), a.coeffs().end());
  for (auto &x : c) {
    x *= k;
  }
  return ExactSeries(std::move(c));
}

ExactSeries mul(const ExactSeries &a, const ExactSeries &b) {
  const int n = common_order(a, b);
  std::vector<Integer> c(static_cast<std::size_t>(n) + 1, Integer(0));
  auto ac = a.coeffs();
  auto bc = b.coeffs();
  for (int i = 0; i <= n; ++i) {
    if (sgn(ac[i]) == 0) {
      continue;
    }
    mpz_srcptr ai = ac[i].get_mpz_t();
    for (int j = 0; i + j <= n; ++j) {
      if (sgn(bc[j]) == 0) {
        continue;
      }
      mpz_addmul(c[i + j].get_mpz_t(), ai, bc[j].get_mpz_t());
    }
  }
  return ExactSeries(std::move(c));
}

ExactSeries invert(const ExactSeries &a) {
  auto ac = a.coeffs();
  const Integer &a0 = ac[0];
  if (a0 != 1 && a0 != -1) {
    throw NonUnitConstantTerm("cannot invert a series with constant term " + a0.get_str());
  }
  const int n = a.order();
  std::vector<Integer> b(static_cast<std::size_t>(n) + 1, Integer(0));
  b[0] = a0;
  Integer acc;
  for (int k = 1; k <= n; ++k) {
    acc = 0;
    for (int i = 1; i <= k; ++i) {
      if (sgn(ac[i]) != 0) {
        mpz_addmul(acc.get_mpz_t(), ac[i].get_mpz_t(), b[k - i].get_mpz_t());
      }
    }
    // a0 is its own inverse
    b[k] = (a0 == 1) ? Integer(-acc) : acc;
  }
  return ExactSeries(std::move(b));
}

ExactSeries substitute_power(const ExactSeries &a, int d) {
  if (d < 1) {
    throw DomainError("substitute_power needs d >= 1, got " + std::to_string(d));
  }
  const int n = a.order();
  std::vector<Integer> c(static_cast<std::size_t>(n) + 1, Integer(0));
  for (int i = 0; i * d <= n; ++i) {
    c[i * d] = a.coeffs()[i];
  }
  return ExactSeries(std::move(c));
}

ExactSeries shift(const ExactSeries &a, int e) {
  if (e < 0) {
    throw DomainError("shift exponent must be non-negative");
  }
  const int n = a.order();
  std::vector<Integer> c(static_cast<std::size_t>(n) + 1, Integer(0));
  for (int i = 0; i + e <= n; ++i) {
    c[i + e] = a.coeffs()[i];
  }
  return ExactSeries(std::move(c));
}

ExactSeries pow(const ExactSeries &a, int e) {
  if (e < 0) {
    throw DomainError("negative power; use invert");
  }
  ExactSeries result = ExactSeries::one(a.order());
  ExactSeries base = a;
  while (e > 0) {
    if (e & 1) {
      result = mul(result, base);
    }
    e >>= 1;
    if (e > 0) {
      base = mul(base, base);
    }
  }
  return result;
}

} // namespace macmahon
