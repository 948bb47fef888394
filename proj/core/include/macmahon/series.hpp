#ifndef MACMAHON_SERIES_HPP
#define MACMAHON_SERIES_HPP

#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <macmahon/integer.hpp>

namespace macmahon {

/// Dense truncated power series in q with exact integer coefficients.
///
/// A series of order N is known modulo q^{N+1} and always stores exactly
/// N+1 coefficients, index n holding the coefficient of q^n. Values are
/// immutable once constructed; every operation returns a new series.
/// Binary operations on operands of different orders work at the smaller
/// order.
class ExactSeries {
public:
  /// The zero series of the given order.
  explicit ExactSeries(int order);

  /// Takes ownership of the coefficient vector; the order is size()-1.
  explicit ExactSeries(std::vector<Integer> coeffs);

  /// Small literal series for tests and examples: coefficients are padded
  /// with zeros (or truncated) to the requested order.
  static ExactSeries from_coeffs(std::initializer_list<long> coeffs, int order);

  static ExactSeries zero(int order) { return ExactSeries(order); }
  static ExactSeries one(int order) { return monomial(1, 0, order); }
  static ExactSeries monomial(const Integer &c, int exponent, int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of q^n; throws ExponentOutOfOrder when n > order().
  const Integer &coeff(int n) const;

  std::span<const Integer> coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;

  /// Smallest exponent with a non-zero coefficient, if any.
  std::optional<int> valuation() const noexcept;

  /// The same series known to a smaller (or equal) order.
  ExactSeries truncated(int order) const;

  std::string to_string() const;

  friend bool operator==(const ExactSeries &a, const ExactSeries &b);

private:
  std::vector<Integer> coeffs_;
};

std::ostream &operator<<(std::ostream &os, const ExactSeries &s);

ExactSeries add(const ExactSeries &a, const ExactSeries &b);
ExactSeries sub(const ExactSeries &a, const ExactSeries &b);
ExactSeries negate(const ExactSeries &a);
ExactSeries scale(const ExactSeries &a, const Integer &c);

/// Truncated Cauchy product (schoolbook).
ExactSeries mul(const ExactSeries &a, const ExactSeries &b);

/// Multiplicative inverse; requires a constant term of +1 or -1.
ExactSeries invert(const ExactSeries &a);

/// a(q^d), truncated at the order of a.
ExactSeries substitute_power(const ExactSeries &a, int d);

/// q^e * a, truncated at the order of a.
ExactSeries shift(const ExactSeries &a, int e);

/// a^e for e >= 0.
ExactSeries pow(const ExactSeries &a, int e);

inline ExactSeries operator+(const ExactSeries &a, const ExactSeries &b) { return add(a, b); }
inline ExactSeries operator-(const ExactSeries &a, const ExactSeries &b) { return sub(a, b); }
inline ExactSeries operator-(const ExactSeries &a) { return negate(a); }
inline ExactSeries operator*(const ExactSeries &a, const ExactSeries &b) { return mul(a, b); }
inline ExactSeries operator*(const Integer &c, const ExactSeries &a) { return scale(a, c); }

} // namespace macmahon

#endif // MACMAHON_SERIES_HPP
