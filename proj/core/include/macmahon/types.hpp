#ifndef MACMAHON_TYPES_HPP
#define MACMAHON_TYPES_HPP

#include <optional>
#include <string>

namespace macmahon {

/// The +/- variant of a family, or the sign in (+-q; q^d).
enum class Sign : int { plus = 1, minus = -1 };

constexpr int value(Sign s) noexcept { return static_cast<int>(s); }
constexpr Sign flip(Sign s) noexcept { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline std::string to_string(Sign s) { return s == Sign::plus ? "plus" : "minus"; }

/// A non-negative bound that may be infinite (std::nullopt).
using Bound = std::optional<int>;
inline constexpr Bound kUnbounded = std::nullopt;

/// A, C: strictly increasing magnitudes. V, W: weakly increasing.
/// A, V: parts n. C, W: odd parts 2n-1.
enum class Family { A, C, V, W };

constexpr bool is_strict(Family f) noexcept { return f == Family::A || f == Family::C; }
constexpr bool is_odd_parts(Family f) noexcept { return f == Family::C || f == Family::W; }
inline std::string to_string(Family f) {
  constexpr const char *names[] = {"A", "C", "V", "W"};
  return names[static_cast<int>(f)];
}

inline std::string to_string(const Bound &b) { return b ? std::to_string(*b) : "inf"; }

} // namespace macmahon

#endif // MACMAHON_TYPES_HPP
