#ifndef MACMAHON_INTEGER_HPP
#define MACMAHON_INTEGER_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace macmahon {

/// Arbitrary-precision signed integer used for every coefficient.
using Integer = mpz_class;

inline std::string to_string(const Integer &x) { return x.get_str(10); }

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
inline Integer binomial(std::int64_t n, std::int64_t k) {
  Integer r = 0;
  if (n < 0 || k < 0 || k > n) {
    return r;
  }
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

/// (-1)^e as +1 or -1.
constexpr int parity_sign(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

} // namespace macmahon

#endif // MACMAHON_INTEGER_HPP
