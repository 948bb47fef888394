#ifndef MACMAHON_SRC_FACTOR_OPS_HPP
#define MACMAHON_SRC_FACTOR_OPS_HPP

#include <vector>

#include <macmahon/integer.hpp>

namespace macmahon::detail {

// c <- c * (1 - sign q^t), in place, truncated at c.size()-1. Requires t >= 1.
inline void mul_one_minus(std::vector<Integer> &c, int sign, int t) {
  const int n = static_cast<int>(c.size()) - 1;
  for (int i = n; i >= t; --i) {
    if (sign > 0) {
      c[i] -= c[i - t];
    } else {
      c[i] += c[i - t];
    }
  }
}

// c <- c / (1 - sign q^t), in place. Requires t >= 1.
inline void div_one_minus(std::vector<Integer> &c, int sign, int t) {
  const int n = static_cast<int>(c.size()) - 1;
  for (int i = t; i <= n; ++i) {
    if (sign > 0) {
      c[i] += c[i - t];
    } else {
      c[i] -= c[i - t];
    }
  }
}

inline std::vector<Integer> unit_vector(int order) {
  std::vector<Integer> c(static_cast<std::size_t>(order) + 1, Integer(0));
  c[0] = 1;
  return c;
}

} // namespace macmahon::detail

#endif // MACMAHON_SRC_FACTOR_OPS_HPP
