#ifndef MACMAHON_QTOOLKIT_HPP
#define MACMAHON_QTOOLKIT_HPP

#include <macmahon/series.hpp>
#include <macmahon/types.hpp>

namespace macmahon {

/// Describes the product prod_r (1 - sign * q^{offset + r*step}).
///
/// With sign = plus this is (q^offset; q^step)_length, with sign = minus
/// it is (-q^offset; q^step)_length. An unbounded length realizes the
/// infinite product: at order N only factors with exponent <= N differ
/// from 1, so the finite product over those factors is exact.
struct PochSpec {
  Sign sign = Sign::plus;
  int offset = 1;
  int step = 1;
  Bound length = kUnbounded;
};

ExactSeries pochhammer(const PochSpec &spec, int order);

/// 1 / pochhammer(spec); computed factor by factor as geometric series,
/// O(order) per factor instead of a full inversion.
ExactSeries reciprocal_pochhammer(const PochSpec &spec, int order);

/// Gaussian binomial [m choose k] in base q^d. Zero unless 0 <= k <= m.
ExactSeries gaussian_binomial(int m, int k, int d, int order);

/// sum_j [m-1+j, j] [m-1+k+j, k+j] (base q^d) * q^{s j}.
///
/// An unbounded m gives the limiting kernel
/// sum_j q^{s j} / ((q^d;q^d)_j (q^d;q^d)_{j+k}).
/// With the "zero otherwise" convention for Gaussian binomials the m = 0
/// kernel vanishes identically.
ExactSeries kernel_h(int k, Bound m, int d, int s, int order);

/// Basic hypergeometric 2phi1 in base p = q^d with monomial arguments
/// a = p^a_exp, b = p^b_exp, c = p^c_exp and z = q^s.
ExactSeries phi2_1(int a_exp, int b_exp, int c_exp, int d, int s, int order);

/// phi(-q) = 1 + 2 sum_{k>=1} (-1)^k q^{k^2}.
ExactSeries theta_phi_neg(int order);

/// psi(q) = sum_{k>=0} q^{k(k+1)/2}.
ExactSeries theta_psi(int order);

enum class TriangularVariant {
  half,  ///< exponents j(j+1)/2 - k(k+1)/2
  whole, ///< exponents j(j+1) - k^2
};

/// sum_{j>=k} (-1)^{j-k} q^{e(j)} with e chosen by the variant.
ExactSeries alt_triangular_sum(int k, TriangularVariant variant, int order);

} // namespace macmahon

#endif // MACMAHON_QTOOLKIT_HPP
