#ifndef MACMAHON_FAMILIES_HPP
#define MACMAHON_FAMILIES_HPP

#include <string>
#include <vector>

#include <macmahon/integer.hpp>
#include <macmahon/series.hpp>
#include <macmahon/types.hpp>

namespace macmahon {

struct FamilySpec {
  Family family = Family::V;
  Sign sign = Sign::plus;
  int k = 0;
  Bound m = kUnbounded;
};

/// q^e / (1 - sign q^e)^2 with e = n (A, V) or e = 2n - 1 (C, W).
ExactSeries atom(Family family, Sign sign, int n, int order);

/// The largest magnitude whose atom is visible at the given order, capped by m.
int effective_bound(Family family, Bound m, int order);

/// Generating function of the chain-weighted counts a/c/v/w.
///
/// Throws InvalidSpec when an A or C family is given a finite bound.
ExactSeries family_series(const FamilySpec &spec, int order);

/// family_series for every k in 0..max_k at once, sharing the DP levels.
std::vector<ExactSeries> family_table(Family family, Sign sign, int max_k, Bound m, int order);

/// Inverse coefficients of the binomial transform
///   R_k = sum_{j>=k} (-1)^{j-k} C(2j, j-k) V_j.
/// B(0,0) = 1, B(k,0) = 2 for k >= 1, B(k,j) = 2k/(k+j) C(k+j, 2j) for
/// 1 <= j <= k, and 0 when k < j.
Integer b_coefficient(int k, int j);

/// sum_{j>=k} w_j F_{j,m} with w_j = (-1)^{j-k} C(2j, j-k) for the plus
/// family and w_j = C(2j, j-k) for the minus family. V and W only.
ExactSeries binomial_combination(Family family, Sign sign, int k, Bound m, int order);

/// (+-q; q^d)_m^2 with d = 1 for V and d = 2 for W (unbounded m gives the
/// infinite product).
ExactSeries family_prefactor(Family family, Sign sign, Bound m, int order);

/// Rebuilds F_{j,m} from the q-binomial kernels:
///   prefactor * sum_{k>=j} (sign)^{k-j} B(k,j) q^k H_{k,m}(q^d, q^2).
ExactSeries reconstruct_family(Family family, Sign sign, int j, Bound m, int order);

} // namespace macmahon

#endif // MACMAHON_FAMILIES_HPP
