#ifndef MACMAHON_IDENTITIES_HPP
#define MACMAHON_IDENTITIES_HPP

#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <macmahon/integer.hpp>
#include <macmahon/series.hpp>
#include <macmahon/types.hpp>

namespace macmahon {

/// Every identity the suite knows how to check.
///
///  T1_V, T1_W     binomial combination of F_{j,m} vs prefactor * q^k * H_{k,m}
///  T2_V, T2_W     F_{j,m} vs its reconstruction from B coefficients and H
///  T4_V, T4_W     unbounded-m combination vs product times false theta sum
///  L1, L2         limiting kernels vs the alternating triangular sums
///  TT4_V, TT4_W   unbounded F_j vs product times B-weighted false theta sums
///  THETA_PHI_SQ   phi(-q)^2 vs B(k,0)-weighted half sums
///  THETA_PSI_SQ   psi(q)^2 vs B(k,0)-weighted whole sums
///  SIGMA_ID       divisor sums vs the k^2-weighted limiting kernels
///  CAUCHY         sum_k [n-1+k, k] q^{sk} vs 1/(q^s;q)_n
///  EULER1         (q^e;q)_inf vs sum_j (-1)^j q^{j(j-1)/2+je}/(q;q)_j
///  EULER2         sum_j q^{je}/(q;q)_j vs 1/(q^e;q)_inf
///  GF_PP, GF_POD  product quotients vs brute-force pair counts
///  PARITY_W       w^-_k(n) vs (-1)^{n+k} w^+_k(n)
///  POS_V, POS_W   non-negativity of product times false theta, and its
///                 expansion through pp / pod_{-2}
///  ORACLE_V/W     family series vs chain enumeration
enum class IdentityId {
  T1_V,
  T1_W,
  T2_V,
  T2_W,
  T4_V,
  T4_W,
  L1,
  L2,
  TT4_V,
  TT4_W,
  THETA_PHI_SQ,
  THETA_PSI_SQ,
  SIGMA_ID,
  CAUCHY,
  EULER1,
  EULER2,
  GF_PP,
  GF_POD,
  PARITY_W,
  POS_V,
  POS_W,
  ORACLE_V,
  ORACLE_W,
};

std::span<const IdentityId> all_identities();
std::string_view identity_name(IdentityId id);

/// Throws UnknownIdentity for names outside the registry.
IdentityId parse_identity(std::string_view name);

enum class Param { sign, k, j, m, n, s, e };
std::string_view param_name(Param p);

/// The parameters an identity needs, in canonical order.
std::span<const Param> required_params(IdentityId id);

struct IdentityParams {
  std::optional<Sign> sign;
  std::optional<int> k;
  std::optional<int> j;
  std::optional<Bound> m;
  std::optional<int> n;
  std::optional<int> s;
  std::optional<int> e;

  bool has(Param p) const;
  std::string to_string() const;
};

struct IdentityCase {
  IdentityId id = IdentityId::T1_V;
  IdentityParams params;
  int order = 20;
};

struct Discrepancy {
  int exponent = 0;
  Integer lhs;
  Integer rhs;
};

struct VerifyReport {
  IdentityCase identity_case;
  bool holds = false;
  std::optional<Discrepancy> first_discrepancy;
  /// Extra findings, e.g. which reading of an ambiguous formula matched.
  std::string note;
  std::chrono::nanoseconds elapsed{0};
};

/// Both sides of an identity, computed along separate code paths.
struct IdentitySides {
  IdentitySides(ExactSeries l, ExactSeries r, bool nonnegative = false, std::string n = {})
      : lhs(std::move(l)), rhs(std::move(r)), lhs_nonnegative(nonnegative), note(std::move(n)) {}

  ExactSeries lhs;
  ExactSeries rhs;
  /// Set for the positivity identities: every lhs coefficient must be >= 0.
  bool lhs_nonnegative = false;
  std::string note;
};

/// Throws MissingParam / UnexpectedParam unless the case binds exactly the
/// identity's parameters, DomainError for out-of-range values.
void validate(const IdentityCase &c);

IdentitySides evaluate_sides(const IdentityCase &c);

/// Coefficientwise comparison up to the case order; the first exponent where
/// the sides differ (or the lhs goes negative when required) is reported.
VerifyReport compare_sides(const IdentityCase &c, const IdentitySides &sides);

VerifyReport verify(const IdentityCase &c);

using ParamGrid = std::vector<std::pair<IdentityId, std::vector<IdentityParams>>>;

/// The grid `suite` runs by default: every registry entry with a small set
/// of parameter bindings.
ParamGrid default_grid();

/// Runs every case in the grid at the given order, never stopping at the
/// first failure. Reports come back in grid order regardless of `threads`
/// (0 picks the hardware concurrency).
std::vector<VerifyReport> verify_suite(const ParamGrid &grid, int order, unsigned threads = 1);

} // namespace macmahon

#endif // MACMAHON_IDENTITIES_HPP
