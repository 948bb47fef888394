#include <macmahon/identities.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <sstream>
#include <thread>

#include <macmahon/errors.hpp>
#include <macmahon/families.hpp>
#include <macmahon/oracles.hpp>
#include <macmahon/qtoolkit.hpp>

namespace macmahon {

namespace {

constexpr std::array kAllIds = {
    IdentityId::T1_V,     IdentityId::T1_W,         IdentityId::T2_V,
    IdentityId::T2_W,     IdentityId::T4_V,         IdentityId::T4_W,
    IdentityId::L1,       IdentityId::L2,           IdentityId::TT4_V,
    IdentityId::TT4_W,    IdentityId::THETA_PHI_SQ, IdentityId::THETA_PSI_SQ,
    IdentityId::SIGMA_ID, IdentityId::CAUCHY,       IdentityId::EULER1,
    IdentityId::EULER2,   IdentityId::GF_PP,        IdentityId::GF_POD,
    IdentityId::PARITY_W, IdentityId::POS_V,        IdentityId::POS_W,
    IdentityId::ORACLE_V, IdentityId::ORACLE_W,
};

constexpr std::array<std::string_view, kAllIds.size()> kNames = {
    "T1_V",   "T1_W",   "T2_V",         "T2_W",         "T4_V",     "T4_W",
    "L1",     "L2",     "TT4_V",        "TT4_W",        "THETA_PHI_SQ", "THETA_PSI_SQ",
    "SIGMA_ID", "CAUCHY", "EULER1",     "EULER2",       "GF_PP",    "GF_POD",
    "PARITY_W", "POS_V", "POS_W",       "ORACLE_V",     "ORACLE_W",
};

constexpr std::array kSignKM = {Param::sign, Param::k, Param::m};
constexpr std::array kSignJM = {Param::sign, Param::j, Param::m};
constexpr std::array kSignK = {Param::sign, Param::k};
constexpr std::array kSignJ = {Param::sign, Param::j};
constexpr std::array kK = {Param::k};
constexpr std::array kNS = {Param::n, Param::s};
constexpr std::array kE = {Param::e};

Family family_of(IdentityId id) {
  switch (id) {
  case IdentityId::T1_W:
  case IdentityId::T2_W:
  case IdentityId::T4_W:
  case IdentityId::TT4_W:
  case IdentityId::ORACLE_W:
    return Family::W;
  default:
    return Family::V;
  }
}

// ---- shared q-toolkit compositions ---------------------------------------

ExactSeries squared(const ExactSeries &a) { return mul(a, a); }

// (sign q; q^d)_m
ExactSeries poch(Sign sign, int offset, int step, Bound length, int order) {
  return pochhammer({.sign = sign, .offset = offset, .step = step, .length = length}, order);
}

// (+-q;q)_inf^2 / (q;q)_inf^2  (d = 1)  or  (+-q;q^2)_inf^2 / (q^2;q^2)_inf^2  (d = 2)
ExactSeries product_quotient(Sign sign, int d, int order) {
  const ExactSeries num = poch(sign, 1, d, kUnbounded, order);
  const ExactSeries den_inv = reciprocal_pochhammer({.sign = Sign::plus, .offset = d, .step = d}, order);
  return squared(mul(num, den_inv));
}

// -1 + (1 + q^k) * sum_{j>=k} (-1)^{j-k} q^{T_j - T_k}
ExactSeries half_bracket(int k, int order) {
  const ExactSeries one_plus = add(ExactSeries::one(order), ExactSeries::monomial(1, k, order));
  return sub(mul(one_plus, alt_triangular_sum(k, TriangularVariant::half, order)),
             ExactSeries::one(order));
}

Integer signed_int(Sign sign, int exponent, Integer x) {
  if (sign == Sign::minus && exponent % 2 != 0) {
    x = -x;
  }
  return x;
}

long long tri(long long n) { return n * (n + 1) / 2; }

// ---- per-identity sides ------------------------------------------------------
//
// Independence: the lhs of each entry is built from one module (families,
// oracles, or a q-toolkit route) and the rhs from a different one; the only
// shared code is series arithmetic.

// lhs: families (chain DP). rhs: q-toolkit (Pochhammer and kernel H).
IdentitySides t1_sides(Family f, Sign sign, int k, Bound m, int order) {
  const int d = f == Family::W ? 2 : 1;
  ExactSeries lhs = binomial_combination(f, sign, k, m, order);
  ExactSeries rhs = mul(squared(poch(sign, 1, d, m, order)), shift(kernel_h(k, m, d, 2, order), k));
  return {std::move(lhs), std::move(rhs)};
}

// lhs: families (chain DP). rhs: B coefficients times q-toolkit kernels.
IdentitySides t2_sides(Family f, Sign sign, int j, Bound m, int order) {
  return {family_series({.family = f, .sign = sign, .k = j, .m = m}, order),
          reconstruct_family(f, sign, j, m, order)};
}

// lhs: families. rhs: product quotient times false theta sums (q-toolkit).
IdentitySides t4_sides(Family f, Sign sign, int k, int order) {
  ExactSeries lhs = binomial_combination(f, sign, k, kUnbounded, order);
  ExactSeries theta = f == Family::V ? half_bracket(k, order)
                                     : alt_triangular_sum(k, TriangularVariant::whole, order);
  return {std::move(lhs), mul(product_quotient(sign, f == Family::V ? 1 : 2, order), theta)};
}

// lhs: (q^d;q^d)_inf^2 q^k H_{k,inf}(q^d, q^2). rhs: lacunary sums.
IdentitySides lemma_sides(int d, int k, int order) {
  const ExactSeries p = poch(Sign::plus, d, d, kUnbounded, order);
  ExactSeries lhs = mul(squared(p), shift(kernel_h(k, kUnbounded, d, 2, order), k));
  ExactSeries rhs = d == 1 ? half_bracket(k, order)
                           : alt_triangular_sum(k, TriangularVariant::whole, order);
  return {std::move(lhs), std::move(rhs)};
}

// lhs: families at unbounded m. rhs: product quotient times B-weighted sums.
IdentitySides tt4_sides(Family f, Sign sign, int j, int order) {
  ExactSeries lhs = family_series({.family = f, .sign = sign, .k = j, .m = kUnbounded}, order);
  ExactSeries sum = ExactSeries::zero(order);
  // term k has valuation >= k
  for (int k = j; k <= order; ++k) {
    const ExactSeries theta = f == Family::V
                                  ? half_bracket(k, order)
                                  : alt_triangular_sum(k, TriangularVariant::whole, order);
    sum = add(sum, scale(theta, signed_int(sign, k - j, b_coefficient(k, j))));
  }
  return {std::move(lhs), mul(product_quotient(sign, f == Family::V ? 1 : 2, order), sum)};
}

IdentitySides theta_phi_sides(int order) {
  const ExactSeries phi = theta_phi_neg(order);
  ExactSeries rhs = ExactSeries::zero(order);
  for (int k = 0; k <= order; ++k) {
    // (-1)^{k+1} + (1+q^k) sum_{j>=k} (-1)^j q^{T_j-T_k}
    const ExactSeries one_plus = add(ExactSeries::one(order), ExactSeries::monomial(1, k, order));
    ExactSeries term = scale(mul(one_plus, alt_triangular_sum(k, TriangularVariant::half, order)),
                             parity_sign(k));
    term = add(term, ExactSeries::monomial(parity_sign(k + 1), 0, order));
    rhs = add(rhs, scale(term, b_coefficient(k, 0)));
  }
  return {mul(phi, phi), std::move(rhs)};
}

IdentitySides theta_psi_sides(int order) {
  const ExactSeries psi = theta_psi(order);
  ExactSeries rhs = ExactSeries::zero(order);
  for (int k = 0; k <= order; ++k) {
    rhs = add(rhs, scale(alt_triangular_sum(k, TriangularVariant::whole, order), b_coefficient(k, 0)));
  }
  return {mul(psi, psi), std::move(rhs)};
}

// lhs: trial-division sigma. rhs: (q;q)_inf^2 sum_k k^2 q^k H_{k,inf}(q, q^2).
IdentitySides sigma_sides(int order) {
  std::vector<Integer> sig(static_cast<std::size_t>(order) + 1, Integer(0));
  for (int n = 1; n <= order; ++n) {
    sig[n] = divisor_sigma(n);
  }
  ExactSeries sum = ExactSeries::zero(order);
  for (int k = 1; k <= order; ++k) {
    sum = add(sum, scale(shift(kernel_h(k, kUnbounded, 1, 2, order), k), Integer(k) * k));
  }
  const ExactSeries p = poch(Sign::plus, 1, 1, kUnbounded, order);
  return {ExactSeries(std::move(sig)), mul(squared(p), sum)};
}

// lhs: Gaussian binomials (q-Pascal). rhs: inverted finite product.
IdentitySides cauchy_sides(int n, int s, int order) {
  ExactSeries lhs = ExactSeries::zero(order);
  for (int k = 0; static_cast<long long>(s) * k <= order; ++k) {
    lhs = add(lhs, shift(gaussian_binomial(n - 1 + k, k, 1, order), s * k));
  }
  return {std::move(lhs), invert(poch(Sign::plus, s, 1, n, order))};
}

IdentitySides euler1_sides(int e, int order) {
  ExactSeries rhs = ExactSeries::zero(order);
  for (long long j = 0; j * (j - 1) / 2 + j * e <= order; ++j) {
    const int exponent = static_cast<int>(j * (j - 1) / 2 + j * e);
    const ExactSeries term =
        mul(ExactSeries::monomial(parity_sign(j), exponent, order),
            invert(poch(Sign::plus, 1, 1, static_cast<int>(j), order)));
    rhs = add(rhs, term);
  }
  return {poch(Sign::plus, e, 1, kUnbounded, order), std::move(rhs)};
}

IdentitySides euler2_sides(int e, int order) {
  ExactSeries lhs = ExactSeries::zero(order);
  for (long long j = 0; j * e <= order; ++j) {
    lhs = add(lhs, mul(ExactSeries::monomial(1, static_cast<int>(j * e), order),
                       invert(poch(Sign::plus, 1, 1, static_cast<int>(j), order))));
  }
  return {std::move(lhs), invert(poch(Sign::plus, e, 1, kUnbounded, order))};
}

IdentitySides gf_pp_sides(int order) {
  return {product_quotient(Sign::minus, 1, order), ExactSeries(overpartition_pairs_upto(order))};
}

IdentitySides gf_pod_sides(int order) {
  return {product_quotient(Sign::minus, 2, order), ExactSeries(pod_bipartitions_upto(order))};
}

IdentitySides parity_sides(int k, int order) {
  ExactSeries lhs = family_series({.family = Family::W, .sign = Sign::minus, .k = k}, order);
  const ExactSeries plus = family_series({.family = Family::W, .sign = Sign::plus, .k = k}, order);
  std::vector<Integer> rhs(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    rhs[n] = plus.coeff(n) * parity_sign(n + k);
  }
  return {std::move(lhs), ExactSeries(std::move(rhs))};
}

// lhs: product quotient times bracket (q-toolkit). rhs: pp oracle expansion
//   -pp(n) + sum_{j>=k} (-1)^{j-k} (pp(n - T_j + T_k) + pp(n - T_j + T_{k-1})),
// with T_{-1} = 0 and pp of negative arguments 0.
IdentitySides pos_v_sides(int k, int order) {
  ExactSeries lhs = mul(product_quotient(Sign::minus, 1, order), half_bracket(k, order));
  const std::vector<Integer> pp = overpartition_pairs_upto(order);
  auto at = [&](long long x) { return x < 0 ? Integer(0) : pp[static_cast<std::size_t>(x)]; };
  const long long tk = tri(k);
  const long long tk1 = k == 0 ? 0 : tri(k - 1);
  std::vector<Integer> rhs(static_cast<std::size_t>(order) + 1);
  for (long long n = 0; n <= order; ++n) {
    Integer v = -pp[n];
    for (long long j = k; n - tri(j) + tk >= 0; ++j) {
      Integer t = at(n - tri(j) + tk) + at(n - tri(j) + tk1);
      v += (j - k) % 2 == 0 ? t : Integer(-t);
    }
    rhs[n] = v;
  }
  return {std::move(lhs), ExactSeries(std::move(rhs)), true, {}};
}

// sum_{j>=k} (-1)^{j-k} pod_{-2}(n - shift(j) + k^2) for n = 0..order
// `pod2` must reach index order + k^2 - shift_of(k).
std::vector<Integer> pod_expansion(const std::vector<Integer> &pod2, int k, int order,
                                   long long (*shift_of)(long long)) {
  const long long kk = static_cast<long long>(k) * k;
  std::vector<Integer> out(static_cast<std::size_t>(order) + 1);
  for (long long n = 0; n <= order; ++n) {
    Integer v = 0;
    for (long long j = k; n - shift_of(j) + kk >= 0; ++j) {
      const Integer &t = pod2[static_cast<std::size_t>(n - shift_of(j) + kk)];
      v += (j - k) % 2 == 0 ? t : Integer(-t);
    }
    out[n] = v;
  }
  return out;
}

IdentitySides pos_w_sides(int k, int order) {
  ExactSeries lhs = mul(product_quotient(Sign::minus, 2, order),
                        alt_triangular_sum(k, TriangularVariant::whole, order));
  auto pronic = [](long long j) { return j * (j + 1); };
  auto triangular_shift = [](long long j) { return j * (j + 1) / 2; };
  // the triangular reading looks past q^order when T_k < k^2
  const int reach = order + std::max(0, k * k - k * (k + 1) / 2);
  const std::vector<Integer> pod2 = pod_bipartitions_upto(reach);
  std::vector<Integer> rhs = pod_expansion(pod2, k, order, pronic);
  const std::vector<Integer> literal = pod_expansion(pod2, k, order, triangular_shift);

  std::ostringstream note;
  note << "pod_{-2} expansion uses n - j(j+1) + k^2; the n - T_j + k^2 reading ";
  auto lc = lhs.coeffs();
  const auto bad = std::mismatch(literal.begin(), literal.end(), lc.begin());
  if (bad.first == literal.end()) {
    note << "also agrees up to q^" << order;
  } else {
    note << "disagrees first at n=" << (bad.first - literal.begin());
  }
  return {std::move(lhs), ExactSeries(std::move(rhs)), true, note.str()};
}

IdentitySides oracle_sides(Family f, Sign sign, int k, Bound m, int order) {
  ExactSeries lhs = family_series({.family = f, .sign = sign, .k = k, .m = m}, order);
  std::vector<Integer> rhs(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    rhs[n] = chain_oracle(f, sign, k, m, n);
  }
  return {std::move(lhs), ExactSeries(std::move(rhs))};
}

std::vector<IdentityParams> grid_sign_index_bound(Param index, int max_index) {
  std::vector<IdentityParams> out;
  for (Sign sign : {Sign::plus, Sign::minus}) {
    for (int i = 0; i <= max_index; ++i) {
      for (Bound m : {Bound(1), Bound(2), Bound(3), kUnbounded}) {
        IdentityParams p;
        p.sign = sign;
        (index == Param::k ? p.k : p.j) = i;
        p.m = m;
        out.push_back(p);
      }
    }
  }
  return out;
}

std::vector<IdentityParams> grid_sign_index(Param index, int max_index) {
  std::vector<IdentityParams> out;
  for (Sign sign : {Sign::plus, Sign::minus}) {
    for (int i = 0; i <= max_index; ++i) {
      IdentityParams p;
      p.sign = sign;
      (index == Param::k ? p.k : p.j) = i;
      out.push_back(p);
    }
  }
  return out;
}

std::vector<IdentityParams> grid_k(int max_k) {
  std::vector<IdentityParams> out;
  for (int k = 0; k <= max_k; ++k) {
    IdentityParams p;
    p.k = k;
    out.push_back(p);
  }
  return out;
}

} // namespace

std::span<const IdentityId> all_identities() { return kAllIds; }

std::string_view identity_name(IdentityId id) { return kNames[static_cast<std::size_t>(id)]; }

IdentityId parse_identity(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) {
      return kAllIds[i];
    }
  }
  throw UnknownIdentity("unknown identity '" + std::string(name) + "'");
}

std::string_view param_name(Param p) {
  constexpr std::array<std::string_view, 7> names = {"sign", "k", "j", "m", "n", "s", "e"};
  return names[static_cast<std::size_t>(p)];
}

std::span<const Param> required_params(IdentityId id) {
  switch (id) {
  case IdentityId::T1_V:
  case IdentityId::T1_W:
  case IdentityId::ORACLE_V:
  case IdentityId::ORACLE_W:
    return kSignKM;
  case IdentityId::T2_V:
  case IdentityId::T2_W:
    return kSignJM;
  case IdentityId::T4_V:
  case IdentityId::T4_W:
    return kSignK;
  case IdentityId::TT4_V:
  case IdentityId::TT4_W:
    return kSignJ;
  case IdentityId::L1:
  case IdentityId::L2:
  case IdentityId::PARITY_W:
  case IdentityId::POS_V:
  case IdentityId::POS_W:
    return kK;
  case IdentityId::CAUCHY:
    return kNS;
  case IdentityId::EULER1:
  case IdentityId::EULER2:
    return kE;
  case IdentityId::THETA_PHI_SQ:
  case IdentityId::THETA_PSI_SQ:
  case IdentityId::SIGMA_ID:
  case IdentityId::GF_PP:
  case IdentityId::GF_POD:
    break;
  }
  return {};
}

bool IdentityParams::has(Param p) const {
  switch (p) {
  case Param::sign:
    return sign.has_value();
  case Param::k:
    return k.has_value();
  case Param::j:
    return j.has_value();
  case Param::m:
    return m.has_value();
  case Param::n:
    return n.has_value();
  case Param::s:
    return s.has_value();
  case Param::e:
    return e.has_value();
  }
  return false;
}

std::string IdentityParams::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto item = [&](std::string_view key, const std::string &value) {
    os << (first ? "" : ",") << key << "=" << value;
    first = false;
  };
  if (sign) item("sign", macmahon::to_string(*sign));
  if (k) item("k", std::to_string(*k));
  if (j) item("j", std::to_string(*j));
  if (m) item("m", macmahon::to_string(*m));
  if (n) item("n", std::to_string(*n));
  if (s) item("s", std::to_string(*s));
  if (e) item("e", std::to_string(*e));
  return os.str();
}

void validate(const IdentityCase &c) {
  if (c.order < 0) {
    throw DomainError("order must be non-negative");
  }
  const auto required = required_params(c.id);
  for (Param p : {Param::sign, Param::k, Param::j, Param::m, Param::n, Param::s, Param::e}) {
    const bool needed = std::find(required.begin(), required.end(), p) != required.end();
    if (needed && !c.params.has(p)) {
      throw MissingParam(std::string(identity_name(c.id)) + " needs parameter '" +
                         std::string(param_name(p)) + "'");
    }
    if (!needed && c.params.has(p)) {
      throw UnexpectedParam(std::string(identity_name(c.id)) + " takes no parameter '" +
                            std::string(param_name(p)) + "'");
    }
  }
  const auto &p = c.params;
  if ((p.k && *p.k < 0) || (p.j && *p.j < 0) || (p.n && *p.n < 0)) {
    throw DomainError("indices k, j, n must be non-negative");
  }
  if (p.m && *p.m && **p.m < 0) {
    throw DomainError("bound m must be non-negative or inf");
  }
  if ((p.s && *p.s < 1) || (p.e && *p.e < 1)) {
    throw DomainError("exponents s, e must be >= 1");
  }
}

IdentitySides evaluate_sides(const IdentityCase &c) {
  validate(c);
  const auto &p = c.params;
  const int order = c.order;
  switch (c.id) {
  case IdentityId::T1_V:
  case IdentityId::T1_W:
    return t1_sides(family_of(c.id), *p.sign, *p.k, *p.m, order);
  case IdentityId::T2_V:
  case IdentityId::T2_W:
    return t2_sides(family_of(c.id), *p.sign, *p.j, *p.m, order);
  case IdentityId::T4_V:
  case IdentityId::T4_W:
    return t4_sides(family_of(c.id), *p.sign, *p.k, order);
  case IdentityId::L1:
    return lemma_sides(1, *p.k, order);
  case IdentityId::L2:
    return lemma_sides(2, *p.k, order);
  case IdentityId::TT4_V:
  case IdentityId::TT4_W:
    return tt4_sides(family_of(c.id), *p.sign, *p.j, order);
  case IdentityId::THETA_PHI_SQ:
    return theta_phi_sides(order);
  case IdentityId::THETA_PSI_SQ:
    return theta_psi_sides(order);
  case IdentityId::SIGMA_ID:
    return sigma_sides(order);
  case IdentityId::CAUCHY:
    return cauchy_sides(*p.n, *p.s, order);
  case IdentityId::EULER1:
    return euler1_sides(*p.e, order);
  case IdentityId::EULER2:
    return euler2_sides(*p.e, order);
  case IdentityId::GF_PP:
    return gf_pp_sides(order);
  case IdentityId::GF_POD:
    return gf_pod_sides(order);
  case IdentityId::PARITY_W:
    return parity_sides(*p.k, order);
  case IdentityId::POS_V:
    return pos_v_sides(*p.k, order);
  case IdentityId::POS_W:
    return pos_w_sides(*p.k, order);
  case IdentityId::ORACLE_V:
  case IdentityId::ORACLE_W:
    return oracle_sides(family_of(c.id), *p.sign, *p.k, *p.m, order);
  }
  throw UnknownIdentity("unhandled identity");
}

VerifyReport compare_sides(const IdentityCase &c, const IdentitySides &sides) {
  VerifyReport report;
  report.identity_case = c;
  report.note = sides.note;
  const int order = std::min({c.order, sides.lhs.order(), sides.rhs.order()});
  for (int n = 0; n <= order; ++n) {
    const Integer &l = sides.lhs.coeff(n);
    const Integer &r = sides.rhs.coeff(n);
    const bool negative = sides.lhs_nonnegative && sgn(l) < 0;
    if (l != r || negative) {
      report.first_discrepancy = Discrepancy{n, l, r};
      if (negative) {
        report.note += (report.note.empty() ? "" : "; ");
        report.note += "negative lhs coefficient at n=" + std::to_string(n);
      }
      break;
    }
  }
  report.holds = !report.first_discrepancy.has_value();
  return report;
}

VerifyReport verify(const IdentityCase &c) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report = compare_sides(c, evaluate_sides(c));
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

ParamGrid default_grid() {
  ParamGrid grid;
  grid.emplace_back(IdentityId::T1_V, grid_sign_index_bound(Param::k, 3));
  grid.emplace_back(IdentityId::T1_W, grid_sign_index_bound(Param::k, 3));
  grid.emplace_back(IdentityId::T2_V, grid_sign_index_bound(Param::j, 3));
  grid.emplace_back(IdentityId::T2_W, grid_sign_index_bound(Param::j, 3));
  grid.emplace_back(IdentityId::T4_V, grid_sign_index(Param::k, 4));
  grid.emplace_back(IdentityId::T4_W, grid_sign_index(Param::k, 4));
  grid.emplace_back(IdentityId::L1, grid_k(5));
  grid.emplace_back(IdentityId::L2, grid_k(5));
  grid.emplace_back(IdentityId::TT4_V, grid_sign_index(Param::j, 3));
  grid.emplace_back(IdentityId::TT4_W, grid_sign_index(Param::j, 3));
  for (IdentityId id : {IdentityId::THETA_PHI_SQ, IdentityId::THETA_PSI_SQ, IdentityId::SIGMA_ID}) {
    grid.emplace_back(id, std::vector<IdentityParams>{IdentityParams{}});
  }

  std::vector<IdentityParams> cauchy;
  // n = 0 is excluded: [-1 choose 0] = 0 under the Gaussian "otherwise" convention.
  for (int n = 1; n <= 6; ++n) {
    for (int s = 1; s <= 3; ++s) {
      IdentityParams p;
      p.n = n;
      p.s = s;
      cauchy.push_back(p);
    }
  }
  grid.emplace_back(IdentityId::CAUCHY, cauchy);

  std::vector<IdentityParams> euler1, euler2;
  for (int e = 1; e <= 3; ++e) {
    IdentityParams p;
    p.e = e;
    euler1.push_back(p);
    if (e <= 2) euler2.push_back(p);
  }
  grid.emplace_back(IdentityId::EULER1, euler1);
  grid.emplace_back(IdentityId::EULER2, euler2);
  grid.emplace_back(IdentityId::GF_PP, std::vector<IdentityParams>{IdentityParams{}});
  grid.emplace_back(IdentityId::GF_POD, std::vector<IdentityParams>{IdentityParams{}});
  grid.emplace_back(IdentityId::PARITY_W, grid_k(4));
  grid.emplace_back(IdentityId::POS_V, grid_k(5));
  grid.emplace_back(IdentityId::POS_W, grid_k(5));
  grid.emplace_back(IdentityId::ORACLE_V, grid_sign_index_bound(Param::k, 3));
  grid.emplace_back(IdentityId::ORACLE_W, grid_sign_index_bound(Param::k, 3));
  return grid;
}

std::vector<VerifyReport> verify_suite(const ParamGrid &grid, int order, unsigned threads) {
  std::vector<IdentityCase> cases;
  for (const auto &[id, params] : grid) {
    for (const auto &p : params) {
      cases.push_back(IdentityCase{id, p, order});
    }
  }
  std::vector<VerifyReport> reports(cases.size());
  if (threads == 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(cases.size(), 1)));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      try {
        reports[i] = verify(cases[i]);
      } catch (const Error &err) {
        // a malformed grid entry is reported as a failing case
        reports[i].identity_case = cases[i];
        reports[i].holds = false;
        reports[i].note = err.what();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back(worker);
    }
  }
  return reports;
}

} // namespace macmahon
