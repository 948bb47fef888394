#ifndef MACMAHON_ORACLES_HPP
#define MACMAHON_ORACLES_HPP

// Brute-force enumerations used as ground truth. Nothing in this header
// touches series arithmetic.

#include <functional>
#include <vector>

#include <macmahon/integer.hpp>
#include <macmahon/types.hpp>

namespace macmahon {

/// One term of a chain sum: magnitudes lambda_1 <= ... <= lambda_k (strict
/// for A and C), multiplicities t_i >= 1, and the signed weight
/// (sign)^{t_1+...+t_k+k} t_1 ... t_k.
struct ChainTerm {
  std::vector<int> magnitudes;
  std::vector<int> multiplicities;
  Integer weight;
};

/// Visits every chain term of `family` with k magnitudes bounded by m whose
/// parts (lambda_i for A/V, 2 lambda_i - 1 for C/W) times multiplicities sum to n.
void for_each_chain(Family family, Sign sign, int k, Bound m, int n,
                    const std::function<void(const ChainTerm &)> &visit);

std::vector<ChainTerm> chain_terms(Family family, Sign sign, int k, Bound m, int n);

/// Sum of chain weights: a, c, v or w at n depending on the family.
Integer chain_oracle(Family family, Sign sign, int k, Bound m, int n);

inline Integer v_oracle(Sign sign, int k, Bound m, int n) {
  return chain_oracle(Family::V, sign, k, m, n);
}
inline Integer w_oracle(Sign sign, int k, Bound m, int n) {
  return chain_oracle(Family::W, sign, k, m, n);
}

/// Calls visit(parts) for every partition of n, parts in non-increasing order.
void for_each_partition(int n, const std::function<void(const std::vector<int> &)> &visit);

/// Number of partitions of n.
Integer partition_count(int n);

/// Number of overpartitions of n (each partition weighted by 2^{#distinct parts}).
Integer overpartitions(int n);

/// Ordered pairs of overpartitions with total size n.
Integer overpartition_pairs(int n);

/// overpartition_pairs(i) for i = 0..n, sharing one enumeration.
std::vector<Integer> overpartition_pairs_upto(int n);

/// Partitions of n in which no odd part repeats.
Integer pod(int n);

/// Ordered pairs of such partitions with total size n (pod_{-2}).
Integer pod_bipartitions(int n);

/// pod_bipartitions(i) for i = 0..n.
std::vector<Integer> pod_bipartitions_upto(int n);

/// sum of divisors by trial division; throws DomainError for n <= 0.
Integer divisor_sigma(int n);

/// n(n+1)/2 for n >= 0.
Integer triangular(int n);

} // namespace macmahon

#endif // MACMAHON_ORACLES_HPP
