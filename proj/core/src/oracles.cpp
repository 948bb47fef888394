#include <macmahon/oracles.hpp>

#include <algorithm>
#include <set>
#include <string>

#include <macmahon/errors.hpp>

namespace macmahon {

namespace {

void check_non_negative(int n, const char *what) {
  if (n < 0) {
    throw DomainError(std::string(what) + " needs a non-negative argument");
  }
}

struct ChainWalker {
  Family family;
  Sign sign;
  int k;
  Bound m;
  const std::function<void(const ChainTerm &)> &visit;
  ChainTerm term;

  long long part(int lambda) const { return is_odd_parts(family) ? 2LL * lambda - 1 : lambda; }

  void walk(int pos, int min_lambda, long long remaining, long long t_sum) {
    if (pos == k) {
      if (remaining == 0) {
        const bool negative = sign == Sign::minus && (t_sum + k) % 2 != 0;
        term.weight = 1;
        for (int t : term.multiplicities) {
          term.weight *= t;
        }
        if (negative) {
          term.weight = -term.weight;
        }
        visit(term);
      }
      return;
    }
    const int slots_left = k - pos;
    for (int lambda = min_lambda; !m || lambda <= *m; ++lambda) {
      // every remaining position needs a part at least this large
      if (part(lambda) * slots_left > remaining) {
        break;
      }
      term.magnitudes[pos] = lambda;
      const int next_min = is_strict(family) ? lambda + 1 : lambda;
      for (int t = 1; part(lambda) * t <= remaining; ++t) {
        term.multiplicities[pos] = t;
        walk(pos + 1, next_min, remaining - part(lambda) * t, t_sum + t);
      }
    }
  }
};

void partitions_rec(int remaining, int max_part, std::vector<int> &parts,
                    const std::function<void(const std::vector<int> &)> &visit) {
  if (remaining == 0) {
    visit(parts);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    parts.push_back(p);
    partitions_rec(remaining - p, p, parts, visit);
    parts.pop_back();
  }
}

// c[n] = sum_i s[i] s[n-i] for n = 0..size-1, plain integer loops.
std::vector<Integer> self_convolution(const std::vector<Integer> &s) {
  std::vector<Integer> c(s.size(), Integer(0));
  for (std::size_t n = 0; n < s.size(); ++n) {
    for (std::size_t i = 0; i <= n; ++i) {
      c[n] += s[i] * s[n - i];
    }
  }
  return c;
}

std::vector<Integer> tabulate(int n, Integer (*single)(int)) {
  std::vector<Integer> values;
  values.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    values.push_back(single(i));
  }
  return values;
}

} // namespace

void for_each_chain(Family family, Sign sign, int k, Bound m, int n,
                    const std::function<void(const ChainTerm &)> &visit) {
  check_non_negative(k, "chain enumeration");
  check_non_negative(n, "chain enumeration");
  ChainWalker walker{family, sign, k, m, visit, {}};
  walker.term.magnitudes.assign(static_cast<std::size_t>(k), 0);
  walker.term.multiplicities.assign(static_cast<std::size_t>(k), 0);
  walker.walk(0, 1, n, 0);
}

std::vector<ChainTerm> chain_terms(Family family, Sign sign, int k, Bound m, int n) {
  std::vector<ChainTerm> out;
  for_each_chain(family, sign, k, m, n, [&](const ChainTerm &t) { out.push_back(t); });
  return out;
}

Integer chain_oracle(Family family, Sign sign, int k, Bound m, int n) {
  Integer total = 0;
  for_each_chain(family, sign, k, m, n, [&](const ChainTerm &t) { total += t.weight; });
  return total;
}

void for_each_partition(int n, const std::function<void(const std::vector<int> &)> &visit) {
  check_non_negative(n, "partition enumeration");
  std::vector<int> parts;
  partitions_rec(n, n, parts, visit);
}

Integer partition_count(int n) {
  Integer count = 0;
  for_each_partition(n, [&](const std::vector<int> &) { ++count; });
  return count;
}

Integer overpartitions(int n) {
  Integer count = 0;
  for_each_partition(n, [&](const std::vector<int> &parts) {
    const std::set<int> distinct(parts.begin(), parts.end());
    Integer w = 1;
    w <<= distinct.size();
    count += w;
  });
  return count;
}

Integer overpartition_pairs(int n) { return overpartition_pairs_upto(n).back(); }

std::vector<Integer> overpartition_pairs_upto(int n) {
  check_non_negative(n, "overpartition_pairs");
  return self_convolution(tabulate(n, overpartitions));
}

Integer pod(int n) {
  Integer count = 0;
  for_each_partition(n, [&](const std::vector<int> &parts) {
    // parts are non-increasing, so a repeated odd part shows up as neighbours
    for (std::size_t i = 1; i < parts.size(); ++i) {
      if (parts[i] == parts[i - 1] && parts[i] % 2 == 1) {
        return;
      }
    }
    ++count;
  });
  return count;
}

Integer pod_bipartitions(int n) { return pod_bipartitions_upto(n).back(); }

std::vector<Integer> pod_bipartitions_upto(int n) {
  check_non_negative(n, "pod_bipartitions");
  return self_convolution(tabulate(n, pod));
}

Integer divisor_sigma(int n) {
  if (n <= 0) {
    throw DomainError("divisor_sigma needs n >= 1");
  }
  Integer total = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) {
      total += d;
    }
  }
  return total;
}

Integer triangular(int n) {
  check_non_negative(n, "triangular");
  Integer t = n;
  t *= n + 1;
  t /= 2;
  return t;
}

} // namespace macmahon
