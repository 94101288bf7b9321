#include "tverberg/partitions.hpp"

#include "tverberg/errors.hpp"

#include <numeric>

namespace tverberg {

namespace {

class PartitionWalker {
 public:
  PartitionWalker(const std::vector<int>& mult, int m, const std::function<bool(const std::vector<PartCounts>&)>& visit)
      : n_(mult.size()), visit_(visit) {
    // Deeper levels hold pointers to earlier parts.
    parts_.reserve(static_cast<std::size_t>(m));
  }

  bool run(PartCounts remaining, int k, const PartCounts* prev) {
    const int total = std::accumulate(remaining.begin(), remaining.end(), 0);
    if (k == 0) return total != 0 || visit_(parts_);
    if (total < k) return true;
    if (k == 1) {
      if (prev && lex_greater(remaining, *prev)) return true;
      parts_.push_back(remaining);
      bool go = visit_(parts_);
      parts_.pop_back();
      return go;
    }
    // The first nonzero entry of the remainder must go into this part:
    // otherwise a later part would start earlier and be lexicographically
    // larger.
    std::size_t lead = 0;
    while (remaining[lead] == 0) ++lead;
    PartCounts part(n_, 0);
    return choose(0, lead, true, remaining, k, prev, part, total);
  }

 private:
  static bool lex_greater(const PartCounts& a, const PartCounts& b) {
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }

  bool choose(std::size_t i, std::size_t lead, bool tight, PartCounts& remaining, int k, const PartCounts* prev,
              PartCounts& part, int total) {
    if (i == n_) {
      const int used = std::accumulate(part.begin(), part.end(), 0);
      if (used == 0 || total - used < k - 1) return true;
      for (std::size_t j = 0; j < n_; ++j) remaining[j] -= part[j];
      parts_.push_back(part);
      bool go = run(remaining, k - 1, &parts_.back());
      parts_.pop_back();
      for (std::size_t j = 0; j < n_; ++j) remaining[j] += part[j];
      return go;
    }
    int hi = remaining[i];
    if (tight && prev) hi = std::min(hi, (*prev)[i]);
    const int lo = i == lead ? 1 : 0;
    for (int v = hi; v >= lo; --v) {
      part[i] = v;
      const bool still_tight = tight && prev && v == (*prev)[i];
      if (!choose(i + 1, lead, still_tight, remaining, k, prev, part, total)) {
        part[i] = 0;
        return false;
      }
    }
    part[i] = 0;
    return true;
  }

  std::size_t n_;
  const std::function<bool(const std::vector<PartCounts>&)>& visit_;
  std::vector<PartCounts> parts_;
};

/// Integer partitions of k as lists of parts (cycle types of S_k).
void cycle_types(int k, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(k, max_part); p >= 1; --p) {
    cur.push_back(p);
    cycle_types(k - p, p, cur, out);
    cur.pop_back();
  }
}

/// Number of ways to write n as sum_j lengths[j] * x_j with x_j >= 0.
BigInt representations(int n, const std::vector<int>& lengths) {
  std::vector<BigInt> ways(static_cast<std::size_t>(n) + 1, BigInt(0));
  ways[0] = 1;
  for (int len : lengths)
    for (int v = len; v <= n; ++v) ways[static_cast<std::size_t>(v)] += ways[static_cast<std::size_t>(v - len)];
  return ways[static_cast<std::size_t>(n)];
}

/// Distributions of the multiset into k unlabeled boxes, empty boxes allowed.
BigInt distributions(const std::vector<int>& mult, int k) {
  if (k == 0) return std::all_of(mult.begin(), mult.end(), [](int v) { return v == 0; }) ? 1 : 0;
  std::vector<std::vector<int>> types;
  std::vector<int> cur;
  cycle_types(k, k, cur, types);
  Rational sum = 0;
  for (const auto& t : types) {
    // Size of the conjugacy class divided by k!: 1 / prod_i i^{a_i} a_i!.
    BigInt z = 1;
    for (std::size_t a = 0; a < t.size();) {
      std::size_t b = a;
      while (b < t.size() && t[b] == t[a]) ++b;
      for (std::size_t c = 1; c <= b - a; ++c) z *= BigInt(t[a]) * BigInt(c);
      a = b;
    }
    BigInt fixed = 1;
    for (int n : mult) fixed *= representations(n, t);
    sum += to_rational(fixed) / to_rational(z);
  }
  if (!is_integer(sum)) throw InternalError("orbit count is not an integer");
  return numerator_of(sum);
}

}  // namespace

bool for_each_multiset_partition(const std::vector<int>& multiplicities, int m,
                                 const std::function<bool(const std::vector<PartCounts>&)>& visit) {
  if (m < 1) throw InvalidInput("partitions: m must be positive");
  for (int v : multiplicities)
    if (v < 0) throw InvalidInput("partitions: negative multiplicity");
  PartitionWalker walker(multiplicities, m, visit);
  return walker.run(multiplicities, m, nullptr);
}

BigInt count_multiset_partitions(const std::vector<int>& multiplicities, int m) {
  if (m < 1) throw InvalidInput("partitions: m must be positive");
  return distributions(multiplicities, m) - distributions(multiplicities, m - 1);
}

}  // namespace tverberg
