#pragma once

#include "tverberg/certificate.hpp"

#include <cstdint>
#include <optional>

namespace tverberg {

/// Onn's five points of Z^2 without an integer Radon partition.
PointMultiset onn_witness();

/// {(i,i), (i,-i+1) : i = -m+2..m-1}: 4m-4 points of Z^2 without an integer
/// m-Tverberg partition. Requires m >= 3.
PointMultiset doignon_witness(int m);

/// Each point of a Helly witness of the finite S repeated m-1 times. No point
/// of S has depth m in the result, so it has no m-Tverberg partition over S.
PointMultiset convex_lowerbound_witness(const AmbientSet& S, int m);

inline constexpr std::uint64_t kDefaultPartitionBudget = 10'000'000;

struct RefutationReport {
  /// True iff no m-partition has a common hull point in S.
  bool no_partition = true;
  /// Partitions looked at (all of them when no_partition holds).
  std::uint64_t examined = 0;
  /// Total number of m-partitions of the multiset.
  BigInt total;
  /// The first partition found, when there is one.
  std::optional<TverbergCertificate> certificate;
};

/// Walks every partition of A into m nonempty parts (equal points are not
/// told apart) and looks for a point of S common to all hulls. Throws
/// BudgetExceeded, reporting the partitions left, when more than `budget`
/// partitions would be needed.
RefutationReport refute_partitions(const PointMultiset& A, int m, const AmbientSet& S,
                                   std::uint64_t budget = kDefaultPartitionBudget);

inline bool verify_no_partition(const PointMultiset& A, int m, const AmbientSet& S,
                                std::uint64_t budget = kDefaultPartitionBudget) {
  return refute_partitions(A, m, S, budget).no_partition;
}

/// Whether A has an m-partition whose hulls share a point of the finite S:
/// some s in S must lie in the hulls of m disjoint minimal subsets of A.
bool has_partition_in_finite_set(const PointMultiset& A, int m, const AmbientSet& S);

struct TverbergNumberReport {
  /// Tv(S, m) when it is at most n_max.
  std::optional<int> value;
  /// For value = n: a multiset of n-1 points with no partition (absent for n = 1).
  std::optional<PointMultiset> lower_witness;
  std::uint64_t multisets_checked = 0;
};

/// Smallest n <= n_max such that every multiset of n points of the finite S
/// has an m-Tverberg partition over S. The property is monotone in n, so sizes
/// are tried in increasing order; multisets are combinations with repetition.
/// Throws BudgetExceeded after `budget` multisets.
TverbergNumberReport exact_tverberg_number(const AmbientSet& S, int m, int n_max,
                                           std::uint64_t budget = kDefaultPartitionBudget);

}  // namespace tverberg
