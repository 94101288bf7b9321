#pragma once

#include "tverberg/rational.hpp"

#include <functional>
#include <vector>

namespace tverberg {

/// A part of a multiset partition as a count per entry.
using PartCounts = std::vector<int>;

/// Enumerates the partitions of a multiset into exactly m nonempty unordered
/// parts. The multiset is given by the multiplicity of each entry.
///
/// Each partition is produced exactly once: parts are listed in
/// non-increasing lexicographic order of their count vectors, which breaks
/// both the symmetry between parts and the symmetry between equal points.
/// Partitions come in decreasing lexicographic order of that part list.
/// visit returns false to stop; the function then returns false.
bool for_each_multiset_partition(const std::vector<int>& multiplicities, int m,
                                 const std::function<bool(const std::vector<PartCounts>&)>& visit);

/// Number of partitions for_each_multiset_partition produces, computed in
/// closed form (Burnside's lemma over permutations of the parts).
BigInt count_multiset_partitions(const std::vector<int>& multiplicities, int m);

}  // namespace tverberg
