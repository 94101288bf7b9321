#pragma once

#include "tverberg/types.hpp"

#include <cstdint>
#include <vector>

namespace tverberg {

/// True iff q lies in the hull of every transversal (one point from each
/// part). A transversal misses q exactly when some open half-space with q on
/// its boundary meets every part, so the test walks the cells of the
/// arrangement of hyperplanes orthogonal to x - q and looks for a cell where
/// every part has a point on the positive side.
bool transversal_property_verify(const std::vector<PointMultiset>& parts, const RatPoint& q);

/// The same property by listing every transversal and testing hull
/// membership. Throws BudgetExceeded when there are more than `limit`.
bool transversal_property_direct(const std::vector<PointMultiset>& parts, const RatPoint& q,
                                 std::uint64_t limit = 100'000);

struct SelectionResult {
  std::vector<PointMultiset> subsets;
  RatPoint q;
  /// Size of the smallest subset.
  int min_size = 0;
};

/// d+1 disjoint sub-multisets of P, each of at least min_size points, such
/// that every transversal contains q in its hull.
///
/// In the plane the points are ordered around q and every choice of three
/// disjoint circular windows of exactly min_size points is tried (any
/// subfamily of a valid family is valid, so larger subsets are never needed
/// to find one); the winners are then grown one point at a time while the
/// property holds. Other dimensions use seeded random restarts. Throws
/// NotFound naming the largest size that did work, PreconditionViolated if q
/// has depth 0.
SelectionResult fraction_selection(const PointMultiset& P, const RatPoint& q, int min_size, std::uint64_t seed = 0,
                                   int restarts = 2000);

struct DepthPartition {
  std::vector<PointMultiset> parts;
  /// Points of depth >= alpha*n that were checked.
  std::vector<RatPoint> deep_points;
};

/// Partition of P into r parts of sizes within [floor(n/2r), ceil(2n/r)]
/// such that every transversal contains every deep point, i.e. every
/// candidate of depth >= alpha*n: lattice points of the bounding box and the
/// centroids of the parts. Seeds with r consecutive angular sectors around
/// the deepest lattice point, then tries seeded random swaps that do not
/// increase the number of failing deep points. Throws PreconditionViolated
/// for r < dim+1 and NotFound when `moves` swaps do not succeed.
DepthPartition depth_partition_search(const PointMultiset& P, const Rational& alpha, int r, std::uint64_t seed = 0,
                                      int moves = 2000);

}  // namespace tverberg
