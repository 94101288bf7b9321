#pragma once

#include "tverberg/certificate.hpp"
#include "tverberg/depth.hpp"

#include <vector>

namespace tverberg {

/// Instances of a planar multiset sorted clockwise around a center.
///
/// The circular order starts at the first ray at or clockwise after the
/// upward vertical direction. Instances on a common ray are consecutive and
/// ordered by distance from the center; coincident instances keep their
/// instance order.
struct RadialOrder {
  RatPoint center;
  /// Instance index (into the source multiset) at each position.
  std::vector<int> instance;
  /// Point at each position.
  std::vector<RatPoint> points;
  /// Ray id at each position; ids count up from 0 along the order.
  std::vector<int> ray;

  int size() const { return static_cast<int>(points.size()); }
};

/// Throws InvalidInput for an empty or non-planar A, PreconditionViolated if
/// p occurs in A.
RadialOrder radial_order(const PointMultiset& A, const RatPoint& p);

/// Bookkeeping of the labeling argument for n points and m labels:
/// n = quot * m + rem, e = ceil(rem / quot), tail = n - quot*m - (quot-1)*e.
struct LabelingState {
  int quot = 0;
  int rem = 0;
  int e = 0;
  int tail = 0;
};

LabelingState labeling_state(int n, int m);

/// Labels (1..m, indexed by source instance) such that every closed
/// half-plane through the center contains every label; hence the label
/// classes form an m-Tverberg partition with the center as Tverberg point.
///
/// Requires m >= 3, at least 4m-3 points and a depth witness for the center
/// of depth >= m. When the depth is at least m+e the labels repeat
/// 1..m, 1..e blocks around the circle; otherwise the witness half-plane H+
/// holds fewer than m+e points and the labels start on the clockwise-first
/// point of the opposite closed half-plane. The result is checked over all
/// combinatorially distinct half-planes; PreconditionViolated on failure.
std::vector<int> tverberg_labeling(const RadialOrder& order, int m, const DepthWitness& depth_witness);

/// Two-label version for Radon partitions: requires at least 6 points and
/// depth >= 2.
std::vector<int> radon_labeling(const RadialOrder& order, const DepthWitness& depth_witness);

/// True iff every closed half-plane whose boundary passes through the center
/// contains an instance of each label 1..m. Only generic half-planes (no
/// point on the boundary) need checking since every closed half-plane
/// contains one; those are enumerated just off each ray in both directions.
bool labels_cover_every_halfplane(const RadialOrder& order, const std::vector<int>& labels_by_instance, int m);

/// Points of S in convex position whose hull meets S only in themselves.
struct HellyWitness {
  std::vector<RatPoint> points;
};

struct HellyNumber {
  int value = 0;
  HellyWitness witness;
};

/// Largest subset R' of a finite S in convex position with conv(R') n S = R'.
/// Such subsets are closed under taking subsets, so the search only extends
/// valid ones. Throws InvalidInput for an empty or non-finite S.
HellyNumber helly_number(const AmbientSet& S);

/// Checks the two defining properties of a Helly witness.
bool is_helly_witness(const std::vector<RatPoint>& points, const AmbientSet& S);

/// m-Tverberg partition of a planar multiset with Tverberg point in S, for
/// S = Z^2 or a finite planar S.
///
/// Sizes required: Z^2 needs 4m-3 points (6 when m = 2); a finite S needs
/// He(S)(m-1)+1 (He(S)+2 when m = 2 and He(S) >= 4). Finite S with
/// He(S) <= 3 is handed to helly3_tverberg. Otherwise a centerpoint p of depth
/// m in S is taken, its own copies are peeled off as singleton parts and the
/// remaining points are labeled around p.
TverbergCertificate plane_tverberg(const PointMultiset& A, int m, const AmbientSet& S);

/// Finite planar S with He(S) <= 3: a single point (He 1), a collinear set
/// (He 2, median), or He 3, where a real Tverberg partition is found by
/// search and the lexicographically smallest point of the intersection of
/// its hulls (a vertex) lies in S. Throws AssertionFailed if that vertex is
/// not in S.
TverbergCertificate helly3_tverberg(const PointMultiset& A, int m, const AmbientSet& S);

}  // namespace tverberg
