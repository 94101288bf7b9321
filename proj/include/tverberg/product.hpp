#pragma once

#include "tverberg/certificate.hpp"

#include <vector>

namespace tverberg {

struct RealPartition {
  std::vector<PointMultiset> parts;
  RatPoint point;
};

/// First m-partition of X (in the order of for_each_multiset_partition)
/// whose hulls share a point, with that point. Requires
/// |X| >= (m-1)(dim+1)+1, where such a partition always exists.
RealPartition real_tverberg_bruteforce(const PointMultiset& X, int m);

/// Splits a collinear multiset, listed in order along its line, into t parts
/// that all contain the t-th point: pairs (x_i, x_{n+1-i}) for i < t and the
/// rest. Requires n >= 2t-1.
RealPartition median_partition(const std::vector<RatPoint>& sorted, int t);

/// A point of conv(Q) whose first q.size() coordinates equal q, read off the
/// canonical basic solution. Throws Infeasible when q is not in the hull of
/// the projection of Q.
RatPoint fiber_lift(const PointMultiset& Q, const RatPoint& q);

/// Everything the lifting argument produces on the way to its certificate.
struct LiftRecord {
  int t = 0;
  /// Parts Q_1..Q_t of A whose projections share the lattice point q.
  std::vector<PointMultiset> projection_parts;
  RatPoint base_point;
  /// q_i in conv(Q_i), projecting onto q.
  std::vector<RatPoint> fiber_points;
  /// I_1..I_m: indices into fiber_points (0-based).
  std::vector<std::vector<int>> fiber_partition;
  RatPoint final_point;
};

/// Tverberg number of Z^j as used by the lifting: 2t-1 for j = 1, 4t-3 for
/// j = 2 (6 for t = 2), 24t-31 for j = 3 (17 for t = 2).
int lattice_tverberg_bound(int j, int t);

/// m-Tverberg partition of A in Z^j x R^k (integer block first), 1 <= j <= 3.
/// With t = (m-1)(k+1)+1, the projection to Z^j is split into t parts around
/// a lattice point q, each part is lifted to a point of its hull over q, the
/// t lifted points get a real m-Tverberg partition in the fiber, and parts
/// are merged accordingly. Requires |A| >= lattice_tverberg_bound(j, t).
TverbergCertificate product_tverberg(const PointMultiset& A, int m, int j, int k, LiftRecord* record = nullptr);

/// A x {0} union A x {1}, with the new integer coordinate inserted at index
/// `at` (the end of the integer block).
PointMultiset double_witness(const PointMultiset& A, int at);

}  // namespace tverberg
