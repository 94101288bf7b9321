#pragma once

#include "tverberg/types.hpp"

namespace tverberg {

/// Half-space depth of a point together with a closed half-space attaining it.
struct DepthWitness {
  int depth = 0;
  /// Boundary passes through the query point; contains exactly `depth`
  /// instances of A.
  HalfSpace halfspace;
};

/// Minimum, over closed half-spaces containing q, of the number of instances
/// of A inside. Copies of q itself lie in every such half-space and are
/// counted. Exact for every dimension; uses 128-bit integer kernels when the
/// coordinates allow it.
DepthWitness halfspace_depth(const RatPoint& q, const PointMultiset& A);

/// Cheaper test that only decides whether depth(q, A) > bound.
bool depth_exceeds(const RatPoint& q, const PointMultiset& A, int bound);

struct Centerpoint {
  RatPoint point;
  int depth = 0;
};

/// Deepest integer point of the bounding box of A (lexicographically first
/// among ties). Throws CenterpointNotFound when its depth is below m; for
/// |A| >= 2^d (m-1) + 1 that cannot happen. `jobs` splits the scan across
/// threads without changing the result.
Centerpoint integer_centerpoint(const PointMultiset& A, int m, int jobs = 1);

/// Deepest point of a finite S (lexicographically first among ties); throws
/// CenterpointNotFound when its depth is below m.
Centerpoint finite_set_centerpoint(const PointMultiset& A, const AmbientSet& S, int m);

}  // namespace tverberg
