#pragma once

#include "tverberg/types.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace tverberg {

/// Convex weights proving q in conv(X), or nullopt if q is outside. Decided by
/// an exact feasibility program over the entries of X; the returned weights
/// are a basic solution, so at most dim+1 of them are nonzero.
std::optional<ConvexCoefficients> hull_membership(const RatPoint& q, const PointMultiset& X);

inline bool in_hull(const RatPoint& q, const PointMultiset& X) { return hull_membership(q, X).has_value(); }

/// Phase-one optimum of the membership program: zero iff q in conv(X),
/// otherwise a positive measure of how far the system is from feasible.
Rational hull_membership_gap(const RatPoint& q, const PointMultiset& X);

/// Weights lambda_i > 0 with sum 1 and sum lambda_i x_i = q, provided the x_i
/// are affinely independent; nullopt otherwise. A nonempty result means
/// exactly that X is a minimal set containing q in its hull.
std::optional<std::vector<Rational>> positive_affine_coordinates(const std::vector<RatPoint>& X, const RatPoint& q);

/// Visits the sets of distinct entries of X (as sorted entry indices) that
/// contain q in their hull while no proper subset does, by size and then
/// lexicographically. Sizes never exceed dim+1. Stops when visit returns
/// false; returns false in that case.
bool for_each_minimal_subset(const PointMultiset& X, const RatPoint& q,
                             const std::function<bool(const std::vector<std::size_t>&)>& visit);

/// Carathéodory reduction. Returns weights on an affinely independent subset
/// of the support of `coeffs` (hence at most dim+1 entries) that still
/// combine to q. Because the surviving points are affinely independent and
/// all weights are positive, no proper subset of them contains q.
///
/// Throws PreconditionViolated if `coeffs` does not certify q in conv(X).
ConvexCoefficients caratheodory_reduce(const RatPoint& q, const PointMultiset& X, const ConvexCoefficients& coeffs);

/// A point common to all hulls, or nullopt when the intersection is empty.
/// The point is the one read off the canonical basic solution.
std::optional<RatPoint> polytope_intersection_point(const std::vector<PointMultiset>& hulls);

/// Lexicographically smallest point of the intersection of the hulls (a
/// vertex of the intersection polytope), or nullopt when it is empty.
std::optional<RatPoint> intersection_lexmin(const std::vector<PointMultiset>& hulls);

/// All points of S in the intersection of the hulls, in lexicographic order.
///
/// For lattices the integer block ranges over the box obtained by
/// intersecting the hulls' bounding boxes; each candidate is then decided
/// exactly (membership when there is no real block, a feasibility problem on
/// the real fiber otherwise, returning the canonical fiber point). For finite
/// bases the candidates are the base points themselves.
std::vector<RatPoint> lattice_points_in_intersection(const std::vector<PointMultiset>& hulls, const AmbientSet& S);

/// Inclusive integer box [lo, hi] on the first `coords` coordinates that
/// contains every hull's projection. Empty (lo > hi somewhere) if the boxes do
/// not meet.
struct IntegerBox {
  std::vector<BigInt> lo, hi;
  bool empty() const;
  /// Number of lattice points.
  BigInt count() const;
  /// Calls fn(point) for every lattice point in lexicographic order.
  template <typename Fn>
  void for_each(Fn&& fn) const;
};

IntegerBox common_bounding_box(const std::vector<PointMultiset>& hulls, int coords);

template <typename Fn>
void IntegerBox::for_each(Fn&& fn) const {
  if (empty()) return;
  const std::size_t d = lo.size();
  std::vector<BigInt> cur = lo;
  RatPoint p(static_cast<Eigen::Index>(d));
  for (;;) {
    for (std::size_t i = 0; i < d; ++i) p[static_cast<Eigen::Index>(i)] = to_rational(cur[i]);
    fn(static_cast<const RatPoint&>(p));
    std::size_t i = d;
    for (;;) {
      if (i == 0) return;
      --i;
      if (cur[i] < hi[i]) {
        ++cur[i];
        break;
      }
      cur[i] = lo[i];
    }
  }
}

}  // namespace tverberg
