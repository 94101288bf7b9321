#include "tverberg/product.hpp"

#include "tverberg/errors.hpp"
#include "tverberg/geometry.hpp"
#include "tverberg/linear_feasibility.hpp"
#include "tverberg/planar.hpp"
#include "tverberg/space3.hpp"

#include <algorithm>

namespace tverberg {

RealPartition real_tverberg_bruteforce(const PointMultiset& X, int m) {
  if (m < 1) throw InvalidInput("real_tverberg_bruteforce: m must be positive");
  const int needed = (m - 1) * (X.dim() + 1) + 1;
  if (X.size() < needed)
    throw PreconditionViolated("real_tverberg_bruteforce: " + std::to_string(X.size()) + " points, at least " +
                               std::to_string(needed) + " required");
  std::vector<int> mult;
  for (const auto& e : X.entries()) mult.push_back(e.multiplicity);
  std::optional<RealPartition> found;
  for_each_multiset_partition(mult, m, [&](const std::vector<PartCounts>& counts) {
    auto parts = parts_from_counts(X, counts);
    auto p = polytope_intersection_point(parts);
    if (!p) return true;
    found = RealPartition{std::move(parts), *p};
    return false;
  });
  if (!found) throw InternalError("real_tverberg_bruteforce: no partition although the size guarantees one");
  return std::move(*found);
}

RealPartition median_partition(const std::vector<RatPoint>& sorted, int t) {
  const int n = static_cast<int>(sorted.size());
  if (t < 1 || n < 2 * t - 1)
    throw PreconditionViolated("median_partition: " + std::to_string(n) + " points, at least " +
                               std::to_string(2 * t - 1) + " required");
  const int d = static_cast<int>(sorted.front().size());
  RealPartition out;
  for (int i = 0; i + 1 < t; ++i)
    out.parts.push_back(PointMultiset(d, {sorted[static_cast<std::size_t>(i)], sorted[static_cast<std::size_t>(n - 1 - i)]}));
  std::vector<RatPoint> middle(sorted.begin() + (t - 1), sorted.end() - (t - 1));
  out.parts.push_back(PointMultiset(d, middle));
  out.point = sorted[static_cast<std::size_t>(t - 1)];
  return out;
}

RatPoint fiber_lift(const PointMultiset& Q, const RatPoint& q) {
  if (Q.empty()) throw InvalidInput("fiber_lift: empty multiset");
  const Eigen::Index j = q.size();
  if (j > Q.dim()) throw DimensionMismatch("fiber_lift: base point has more coordinates than the points");
  const Eigen::Index n = static_cast<Eigen::Index>(Q.num_entries());
  RatMatrix A(j + 1, n);
  RatVector b(j + 1);
  for (Eigen::Index e = 0; e < n; ++e) {
    A.col(e).head(j) = Q.point(static_cast<std::size_t>(e)).head(j);
    A(j, e) = 1;
  }
  b.head(j) = q;
  b[j] = 1;
  auto res = solve_linear_program<Rational>(A, b);
  if (!res.feasible()) throw Infeasible("fiber_lift: " + to_string(q) + " is not in the projected hull");
  RatPoint p = RatPoint::Zero(Q.dim());
  for (Eigen::Index e = 0; e < n; ++e)
    if (res.x[e] != 0) p += Q.point(static_cast<std::size_t>(e)) * res.x[e];
  return p;
}

int lattice_tverberg_bound(int j, int t) {
  if (t < 1) throw InvalidInput("lattice_tverberg_bound: t must be positive");
  if (t == 1) return 1;
  switch (j) {
    case 1:
      return 2 * t - 1;
    case 2:
      return t == 2 ? 6 : 4 * t - 3;
    case 3:
      return 24 * t - 31;
    default:
      throw InvalidInput("lattice_tverberg_bound: j must be 1, 2 or 3");
  }
}

namespace {

/// Assigns instances of A to parts whose projections to the first j
/// coordinates are the given multisets; instances are taken in instance order.
std::vector<PointMultiset> lift_parts(const PointMultiset& A, int j, const std::vector<PointMultiset>& projected) {
  const auto inst = A.instances();
  std::vector<char> used(inst.size(), 0);
  std::vector<PointMultiset> out;
  for (const auto& part : projected) {
    PointMultiset lifted(A.dim());
    for (const auto& e : part.entries()) {
      int need = e.multiplicity;
      for (std::size_t i = 0; i < inst.size() && need > 0; ++i) {
        if (used[i] || !equal(RatVector(inst[i].head(j)), e.point)) continue;
        used[i] = 1;
        lifted.add(inst[i]);
        --need;
      }
      if (need > 0) throw InternalError("product_tverberg: projected part does not come from A");
    }
    out.push_back(std::move(lifted));
  }
  return out;
}

}  // namespace

TverbergCertificate product_tverberg(const PointMultiset& A, int m, int j, int k, LiftRecord* record) {
  if (j < 1 || j > 3) throw InvalidInput("product_tverberg: j must be 1, 2 or 3");
  if (k < 0) throw InvalidInput("product_tverberg: k must be nonnegative");
  if (m < 1) throw InvalidInput("product_tverberg: m must be positive");
  require_same_dim(A.dim(), j + k, "product_tverberg");
  const AmbientSet ambient = AmbientSet::mixed(j, k);
  for (const auto& e : A.entries())
    if (!ambient.contains(e.point))
      throw PreconditionViolated("product_tverberg: point " + to_string(e.point) + " is not in " + ambient.describe());
  const int t = (m - 1) * (k + 1) + 1;
  const int required = lattice_tverberg_bound(j, t);
  if (A.size() < required)
    throw PreconditionViolated("product_tverberg: " + std::to_string(A.size()) + " points, at least " +
                               std::to_string(required) + " required");

  // Lattice step on the projection.
  const PointMultiset P = A.project(0, j);
  std::vector<PointMultiset> projected;
  RatPoint q;
  if (t == 1) {
    projected = {P};
    q = integer_centerpoint(P, 1).point;
  } else if (j == 1) {
    RealPartition med = median_partition(P.instances(), t);
    projected = std::move(med.parts);
    q = med.point;
  } else {
    TverbergCertificate base = j == 2 ? plane_tverberg(P, t, AmbientSet::integer_lattice(2)) : z3_tverberg(P, t);
    projected = std::move(base.parts);
    q = base.point;
  }
  std::vector<PointMultiset> Q = lift_parts(A, j, projected);

  // Fiber step: one point of each conv(Q_i) over q, then a real partition.
  std::vector<RatPoint> lifted;
  for (const auto& part : Q) lifted.push_back(fiber_lift(part, q));
  std::vector<std::vector<int>> groups;
  RatVector fiber_point(k);
  if (k == 0) {
    for (int i = 0; i < t; ++i) groups.push_back({i});
  } else {
    std::vector<RatPoint> tails;
    for (const auto& x : lifted) tails.push_back(x.tail(k));
    RealPartition real = real_tverberg_bruteforce(PointMultiset(k, tails), m);
    std::vector<char> taken(tails.size(), 0);
    for (const auto& part : real.parts) {
      std::vector<int> group;
      for (const auto& e : part.entries()) {
        int need = e.multiplicity;
        for (std::size_t i = 0; i < tails.size() && need > 0; ++i)
          if (!taken[i] && equal(tails[i], e.point)) {
            taken[i] = 1;
            group.push_back(static_cast<int>(i));
            --need;
          }
      }
      groups.push_back(std::move(group));
    }
    fiber_point = real.point;
  }

  RatPoint p(j + k);
  p.head(j) = q;
  p.tail(k) = fiber_point;
  std::vector<PointMultiset> parts;
  for (const auto& group : groups) {
    PointMultiset merged(A.dim());
    for (int i : group) merged = multiset_union(merged, Q[static_cast<std::size_t>(i)]);
    parts.push_back(std::move(merged));
  }
  TverbergCertificate cert = make_certificate(A, std::move(parts), p, ambient);
  if (record) {
    record->t = t;
    record->projection_parts = std::move(Q);
    record->base_point = q;
    record->fiber_points = std::move(lifted);
    record->fiber_partition = std::move(groups);
    record->final_point = p;
  }
  return cert;
}

PointMultiset double_witness(const PointMultiset& A, int at) {
  if (at < 0 || at > A.dim()) throw InvalidInput("double_witness: coordinate index out of range");
  PointMultiset out(A.dim() + 1);
  for (const auto& e : A.entries())
    for (int layer = 0; layer < 2; ++layer) {
      RatPoint p(A.dim() + 1);
      p.head(at) = e.point.head(at);
      p[at] = layer;
      p.tail(A.dim() - at) = e.point.tail(A.dim() - at);
      out.add(p, e.multiplicity);
    }
  return out;
}

}  // namespace tverberg
