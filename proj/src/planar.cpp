#include "tverberg/planar.hpp"

#include "tverberg/errors.hpp"
#include "tverberg/geometry.hpp"
#include "tverberg/product.hpp"

#include <algorithm>
#include <numeric>

namespace tverberg {

namespace {

Rational cross(const RatVector& a, const RatVector& b) { return a[0] * b[1] - a[1] * b[0]; }
Rational dot2(const RatVector& a, const RatVector& b) { return a[0] * b[0] + a[1] * b[1]; }

/// Clockwise position of v relative to the start ray s: 0 for directions in
/// [s, s+180) clockwise, 1 for the rest.
int half_from(const RatVector& s, const RatVector& v) {
  const Rational c = cross(s, v);
  if (c < 0) return 0;
  if (c == 0 && dot2(s, v) > 0) return 0;
  return 1;
}

/// Strict clockwise order of directions starting from ray s (same ray equal).
bool clockwise_before(const RatVector& s, const RatVector& a, const RatVector& b) {
  const int ha = half_from(s, a), hb = half_from(s, b);
  if (ha != hb) return ha < hb;
  return cross(a, b) < 0;
}

bool same_ray(const RatVector& a, const RatVector& b) { return cross(a, b) == 0 && dot2(a, b) > 0; }

/// Signed side of y with respect to the closed half-plane h: >= 0 inside.
Rational side_value(const HalfSpace& h, const RatPoint& y) {
  Rational v = dot2(h.normal, y) - h.offset;
  return h.side == HalfSpace::Side::AtLeast ? v : Rational(-v);
}

struct Arc {
  int start = 0;   // position of x_1
  int length = 0;  // number of points in the arc
};

/// The points of the closed half-plane opposite to h (the complement of its
/// interior), listed clockwise: position of the first one and their count.
Arc opposite_arc(const RadialOrder& order, const HalfSpace& h) {
  if (!h.on_boundary(order.center)) throw PreconditionViolated("depth witness does not pass through the center");
  const int n = order.size();
  // Inward normal of h; the opposite half-plane starts 90 degrees clockwise
  // from it.
  RatVector u = h.normal;
  if (h.side == HalfSpace::Side::AtMost) u = -u;
  RatVector s(2);
  s << u[1], -u[0];
  Arc arc;
  int best = -1;
  for (int i = 0; i < n; ++i) {
    if (side_value(h, order.points[static_cast<std::size_t>(i)]) > 0) continue;
    ++arc.length;
    const RatVector v = order.points[static_cast<std::size_t>(i)] - order.center;
    if (best < 0 || clockwise_before(s, v, order.points[static_cast<std::size_t>(best)] - order.center)) best = i;
  }
  if (best < 0) throw PreconditionViolated("opposite half-plane holds no points");
  // Ties keep the earliest position, which is the first point of its ray.
  arc.start = best;
  for (int t = 0; t < arc.length; ++t) {
    const int pos = (arc.start + t) % n;
    if (side_value(h, order.points[static_cast<std::size_t>(pos)]) > 0)
      throw InternalError("opposite half-plane is not a contiguous arc");
  }
  return arc;
}

std::vector<int> by_instance(const RadialOrder& order, const std::vector<int>& by_position) {
  std::vector<int> labels(by_position.size(), 0);
  for (std::size_t i = 0; i < by_position.size(); ++i)
    labels[static_cast<std::size_t>(order.instance[i])] = by_position[i];
  return labels;
}

void require_depth_witness(const RadialOrder& order, const DepthWitness& w) {
  if (!w.halfspace.on_boundary(order.center))
    throw PreconditionViolated("depth witness does not pass through the center");
  int count = 0;
  for (const auto& p : order.points)
    if (w.halfspace.contains(p)) ++count;
  if (count != w.depth) throw PreconditionViolated("depth witness count does not match");
}

}  // namespace

RadialOrder radial_order(const PointMultiset& A, const RatPoint& p) {
  if (A.dim() != 2) throw InvalidInput("radial_order: points must be planar");
  require_same_dim(static_cast<int>(p.size()), 2, "radial_order");
  if (A.empty()) throw InvalidInput("radial_order: empty multiset");
  if (A.multiplicity_of(p) > 0) throw PreconditionViolated("radial_order: the center occurs in the multiset");
  const auto pts = A.instances();
  std::vector<int> idx(pts.size());
  std::iota(idx.begin(), idx.end(), 0);
  RatVector s(2);
  s << 0, 1;
  std::vector<RatVector> dir;
  for (const auto& x : pts) dir.push_back(x - p);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    const auto& va = dir[static_cast<std::size_t>(a)];
    const auto& vb = dir[static_cast<std::size_t>(b)];
    if (same_ray(va, vb)) return dot2(va, va) < dot2(vb, vb);
    return clockwise_before(s, va, vb);
  });
  RadialOrder order;
  order.center = p;
  int ray = -1;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const auto k = static_cast<std::size_t>(idx[i]);
    if (i == 0 || !same_ray(dir[k], dir[static_cast<std::size_t>(idx[i - 1])])) ++ray;
    order.instance.push_back(idx[i]);
    order.points.push_back(pts[k]);
    order.ray.push_back(ray);
  }
  return order;
}

LabelingState labeling_state(int n, int m) {
  LabelingState st;
  st.quot = n / m;
  st.rem = n % m;
  st.e = st.rem == 0 ? 0 : (st.rem + st.quot - 1) / st.quot;
  st.tail = n - st.quot * m - (st.quot - 1) * st.e;
  return st;
}

bool labels_cover_every_halfplane(const RadialOrder& order, const std::vector<int>& labels_by_instance, int m) {
  const int n = order.size();
  std::vector<RatVector> dir;
  for (const auto& x : order.points) dir.push_back(x - order.center);
  std::vector<int> seen(static_cast<std::size_t>(m) + 1);
  int stamp = 0;
  for (int r = 0; r < n; ++r) {
    if (r > 0 && order.ray[static_cast<std::size_t>(r)] == order.ray[static_cast<std::size_t>(r - 1)]) continue;
    const RatVector& x = dir[static_cast<std::size_t>(r)];
    RatVector perp(2);
    perp << -x[1], x[0];
    for (int s1 : {1, -1})
      for (int s2 : {1, -1}) {
        // Direction s1*perp + eps*s2*x: y is inside iff the pair
        // (s1 perp.y, s2 x.y) is lexicographically positive.
        ++stamp;
        int distinct = 0;
        for (int i = 0; i < n; ++i) {
          const RatVector& y = dir[static_cast<std::size_t>(i)];
          const Rational a = dot2(perp, y) * s1;
          const bool inside = a > 0 || (a == 0 && dot2(x, y) * s2 > 0);
          if (!inside) continue;
          const int lab = labels_by_instance[static_cast<std::size_t>(order.instance[static_cast<std::size_t>(i)])];
          if (lab < 1 || lab > m) return false;
          if (seen[static_cast<std::size_t>(lab)] != stamp) {
            seen[static_cast<std::size_t>(lab)] = stamp;
            ++distinct;
          }
        }
        if (distinct < m) return false;
      }
  }
  return true;
}

std::vector<int> tverberg_labeling(const RadialOrder& order, int m, const DepthWitness& depth_witness) {
  const int n = order.size();
  if (m < 3) throw PreconditionViolated("tverberg_labeling: m must be at least 3");
  if (n < 4 * m - 3)
    throw PreconditionViolated("tverberg_labeling: " + std::to_string(n) + " points, at least " +
                               std::to_string(4 * m - 3) + " required");
  if (depth_witness.depth < m)
    throw PreconditionViolated("tverberg_labeling: center has depth " + std::to_string(depth_witness.depth) +
                               " < " + std::to_string(m));
  require_depth_witness(order, depth_witness);
  const LabelingState st = labeling_state(n, m);
  if (st.tail > st.e) throw PreconditionViolated("tverberg_labeling: tail exceeds e");
  std::vector<int> by_position(static_cast<std::size_t>(n));

  if (depth_witness.depth >= m + st.e) {
    // Blocks 1..m followed by 1..e, the short blocks sharing the rem extra
    // points; every window of m+e consecutive points sees all labels.
    int pos = 0, extra = st.rem;
    while (pos < n) {
      for (int l = 1; l <= m; ++l) by_position[static_cast<std::size_t>(pos++)] = l;
      const int len = std::min(st.e, extra);
      for (int l = 1; l <= len; ++l) by_position[static_cast<std::size_t>(pos++)] = l;
      extra -= len;
    }
  } else {
    if (st.rem == 0) throw AssertionFailed("tverberg_labeling: shallow case with rem = 0");
    const Arc arc = opposite_arc(order, depth_witness.halfspace);
    if (arc.length < 2 * m)
      throw PreconditionViolated("tverberg_labeling: opposite half-plane holds " + std::to_string(arc.length) +
                                 " < 2m points");
    const int r = st.rem;
    for (int t = 0; t < n; ++t) {
      int label;
      if (t < m - r)
        label = r + 1 + t;
      else if (t < m)
        label = t - (m - r) + 1;
      else
        label = (t - m) % m + 1;
      by_position[static_cast<std::size_t>((arc.start + t) % n)] = label;
    }
  }
  auto labels = by_instance(order, by_position);
  if (!labels_cover_every_halfplane(order, labels, m))
    throw PreconditionViolated("tverberg_labeling: some half-plane misses a label");
  return labels;
}

std::vector<int> radon_labeling(const RadialOrder& order, const DepthWitness& depth_witness) {
  const int n = order.size();
  if (n < 6) throw PreconditionViolated("radon_labeling: " + std::to_string(n) + " points, at least 6 required");
  if (depth_witness.depth < 2) throw PreconditionViolated("radon_labeling: center has depth below 2");
  require_depth_witness(order, depth_witness);
  std::vector<int> by_position(static_cast<std::size_t>(n));
  if (n % 2 == 0 || depth_witness.depth >= 3) {
    // Alternating; for odd n the wrap-around puts two 1s next to each other.
    for (int t = 0; t < n; ++t) by_position[static_cast<std::size_t>(t)] = t % 2 == 0 ? 1 : 2;
  } else {
    const Arc arc = opposite_arc(order, depth_witness.halfspace);
    if (arc.length < 5) throw PreconditionViolated("radon_labeling: opposite half-plane holds fewer than 5 points");
    static constexpr int head[4] = {2, 1, 1, 2};
    for (int t = 0; t < n; ++t) {
      const int label = t < 4 ? head[t] : ((t + 1) % 2 == 1 ? 1 : 2);
      by_position[static_cast<std::size_t>((arc.start + t) % n)] = label;
    }
  }
  auto labels = by_instance(order, by_position);
  if (!labels_cover_every_halfplane(order, labels, 2))
    throw PreconditionViolated("radon_labeling: some half-plane misses a label");
  return labels;
}

bool is_helly_witness(const std::vector<RatPoint>& points, const AmbientSet& S) {
  if (points.empty()) return false;
  const int d = S.dim();
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!S.contains(points[i])) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (equal(points[i], points[j])) return false;
    std::vector<RatPoint> others;
    for (std::size_t j = 0; j < points.size(); ++j)
      if (j != i) others.push_back(points[j]);
    if (!others.empty() && in_hull(points[i], PointMultiset(d, others))) return false;
  }
  PointMultiset R(d, points);
  for (const auto& s : S.support())
    if (!R.find(s) && in_hull(s, R)) return false;
  return true;
}

namespace {

class HellySearch {
 public:
  explicit HellySearch(const AmbientSet& S) : S_(S), pts_(S.support()) {}

  HellyNumber run() {
    std::vector<int> chosen;
    extend(chosen, 0);
    return best_;
  }

 private:
  bool valid_extension(const std::vector<int>& chosen, int x) const {
    const int d = S_.dim();
    std::vector<RatPoint> set;
    for (int c : chosen) set.push_back(pts_[static_cast<std::size_t>(c)]);
    if (!set.empty() && in_hull(pts_[static_cast<std::size_t>(x)], PointMultiset(d, set))) return false;
    set.push_back(pts_[static_cast<std::size_t>(x)]);
    for (std::size_t i = 0; i + 1 < set.size(); ++i) {
      std::vector<RatPoint> others;
      for (std::size_t j = 0; j < set.size(); ++j)
        if (j != i) others.push_back(set[j]);
      if (in_hull(set[i], PointMultiset(d, others))) return false;
    }
    PointMultiset R(d, set);
    for (std::size_t s = 0; s < pts_.size(); ++s) {
      if (R.find(pts_[s])) continue;
      if (in_hull(pts_[s], R)) return false;
    }
    return true;
  }

  void extend(std::vector<int>& chosen, int from) {
    if (static_cast<int>(chosen.size()) > best_.value) {
      best_.value = static_cast<int>(chosen.size());
      best_.witness.points.clear();
      for (int c : chosen) best_.witness.points.push_back(pts_[static_cast<std::size_t>(c)]);
    }
    for (int x = from; x < static_cast<int>(pts_.size()); ++x) {
      if (!valid_extension(chosen, x)) continue;
      chosen.push_back(x);
      extend(chosen, x + 1);
      chosen.pop_back();
    }
  }

  const AmbientSet& S_;
  const std::vector<RatPoint>& pts_;
  HellyNumber best_;
};

std::vector<PointMultiset> peel_copies(const PointMultiset& A, const RatPoint& p, int copies, PointMultiset& rest) {
  std::vector<PointMultiset> parts;
  rest = A;
  rest.remove(p, copies);
  for (int i = 0; i < copies; ++i) {
    PointMultiset single(A.dim());
    single.add(p);
    parts.push_back(std::move(single));
  }
  return parts;
}

void require_points_in(const PointMultiset& A, const AmbientSet& S, const char* what) {
  for (const auto& e : A.entries())
    if (!S.contains(e.point))
      throw PreconditionViolated(std::string(what) + ": point " + to_string(e.point) + " is not in S");
}

}  // namespace

HellyNumber helly_number(const AmbientSet& S) {
  if (!S.is_finite()) throw InvalidInput("helly_number: S must be an explicit finite set");
  if (S.support().empty()) throw InvalidInput("helly_number: S is empty");
  return HellySearch(S).run();
}

TverbergCertificate helly3_tverberg(const PointMultiset& A, int m, const AmbientSet& S) {
  if (m < 1) throw InvalidInput("helly3_tverberg: m must be positive");
  if (!S.is_finite()) throw InvalidInput("helly3_tverberg: S must be finite");
  require_same_dim(A.dim(), S.dim(), "helly3_tverberg");
  require_points_in(A, S, "helly3_tverberg");
  const int he = helly_number(S).value;
  if (he > 3) throw PreconditionViolated("helly3_tverberg: He(S) = " + std::to_string(he) + " > 3");
  const int required = he * (m - 1) + 1;
  if (A.size() < required)
    throw PreconditionViolated("helly3_tverberg: " + std::to_string(A.size()) + " points, at least " +
                               std::to_string(required) + " required");
  if (m == 1) return make_certificate(A, {A}, A.point(0), S);

  if (he == 1) {
    PointMultiset rest;
    auto parts = peel_copies(A, A.point(0), m - 1, rest);
    parts.push_back(rest);
    return make_certificate(A, std::move(parts), A.point(0), S);
  }
  if (he == 2) {
    // Collinear: lexicographic order is the order along the line.
    RealPartition med = median_partition(A.instances(), m);
    return make_certificate(A, std::move(med.parts), med.point, S);
  }
  RealPartition real = real_tverberg_bruteforce(A, m);
  auto vertex = intersection_lexmin(real.parts);
  if (!vertex) throw InternalError("helly3_tverberg: intersection vanished");
  if (!S.contains(*vertex))
    throw AssertionFailed("helly3_tverberg: vertex " + to_string(*vertex) + " of the intersection is not in S");
  return make_certificate(A, std::move(real.parts), *vertex, S);
}

TverbergCertificate plane_tverberg(const PointMultiset& A, int m, const AmbientSet& S) {
  if (A.dim() != 2) throw InvalidInput("plane_tverberg: points must be planar");
  if (m < 2) throw InvalidInput("plane_tverberg: m must be at least 2");
  require_same_dim(A.dim(), S.dim(), "plane_tverberg");
  int required = 0;
  const bool lattice = S.is_integer_lattice();
  if (lattice) {
    require_points_in(A, S, "plane_tverberg");
    required = m == 2 ? 6 : 4 * m - 3;
  } else if (S.is_finite()) {
    require_points_in(A, S, "plane_tverberg");
    const int he = helly_number(S).value;
    if (he <= 3) return helly3_tverberg(A, m, S);
    required = he * (m - 1) + 1 + (m == 2 ? 1 : 0);
  } else {
    throw InvalidInput("plane_tverberg: S must be Z^2 or a finite planar set");
  }
  if (A.size() < required)
    throw PreconditionViolated("plane_tverberg: " + std::to_string(A.size()) + " points, at least " +
                               std::to_string(required) + " required");

  const Centerpoint center = lattice ? integer_centerpoint(A, m) : finite_set_centerpoint(A, S, m);
  const RatPoint& p = center.point;
  const int mu = A.multiplicity_of(p);
  PointMultiset rest;
  std::vector<PointMultiset> parts;
  if (mu >= m) {
    parts = peel_copies(A, p, m - 1, rest);
    parts.push_back(rest);
  } else {
    parts = peel_copies(A, p, mu, rest);
    const int left = m - mu;
    if (left == 1) {
      parts.push_back(rest);
    } else {
      const RadialOrder order = radial_order(rest, p);
      const DepthWitness w = halfspace_depth(p, rest);
      const auto labels = left == 2 ? radon_labeling(order, w) : tverberg_labeling(order, left, w);
      for (auto& part : parts_from_labels(rest, labels, left)) parts.push_back(std::move(part));
    }
  }
  return make_certificate(A, std::move(parts), p, S);
}

}  // namespace tverberg
