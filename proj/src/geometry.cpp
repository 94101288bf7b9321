#include "tverberg/geometry.hpp"

#include "tverberg/errors.hpp"
#include "tverberg/linear_feasibility.hpp"

#include <algorithm>
#include <functional>

namespace tverberg {

namespace {

using LP = LinearProgramResult<Rational>;

void require_hulls(const std::vector<PointMultiset>& hulls, const char* what) {
  if (hulls.empty()) throw InvalidInput(std::string(what) + ": no hulls given");
  for (const auto& h : hulls) {
    require_same_dim(h.dim(), hulls.front().dim(), what);
    if (h.empty()) throw InvalidInput(std::string(what) + ": empty hull");
  }
}

/// Joint convex-combination system for a family of hulls. Variables are one
/// block of weights per hull. Rows: each block sums to one; coordinates below
/// `fixed.size()` of every block's combination equal `fixed`; the remaining
/// coordinates of every block agree with block 0.
struct JointSystem {
  std::vector<Eigen::Index> offset;  // first variable of each block
  RatMatrix A;
  RatVector b;

  JointSystem(const std::vector<PointMultiset>& hulls, const RatVector& fixed) {
    const Eigen::Index m = static_cast<Eigen::Index>(hulls.size());
    const Eigen::Index d = hulls.front().dim();
    const Eigen::Index j = fixed.size();
    Eigen::Index vars = 0;
    for (const auto& h : hulls) {
      offset.push_back(vars);
      vars += static_cast<Eigen::Index>(h.num_entries());
    }
    const Eigen::Index rows = m + m * j + (m - 1) * (d - j);
    A = RatMatrix::Zero(rows, vars);
    b = RatVector::Zero(rows);
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < m; ++i, ++r) {
      for (std::size_t e = 0; e < hulls[i].num_entries(); ++e) A(r, offset[i] + e) = 1;
      b[r] = 1;
    }
    for (Eigen::Index i = 0; i < m; ++i)
      for (Eigen::Index c = 0; c < j; ++c, ++r) {
        for (std::size_t e = 0; e < hulls[i].num_entries(); ++e) A(r, offset[i] + e) = hulls[i].point(e)[c];
        b[r] = fixed[c];
      }
    for (Eigen::Index i = 1; i < m; ++i)
      for (Eigen::Index c = j; c < d; ++c, ++r) {
        for (std::size_t e = 0; e < hulls[i].num_entries(); ++e) A(r, offset[i] + e) = hulls[i].point(e)[c];
        for (std::size_t e = 0; e < hulls[0].num_entries(); ++e) A(r, offset[0] + e) -= hulls[0].point(e)[c];
      }
  }

  RatPoint block_zero_point(const PointMultiset& hull0, const RatVector& x) const {
    RatPoint p = RatPoint::Zero(hull0.dim());
    for (std::size_t e = 0; e < hull0.num_entries(); ++e)
      if (x[offset[0] + e] != 0) p += hull0.point(e) * x[offset[0] + e];
    return p;
  }
};

}  // namespace

namespace {

LP membership_program(const RatPoint& q, const PointMultiset& X) {
  const Eigen::Index d = X.dim();
  const Eigen::Index n = static_cast<Eigen::Index>(X.num_entries());
  RatMatrix A(d + 1, n);
  RatVector b(d + 1);
  for (Eigen::Index e = 0; e < n; ++e) {
    A.col(e).head(d) = X.point(static_cast<std::size_t>(e));
    A(d, e) = 1;
  }
  b.head(d) = q;
  b[d] = 1;
  return solve_linear_program<Rational>(A, b);
}

}  // namespace

std::optional<ConvexCoefficients> hull_membership(const RatPoint& q, const PointMultiset& X) {
  require_same_dim(static_cast<int>(q.size()), X.dim(), "hull_membership");
  if (X.empty()) throw InvalidInput("hull_membership: empty point set");
  // Fast exit: q is one of the points.
  if (auto i = X.find(q)) return ConvexCoefficients{{{*i, Rational(1)}}};
  LP res = membership_program(q, X);
  if (!res.feasible()) return std::nullopt;
  ConvexCoefficients out;
  for (Eigen::Index e = 0; e < res.x.size(); ++e)
    if (res.x[e] != 0) out.weights.push_back({static_cast<std::size_t>(e), res.x[e]});
  return out;
}

Rational hull_membership_gap(const RatPoint& q, const PointMultiset& X) {
  require_same_dim(static_cast<int>(q.size()), X.dim(), "hull_membership_gap");
  if (X.empty()) throw InvalidInput("hull_membership_gap: empty point set");
  return membership_program(q, X).infeasibility;
}

std::optional<std::vector<Rational>> positive_affine_coordinates(const std::vector<RatPoint>& X, const RatPoint& q) {
  const Eigen::Index d = q.size();
  const Eigen::Index s = static_cast<Eigen::Index>(X.size());
  if (s == 0 || s > d + 1) return std::nullopt;
  // Augmented system [x_i - q ; 1] lambda = e_{d+1}, eliminated in place.
  RatMatrix M(d + 1, s + 1);
  for (Eigen::Index i = 0; i < s; ++i) {
    M.col(i).head(d) = X[static_cast<std::size_t>(i)] - q;
    M(d, i) = 1;
  }
  M.col(s).setZero();
  M(d, s) = 1;
  Eigen::Index row = 0;
  for (Eigen::Index c = 0; c < s; ++c) {
    Eigen::Index piv = row;
    while (piv <= d && M(piv, c) == 0) ++piv;
    if (piv > d) return std::nullopt;  // affinely dependent
    M.row(piv).swap(M.row(row));
    const Rational inv = Rational(1) / M(row, c);
    M.row(row) *= inv;
    for (Eigen::Index r = 0; r <= d; ++r)
      if (r != row && M(r, c) != 0) M.row(r) -= M(r, c) * M.row(row);
    ++row;
  }
  for (Eigen::Index r = row; r <= d; ++r)
    if (M(r, s) != 0) return std::nullopt;  // q outside the affine hull
  std::vector<Rational> lambda(static_cast<std::size_t>(s));
  for (Eigen::Index i = 0; i < s; ++i) {
    if (M(i, s) <= 0) return std::nullopt;
    lambda[static_cast<std::size_t>(i)] = M(i, s);
  }
  return lambda;
}

namespace {

bool minimal_subsets_of_size(const PointMultiset& X, const RatPoint& q, std::size_t size, std::size_t start,
                             std::vector<std::size_t>& chosen, std::vector<RatPoint>& pts,
                             const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  if (chosen.size() == size) return !positive_affine_coordinates(pts, q) || visit(chosen);
  for (std::size_t e = start; e + (size - chosen.size()) <= X.num_entries(); ++e) {
    chosen.push_back(e);
    pts.push_back(X.point(e));
    const bool go = minimal_subsets_of_size(X, q, size, e + 1, chosen, pts, visit);
    chosen.pop_back();
    pts.pop_back();
    if (!go) return false;
  }
  return true;
}

}  // namespace

bool for_each_minimal_subset(const PointMultiset& X, const RatPoint& q,
                             const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  require_same_dim(static_cast<int>(q.size()), X.dim(), "for_each_minimal_subset");
  std::vector<std::size_t> chosen;
  std::vector<RatPoint> pts;
  for (std::size_t size = 1; size <= static_cast<std::size_t>(X.dim()) + 1; ++size)
    if (!minimal_subsets_of_size(X, q, size, 0, chosen, pts, visit)) return false;
  return true;
}

ConvexCoefficients caratheodory_reduce(const RatPoint& q, const PointMultiset& X, const ConvexCoefficients& coeffs) {
  require_same_dim(static_cast<int>(q.size()), X.dim(), "caratheodory_reduce");
  if (!coeffs.certifies(q, X))
    throw PreconditionViolated("caratheodory_reduce: coefficients do not certify membership");
  // Merge duplicate entry references and drop zero weights.
  std::vector<ConvexCoefficients::Weight> w;
  for (const auto& x : coeffs.weights) {
    if (x.lambda == 0) continue;
    auto it = std::find_if(w.begin(), w.end(), [&](const auto& y) { return y.entry == x.entry; });
    if (it != w.end())
      it->lambda += x.lambda;
    else
      w.push_back(x);
  }
  std::sort(w.begin(), w.end(), [](const auto& a, const auto& b) { return a.entry < b.entry; });
  const Eigen::Index d = X.dim();
  for (;;) {
    const Eigen::Index s = static_cast<Eigen::Index>(w.size());
    RatMatrix M(d + 1, s);
    for (Eigen::Index i = 0; i < s; ++i) {
      M.col(i).head(d) = X.point(w[static_cast<std::size_t>(i)].entry);
      M(d, i) = 1;
    }
    auto mu = kernel_vector<Rational>(M);
    if (!mu) break;
    // Some component is positive since the components sum to zero.
    if (std::none_of(mu->begin(), mu->end(), [](const Rational& v) { return v > 0; })) *mu = -*mu;
    std::optional<Rational> t;
    for (Eigen::Index i = 0; i < s; ++i)
      if ((*mu)[i] > 0) {
        Rational r = w[static_cast<std::size_t>(i)].lambda / (*mu)[i];
        if (!t || r < *t) t = r;
      }
    for (Eigen::Index i = 0; i < s; ++i) w[static_cast<std::size_t>(i)].lambda -= *t * (*mu)[i];
    w.erase(std::remove_if(w.begin(), w.end(), [](const auto& x) { return x.lambda == 0; }), w.end());
  }
  ConvexCoefficients out{std::move(w)};
  if (!out.certifies(q, X)) throw InternalError("caratheodory_reduce lost the certificate");
  return out;
}

std::optional<RatPoint> polytope_intersection_point(const std::vector<PointMultiset>& hulls) {
  require_hulls(hulls, "polytope_intersection_point");
  if (hulls.size() == 1) return hulls.front().point(0);
  JointSystem sys(hulls, RatVector(0));
  LP res = solve_linear_program<Rational>(sys.A, sys.b);
  if (!res.feasible()) return std::nullopt;
  return sys.block_zero_point(hulls.front(), res.x);
}

std::optional<RatPoint> intersection_lexmin(const std::vector<PointMultiset>& hulls) {
  require_hulls(hulls, "intersection_lexmin");
  JointSystem sys(hulls, RatVector(0));
  const Eigen::Index d = hulls.front().dim();
  RatMatrix A = sys.A;
  RatVector b = sys.b;
  RatPoint best(d);
  for (Eigen::Index c = 0; c < d; ++c) {
    RatVector cost = RatVector::Zero(A.cols());
    for (std::size_t e = 0; e < hulls[0].num_entries(); ++e) cost[sys.offset[0] + e] = hulls[0].point(e)[c];
    LP res = solve_linear_program<Rational>(A, b, &cost);
    if (!res.feasible()) return std::nullopt;
    if (res.status == LP::Status::Unbounded) throw InternalError("bounded intersection reported unbounded");
    best[c] = res.objective;
    // Pin this coordinate before minimizing the next one.
    A.conservativeResize(A.rows() + 1, Eigen::NoChange);
    b.conservativeResize(b.size() + 1);
    A.row(A.rows() - 1) = cost.transpose();
    b[b.size() - 1] = res.objective;
  }
  return best;
}

bool IntegerBox::empty() const {
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (lo[i] > hi[i]) return true;
  return false;
}

BigInt IntegerBox::count() const {
  if (empty()) return 0;
  BigInt c = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) c *= hi[i] - lo[i] + 1;
  return c;
}

IntegerBox common_bounding_box(const std::vector<PointMultiset>& hulls, int coords) {
  IntegerBox box;
  for (int c = 0; c < coords; ++c) {
    std::optional<Rational> lo, hi;
    for (const auto& h : hulls) {
      Rational hlo = h.point(0)[c], hhi = h.point(0)[c];
      for (const auto& e : h.entries()) {
        if (e.point[c] < hlo) hlo = e.point[c];
        if (e.point[c] > hhi) hhi = e.point[c];
      }
      if (!lo || hlo > *lo) lo = hlo;
      if (!hi || hhi < *hi) hi = hhi;
    }
    box.lo.push_back(ceil_of(*lo));
    box.hi.push_back(floor_of(*hi));
  }
  return box;
}

std::vector<RatPoint> lattice_points_in_intersection(const std::vector<PointMultiset>& hulls, const AmbientSet& S) {
  require_hulls(hulls, "lattice_points_in_intersection");
  require_same_dim(hulls.front().dim(), S.dim(), "lattice_points_in_intersection");
  std::vector<RatPoint> found;
  if (!polytope_intersection_point(hulls)) return found;

  const int j = S.base_dim();
  auto decide = [&](const RatVector& base) {
    if (S.real_dims() == 0) {
      for (const auto& h : hulls)
        if (!in_hull(base, h)) return;
      found.push_back(base);
      return;
    }
    JointSystem sys(hulls, base);
    LP res = solve_linear_program<Rational>(sys.A, sys.b);
    if (!res.feasible()) return;
    found.push_back(sys.block_zero_point(hulls.front(), res.x));
  };

  if (S.kind() == AmbientSet::Kind::Lattice) {
    if (j == 0) {
      decide(RatVector(0));
      return found;
    }
    common_bounding_box(hulls, j).for_each(decide);
  } else {
    for (const auto& s : S.support()) decide(s);
  }
  return found;
}

}  // namespace tverberg
