#include "tverberg/depth.hpp"

#include "tverberg/arrangement.hpp"
#include "tverberg/errors.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include <limits>
#include <map>
#include <atomic>
#include <numeric>
#include <thread>

namespace tverberg {

namespace {

template <typename Int>
Int convert(const BigInt& v) {
  if constexpr (std::is_same_v<Int, BigInt>)
    return v;
  else
    return to_int128(v);
}

template <typename Int>
BigInt widen(const Int& v) {
  if constexpr (std::is_same_v<Int, BigInt>)
    return v;
  else
    return to_bigint(v);
}

/// Directions x = a - q (all nonzero) with weights. Positive multiples of
/// one direction are merged.
template <typename Int>
struct DirectionSet {
  int dim = 0;
  std::vector<std::vector<Int>> vectors;
  std::vector<int> weights;

  void add(std::vector<Int> v, int w) {
    Int g = 0;
    for (const auto& x : v) g = detail::gcd_value(g, x);
    if (g > 1)
      for (auto& x : v) x /= g;
    auto [it, inserted] = index_.emplace(v, vectors.size());
    if (inserted) {
      vectors.push_back(std::move(v));
      weights.push_back(w);
    } else {
      weights[it->second] += w;
    }
  }

 private:
  std::map<std::vector<Int>, std::size_t> index_;
};

struct OpenMinimum {
  long long value = std::numeric_limits<long long>::max();
  std::vector<std::vector<BigInt>> chain;
};

/// Minimum weight of the positive side over all cells. Stops as soon as a
/// cell of weight <= stop_at is seen.
template <typename Int>
OpenMinimum open_minimum(DirectionSet<Int> dirs, long long stop_at, bool want_chain) {
  OpenMinimum best;
  if (dirs.vectors.empty()) {
    best.value = 0;
    return best;
  }
  CentralArrangement<Int> arr(dirs.dim, std::move(dirs.vectors), std::move(dirs.weights));
  arr.for_each_cell([&](const std::vector<char>&, long long weight, const std::vector<std::vector<Int>>& chain) {
    if (weight < best.value) {
      best.value = weight;
      if (want_chain) {
        best.chain.clear();
        for (const auto& c : chain) {
          std::vector<BigInt> w;
          for (const auto& x : c) w.push_back(widen<Int>(x));
          best.chain.push_back(std::move(w));
        }
      }
    }
    return best.value > stop_at && best.value > 0;
  });
  return best;
}

/// Integer coordinates of every entry, scaled by a common positive factor.
struct ScaledSet {
  BigInt scale = 1;
  std::vector<std::vector<BigInt>> points;
  std::vector<int> weights;
  BigInt max_abs = 0;
};

ScaledSet scale_to_integers(const PointMultiset& A) {
  ScaledSet s;
  for (const auto& e : A.entries())
    for (Eigen::Index i = 0; i < e.point.size(); ++i) {
      BigInt d = denominator_of(e.point[i]);
      s.scale = s.scale / boost::multiprecision::gcd(s.scale, d) * d;
    }
  for (const auto& e : A.entries()) {
    std::vector<BigInt> v;
    for (Eigen::Index i = 0; i < e.point.size(); ++i) {
      v.push_back(numerator_of(e.point[i]) * (s.scale / denominator_of(e.point[i])));
      BigInt a = boost::multiprecision::abs(v.back());
      if (a > s.max_abs) s.max_abs = a;
    }
    s.points.push_back(std::move(v));
    s.weights.push_back(e.multiplicity);
  }
  return s;
}

/// Depth of q (given by its scaled integer coordinates) against a scaled
/// set; `stop_at` as in open_minimum.
template <typename Int>
std::pair<int, OpenMinimum> scaled_depth(const std::vector<std::vector<Int>>& pts, const std::vector<int>& weights,
                                         const std::vector<Int>& q, long long stop_at, bool want_chain) {
  DirectionSet<Int> dirs;
  dirs.dim = static_cast<int>(q.size());
  int base = 0;
  for (std::size_t e = 0; e < pts.size(); ++e) {
    std::vector<Int> x(q.size());
    bool zero = true;
    for (std::size_t i = 0; i < q.size(); ++i) {
      x[i] = pts[e][i] - q[i];
      zero = zero && x[i] == 0;
    }
    if (zero)
      base += weights[e];
    else
      dirs.add(std::move(x), weights[e]);
  }
  OpenMinimum m = open_minimum<Int>(std::move(dirs), stop_at - base, want_chain);
  return {base + static_cast<int>(m.value), std::move(m)};
}

/// Realizes a lexicographic chain as a concrete direction
/// sum_i B^(L-i) c_i, doubling B until the half-space it defines contains
/// exactly the expected number of points.
HalfSpace realize(const std::vector<std::vector<BigInt>>& chain, const RatPoint& q, const PointMultiset& A,
                  int expected) {
  const Eigen::Index d = q.size();
  for (unsigned shift = 1; shift < 4096; shift *= 2) {
    RatVector u = RatVector::Zero(d);
    for (std::size_t i = 0; i < chain.size(); ++i) {
      BigInt factor = BigInt(1) << (shift * (chain.size() - 1 - i));
      for (Eigen::Index c = 0; c < d; ++c) u[c] += to_rational(chain[i][static_cast<std::size_t>(c)] * factor);
    }
    HalfSpace h = HalfSpace::through(u, q);
    if (h.count(A) == expected) return h;
  }
  throw InternalError("could not realize depth witness direction");
}

template <typename Int>
std::vector<std::vector<Int>> narrow(const ScaledSet& s) {
  std::vector<std::vector<Int>> out;
  for (const auto& p : s.points) {
    std::vector<Int> v;
    for (const auto& x : p) v.push_back(convert<Int>(x));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<BigInt> scaled_query(const RatPoint& q, const BigInt& scale) {
  std::vector<BigInt> out;
  for (Eigen::Index i = 0; i < q.size(); ++i) {
    Rational v = q[i] * to_rational(scale);
    if (!is_integer(v)) throw InternalError("query not on the scaled grid");
    out.push_back(numerator_of(v));
  }
  return out;
}

/// Scale A and q jointly so both become integral.
ScaledSet scale_with_query(const PointMultiset& A, const RatPoint& q) {
  PointMultiset joint = A;
  joint.add(q);
  ScaledSet s = scale_to_integers(joint);
  ScaledSet a = scale_to_integers(A);
  a.points.clear();
  a.scale = s.scale;
  a.max_abs = 0;
  for (const auto& e : A.entries()) {
    std::vector<BigInt> v;
    for (Eigen::Index i = 0; i < e.point.size(); ++i) {
      v.push_back(numerator_of(e.point[i] * to_rational(s.scale)));
      BigInt m = boost::multiprecision::abs(v.back());
      if (m > a.max_abs) a.max_abs = m;
    }
    a.points.push_back(std::move(v));
  }
  return a;
}

template <typename Int>
std::pair<int, OpenMinimum> depth_dispatch_impl(const ScaledSet& s, const std::vector<BigInt>& q, long long stop_at,
                                               bool want_chain) {
  auto pts = narrow<Int>(s);
  std::vector<Int> qi;
  for (const auto& x : q) qi.push_back(convert<Int>(x));
  return scaled_depth<Int>(pts, s.weights, qi, stop_at, want_chain);
}

std::pair<int, OpenMinimum> depth_dispatch(const PointMultiset& A, const RatPoint& q, long long stop_at,
                                           bool want_chain) {
  ScaledSet s = scale_with_query(A, q);
  std::vector<BigInt> qs = scaled_query(q, s.scale);
  BigInt bound = s.max_abs;
  for (const auto& x : qs)
    if (boost::multiprecision::abs(x) > bound) bound = boost::multiprecision::abs(x);
  // Differences a - q at most double the magnitude.
  if (fits_fast_kernel(A.dim(), bound * 2)) return depth_dispatch_impl<Int128>(s, qs, stop_at, want_chain);
  return depth_dispatch_impl<BigInt>(s, qs, stop_at, want_chain);
}

}  // namespace

DepthWitness halfspace_depth(const RatPoint& q, const PointMultiset& A) {
  require_same_dim(static_cast<int>(q.size()), A.dim(), "halfspace_depth");
  if (A.dim() < 1) throw InvalidInput("halfspace_depth: dimension must be positive");
  if (A.empty()) {
    RatVector e = RatVector::Zero(q.size());
    e[0] = 1;
    return {0, HalfSpace::through(e, q)};
  }
  auto [depth, om] = depth_dispatch(A, q, -1, true);
  DepthWitness w;
  w.depth = depth;
  if (om.chain.empty()) {
    RatVector e = RatVector::Zero(q.size());
    e[0] = 1;
    w.halfspace = HalfSpace::through(e, q);
    if (w.halfspace.count(A) != depth) throw InternalError("degenerate depth witness mismatch");
  } else {
    w.halfspace = realize(om.chain, q, A, depth);
  }
  return w;
}

bool depth_exceeds(const RatPoint& q, const PointMultiset& A, int bound) {
  require_same_dim(static_cast<int>(q.size()), A.dim(), "depth_exceeds");
  if (A.empty()) return 0 > bound;
  return depth_dispatch(A, q, bound, false).first > bound;
}

namespace {

/// Small integer directions whose closed half-space counts bound the depth
/// from above: axes, then face and body diagonals.
template <typename Int>
std::vector<std::vector<Int>> probe_directions(std::size_t d) {
  std::vector<std::vector<Int>> dirs;
  std::vector<int> v(d, -1);
  for (;;) {
    // Keep one of each antipodal pair: first nonzero entry positive.
    auto first = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
    if (first != v.end() && *first > 0) {
      std::vector<Int> w(v.begin(), v.end());
      dirs.push_back(std::move(w));
    }
    std::size_t i = 0;
    while (i < d && v[i] == 1) v[i++] = -1;
    if (i == d) break;
    ++v[i];
  }
  std::stable_sort(dirs.begin(), dirs.end(), [](const auto& x, const auto& y) {
    auto nz = [](const auto& w) { return std::count_if(w.begin(), w.end(), [](const Int& c) { return c != 0; }); };
    return nz(x) < nz(y);
  });
  return dirs;
}

/// Upper bound on depth from a fixed family of directions: for each, the
/// smaller of the two closed half-space counts at q.
template <typename Int>
class DepthBound {
 public:
  DepthBound(const std::vector<std::vector<Int>>& pts, const std::vector<int>& weights, std::size_t d)
      : dirs_(probe_directions<Int>(d)) {
    for (const auto& v : dirs_) {
      std::vector<std::pair<Int, int>> proj;
      for (std::size_t e = 0; e < pts.size(); ++e) proj.push_back({dot(v, pts[e]), weights[e]});
      std::sort(proj.begin(), proj.end());
      Projection p;
      p.total = 0;
      for (const auto& [val, w] : proj) {
        p.values.push_back(val);
        p.prefix.push_back(p.total);
        p.total += w;
      }
      projections_.push_back(std::move(p));
    }
  }

  int operator()(const std::vector<Int>& q) const {
    int ub = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < dirs_.size(); ++i) {
      const Projection& p = projections_[i];
      const Int t = dot(dirs_[i], q);
      // below: weight with value < t; at_most: weight with value <= t.
      auto lo = std::lower_bound(p.values.begin(), p.values.end(), t) - p.values.begin();
      auto hi = std::upper_bound(p.values.begin(), p.values.end(), t) - p.values.begin();
      const int below = lo < static_cast<long>(p.prefix.size()) ? p.prefix[static_cast<std::size_t>(lo)] : p.total;
      const int at_most = hi < static_cast<long>(p.prefix.size()) ? p.prefix[static_cast<std::size_t>(hi)] : p.total;
      ub = std::min({ub, at_most, p.total - below});
    }
    return ub;
  }

 private:
  struct Projection {
    std::vector<Int> values;
    std::vector<int> prefix;  // weight strictly before each index
    int total = 0;
  };

  static Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  }

  std::vector<std::vector<Int>> dirs_;
  std::vector<Projection> projections_;
};

/// Deepest lattice point of the box, lexicographically first among ties.
///
/// Phase one visits candidates in order of decreasing upper bound, keeping
/// the best depth found and stopping once no remaining bound can beat it.
/// Phase two walks the candidates in lexicographic order and returns the
/// first one reaching that depth. Both phases are exact, so the result does
/// not depend on how phase one is split across threads.
template <typename Int>
Centerpoint integer_scan(const ScaledSet& s, const std::vector<BigInt>& lo, const std::vector<BigInt>& hi, int jobs) {
  const auto pts = narrow<Int>(s);
  const std::size_t d = lo.size();
  const Int sc = convert<Int>(s.scale);
  BigInt count = 1;
  for (std::size_t i = 0; i < d; ++i) count *= hi[i] - lo[i] + 1;
  if (count > BigInt(50'000'000))
    throw BudgetExceeded("integer_centerpoint: bounding box holds too many lattice points",
                         count.convert_to<std::string>());

  // Candidates in lexicographic order, stored flat and already scaled.
  const std::size_t n = count.convert_to<std::size_t>();
  std::vector<Int> cand(n * d);
  {
    std::vector<Int> cur(d);
    for (std::size_t i = 0; i < d; ++i) cur[i] = convert<Int>(lo[i]);
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t i = 0; i < d; ++i) cand[c * d + i] = cur[i] * sc;
      for (std::size_t i = d; i-- > 0;) {
        if (cur[i] < convert<Int>(hi[i])) {
          ++cur[i];
          break;
        }
        cur[i] = convert<Int>(lo[i]);
      }
    }
  }
  auto point = [&](std::size_t c) { return std::vector<Int>(cand.begin() + c * d, cand.begin() + (c + 1) * d); };

  const DepthBound<Int> bound(pts, s.weights, d);
  std::vector<int> ub(n);
  for (std::size_t c = 0; c < n; ++c) ub[c] = bound(point(c));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return ub[a] > ub[b]; });

  std::atomic<int> best{-1};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= n) return;
      const std::size_t c = order[k];
      int cur = best.load();
      if (ub[c] <= cur) return;  // sorted: nothing later can do better
      const int depth = scaled_depth<Int>(pts, s.weights, point(c), cur, false).first;
      while (depth > cur && !best.compare_exchange_weak(cur, depth)) {
      }
    }
  };
  const int threads = std::max(1, std::min(jobs, static_cast<int>(n)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  const int target = best.load();
  Centerpoint result;
  result.depth = target;
  for (std::size_t c = 0; c < n; ++c) {
    if (ub[c] < target) continue;
    if (scaled_depth<Int>(pts, s.weights, point(c), target - 1, false).first >= target) {
      result.point = RatPoint(static_cast<Eigen::Index>(d));
      for (std::size_t i = 0; i < d; ++i)
        result.point[static_cast<Eigen::Index>(i)] = to_rational(widen<Int>(cand[c * d + i] / sc));
      return result;
    }
  }
  throw InternalError("integer_centerpoint: deepest point vanished in the second pass");
}

}  // namespace

Centerpoint integer_centerpoint(const PointMultiset& A, int m, int jobs) {
  if (m < 1) throw InvalidInput("integer_centerpoint: m must be at least 1");
  if (A.empty()) throw CenterpointNotFound("integer_centerpoint: empty multiset");
  if (jobs < 1) throw InvalidInput("integer_centerpoint: jobs must be positive");
  const int d = A.dim();
  std::vector<BigInt> lo, hi;
  for (int c = 0; c < d; ++c) {
    Rational mn = A.point(0)[c], mx = A.point(0)[c];
    for (const auto& e : A.entries()) {
      if (e.point[c] < mn) mn = e.point[c];
      if (e.point[c] > mx) mx = e.point[c];
    }
    lo.push_back(ceil_of(mn));
    hi.push_back(floor_of(mx));
    if (lo.back() > hi.back())
      throw CenterpointNotFound("integer_centerpoint: bounding box of A contains no integer point");
  }
  ScaledSet s = scale_to_integers(A);
  BigInt bound = s.max_abs;
  for (int c = 0; c < d; ++c) {
    bound = std::max(bound, BigInt(boost::multiprecision::abs(lo[static_cast<std::size_t>(c)]) * s.scale));
    bound = std::max(bound, BigInt(boost::multiprecision::abs(hi[static_cast<std::size_t>(c)]) * s.scale));
  }
  Centerpoint c = fits_fast_kernel(d, bound * 2) ? integer_scan<Int128>(s, lo, hi, jobs)
                                                 : integer_scan<BigInt>(s, lo, hi, jobs);
  if (c.depth < m)
    throw CenterpointNotFound("integer_centerpoint: deepest integer point has depth " + std::to_string(c.depth) +
                              " < " + std::to_string(m));
  return c;
}

Centerpoint finite_set_centerpoint(const PointMultiset& A, const AmbientSet& S, int m) {
  if (!S.is_finite()) throw InvalidInput("finite_set_centerpoint: ambient set must be finite");
  require_same_dim(A.dim(), S.dim(), "finite_set_centerpoint");
  Centerpoint best;
  best.depth = -1;
  for (const auto& s : S.support()) {
    int depth = A.empty() ? 0 : depth_dispatch(A, s, best.depth, false).first;
    if (depth > best.depth) {
      best.depth = depth;
      best.point = s;
    }
  }
  if (best.depth < m)
    throw CenterpointNotFound("finite_set_centerpoint: deepest point of S has depth " + std::to_string(best.depth) +
                              " < " + std::to_string(m));
  return best;
}

}  // namespace tverberg
