#include "tverberg/selection.hpp"

#include "tverberg/arrangement.hpp"
#include "tverberg/depth.hpp"
#include "tverberg/errors.hpp"
#include "tverberg/geometry.hpp"
#include "tverberg/planar.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <random>

namespace tverberg {

namespace {

void require_parts(const std::vector<PointMultiset>& parts, const RatPoint& q, const char* what) {
  if (parts.empty()) throw InvalidInput(std::string(what) + ": no parts");
  for (const auto& part : parts) {
    if (part.empty()) throw InvalidInput(std::string(what) + ": empty part");
    require_same_dim(part.dim(), static_cast<int>(q.size()), what);
  }
}

std::vector<BigInt> as_std(const VectorX<BigInt>& v) { return std::vector<BigInt>(v.data(), v.data() + v.size()); }

}  // namespace

bool transversal_property_verify(const std::vector<PointMultiset>& parts, const RatPoint& q) {
  require_parts(parts, q, "transversal_property_verify");
  std::map<std::vector<BigInt>, int> index;
  std::vector<std::vector<BigInt>> dirs;
  std::vector<std::vector<int>> members(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const auto& e : parts[i].entries()) {
      RatVector v = e.point - q;
      if (v.isZero()) continue;
      auto key = as_std(primitive_integer_vector(v));
      auto [it, inserted] = index.emplace(key, static_cast<int>(dirs.size()));
      if (inserted) dirs.push_back(key);
      members[i].push_back(it->second);
    }
    // A part made only of copies of q puts q into every transversal.
    if (members[i].empty()) return true;
  }
  std::vector<int> weights(dirs.size(), 1);
  CentralArrangement<BigInt> arr(static_cast<int>(q.size()), dirs, weights);
  return arr.for_each_cell([&](const std::vector<char>& positive, long long, const auto&) {
    for (const auto& m : members)
      if (std::none_of(m.begin(), m.end(), [&](int k) { return positive[static_cast<std::size_t>(k)]; }))
        return true;  // this part stays in the closed negative side
    return false;     // an open half-space meets every part
  });
}

bool transversal_property_direct(const std::vector<PointMultiset>& parts, const RatPoint& q, std::uint64_t limit) {
  require_parts(parts, q, "transversal_property_direct");
  BigInt total = 1;
  for (const auto& p : parts) total *= p.num_entries();
  if (total > BigInt(limit))
    throw BudgetExceeded("transversal_property_direct: " + total.str() + " transversals exceed the limit",
                         total.str());
  std::vector<std::size_t> pick(parts.size(), 0);
  for (;;) {
    std::vector<RatPoint> t;
    for (std::size_t i = 0; i < parts.size(); ++i) t.push_back(parts[i].point(pick[i]));
    if (!in_hull(q, PointMultiset(static_cast<int>(q.size()), t))) return false;
    std::size_t i = 0;
    while (i < parts.size() && ++pick[i] == parts[i].num_entries()) pick[i++] = 0;
    if (i == parts.size()) return true;
  }
}

namespace {

using Groups = std::vector<std::vector<int>>;

std::vector<PointMultiset> build(const std::vector<RatPoint>& inst, const Groups& groups, int dim) {
  std::vector<PointMultiset> out;
  for (const auto& g : groups) {
    PointMultiset part(dim);
    for (int i : g) part.add(inst[static_cast<std::size_t>(i)]);
    out.push_back(std::move(part));
  }
  return out;
}

class Selector {
 public:
  Selector(const PointMultiset& P, const RatPoint& q, std::uint64_t seed, int restarts)
      : dim_(P.dim()), q_(q), seed_(seed), restarts_(restarts) {
    // Copies of q are left out; they never help a transversal avoid q, and
    // the windows below are defined by directions.
    for (const auto& p : P.instances())
      if (!equal(p, q)) inst_.push_back(p);
    if (dim_ == 2) {
      const PointMultiset rest(2, inst_);
      const RadialOrder order = radial_order(rest, q);
      inst_ = order.points;
    }
  }

  std::optional<Groups> find(int s) const { return dim_ == 2 ? find_windows(s) : find_random(s); }

  bool valid(const Groups& g) const { return transversal_property_verify(build(inst_, g, dim_), q_); }

  /// Adds unused points while the property survives, smallest subset first.
  void grow(Groups& g) const {
    std::vector<char> used(inst_.size(), 0);
    for (const auto& part : g)
      for (int i : part) used[static_cast<std::size_t>(i)] = 1;
    for (bool changed = true; changed;) {
      changed = false;
      std::vector<std::size_t> order(g.size());
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return g[a].size() < g[b].size(); });
      for (std::size_t k : order) {
        for (std::size_t i = 0; i < inst_.size(); ++i) {
          if (used[i]) continue;
          g[k].push_back(static_cast<int>(i));
          if (valid(g)) {
            used[i] = 1;
            changed = true;
            break;
          }
          g[k].pop_back();
        }
      }
    }
  }

  int available() const { return static_cast<int>(inst_.size()); }
  const std::vector<RatPoint>& instances() const { return inst_; }

 private:
  std::optional<Groups> find_windows(int s) const {
    const int n = static_cast<int>(inst_.size());
    auto window = [&](int start) {
      std::vector<int> w;
      for (int i = 0; i < s; ++i) w.push_back((start + i) % n);
      return w;
    };
    for (int a = 0; a < n; ++a)
      for (int b = a + s; b + s <= a + n; ++b)
        for (int c = b + s; c + s <= a + n; ++c) {
          Groups g{window(a), window(b % n), window(c % n)};
          if (valid(g)) return g;
        }
    return std::nullopt;
  }

  std::optional<Groups> find_random(int s) const {
    const int k = dim_ + 1;
    std::vector<int> perm(inst_.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(seed_);
    for (int attempt = 0; attempt < restarts_; ++attempt) {
      std::shuffle(perm.begin(), perm.end(), rng);
      Groups g(static_cast<std::size_t>(k));
      for (int i = 0; i < k * s; ++i) g[static_cast<std::size_t>(i / s)].push_back(perm[static_cast<std::size_t>(i)]);
      if (valid(g)) return g;
    }
    return std::nullopt;
  }

  int dim_;
  RatPoint q_;
  std::uint64_t seed_;
  int restarts_;
  std::vector<RatPoint> inst_;
};

}  // namespace

SelectionResult fraction_selection(const PointMultiset& P, const RatPoint& q, int min_size, std::uint64_t seed,
                                   int restarts) {
  require_same_dim(P.dim(), static_cast<int>(q.size()), "fraction_selection");
  if (min_size < 1) throw InvalidInput("fraction_selection: min_size must be positive");
  if (P.empty()) throw InvalidInput("fraction_selection: empty point set");
  if (halfspace_depth(q, P).depth < 1) throw PreconditionViolated("fraction_selection: q has depth 0");
  const int k = P.dim() + 1;
  const Selector sel(P, q, seed, restarts);
  if (min_size * k > sel.available())
    throw NotFound("fraction_selection: " + std::to_string(k) + " disjoint subsets of " + std::to_string(min_size) +
                   " points need more than the " + std::to_string(sel.available()) + " points available");
  auto found = sel.find(min_size);
  if (!found) {
    int best = 0;
    for (int s = min_size - 1; s >= 1 && best == 0; --s)
      if (sel.find(s)) best = s;
    throw NotFound("fraction_selection: no subsets of size " + std::to_string(min_size) +
                   "; largest size found: " + std::to_string(best));
  }
  sel.grow(*found);
  SelectionResult out;
  out.q = q;
  out.subsets = build(sel.instances(), *found, P.dim());
  out.min_size = std::numeric_limits<int>::max();
  for (const auto& s : out.subsets) out.min_size = std::min(out.min_size, s.size());
  return out;
}

namespace {

RatPoint centroid(const PointMultiset& part) {
  RatPoint c = RatPoint::Zero(part.dim());
  for (const auto& e : part.entries()) c += e.point * Rational(e.multiplicity);
  return c / Rational(part.size());
}

}  // namespace

DepthPartition depth_partition_search(const PointMultiset& P, const Rational& alpha, int r, std::uint64_t seed,
                                      int moves) {
  const int d = P.dim();
  const int n = P.size();
  if (alpha <= 0 || alpha > 1) throw InvalidInput("depth_partition_search: alpha must lie in (0, 1]");
  if (r < d + 1) throw PreconditionViolated("depth_partition_search: r must be at least dim+1");
  if (n < r) throw PreconditionViolated("depth_partition_search: fewer points than parts");
  const int threshold = static_cast<int>(ceil_of(alpha * n));
  const int lo = n / (2 * r);
  const int hi = (2 * n + r - 1) / r;

  // Deep lattice points of the bounding box.
  IntegerBox box = common_bounding_box({P}, d);
  if (box.count() > 200000) throw BudgetExceeded("depth_partition_search: bounding box too large", box.count().str());
  std::vector<RatPoint> lattice_deep;
  RatPoint center;
  int center_depth = -1;
  box.for_each([&](const RatVector& x) {
    const int depth = halfspace_depth(x, P).depth;
    if (depth >= threshold) lattice_deep.push_back(x);
    if (depth > center_depth) {
      center_depth = depth;
      center = x;
    }
  });
  if (center_depth < 0) center = P.point(0);

  // Initial sectors around the center.
  std::vector<RatPoint> inst;
  for (const auto& p : P.instances())
    if (!equal(p, center)) inst.push_back(p);
  if (d == 2 && !inst.empty()) inst = radial_order(PointMultiset(2, inst), center).points;
  for (int i = 0; i < P.multiplicity_of(center); ++i) inst.push_back(center);
  std::vector<int> label(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i) label[i] = static_cast<int>(i * static_cast<std::size_t>(r) / inst.size());

  auto parts_of = [&]() {
    std::vector<PointMultiset> parts(static_cast<std::size_t>(r), PointMultiset(d));
    for (std::size_t i = 0; i < inst.size(); ++i) parts[static_cast<std::size_t>(label[i])].add(inst[i]);
    return parts;
  };
  auto deep_points = [&](const std::vector<PointMultiset>& parts) {
    std::vector<RatPoint> deep = lattice_deep;
    for (const auto& part : parts) {
      RatPoint c = centroid(part);
      if (halfspace_depth(c, P).depth >= threshold &&
          std::none_of(deep.begin(), deep.end(), [&](const RatPoint& x) { return equal(x, c); }))
        deep.push_back(c);
    }
    return deep;
  };
  auto failures = [&](const std::vector<PointMultiset>& parts) {
    int bad = 0;
    for (const auto& x : deep_points(parts))
      if (!transversal_property_verify(parts, x)) ++bad;
    return bad;
  };

  auto parts = parts_of();
  int current = failures(parts);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, inst.size() - 1);
  std::vector<int> sizes(static_cast<std::size_t>(r), 0);
  for (int l : label) ++sizes[static_cast<std::size_t>(l)];
  for (int move = 0; move < moves && current > 0; ++move) {
    const std::size_t a = pick(rng), b = pick(rng);
    const int la = label[a], lb = label[b];
    if (la == lb) continue;
    const bool swap = rng() & 1;
    if (!swap && (sizes[static_cast<std::size_t>(la)] - 1 < std::max(lo, 1) || sizes[static_cast<std::size_t>(lb)] + 1 > hi))
      continue;
    if (swap) std::swap(label[a], label[b]);
    else label[a] = lb;
    auto trial = parts_of();
    const int f = failures(trial);
    if (f <= current) {
      current = f;
      parts = std::move(trial);
      if (!swap) {
        --sizes[static_cast<std::size_t>(la)];
        ++sizes[static_cast<std::size_t>(lb)];
      }
    } else if (swap) {
      std::swap(label[a], label[b]);
    } else {
      label[a] = la;
    }
  }
  if (current > 0)
    throw NotFound("depth_partition_search: " + std::to_string(current) + " deep points still fail after " +
                   std::to_string(moves) + " moves");
  return DepthPartition{std::move(parts), deep_points(parts)};
}

}  // namespace tverberg
