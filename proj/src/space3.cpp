#include "tverberg/space3.hpp"

#include "tverberg/depth.hpp"
#include "tverberg/errors.hpp"
#include "tverberg/geometry.hpp"

#include <optional>
#include <random>

namespace tverberg {

namespace {

/// The entries `chosen` of X as a multiset, with the positive weights
/// certifying p.
std::pair<PointMultiset, ConvexCoefficients> minimal_part(const PointMultiset& X, const RatPoint& p,
                                                          const std::vector<std::size_t>& chosen) {
  std::vector<RatPoint> pts;
  for (std::size_t e : chosen) pts.push_back(X.point(e));
  auto lambda = positive_affine_coordinates(pts, p);
  if (!lambda) throw InternalError("minimal subset lost its coordinates");
  PointMultiset part(X.dim(), pts);
  ConvexCoefficients proof;
  for (std::size_t i = 0; i < pts.size(); ++i) proof.weights.push_back({*part.find(pts[i]), (*lambda)[i]});
  return {std::move(part), std::move(proof)};
}

std::optional<std::vector<std::size_t>> first_minimal_subset(const PointMultiset& X, const RatPoint& p) {
  std::optional<std::vector<std::size_t>> found;
  for_each_minimal_subset(X, p, [&](const std::vector<std::size_t>& s) {
    found = s;
    return false;
  });
  return found;
}

PointMultiset without(const PointMultiset& A, const PointMultiset& X) {
  PointMultiset out = A;
  for (const auto& e : X.entries()) out.remove(e.point, e.multiplicity);
  return out;
}

std::optional<Bipartition> try_split(const PointMultiset& A, const RatPoint& p, const PointMultiset& first,
                                     Bipartition::Stage stage) {
  PointMultiset second = without(A, first);
  if (first.empty() || second.empty()) return std::nullopt;
  auto proof_a = hull_membership(p, first);
  if (!proof_a) return std::nullopt;
  auto proof_b = hull_membership(p, second);
  if (!proof_b) return std::nullopt;
  return Bipartition{{first, std::move(second)}, {std::move(*proof_a), std::move(*proof_b)}, stage};
}

std::optional<Bipartition> local_search(const PointMultiset& A, const RatPoint& p, const BipartitionOptions& opt) {
  if (opt.local_moves <= 0) return std::nullopt;
  const auto inst = A.instances();
  const int n = static_cast<int>(inst.size());
  std::mt19937_64 rng(opt.seed);
  std::vector<int> side(inst.size());
  for (int& s : side) s = static_cast<int>(rng() & 1);
  side[0] = 0;
  side[1] = 1;
  auto split = [&] {
    std::array<PointMultiset, 2> parts{PointMultiset(A.dim()), PointMultiset(A.dim())};
    for (int i = 0; i < n; ++i) parts[static_cast<std::size_t>(side[static_cast<std::size_t>(i)])].add(inst[static_cast<std::size_t>(i)]);
    return parts;
  };
  auto score = [&](const std::array<PointMultiset, 2>& parts) {
    return hull_membership_gap(p, parts[0]) + hull_membership_gap(p, parts[1]);
  };
  std::array<int, 2> sizes{0, 0};
  for (int s : side) ++sizes[static_cast<std::size_t>(s)];
  auto parts = split();
  Rational current = score(parts);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int move = 0; move < opt.local_moves && current != 0; ++move) {
    const auto i = static_cast<std::size_t>(pick(rng));
    const int from = side[i];
    if (sizes[static_cast<std::size_t>(from)] == 1) continue;
    side[i] = 1 - from;
    auto trial = split();
    Rational s = score(trial);
    if (s < current) {
      current = s;
      parts = std::move(trial);
      --sizes[static_cast<std::size_t>(from)];
      ++sizes[static_cast<std::size_t>(1 - from)];
    } else {
      side[i] = from;
    }
  }
  if (current != 0) return std::nullopt;
  return try_split(A, p, parts[0], Bipartition::Stage::LocalSearch);
}

}  // namespace

PeelRecord peel_caratheodory_sets(const PointMultiset& A, const RatPoint& p, int count) {
  require_same_dim(static_cast<int>(p.size()), A.dim(), "peel_caratheodory_sets");
  if (count < 0) throw InvalidInput("peel_caratheodory_sets: negative count");
  PeelRecord rec;
  rec.remainder = A;
  for (int i = 0; i < count; ++i) {
    std::optional<std::vector<std::size_t>> chosen;
    if (!rec.remainder.empty() && in_hull(p, rec.remainder)) chosen = first_minimal_subset(rec.remainder, p);
    if (!chosen)
      throw ExtractionFailed("peel_caratheodory_sets: " + to_string(p) + " left the hull after " + std::to_string(i) +
                             " of " + std::to_string(count) + " subsets");
    auto [part, proof] = minimal_part(rec.remainder, p, *chosen);
    rec.remainder = without(rec.remainder, part);
    rec.subsets.push_back(std::move(part));
    rec.proofs.push_back(std::move(proof));
  }
  return rec;
}

const char* stage_name(Bipartition::Stage stage) {
  switch (stage) {
    case Bipartition::Stage::Seed:
      return "seed";
    case Bipartition::Stage::LocalSearch:
      return "local-search";
    case Bipartition::Stage::Exhaustive:
      return "exhaustive";
  }
  return "?";
}

Bipartition bipartition_search(const PointMultiset& A, const RatPoint& p, const BipartitionOptions& options) {
  if (A.dim() != 3) throw PreconditionViolated("bipartition_search: points must lie in dimension 3");
  require_same_dim(static_cast<int>(p.size()), 3, "bipartition_search");
  if (A.size() < 17)
    throw PreconditionViolated("bipartition_search: " + std::to_string(A.size()) + " points, at least 17 required");
  if (!depth_exceeds(p, A, 2))
    throw PreconditionViolated("bipartition_search: " + to_string(p) + " has depth below 3");

  if (options.try_seed) {
    auto first = first_minimal_subset(A, p);
    if (!first) throw InternalError("bipartition_search: no minimal subset although the depth is positive");
    if (auto b = try_split(A, p, minimal_part(A, p, *first).first, Bipartition::Stage::Seed)) return std::move(*b);
  }

  if (auto b = local_search(A, p, options)) return std::move(*b);

  std::optional<Bipartition> found;
  for_each_minimal_subset(A, p, [&](const std::vector<std::size_t>& chosen) {
    found = try_split(A, p, minimal_part(A, p, chosen).first, Bipartition::Stage::Exhaustive);
    return !found;
  });
  if (!found)
    throw SearchExhausted("bipartition_search: no two disjoint parts of the " + std::to_string(A.size()) +
                          " points contain " + to_string(p));
  return std::move(*found);
}

TverbergCertificate z3_tverberg(const PointMultiset& A, int m, const Z3Options& options, Z3Trace* trace) {
  if (m < 2) throw InvalidInput("z3_tverberg: m must be at least 2");
  if (A.dim() != 3) throw DimensionMismatch("z3_tverberg: points must lie in dimension 3");
  const AmbientSet Z3 = AmbientSet::integer_lattice(3);
  for (const auto& e : A.entries())
    if (!Z3.contains(e.point)) throw PreconditionViolated("z3_tverberg: " + to_string(e.point) + " is not integral");
  const int required = m == 2 ? 17 : 24 * m - 31;
  if (A.size() < required)
    throw PreconditionViolated("z3_tverberg: " + std::to_string(A.size()) + " points, at least " +
                               std::to_string(required) + " required");

  const Centerpoint center = integer_centerpoint(A, 3 * m - 3, options.jobs);
  const RatPoint& p = center.point;
  const int mu = A.multiplicity_of(p);
  Z3Trace local;
  Z3Trace& tr = trace ? *trace : local;
  tr.center = p;
  tr.center_depth = center.depth;
  tr.multiplicity = mu;

  std::vector<PointMultiset> parts;
  const int singles = std::min(mu, m - 1);
  for (int i = 0; i < singles; ++i) parts.push_back(PointMultiset(3, {p}));
  PointMultiset rest = A;
  rest.remove(p, singles);
  if (mu >= m - 1) {
    parts.push_back(std::move(rest));
  } else {
    tr.peel = peel_caratheodory_sets(rest, p, m - mu - 2);
    const PointMultiset& R = tr.peel.remainder;
    if (R.size() < 17)
      throw AssertionFailed("z3_tverberg: remainder has " + std::to_string(R.size()) + " points, fewer than 17");
    if (!depth_exceeds(p, R, 2)) throw AssertionFailed("z3_tverberg: remainder depth fell below 3");
    BipartitionOptions bo;
    bo.seed = options.seed;
    Bipartition split = bipartition_search(R, p, bo);
    tr.used_bipartition = true;
    tr.stage = split.stage;
    for (const auto& X : tr.peel.subsets) parts.push_back(X);
    parts.push_back(std::move(split.parts[0]));
    parts.push_back(std::move(split.parts[1]));
  }
  return make_certificate(A, std::move(parts), p, Z3);
}

}  // namespace tverberg
