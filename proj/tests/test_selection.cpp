#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "tverberg/depth.hpp"
#include "tverberg/errors.hpp"
#include "tverberg/selection.hpp"

#include <cmath>

using namespace tverberg;
using testing_helpers::pt;
using testing_helpers::pts;

namespace {

PointMultiset cluster(std::mt19937_64& rng, int cx, int cy, int size) {
  PointMultiset C(2);
  while (C.size() < size) C.add(pt({cx + static_cast<int>(rng() % 3) - 1, cy + static_cast<int>(rng() % 3) - 1}));
  return C;
}

/// Every transversal checked with the barycentric oracle.
bool transversals_contain(const std::vector<PointMultiset>& parts, const RatPoint& q) {
  std::vector<std::vector<RatPoint>> inst;
  for (const auto& p : parts) inst.push_back(p.instances());
  std::vector<std::size_t> pick(inst.size(), 0);
  for (;;) {
    std::vector<RatPoint> t;
    for (std::size_t i = 0; i < inst.size(); ++i) t.push_back(inst[i][pick[i]]);
    if (!oracle::in_hull(q, t)) return false;
    std::size_t i = 0;
    while (i < inst.size() && ++pick[i] == inst[i].size()) pick[i++] = 0;
    if (i == inst.size()) return true;
  }
}

bool disjoint_within(const std::vector<PointMultiset>& parts, const PointMultiset& P) {
  PointMultiset left = P;
  for (const auto& part : parts)
    for (const auto& e : part.entries())
      if (left.remove(e.point, e.multiplicity) != e.multiplicity) return false;
  return true;
}

}  // namespace

TEST_CASE("transversal property examples") {
  std::mt19937_64 rng(1);
  std::vector<PointMultiset> clusters{cluster(rng, 0, 10, 4), cluster(rng, -9, -5, 4), cluster(rng, 9, -5, 4)};
  const RatPoint o = pt({0, 0});
  CHECK(transversal_property_verify(clusters, o));
  CHECK(transversal_property_direct(clusters, o));
  CHECK(transversals_contain(clusters, o));

  std::vector<PointMultiset> line{pts({{1, 0}}), pts({{2, 0}}), pts({{3, 0}})};
  CHECK_FALSE(transversal_property_verify(line, o));
  CHECK_FALSE(transversal_property_direct(line, o));

  std::vector<PointMultiset> with_q{pts({{0, 0}}), pts({{5, 1}}), pts({{6, 2}})};
  CHECK(transversal_property_verify(with_q, o));
  CHECK(transversal_property_direct(with_q, o));

  CHECK_THROWS_AS(transversal_property_verify({}, o), InvalidInput);
  CHECK_THROWS_AS(transversal_property_direct(clusters, o, 10), BudgetExceeded);
}

TEST_CASE("dual criterion agrees with direct enumeration") {
  std::mt19937_64 rng(3);
  int holds = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 2 + static_cast<int>(trial % 5 == 0);
    const int k = d + 1;
    PointMultiset P = oracle::random_multiset(rng, d, 3 * k, -6, 6);
    RatPoint q = oracle::random_point(rng, d, -2, 2);
    auto inst = P.instances();
    std::vector<int> lab;
    for (int i = 0; i < P.size(); ++i) lab.push_back(static_cast<int>(rng() % static_cast<unsigned>(k)));
    if (d == 2 && trial % 2 == 0) {
      // Angular sectors around q, which often have the property.
      std::vector<std::pair<double, int>> angle;
      for (std::size_t i = 0; i < inst.size(); ++i)
        angle.push_back({std::atan2((inst[i][1] - q[1]).convert_to<double>(), (inst[i][0] - q[0]).convert_to<double>()),
                         static_cast<int>(i)});
      std::sort(angle.begin(), angle.end());
      for (std::size_t i = 0; i < angle.size(); ++i)
        lab[static_cast<std::size_t>(angle[i].second)] = static_cast<int>(i * 3 / angle.size());
    }
    std::vector<PointMultiset> parts(static_cast<std::size_t>(k), PointMultiset(d));
    for (std::size_t i = 0; i < inst.size(); ++i) parts[static_cast<std::size_t>(lab[i])].add(inst[i]);
    if (std::any_of(parts.begin(), parts.end(), [](const PointMultiset& x) { return x.empty(); })) continue;
    const bool dual = transversal_property_verify(parts, q);
    CHECK(dual == transversal_property_direct(parts, q));
    if (d == 2) CHECK(dual == transversals_contain(parts, q));
    holds += dual;
  }
  CHECK(holds > 0);
}

TEST_CASE("fraction selection") {
  std::mt19937_64 rng(5);
  PointMultiset P = multiset_union(multiset_union(cluster(rng, 0, 10, 4), cluster(rng, -9, -5, 4)),
                                   cluster(rng, 9, -5, 4));
  const RatPoint o = pt({0, 0});
  auto res = fraction_selection(P, o, 4);
  CHECK(res.subsets.size() == 3);
  CHECK(res.min_size >= 4);
  CHECK(transversals_contain(res.subsets, o));
  CHECK(disjoint_within(res.subsets, P));

  auto hex = pts({{2, 0}, {1, 2}, {-1, 2}, {-2, 0}, {-1, -2}, {1, -2}});
  res = fraction_selection(hex, o, 2);
  CHECK(res.min_size == 2);
  CHECK(transversals_contain(res.subsets, o));
  CHECK_THROWS_AS(fraction_selection(hex, o, 3), NotFound);
  CHECK_THROWS_AS(fraction_selection(hex, pt({9, 9}), 1), PreconditionViolated);

  // Monotone in the requested size.
  for (int s = 1; s <= 4; ++s) CHECK(fraction_selection(P, o, s).min_size >= s);

  PointMultiset P3 = oracle::random_multiset(rng, 3, 24, -5, 5);
  auto c3 = integer_centerpoint(P3, 1);
  auto r3 = fraction_selection(P3, c3.point, 1, 7);
  CHECK(r3.subsets.size() == 4);
  CHECK(transversal_property_direct(r3.subsets, c3.point));
}

TEST_CASE("fraction selection on clustered instances") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<int> sizes;
    for (int i = 0; i < 3; ++i) sizes.push_back(4 + static_cast<int>(rng() % 7));
    PointMultiset P = multiset_union(multiset_union(cluster(rng, 0, 10, sizes[0]), cluster(rng, -9, -5, sizes[1])),
                                     cluster(rng, 9, -5, sizes[2]));
    auto q = integer_centerpoint(P, 1).point;
    const int want = P.size() / 6;
    auto res = fraction_selection(P, q, want);
    CHECK(res.min_size >= want);
    CHECK(transversal_property_direct(res.subsets, q));
    CHECK(disjoint_within(res.subsets, P));
  }
}

TEST_CASE("depth partitions") {
  PointMultiset P(2);
  P.add(pt({0, 10}), 4);
  P.add(pt({-9, -5}), 4);
  P.add(pt({9, -5}), 4);
  auto res = depth_partition_search(P, Rational(1, 3), 3);
  REQUIRE(res.parts.size() == 3);
  CHECK_FALSE(res.deep_points.empty());
  for (const auto& x : res.deep_points) {
    CHECK(halfspace_depth(x, P).depth >= 4);
    CHECK(transversals_contain(res.parts, x));
  }
  for (const auto& part : res.parts) {
    CHECK(part.size() >= 2);
    CHECK(part.size() <= 8);
  }

  auto square = pts({{0, 0}, {4, 0}, {0, 4}, {4, 4}});
  auto single = depth_partition_search(square, Rational(1), 4);
  CHECK(single.deep_points.empty());
  for (const auto& part : single.parts) CHECK(part.size() == 1);

  CHECK_THROWS_AS(depth_partition_search(P, Rational(1, 3), 2), PreconditionViolated);
  CHECK_THROWS_AS(depth_partition_search(P, Rational(0), 3), InvalidInput);
}
