#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "tverberg/depth.hpp"
#include "tverberg/errors.hpp"
#include "tverberg/planar.hpp"
#include "tverberg/product.hpp"
#include "tverberg/witnesses.hpp"

using namespace tverberg;
using testing_helpers::pt;
using testing_helpers::pts;

namespace {

const AmbientSet kZ2 = AmbientSet::integer_lattice(2);

AmbientSet unit_square() { return AmbientSet::finite({pt({0, 0}), pt({0, 1}), pt({1, 0}), pt({1, 1})}); }

}  // namespace

TEST_CASE("Onn's set has no integer Radon partition") {
  auto onn = onn_witness();
  CHECK(onn == pts({{0, 0}, {0, 1}, {2, 0}, {1, 2}, {3, 2}}));
  auto report = refute_partitions(onn, 2, kZ2);
  CHECK(report.no_partition);
  CHECK(report.examined == 15);
  CHECK(report.total == 15);
  CHECK_FALSE(oracle::integer_partition_exists(onn, 2));
}

TEST_CASE("Doignon's sets have no integer Tverberg partition") {
  auto A = doignon_witness(3);
  CHECK(A == pts({{-1, -1}, {0, 0}, {1, 1}, {2, 2}, {-1, 2}, {0, 1}, {1, 0}, {2, -1}}));
  for (int m : {3, 4, 5}) CHECK(doignon_witness(m).size() == 4 * m - 4);
  auto report = refute_partitions(A, 3, kZ2);
  CHECK(report.no_partition);
  CHECK(report.examined == 966);
  CHECK_FALSE(oracle::integer_partition_exists(A, 3));
  CHECK_THROWS_AS(doignon_witness(2), InvalidInput);
  try {
    refute_partitions(A, 3, kZ2, 10);
    FAIL("budget not enforced");
  } catch (const BudgetExceeded& e) {
    CHECK(e.remaining() == "966");
  }
}

TEST_CASE("six lattice points always have a Radon partition") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    PointMultiset A(2);
    while (A.num_entries() < 6) {
      auto p = oracle::random_point(rng, 2, -5, 5);
      if (!A.find(p)) A.add(p);
    }
    auto report = refute_partitions(A, 2, kZ2);
    REQUIRE_FALSE(report.no_partition);
    CHECK(verify_certificate(*report.certificate).ok);
    CHECK(oracle::partition_is_valid(A, report.certificate->parts, report.certificate->point, 2));
  }
}

TEST_CASE("refutation agrees with the constructive algorithm and the oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 2);
    const int n = 4 + static_cast<int>(rng() % 5);
    PointMultiset A = oracle::random_multiset(rng, 2, n, 0, 3);
    const bool none = verify_no_partition(A, m, kZ2);
    CHECK(none == !oracle::integer_partition_exists(A, m));
    if (n >= (m == 2 ? 6 : 4 * m - 3)) {
      plane_tverberg(A, m, kZ2);
      CHECK_FALSE(none);
    }
  }
}

TEST_CASE("convex lower-bound witness") {
  auto S = unit_square();
  auto W = convex_lowerbound_witness(S, 2);
  CHECK(W == pts({{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  for (const auto& s : S.support()) CHECK(halfspace_depth(s, W).depth < 2);
  CHECK(convex_lowerbound_witness(S, 1).empty());
  auto W3 = convex_lowerbound_witness(S, 3);
  CHECK(W3.size() == 8);
  CHECK(verify_no_partition(W3, 3, S));

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<RatPoint> pts_;
    for (int i = 0; i < 5; ++i) pts_.push_back(oracle::random_point(rng, 2, 0, 4));
    auto F = AmbientSet::finite(pts_);
    const int he = helly_number(F).value;
    auto Wm = convex_lowerbound_witness(F, 3);
    CHECK(Wm.size() == 2 * he);
    CHECK(verify_no_partition(Wm, 3, F));
  }
}

TEST_CASE("finite-set decision matches partition enumeration") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 80; ++trial) {
    std::vector<RatPoint> pts_;
    const int size = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < size; ++i) pts_.push_back(oracle::random_point(rng, 2, 0, 3));
    auto F = AmbientSet::finite(pts_);
    const int m = 2 + static_cast<int>(rng() % 2);
    PointMultiset A(2);
    const int n = 2 + static_cast<int>(rng() % 7);
    for (int i = 0; i < n; ++i) A.add(F.support()[rng() % F.support().size()]);
    CHECK(has_partition_in_finite_set(A, m, F) == !verify_no_partition(A, m, F));
  }
}

TEST_CASE("exact Tverberg numbers of small finite sets") {
  auto square = exact_tverberg_number(unit_square(), 2, 8);
  REQUIRE(square.value);
  CHECK(*square.value == 5);
  REQUIRE(square.lower_witness);
  CHECK(square.lower_witness->size() == 4);
  CHECK(verify_no_partition(*square.lower_witness, 2, unit_square()));

  auto single = exact_tverberg_number(AmbientSet::finite({pt({0, 0})}), 3, 5);
  REQUIRE(single.value);
  CHECK(*single.value == 3);

  auto line = AmbientSet::finite({pt({0, 0}), pt({1, 0}), pt({2, 0})});
  auto l2 = exact_tverberg_number(line, 2, 5);
  REQUIRE(l2.value);
  CHECK(*l2.value == 3);

  CHECK_FALSE(exact_tverberg_number(unit_square(), 2, 4).value);
  CHECK_THROWS_AS(exact_tverberg_number(unit_square(), 3, 20, 50), BudgetExceeded);
}

TEST_CASE("stacking lower bound") {
  const auto ZR = AmbientSet::mixed(1, 1);
  auto two = PointMultiset(1, {pt({0}), pt({1})});
  CHECK(verify_no_partition(two, 2, AmbientSet::real_space(1)));
  auto doubled = double_witness(two, 0);
  CHECK(doubled.size() == 4);
  auto report = refute_partitions(doubled, 2, ZR);
  CHECK(report.no_partition);
  CHECK(report.examined == 7);

  auto twice = double_witness(doubled, 1);
  CHECK(twice.size() == 8);
  CHECK(verify_no_partition(twice, 2, AmbientSet::mixed(2, 1)));

  auto four = PointMultiset(1, {pt({0}), pt({1}), pt({2}), pt({3})});
  CHECK(verify_no_partition(four, 3, AmbientSet::real_space(1)));
  CHECK(verify_no_partition(double_witness(four, 0), 3, ZR));

  auto onn3 = double_witness(onn_witness(), 2);
  auto r3 = refute_partitions(onn3, 2, AmbientSet::integer_lattice(3));
  CHECK(r3.no_partition);
  CHECK(r3.examined == 511);
}
