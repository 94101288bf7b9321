#include <doctest.h>

#include "oracles.hpp"
#include "tverberg/depth.hpp"
#include "tverberg/errors.hpp"

using namespace tverberg;

namespace {

PointMultiset pts(std::initializer_list<std::initializer_list<int>> list) {
  std::vector<RatPoint> v;
  for (auto p : list) {
    RatPoint x(static_cast<Eigen::Index>(p.size()));
    Eigen::Index i = 0;
    for (int c : p) x[i++] = c;
    v.push_back(x);
  }
  return PointMultiset::from_points(v);
}

RatPoint pt(std::initializer_list<Rational> c) { return make_point(c); }

void check_witness(const RatPoint& q, const PointMultiset& A, const DepthWitness& w) {
  CHECK(w.halfspace.on_boundary(q));
  CHECK(w.halfspace.count(A) == w.depth);
}

}  // namespace

TEST_CASE("depth examples") {
  auto w = halfspace_depth(pt({0, 0}), pts({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
  CHECK(w.depth == 2);
  check_witness(pt({0, 0}), pts({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}), w);
  CHECK(halfspace_depth(pt({5, 5}), PointMultiset(2)).depth == 0);
  PointMultiset triple(2);
  triple.add(pt({0, 0}), 3);
  CHECK(halfspace_depth(pt({0, 0}), triple).depth == 3);
  CHECK(halfspace_depth(pt({9, 9}), triple).depth == 0);
  CHECK_THROWS_AS(halfspace_depth(pt({0, 0, 0}), triple), DimensionMismatch);
}

TEST_CASE("depth in one dimension") {
  PointMultiset A = pts({{0}, {1}, {2}, {3}, {4}});
  CHECK(halfspace_depth(pt({2}), A).depth == 3);
  CHECK(halfspace_depth(pt({Rational(1) / 2}), A).depth == 1);
  CHECK(halfspace_depth(pt({7}), A).depth == 0);
}

TEST_CASE("depth matches the removal oracle and the direction oracle") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 2 + trial % 2;
    const int n = static_cast<int>(rng() % 9);
    PointMultiset A = oracle::random_multiset(rng, d, n, -3, 3);
    RatPoint q = oracle::random_point(rng, d, -2, 2);
    auto w = halfspace_depth(q, A);
    check_witness(q, A, w);
    CHECK(w.depth == oracle::depth_by_removal(q, A));
    CHECK(w.depth == oracle::depth_by_directions(q, A));
    CHECK(depth_exceeds(q, A, w.depth - 1));
    CHECK_FALSE(depth_exceeds(q, A, w.depth));
  }
}

TEST_CASE("depth with rational coordinates and large magnitudes") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 2 + trial % 2;
    PointMultiset A(d);
    for (int i = 0; i < 6; ++i) {
      RatPoint p = oracle::random_point(rng, d, -5, 5);
      p[0] /= Rational(1 + static_cast<int>(rng() % 3));
      A.add(p);
    }
    RatPoint q = oracle::random_point(rng, d, -1, 1);
    q[d - 1] /= 2;
    auto w = halfspace_depth(q, A);
    check_witness(q, A, w);
    CHECK(w.depth == oracle::depth_by_removal(q, A));
    // Huge coordinates take the arbitrary-precision kernel.
    const Rational big = Rational(BigInt(1) << 40);
    PointMultiset B(d);
    for (const auto& e : A.entries()) B.add(RatPoint(e.point * big), e.multiplicity);
    auto wb = halfspace_depth(RatPoint(q * big), B);
    CHECK(wb.depth == w.depth);
    check_witness(RatPoint(q * big), B, wb);
  }
}

TEST_CASE("depth properties") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 2 + trial % 2;
    PointMultiset A = oracle::random_multiset(rng, d, 7, -4, 4);
    RatPoint q = oracle::random_point(rng, d, -2, 2);
    const int base = halfspace_depth(q, A).depth;
    // Monotone under adding points.
    PointMultiset B = A;
    B.add(oracle::random_point(rng, d, -4, 4));
    CHECK(halfspace_depth(q, B).depth >= base);
    // Translation equivariant.
    RatPoint v = oracle::random_point(rng, d, -10, 10);
    PointMultiset T(d);
    for (const auto& e : A.entries()) T.add(RatPoint(e.point + v), e.multiplicity);
    CHECK(halfspace_depth(RatPoint(q + v), T).depth == base);
    // Random half-spaces through q never contain fewer points.
    for (int s = 0; s < 100; ++s) {
      RatVector u = oracle::random_point(rng, d, -20, 20);
      if (u.isZero()) continue;
      CHECK(HalfSpace::through(u, q).count(A) >= base);
    }
  }
}

TEST_CASE("integer centerpoint examples") {
  auto c = integer_centerpoint(pts({{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}}), 2);
  CHECK(equal(c.point, pt({1, 1})));
  CHECK(c.depth == 3);
  PointMultiset five(2);
  five.add(pt({0, 0}), 5);
  auto f = integer_centerpoint(five, 5);
  CHECK(equal(f.point, pt({0, 0})));
  CHECK_THROWS_AS(integer_centerpoint(pts({{0, 0}, {1, 0}, {0, 1}}), 2), CenterpointNotFound);
  // The eight-point lower-bound set for m = 3 still has depth-2 lattice points.
  PointMultiset doignon = pts({{-1, -1}, {0, 0}, {1, 1}, {2, 2}, {-1, 2}, {0, 1}, {1, 0}, {2, -1}});
  auto g = integer_centerpoint(doignon, 2);
  CHECK(g.depth >= 2);
  CHECK(halfspace_depth(g.point, doignon).depth == g.depth);
}

TEST_CASE("integer centerpoint is the lexicographically first deepest lattice point") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 2 + trial % 2;
    PointMultiset A = oracle::random_multiset(rng, d, 2 * (1 << d) + 1, -3, 3);
    auto c = integer_centerpoint(A, 1);
    int best = -1;
    RatPoint arg;
    const int lo = -3, hi = 3;
    std::vector<int> cur(static_cast<std::size_t>(d), lo);
    for (;;) {
      RatPoint q(d);
      for (int i = 0; i < d; ++i) q[i] = cur[static_cast<std::size_t>(i)];
      // Depth itself is checked against the oracles above; this test covers
      // the scan, its pruning and the tie-break.
      int depth = halfspace_depth(q, A).depth;
      if (depth > best) {
        best = depth;
        arg = q;
      }
      int i = d - 1;
      while (i >= 0 && cur[static_cast<std::size_t>(i)] == hi) cur[static_cast<std::size_t>(i--)] = lo;
      if (i < 0) break;
      ++cur[static_cast<std::size_t>(i)];
    }
    CHECK(c.depth == best);
    CHECK(equal(c.point, arg));
    CHECK(integer_centerpoint(A, 1, 3).depth == c.depth);
    CHECK(equal(integer_centerpoint(A, 1, 3).point, c.point));
  }
}

TEST_CASE("centerpoint existence at the guaranteed size") {
  std::mt19937_64 rng(500);
  for (int trial = 0; trial < 500; ++trial) {
    const int d = 1 + trial % 3;
    const int m = 2 + (trial / 3) % 3;
    const int n = (1 << d) * (m - 1) + 1;
    PointMultiset A = oracle::random_multiset(rng, d, n, -6, 6);
    Centerpoint c;
    CHECK_NOTHROW(c = integer_centerpoint(A, m));
    CHECK(c.depth >= m);
  }
}

TEST_CASE("finite set centerpoint examples") {
  AmbientSet square = AmbientSet::finite({pt({0, 0}), pt({0, 1}), pt({1, 0}), pt({1, 1})});
  PointMultiset A = pts({{0, 0}, {0, 1}, {1, 0}, {1, 1}, {0, 0}});
  auto c = finite_set_centerpoint(A, square, 2);
  CHECK(equal(c.point, pt({0, 0})));
  CHECK(c.depth >= 2);

  PointMultiset k(2);
  k.add(pt({0, 0}), 4);
  auto s = finite_set_centerpoint(k, AmbientSet::finite({pt({0, 0})}), 4);
  CHECK(equal(s.point, pt({0, 0})));

  AmbientSet line = AmbientSet::finite({pt({0, 0}), pt({1, 0}), pt({2, 0})});
  auto l = finite_set_centerpoint(pts({{0, 0}, {2, 0}, {2, 0}}), line, 2);
  CHECK(equal(l.point, pt({2, 0})));
  CHECK_THROWS_AS(finite_set_centerpoint(pts({{0, 0}, {2, 0}}), line, 2), CenterpointNotFound);
}
