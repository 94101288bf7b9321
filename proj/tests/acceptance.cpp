// Acceptance run: one PASS/FAIL line per criterion. Pass criterion numbers as
// arguments to run a subset. Exit status is nonzero if any criterion fails.

#include "oracles.hpp"
#include "tverberg/certificate.hpp"
#include "tverberg/depth.hpp"
#include "tverberg/errors.hpp"
#include "tverberg/planar.hpp"
#include "tverberg/product.hpp"
#include "tverberg/selection.hpp"
#include "tverberg/space3.hpp"
#include "tverberg/witnesses.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>
#include <string>

using namespace tverberg;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

RatPoint pt2(int x, int y) { return make_point({x, y}); }

bool certified(const TverbergCertificate& c, int integer_coords) {
  return verify_certificate(c).ok && oracle::partition_is_valid(c.source, c.parts, c.point, integer_coords);
}

Outcome ac1() {
  auto r = refute_partitions(onn_witness(), 2, AmbientSet::integer_lattice(2));
  bool oracle_agrees = !oracle::integer_partition_exists(onn_witness(), 2);
  std::ostringstream os;
  os << "no_partition=" << r.no_partition << " examined=" << r.examined << " oracle=" << oracle_agrees;
  return {r.no_partition && oracle_agrees, os.str()};
}

Outcome ac2() {
  auto A = doignon_witness(3);
  auto r = refute_partitions(A, 3, AmbientSet::integer_lattice(2));
  bool oracle_agrees = !oracle::integer_partition_exists(A, 3);
  std::ostringstream os;
  os << A.size() << " points, examined " << r.examined << " of " << r.total << ", oracle=" << oracle_agrees;
  return {r.no_partition && r.examined == 966 && r.total == 966 && A.size() == 8 && oracle_agrees, os.str()};
}

Outcome random_plane(int m, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto Z2 = AmbientSet::integer_lattice(2);
  int ok = 0;
  std::string first_failure;
  for (int trial = 0; trial < 1000; ++trial) {
    auto A = oracle::random_multiset(rng, 2, n, -20, 20);
    try {
      if (certified(plane_tverberg(A, m, Z2), 2)) {
        ++ok;
        continue;
      }
      if (first_failure.empty()) first_failure = "certificate rejected";
    } catch (const Error& e) {
      if (first_failure.empty()) first_failure = e.what();
    }
  }
  std::ostringstream os;
  os << ok << "/1000 verified";
  if (!first_failure.empty()) os << "; first failure: " << first_failure;
  return {ok == 1000, os.str()};
}

Outcome ac3() { return random_plane(3, 9, 3003); }

Outcome ac4() {
  Outcome upper = random_plane(2, 6, 4004);
  bool lower = verify_no_partition(onn_witness(), 2, AmbientSet::integer_lattice(2));
  return {upper.pass && lower, upper.detail + "; onn refuted=" + std::to_string(lower)};
}

Outcome ac5() {
  auto S = AmbientSet::finite({pt2(0, 0), pt2(1, 0), pt2(0, 1), pt2(1, 1)});
  auto he = helly_number(S);
  auto tv = exact_tverberg_number(S, 2, 8);
  std::ostringstream os;
  os << "He=" << he.value << " Tv=" << (tv.value ? std::to_string(*tv.value) : "none");
  return {he.value == 4 && tv.value == 5, os.str()};
}

Outcome ac6() {
  std::mt19937_64 rng(6006);
  int compared = 0, discrepancies = 0, skipped = 0;
  std::ostringstream os;
  for (int trial = 0; trial < 20; ++trial) {
    const int size = 1 + static_cast<int>(rng() % 6);
    std::set<std::pair<int, int>> chosen;
    while (static_cast<int>(chosen.size()) < size)
      chosen.insert({static_cast<int>(rng() % 5), static_cast<int>(rng() % 5)});
    std::vector<RatPoint> support;
    for (auto [x, y] : chosen) support.push_back(pt2(x, y));
    auto S = AmbientSet::finite(support);
    const int he = helly_number(S).value;
    if (he != oracle::helly_by_subsets(support)) {
      ++discrepancies;
      os << "[helly mismatch on trial " << trial << "] ";
      continue;
    }
    try {
      auto tv = exact_tverberg_number(S, 3, 2 * he + 1);
      ++compared;
      if (tv.value != 2 * he + 1) {
        ++discrepancies;
        os << "[trial " << trial << ": He=" << he << " Tv=" << (tv.value ? std::to_string(*tv.value) : "> n_max") << "] ";
      }
    } catch (const BudgetExceeded&) {
      ++skipped;
    }
  }
  os << compared << " compared, " << skipped << " over budget, " << discrepancies << " discrepancies";
  return {discrepancies == 0 && compared > 0, os.str()};
}

Outcome ac7() {
  std::mt19937_64 rng(7007);
  int ok2 = 0, ok3 = 0, exhausted = 0;
  std::string first_failure;
  auto run = [&](int n, int m, int& ok) {
    auto A = oracle::random_multiset(rng, 3, n, -10, 10);
    try {
      Z3Options opts;
      opts.seed = rng();
      if (certified(z3_tverberg(A, m, opts), 3)) ++ok;
      else if (first_failure.empty()) first_failure = "certificate rejected";
    } catch (const SearchExhausted& e) {
      ++exhausted;
      if (first_failure.empty()) first_failure = e.what();
    } catch (const Error& e) {
      if (first_failure.empty()) first_failure = e.what();
    }
  };
  for (int i = 0; i < 100; ++i) run(17, 2, ok2);
  for (int i = 0; i < 50; ++i) run(41, 3, ok3);
  std::ostringstream os;
  os << "m=2: " << ok2 << "/100, m=3: " << ok3 << "/50, SearchExhausted: " << exhausted;
  if (!first_failure.empty()) os << "; first failure: " << first_failure;
  return {ok2 == 100 && ok3 == 50 && exhausted == 0, os.str()};
}

/// Integer block uniform in [-10,10]; real block uniform rationals a/b with
/// |a| <= 30, 1 <= b <= 3.
PointMultiset random_mixed(std::mt19937_64& rng, int j, int k, int n) {
  PointMultiset A(j + k);
  for (int i = 0; i < n; ++i) {
    RatPoint p(j + k);
    for (int c = 0; c < j; ++c) p[c] = static_cast<int>(rng() % 21) - 10;
    for (int c = j; c < j + k; ++c)
      p[c] = Rational(static_cast<int>(rng() % 61) - 30, 1 + static_cast<int>(rng() % 3));
    A.add(p);
  }
  return A;
}

Outcome ac8() {
  std::mt19937_64 rng(8008);
  std::ostringstream os;
  bool pass = true;
  for (int j : {1, 2})
    for (auto [m, k] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 2}}) {
      const int n = (j == 1 ? 2 : 4) * (m - 1) * (k + 1) + 1;
      int ok = 0;
      for (int trial = 0; trial < 200; ++trial) {
        auto A = random_mixed(rng, j, k, n);
        try {
          if (certified(product_tverberg(A, m, j, k), j)) ++ok;
        } catch (const Error&) {
        }
      }
      os << "j=" << j << " m=" << m << " k=" << k << " n=" << n << ": " << ok << "/200; ";
      pass = pass && ok == 200;
    }
  PointMultiset pair(1, {make_point({0}), make_point({1})});
  auto doubled = double_witness(pair, 0);
  auto mixed = AmbientSet::mixed(1, 1);
  bool refuted = doubled.size() == 4 && verify_no_partition(doubled, 2, mixed);
  // Independent check: every pairing of the four points leaves the hulls
  // disjoint or meeting only off the integer line.
  bool oracle_refuted = true;
  auto inst = doubled.instances();
  for (int mask = 1; mask < 15; ++mask) {
    std::vector<RatPoint> a, b;
    for (int i = 0; i < 4; ++i) (mask >> i & 1 ? a : b).push_back(inst[static_cast<std::size_t>(i)]);
    for (int x : {0, 1})
      for (int num = 0; num <= 12; ++num) {
        RatPoint p = make_point({x, Rational(num, 12)});
        if (oracle::in_hull(p, a) && oracle::in_hull(p, b)) oracle_refuted = false;
      }
  }
  os << "doubled {0,1} refuted=" << refuted << " oracle=" << oracle_refuted;
  return {pass && refuted && oracle_refuted, os.str()};
}

Outcome ac9() {
  std::mt19937_64 rng(9009);
  int mismatches = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int d = 2 + static_cast<int>(trial % 2);
    const int n = 1 + static_cast<int>(rng() % 8);
    auto A = oracle::random_multiset(rng, d, n, -5, 5);
    RatPoint q = trial % 3 == 0 ? A.instances()[rng() % static_cast<unsigned>(n)] : oracle::random_point(rng, d, -3, 3);
    if (halfspace_depth(q, A).depth != oracle::depth_by_directions(q, A)) ++mismatches;
  }
  return {mismatches == 0, std::to_string(mismatches) + " mismatches in 1000"};
}

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

Outcome ac10() {
  std::mt19937_64 rng(10010);
  int selected = 0;
  std::string first_failure;
  for (int trial = 0; trial < 50; ++trial) {
    PointMultiset P(2);
    const int centers[3][2] = {{0, 12}, {-11, -6}, {11, -6}};
    for (const auto& c : centers) {
      const int cx = c[0] + static_cast<int>(rng() % 5) - 2;
      const int cy = c[1] + static_cast<int>(rng() % 5) - 2;
      const int size = 4 + static_cast<int>(rng() % 7);
      for (int i = 0; i < size; ++i)
        P.add(pt2(cx + static_cast<int>(rng() % 3) - 1, cy + static_cast<int>(rng() % 3) - 1));
    }
    const RatPoint q = integer_centerpoint(P, 1).point;
    const int want = P.size() / 6;
    try {
      auto r = fraction_selection(P, q, want, trial);
      bool sizes = r.subsets.size() == 3;
      for (const auto& s : r.subsets) sizes = sizes && s.size() >= want;
      if (sizes && disjoint_within(r.subsets, P) && transversals_contain(r.subsets, q)) ++selected;
      else if (first_failure.empty()) first_failure = "selection failed exhaustive check";
    } catch (const Error& e) {
      if (first_failure.empty()) first_failure = e.what();
    }
  }

  int agree = 0, tested = 0, positives = 0;
  for (int trial = 0; trial < 50; ++trial) {
    auto P = oracle::random_multiset(rng, 2, 20, -10, 10);
    const RatPoint q = integer_centerpoint(P, 1).point;
    auto inst = P.instances();
    for (int variant = 0; variant < 4; ++variant) {
      std::vector<int> lab(inst.size());
      if (variant == 0) {
        std::vector<std::pair<double, int>> angle;
        for (std::size_t i = 0; i < inst.size(); ++i)
          angle.push_back({std::atan2((inst[i][1] - q[1]).convert_to<double>(), (inst[i][0] - q[0]).convert_to<double>()),
                           static_cast<int>(i)});
        std::sort(angle.begin(), angle.end());
        for (std::size_t i = 0; i < angle.size(); ++i) lab[static_cast<std::size_t>(angle[i].second)] = static_cast<int>(i * 3 / angle.size());
      } else {
        for (auto& l : lab) l = static_cast<int>(rng() % 3);
      }
      std::vector<PointMultiset> parts(3, PointMultiset(2));
      for (std::size_t i = 0; i < inst.size(); ++i) parts[static_cast<std::size_t>(lab[i])].add(inst[i]);
      if (std::any_of(parts.begin(), parts.end(), [](const PointMultiset& p) { return p.empty(); })) continue;
      ++tested;
      const bool dual = transversal_property_verify(parts, q);
      positives += dual;
      if (dual == transversal_property_direct(parts, q)) ++agree;
    }
    // Families that have the property, and the same families with one more
    // point added, which sits on the boundary of having it.
    try {
      auto sel = fraction_selection(P, q, 2, trial);
      PointMultiset left = P;
      for (const auto& s : sel.subsets)
        for (const auto& e : s.entries()) left.remove(e.point, e.multiplicity);
      std::vector<std::vector<PointMultiset>> families{sel.subsets};
      for (const auto& e : left.entries()) {
        auto grown = sel.subsets;
        grown[rng() % grown.size()].add(e.point);
        families.push_back(std::move(grown));
      }
      for (const auto& f : families) {
        ++tested;
        const bool dual = transversal_property_verify(f, q);
        positives += dual;
        if (dual == transversal_property_direct(f, q)) ++agree;
      }
    } catch (const NotFound&) {
    } catch (const PreconditionViolated&) {
    }
  }
  std::ostringstream os;
  os << "selections " << selected << "/50";
  if (!first_failure.empty()) os << " (first failure: " << first_failure << ")";
  os << "; dual vs direct " << agree << "/" << tested << " agree (" << positives << " with the property)";
  return {selected == 50 && agree == tested && tested > 0, os.str()};
}

bool has_clause(const VerificationReport& r, const char* clause) {
  for (const auto& line : r.diagnostics)
    if (line.find(clause) != std::string::npos) return true;
  return false;
}

Outcome ac11() {
  std::mt19937_64 rng(11011);
  std::vector<TverbergCertificate> pool;
  const auto Z2 = AmbientSet::integer_lattice(2);
  while (pool.size() < 100) {
    const int m = 2 + static_cast<int>(pool.size() % 3);
    auto A = oracle::random_multiset(rng, 2, m == 2 ? 6 : 4 * m - 3, -20, 20);
    pool.push_back(plane_tverberg(A, m, Z2));
  }
  int rejected = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    TverbergCertificate c = pool[rng() % pool.size()];
    const char* expected = nullptr;
    switch (trial % 3) {
      case 0: {
        RatPoint delta = RatPoint::Zero(2);
        while (delta.isZero())
          for (int i = 0; i < 2; ++i) delta[i] = Rational(static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 4));
        c.point += delta;
        expected = diagnostic::kMembership;
        break;
      }
      case 1: {
        const std::size_t i = rng() % c.parts.size();
        c.parts.erase(c.parts.begin() + static_cast<std::ptrdiff_t>(i));
        c.proofs.erase(c.proofs.begin() + static_cast<std::ptrdiff_t>(i));
        expected = diagnostic::kPartitionMismatch;
        break;
      }
      default: {
        auto& proof = c.proofs[rng() % c.proofs.size()];
        auto& w = proof.weights[rng() % proof.weights.size()];
        Rational shift(1 + static_cast<int>(rng() % 5), 1 + static_cast<int>(rng() % 6));
        w.lambda += rng() % 2 ? shift : -shift;
        expected = diagnostic::kMembership;
      }
    }
    auto report = verify_certificate(c);
    if (!report.ok && has_clause(report, expected)) ++rejected;
  }
  return {rejected == 10000, std::to_string(rejected) + "/10000 rejected with the expected clause"};
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;  // 0 = no limit
  Outcome (*run)();
};

}  // namespace

int main(int argc, char** argv) {
  const Criterion all[] = {
      {1, "Onn set has no integer Radon partition", 1, ac1},
      {2, "Doignon set m=3: all 966 partitions refuted", 30, ac2},
      {3, "random 9-point sets of Z^2 have integer 3-partitions", 120, ac3},
      {4, "random 6-point sets of Z^2 have integer Radon partitions", 0, ac4},
      {5, "unit square: Helly number 4, Tverberg number 5", 10, ac5},
      {6, "finite planar S, m=3: Tverberg number = 2 He + 1", 0, ac6},
      {7, "Z^3 partitions at 17 (m=2) and 41 (m=3) points", 600, ac7},
      {8, "mixed lattices at tight sizes; doubled {0,1} refuted", 0, ac8},
      {9, "half-space depth matches the direction oracle", 0, ac9},
      {10, "fraction selection and the dual transversal criterion", 0, ac10},
      {11, "mutated certificates are rejected", 0, ac11},
  };
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));
  int failures = 0;
  for (const auto& c : all) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("unexpected exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = out.pass;
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      pass = false;
      out.detail += "; over the time limit";
    }
    failures += !pass;
    std::printf("[%s] AC%d %s (%.2f s): %s\n", pass ? "PASS" : "FAIL", c.id, c.title, secs, out.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
