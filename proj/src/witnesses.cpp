#include "tverberg/witnesses.hpp"

#include "tverberg/errors.hpp"
#include "tverberg/geometry.hpp"
#include "tverberg/planar.hpp"

#include <functional>

namespace tverberg {

PointMultiset onn_witness() {
  return PointMultiset(2, {make_point({0, 0}), make_point({0, 1}), make_point({2, 0}), make_point({1, 2}),
                           make_point({3, 2})});
}

PointMultiset doignon_witness(int m) {
  if (m < 3) throw InvalidInput("doignon_witness: m must be at least 3");
  PointMultiset A(2);
  for (int i = -m + 2; i <= m - 1; ++i) {
    A.add(make_point({i, i}));
    A.add(make_point({i, -i + 1}));
  }
  return A;
}

PointMultiset convex_lowerbound_witness(const AmbientSet& S, int m) {
  if (m < 1) throw InvalidInput("convex_lowerbound_witness: m must be positive");
  const HellyNumber he = helly_number(S);
  PointMultiset out(S.dim());
  if (m == 1) return out;
  for (const auto& p : he.witness.points) out.add(p, m - 1);
  return out;
}

RefutationReport refute_partitions(const PointMultiset& A, int m, const AmbientSet& S, std::uint64_t budget) {
  if (m < 1) throw InvalidInput("refute_partitions: m must be positive");
  require_same_dim(A.dim(), S.dim(), "refute_partitions");
  RefutationReport report;
  std::vector<int> mult;
  for (const auto& e : A.entries()) mult.push_back(e.multiplicity);
  report.total = count_multiset_partitions(mult, m);
  if (report.total > BigInt(budget))
    throw BudgetExceeded("refute_partitions: " + report.total.str() + " partitions exceed the budget of " +
                             std::to_string(budget),
                         report.total.str());
  for_each_multiset_partition(mult, m, [&](const std::vector<PartCounts>& counts) {
    ++report.examined;
    auto parts = parts_from_counts(A, counts);
    auto points = lattice_points_in_intersection(parts, S);
    if (points.empty()) return true;
    report.no_partition = false;
    report.certificate = make_certificate(A, std::move(parts), points.front(), S);
    return false;
  });
  return report;
}

namespace {

/// Depth-first packing of m disjoint minimal subsets (entry index lists)
/// within the multiplicities.
bool pack(const std::vector<std::vector<std::size_t>>& sets, std::vector<int>& left, int need, std::size_t from) {
  if (need == 0) return true;
  for (std::size_t s = from; s < sets.size(); ++s) {
    bool fits = true;
    for (std::size_t e : sets[s]) fits = fits && left[e] > 0;
    if (!fits) continue;
    for (std::size_t e : sets[s]) --left[e];
    // The same set may be used again if multiplicities allow.
    const bool ok = pack(sets, left, need - 1, s);
    for (std::size_t e : sets[s]) ++left[e];
    if (ok) return true;
  }
  return false;
}

}  // namespace

bool has_partition_in_finite_set(const PointMultiset& A, int m, const AmbientSet& S) {
  if (!S.is_finite()) throw InvalidInput("has_partition_in_finite_set: S must be finite");
  require_same_dim(A.dim(), S.dim(), "has_partition_in_finite_set");
  if (A.size() < m) return false;
  for (const auto& s : S.support()) {
    std::vector<std::vector<std::size_t>> sets;
    for_each_minimal_subset(A, s, [&](const std::vector<std::size_t>& chosen) {
      sets.push_back(chosen);
      return true;
    });
    std::vector<int> left;
    for (const auto& e : A.entries()) left.push_back(e.multiplicity);
    if (pack(sets, left, m, 0)) return true;
  }
  return false;
}

TverbergNumberReport exact_tverberg_number(const AmbientSet& S, int m, int n_max, std::uint64_t budget) {
  if (!S.is_finite()) throw InvalidInput("exact_tverberg_number: S must be finite");
  if (S.support().empty()) throw InvalidInput("exact_tverberg_number: S is empty");
  if (m < 1) throw InvalidInput("exact_tverberg_number: m must be positive");
  const auto& pts = S.support();
  const std::size_t s = pts.size();
  TverbergNumberReport report;
  auto multisets_up_to = [&](int n) {
    // Multisets of size 1..n over s points: C(s+n, n) - 1.
    BigInt c = 1;
    for (int i = 1; i <= n; ++i) c = c * BigInt(static_cast<long>(s) + i) / i;
    return c - 1;
  };
  for (int n = 1; n <= n_max; ++n) {
    // Multiplicity vectors of total n over the points of S, in lexicographic
    // order.
    std::vector<int> mult(s, 0);
    std::optional<PointMultiset> counterexample;
    std::function<void(std::size_t, int)> walk = [&](std::size_t i, int left) {
      if (counterexample) return;
      if (i + 1 == s) {
        mult[i] = left;
        if (++report.multisets_checked > budget)
          throw BudgetExceeded("exact_tverberg_number: more than " + std::to_string(budget) + " multisets",
                               BigInt(multisets_up_to(n_max) - BigInt(budget)).str());
        PointMultiset A(S.dim());
        for (std::size_t k = 0; k < s; ++k)
          if (mult[k] > 0) A.add(pts[k], mult[k]);
        if (!has_partition_in_finite_set(A, m, S)) counterexample = std::move(A);
        return;
      }
      for (int c = left; c >= 0 && !counterexample; --c) {
        mult[i] = c;
        walk(i + 1, left - c);
      }
    };
    walk(0, n);
    if (!counterexample) {
      report.value = n;
      return report;
    }
    report.lower_witness = std::move(counterexample);
  }
  return report;
}

}  // namespace tverberg
