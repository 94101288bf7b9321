#pragma once

#include "tverberg/certificate.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace tverberg {

/// Disjoint minimal subsets X_1..X_count of A containing p in their hulls,
/// and what is left of A.
struct PeelRecord {
  std::vector<PointMultiset> subsets;
  /// proofs[i] certifies p in conv(subsets[i]); all weights are positive.
  std::vector<ConvexCoefficients> proofs;
  PointMultiset remainder;
};

/// Removes `count` minimal subsets (each of at most dim+1 distinct points)
/// one after another, always the first one of the current remainder in the
/// order of for_each_minimal_subset: singletons, then pairs, triples and
/// quadruples. A closed half-space through p meets a minimal subset in at most
/// dim points, so each removal lowers the depth of p by at most dim. Throws
/// ExtractionFailed when p leaves the hull of the remainder before `count`
/// subsets are found.
PeelRecord peel_caratheodory_sets(const PointMultiset& A, const RatPoint& p, int count);

struct Bipartition {
  enum class Stage { Seed, LocalSearch, Exhaustive };

  std::array<PointMultiset, 2> parts;
  std::array<ConvexCoefficients, 2> proofs;
  /// The search stage that found the parts.
  Stage stage = Stage::Seed;
};

const char* stage_name(Bipartition::Stage stage);

struct BipartitionOptions {
  std::uint64_t seed = 0;
  /// Moves tried by the local search before the exhaustive stage.
  int local_moves = 200;
  /// Stage 1 can be switched off to exercise the later stages.
  bool try_seed = true;
};

/// Splits A into two parts whose hulls both contain p.
///
/// Stages: (1) the first minimal subset X of A against A \ X; (2) a seeded
/// local search moving one instance at a time, accepting moves that lower the
/// summed membership gap of both parts; (3) every minimal subset X against
/// A \ X. Stage 3 is complete: any valid bipartition has a part containing a
/// minimal subset X, and then A \ X works as well. Requires dim 3, at least
/// 17 points and depth of p at least 3 (PreconditionViolated); SearchExhausted
/// if no bipartition exists.
Bipartition bipartition_search(const PointMultiset& A, const RatPoint& p, const BipartitionOptions& options = {});

/// What z3_tverberg did on the way to its certificate.
struct Z3Trace {
  RatPoint center;
  int center_depth = 0;
  int multiplicity = 0;
  PeelRecord peel;
  bool used_bipartition = false;
  Bipartition::Stage stage = Bipartition::Stage::Seed;
};

struct Z3Options {
  std::uint64_t seed = 0;
  int jobs = 1;
};

/// m-Tverberg partition of at least 24m-31 points of Z^3 (17 for m = 2)
/// around an integer point p of depth >= 3m-3. The mu copies of p become
/// singleton parts; if mu <= m-2, then m-mu-2 minimal subsets are peeled and
/// the remaining (>= 17 points, depth >= 3) are split in two by
/// bipartition_search.
TverbergCertificate z3_tverberg(const PointMultiset& A, int m, const Z3Options& options = {}, Z3Trace* trace = nullptr);

}  // namespace tverberg
