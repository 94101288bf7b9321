#pragma once

#include "tverberg/partitions.hpp"
#include "tverberg/types.hpp"

#include <string>
#include <vector>

namespace tverberg {

/// A Tverberg partition of `source` together with everything needed to check
/// it without trusting the code that produced it.
struct TverbergCertificate {
  PointMultiset source;
  /// Sub-multisets that together use every instance of `source` exactly once.
  std::vector<PointMultiset> parts;
  /// Common point of the hulls of all parts.
  RatPoint point;
  /// proofs[i] certifies point in conv(parts[i]); indices refer to the
  /// entries of parts[i].
  std::vector<ConvexCoefficients> proofs;
  AmbientSet ambient;

  int m() const { return static_cast<int>(parts.size()); }
};

struct VerificationReport {
  bool ok = true;
  /// One line per failed clause.
  std::vector<std::string> diagnostics;
};

namespace diagnostic {
inline constexpr const char* kPartitionMismatch = "partition mismatch";
inline constexpr const char* kMembership = "coefficients do not certify the point";
inline constexpr const char* kAmbient = "point not in ambient set";
inline constexpr const char* kDimension = "dimension mismatch";
inline constexpr const char* kShape = "malformed certificate";
}  // namespace diagnostic

/// Checks that the parts partition the source exactly (multiplicities
/// included), that every proof certifies the point for its part, and that the
/// point lies in the ambient set. Never throws on bad certificates.
VerificationReport verify_certificate(const TverbergCertificate& cert);

/// Builds a certificate for the given parts and point, computing the
/// membership proofs (reduced to minimal support). Throws AssertionFailed if
/// the point is not in some hull or not in the ambient set, or if the result
/// fails verification.
TverbergCertificate make_certificate(const PointMultiset& source, std::vector<PointMultiset> parts,
                                     const RatPoint& point, const AmbientSet& ambient);

/// Splits the instances of A into parts by label (labels 1..m, indexed by
/// instance).
std::vector<PointMultiset> parts_from_labels(const PointMultiset& A, const std::vector<int>& labels, int m);

/// Turns a partition of the entries of A given as count vectors into parts.
std::vector<PointMultiset> parts_from_counts(const PointMultiset& A, const std::vector<PartCounts>& counts);

}  // namespace tverberg
