#include "tverberg/certificate.hpp"

#include "tverberg/errors.hpp"
#include "tverberg/geometry.hpp"

namespace tverberg {

VerificationReport verify_certificate(const TverbergCertificate& cert) {
  VerificationReport report;
  auto fail = [&](std::string line) {
    report.ok = false;
    report.diagnostics.push_back(std::move(line));
  };
  const int d = cert.source.dim();
  bool dims_ok = cert.point.size() == d && cert.ambient.dim() == d;
  for (const auto& part : cert.parts) dims_ok = dims_ok && part.dim() == d;
  if (!dims_ok) {
    fail(diagnostic::kDimension);
    return report;
  }
  if (cert.parts.empty() || cert.proofs.size() != cert.parts.size()) {
    fail(std::string(diagnostic::kShape) + ": " + std::to_string(cert.parts.size()) + " parts, " +
         std::to_string(cert.proofs.size()) + " proofs");
    return report;
  }
  PointMultiset joined(d);
  for (const auto& part : cert.parts) joined = multiset_union(joined, part);
  if (!(joined == cert.source)) fail(diagnostic::kPartitionMismatch);
  for (std::size_t i = 0; i < cert.parts.size(); ++i)
    if (!cert.proofs[i].certifies(cert.point, cert.parts[i]))
      fail(std::string(diagnostic::kMembership) + " for part " + std::to_string(i + 1));
  if (!cert.ambient.contains(cert.point)) fail(diagnostic::kAmbient);
  return report;
}

TverbergCertificate make_certificate(const PointMultiset& source, std::vector<PointMultiset> parts,
                                     const RatPoint& point, const AmbientSet& ambient) {
  TverbergCertificate cert{source, std::move(parts), point, {}, ambient};
  for (std::size_t i = 0; i < cert.parts.size(); ++i) {
    if (cert.parts[i].empty()) throw AssertionFailed("certificate: part " + std::to_string(i + 1) + " is empty");
    auto c = hull_membership(point, cert.parts[i]);
    if (!c)
      throw AssertionFailed("certificate: " + to_string(point) + " is not in the hull of part " +
                            std::to_string(i + 1));
    cert.proofs.push_back(caratheodory_reduce(point, cert.parts[i], *c));
  }
  auto report = verify_certificate(cert);
  if (!report.ok) throw AssertionFailed("certificate failed verification: " + report.diagnostics.front());
  return cert;
}

std::vector<PointMultiset> parts_from_labels(const PointMultiset& A, const std::vector<int>& labels, int m) {
  if (static_cast<int>(labels.size()) != A.size()) throw InvalidInput("parts_from_labels: labels do not cover every instance");
  std::vector<PointMultiset> parts(static_cast<std::size_t>(m), PointMultiset(A.dim()));
  const auto inst = A.instance_entries();
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (labels[i] < 1 || labels[i] > m) throw InvalidInput("parts_from_labels: label out of range");
    parts[static_cast<std::size_t>(labels[i] - 1)].add(A.point(inst[i]));
  }
  return parts;
}

std::vector<PointMultiset> parts_from_counts(const PointMultiset& A, const std::vector<PartCounts>& counts) {
  std::vector<PointMultiset> parts;
  for (const auto& c : counts) {
    PointMultiset part(A.dim());
    for (std::size_t e = 0; e < c.size(); ++e)
      if (c[e] > 0) part.add(A.point(e), c[e]);
    parts.push_back(std::move(part));
  }
  return parts;
}

}  // namespace tverberg
