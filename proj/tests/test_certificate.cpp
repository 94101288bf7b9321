#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "tverberg/certificate.hpp"
#include "tverberg/errors.hpp"

using namespace tverberg;
using testing_helpers::pt;
using testing_helpers::pts;

namespace {

TverbergCertificate radon_square() {
  PointMultiset A = pts({{0, 0}, {2, 2}, {2, 0}, {0, 2}});
  return make_certificate(A, {pts({{0, 0}, {2, 2}}), pts({{2, 0}, {0, 2}})}, pt({1, 1}), AmbientSet::integer_lattice(2));
}

bool has(const VerificationReport& r, const char* clause) {
  return std::any_of(r.diagnostics.begin(), r.diagnostics.end(),
                     [&](const std::string& s) { return s.find(clause) != std::string::npos; });
}

}  // namespace

TEST_CASE("certificates verify") {
  auto cert = radon_square();
  CHECK(verify_certificate(cert).ok);
  CHECK(cert.m() == 2);
  CHECK(oracle::partition_is_valid(cert.source, cert.parts, cert.point, 2));
  for (const auto& proof : cert.proofs) CHECK(proof.support_size() == 2);
}

TEST_CASE("verification clauses") {
  SUBCASE("point outside the lattice") {
    PointMultiset A = pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    TverbergCertificate cert;
    cert.source = A;
    cert.parts = {pts({{0, 0}, {1, 0}}), pts({{0, 1}, {1, 1}})};
    cert.point = pt({Rational(1, 2), 0});
    cert.ambient = AmbientSet::integer_lattice(2);
    cert.proofs = {ConvexCoefficients{{{0, Rational(1, 2)}, {1, Rational(1, 2)}}}, ConvexCoefficients{{{0, 1}}}};
    auto r = verify_certificate(cert);
    CHECK_FALSE(r.ok);
    CHECK(has(r, diagnostic::kAmbient));
    CHECK(has(r, diagnostic::kMembership));
    CHECK_FALSE(has(r, diagnostic::kPartitionMismatch));
  }
  SUBCASE("dropped instance") {
    auto cert = radon_square();
    cert.source.add(pt({5, 5}));
    auto r = verify_certificate(cert);
    CHECK_FALSE(r.ok);
    CHECK(has(r, diagnostic::kPartitionMismatch));
  }
  SUBCASE("corrupted coefficient") {
    auto cert = radon_square();
    cert.proofs[1].weights[0].lambda += Rational(1, 7);
    auto r = verify_certificate(cert);
    CHECK_FALSE(r.ok);
    CHECK(has(r, diagnostic::kMembership));
  }
  SUBCASE("shape") {
    auto cert = radon_square();
    cert.proofs.pop_back();
    CHECK(has(verify_certificate(cert), diagnostic::kShape));
    cert = radon_square();
    cert.point = pt({1, 1, 1});
    CHECK(has(verify_certificate(cert), diagnostic::kDimension));
  }
}

TEST_CASE("make_certificate refuses false claims") {
  PointMultiset A = pts({{0, 0}, {2, 2}, {2, 0}, {0, 2}});
  CHECK_THROWS_AS(make_certificate(A, {pts({{0, 0}, {2, 0}}), pts({{2, 2}, {0, 2}})}, pt({1, 1}),
                                   AmbientSet::integer_lattice(2)),
                  AssertionFailed);
  CHECK_THROWS_AS(make_certificate(A, {pts({{0, 0}, {2, 2}}), pts({{2, 0}, {0, 2}})}, pt({1, 1}),
                                   AmbientSet::finite({pt({0, 0})})),
                  AssertionFailed);
}

TEST_CASE("parts from labels and counts") {
  PointMultiset A(2);
  A.add(pt({0, 0}), 2);
  A.add(pt({1, 0}));
  auto parts = parts_from_labels(A, {1, 2, 2}, 2);
  CHECK(parts[0] == pts({{0, 0}}));
  CHECK(parts[1] == pts({{0, 0}, {1, 0}}));
  CHECK_THROWS_AS(parts_from_labels(A, {1, 3, 2}, 2), InvalidInput);
  auto byc = parts_from_counts(A, {{2, 0}, {0, 1}});
  CHECK(byc[0].size() == 2);
  CHECK(byc[1] == pts({{1, 0}}));
}
