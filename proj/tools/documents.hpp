#pragma once

#include "tverberg/certificate.hpp"
#include "tverberg/errors.hpp"
#include "tverberg/types.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace tverberg::documents {

using Json = nlohmann::ordered_json;

/// Malformed document; the message starts with the offending field path or
/// the parser's line/column.
class DocumentError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

struct PointDocument {
  PointMultiset points;
  AmbientSet ambient;
};

Json parse(std::string_view text);
/// Two-space indented, keys in insertion order, trailing newline.
std::string dump(const Json& doc);

Json write_rational(const Rational& value);
Json write_point(const RatPoint& p);
Json write_points(const PointMultiset& A);
Json write_ambient(const AmbientSet& S);
Json write_point_document(const PointMultiset& A, const AmbientSet& S);
Json write_certificate(const TverbergCertificate& cert);

/// Validates shape, coordinate count and (for lattice blocks) integrality.
PointDocument read_point_document(const Json& doc);
/// Shape checks only; whether the certificate is valid is left to
/// verify_certificate. Parts must list their points in canonical order so the
/// weight indices are unambiguous.
TverbergCertificate read_certificate(const Json& doc);

/// "a,b/c,..." as typed on the command line.
RatPoint parse_point_argument(std::string_view text);

}  // namespace tverberg::documents
