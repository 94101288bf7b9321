#include "documents.hpp"

#include <algorithm>

namespace tverberg::documents {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw DocumentError(path + ": " + what); }

const Json& field(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

long long read_int(const Json& v, const std::string& path, long long min) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  long long x = v.get<long long>();
  if (x < min) fail(path, "must be at least " + std::to_string(min));
  return x;
}

Rational read_rational(const Json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number()) fail(path, "floating-point numbers are not accepted; write a rational string \"a/b\"");
  if (!v.is_string()) fail(path, "expected a rational string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

RatPoint read_coords(const Json& v, int dim, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of coordinates");
  if (static_cast<int>(v.size()) != dim)
    fail(path, std::to_string(v.size()) + " coordinates, expected " + std::to_string(dim));
  RatPoint p(dim);
  for (int i = 0; i < dim; ++i) p[i] = read_rational(v[static_cast<std::size_t>(i)], path + "[" + std::to_string(i) + "]");
  return p;
}

/// Points in file order; multiplicities are kept per row.
std::vector<Entry> read_rows(const Json& v, int dim, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of points");
  std::vector<Entry> rows;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string at = path + "[" + std::to_string(i) + "]";
    Entry e;
    e.point = read_coords(field(v[i], "coords", at), dim, at + ".coords");
    if (v[i].contains("mult")) {
      long long mult = read_int(v[i]["mult"], at + ".mult", 1);
      if (mult > 1'000'000) fail(at + ".mult", "multiplicity too large");
      e.multiplicity = static_cast<int>(mult);
    }
    rows.push_back(std::move(e));
  }
  return rows;
}

int read_dim(const Json& doc) {
  long long d = read_int(field(doc, "dim", "document"), "dim", 1);
  if (d > 64) fail("dim", "dimension too large");
  return static_cast<int>(d);
}

AmbientSet read_ambient(const Json& v, int dim) {
  const std::string path = "ambient";
  const Json& kind = field(v, "kind", path);
  if (!kind.is_string()) fail(path + ".kind", "expected a string");
  const std::string k = kind.get<std::string>();
  if (k == "Zd") return AmbientSet::integer_lattice(dim);
  if (k == "Rd") return AmbientSet::real_space(dim);
  if (k == "ZjRk") {
    long long j = read_int(field(v, "j", path), path + ".j", 0);
    long long r = read_int(field(v, "k", path), path + ".k", 0);
    if (j + r != dim) fail(path, "j + k must equal dim");
    return AmbientSet::mixed(static_cast<int>(j), static_cast<int>(r));
  }
  if (k == "finite") {
    long long r = v.contains("k") ? read_int(v["k"], path + ".k", 0) : 0;
    if (r >= dim) fail(path + ".k", "must be less than dim");
    const Json& pts = field(v, "points", path);
    if (!pts.is_array() || pts.empty()) fail(path + ".points", "expected a nonempty array of coordinate arrays");
    std::vector<RatPoint> support;
    for (std::size_t i = 0; i < pts.size(); ++i)
      support.push_back(read_coords(pts[i], dim - static_cast<int>(r), path + ".points[" + std::to_string(i) + "]"));
    return AmbientSet::finite(std::move(support), static_cast<int>(r));
  }
  fail(path + ".kind", "unknown ambient \"" + k + "\" (expected Zd, ZjRk, Rd or finite)");
}

void check_lattice_block(const std::vector<Entry>& rows, const AmbientSet& S, const std::string& path) {
  if (S.kind() != AmbientSet::Kind::Lattice) return;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int c = 0; c < S.base_dim(); ++c)
      if (!is_integer(rows[i].point[c]))
        fail(path + "[" + std::to_string(i) + "].coords[" + std::to_string(c) + "]",
             "coordinate " + to_string(rows[i].point[c]) + " must be an integer in " + S.describe());
}

}  // namespace

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json write_rational(const Rational& value) { return to_string(value); }

Json write_point(const RatPoint& p) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < p.size(); ++i) out.push_back(write_rational(p[i]));
  return out;
}

Json write_points(const PointMultiset& A) {
  Json out = Json::array();
  for (const auto& e : A.entries()) out.push_back(Json{{"coords", write_point(e.point)}, {"mult", e.multiplicity}});
  return out;
}

Json write_ambient(const AmbientSet& S) {
  if (S.kind() == AmbientSet::Kind::Finite) {
    Json pts = Json::array();
    for (const auto& p : S.support()) pts.push_back(write_point(p));
    Json out{{"kind", "finite"}};
    if (S.real_dims() > 0) out["k"] = S.real_dims();
    out["points"] = std::move(pts);
    return out;
  }
  if (S.real_dims() == 0) return Json{{"kind", "Zd"}};
  if (S.base_dim() == 0) return Json{{"kind", "Rd"}};
  return Json{{"kind", "ZjRk"}, {"j", S.base_dim()}, {"k", S.real_dims()}};
}

Json write_point_document(const PointMultiset& A, const AmbientSet& S) {
  return Json{{"dim", A.dim()}, {"ambient", write_ambient(S)}, {"points", write_points(A)}};
}

Json write_certificate(const TverbergCertificate& cert) {
  Json parts = Json::array();
  for (std::size_t i = 0; i < cert.parts.size(); ++i) {
    Json weights = Json::array();
    if (i < cert.proofs.size())
      for (const auto& w : cert.proofs[i].weights)
        weights.push_back(Json{{"entry", w.entry}, {"lambda", write_rational(w.lambda)}});
    parts.push_back(Json{{"points", write_points(cert.parts[i])}, {"weights", std::move(weights)}});
  }
  return Json{{"kind", "certificate"},
              {"dim", cert.source.dim()},
              {"ambient", write_ambient(cert.ambient)},
              {"m", cert.m()},
              {"point", write_point(cert.point)},
              {"source", write_points(cert.source)},
              {"parts", std::move(parts)}};
}

PointDocument read_point_document(const Json& doc) {
  const int dim = read_dim(doc);
  AmbientSet S = doc.contains("ambient") ? read_ambient(doc["ambient"], dim) : AmbientSet::real_space(dim);
  auto rows = read_rows(field(doc, "points", "document"), dim, "points");
  check_lattice_block(rows, S, "points");
  return {PointMultiset(dim, std::move(rows)), std::move(S)};
}

TverbergCertificate read_certificate(const Json& doc) {
  const int dim = read_dim(doc);
  TverbergCertificate cert;
  cert.ambient = read_ambient(field(doc, "ambient", "document"), dim);
  cert.point = read_coords(field(doc, "point", "document"), dim, "point");
  cert.source = PointMultiset(dim, read_rows(field(doc, "source", "document"), dim, "source"));
  const Json& parts = field(doc, "parts", "document");
  if (!parts.is_array()) fail("parts", "expected an array");
  if (doc.contains("m") && read_int(doc["m"], "m", 1) != static_cast<long long>(parts.size()))
    fail("m", "does not match the number of parts");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::string at = "parts[" + std::to_string(i) + "]";
    auto rows = read_rows(field(parts[i], "points", at), dim, at + ".points");
    for (std::size_t r = 1; r < rows.size(); ++r)
      if (!lex_less(rows[r - 1].point, rows[r].point))
        fail(at + ".points[" + std::to_string(r) + "]", "points must be distinct and in lexicographic order");
    cert.parts.emplace_back(dim, std::move(rows));
    const Json& weights = field(parts[i], "weights", at);
    if (!weights.is_array()) fail(at + ".weights", "expected an array");
    ConvexCoefficients proof;
    for (std::size_t w = 0; w < weights.size(); ++w) {
      const std::string wat = at + ".weights[" + std::to_string(w) + "]";
      long long entry = read_int(field(weights[w], "entry", wat), wat + ".entry", 0);
      proof.weights.push_back({static_cast<std::size_t>(entry), read_rational(field(weights[w], "lambda", wat), wat + ".lambda")});
    }
    cert.proofs.push_back(std::move(proof));
  }
  return cert;
}

RatPoint parse_point_argument(std::string_view text) {
  std::vector<Rational> coords;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    try {
      coords.push_back(parse_rational(piece));
    } catch (const Error&) {
      throw DocumentError("point argument: cannot read \"" + std::string(piece) + "\" as a rational");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  RatPoint p(static_cast<Eigen::Index>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) p[static_cast<Eigen::Index>(i)] = coords[i];
  return p;
}

}  // namespace tverberg::documents
