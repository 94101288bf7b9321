// Command-line front end: reads point and certificate documents, runs one
// library operation, writes a result document to stdout.

#include "documents.hpp"

#include "tverberg/depth.hpp"
#include "tverberg/planar.hpp"
#include "tverberg/product.hpp"
#include "tverberg/selection.hpp"
#include "tverberg/space3.hpp"
#include "tverberg/witnesses.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace tverberg;
using documents::Json;

namespace {

enum Exit { kOk = 0, kFalse = 1, kUsage = 2, kBudget = 3 };

struct Globals {
  std::string input = "-";
  std::uint64_t seed = 0;
  int jobs = 1;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw documents::DocumentError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

documents::PointDocument load_points(const Globals& g) {
  return documents::read_point_document(documents::parse(read_input(g.input)));
}

int emit(const Json& doc, int code = kOk) {
  std::cout << documents::dump(doc);
  return code;
}

/// Ambient named on the command line, or the document's own when empty.
AmbientSet choose_ambient(const std::string& name, int j, const documents::PointDocument& doc) {
  const int d = doc.points.dim();
  if (name.empty()) return doc.ambient;
  if (name == "Zd") return AmbientSet::integer_lattice(d);
  if (name == "Rd") return AmbientSet::real_space(d);
  if (name == "ZjRk") {
    if (j < 0 || j > d) throw InvalidInput("--ambient ZjRk needs --j between 0 and " + std::to_string(d));
    return AmbientSet::mixed(j, d - j);
  }
  if (name == "finite") {
    if (doc.ambient.kind() != AmbientSet::Kind::Finite)
      throw InvalidInput("--ambient finite needs a document whose ambient lists the finite set");
    return doc.ambient;
  }
  throw InvalidInput("--ambient: unknown ambient \"" + name + "\"");
}

void require_in_lattice(const PointMultiset& A, const AmbientSet& S) {
  if (S.kind() != AmbientSet::Kind::Lattice) return;
  for (const auto& e : A.entries())
    for (int c = 0; c < S.base_dim(); ++c)
      if (!is_integer(e.point[c]))
        throw InvalidInput("point " + to_string(e.point) + " has a non-integer coordinate in " + S.describe());
}

/// The finite set a command works over: the document's finite ambient, or
/// the distinct input points.
AmbientSet finite_set_of(const documents::PointDocument& doc) {
  if (doc.ambient.kind() == AmbientSet::Kind::Finite) {
    if (doc.ambient.real_dims() != 0) throw InvalidInput("ambient: a plain finite set (k = 0) is required");
    return doc.ambient;
  }
  std::vector<RatPoint> support;
  for (const auto& e : doc.points.entries()) support.push_back(e.point);
  if (support.empty()) throw InvalidInput("points: empty set");
  return AmbientSet::finite(std::move(support));
}

TverbergCertificate find_partition(const PointMultiset& A, int m, const AmbientSet& S, const Globals& g) {
  const int d = A.dim();
  if (S.kind() == AmbientSet::Kind::Finite) {
    if (S.real_dims() == 0 && d == 2) return plane_tverberg(A, m, S);
    throw InvalidInput("tverberg: finite ambient sets are supported in the plane only");
  }
  const int j = S.base_dim();
  const int k = S.real_dims();
  if (j == 0) {
    RealPartition real = real_tverberg_bruteforce(A, m);
    return make_certificate(A, std::move(real.parts), real.point, S);
  }
  if (k == 0 && d == 2) return plane_tverberg(A, m, S);
  if (k == 0 && d == 3 && m >= 2) {
    Z3Options opts;
    opts.seed = g.seed;
    opts.jobs = g.jobs;
    return z3_tverberg(A, m, opts);
  }
  if (j <= 3) return product_tverberg(A, m, j, k);
  throw InvalidInput("tverberg: no construction for " + S.describe());
}

Json halfspace_json(const HalfSpace& h) {
  return Json{{"normal", documents::write_point(h.normal)},
              {"offset", documents::write_rational(h.offset)},
              {"side", h.side == HalfSpace::Side::AtLeast ? ">=" : "<="}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete Tverberg partitions with checkable certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("-i,--input", g.input, "Input document (- for stdin)");
  app.add_option("--seed", g.seed, "Seed for randomized searches");
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::function<int()> action;
  auto on = [&](CLI::App* sub, std::function<int()> f) { sub->callback([&action, f] { action = f; }); };

  int m = 2;
  std::string ambient_name;
  int ambient_j = -1;
  std::uint64_t budget = kDefaultPartitionBudget;

  auto* depth = app.add_subcommand("depth", "Half-space depth of a point");
  std::string q_text;
  depth->add_option("--q", q_text, "Query point, e.g. 1/2,3")->required();
  on(depth, [&] {
    auto doc = load_points(g);
    DepthWitness w = halfspace_depth(documents::parse_point_argument(q_text), doc.points);
    return emit(Json{{"depth", w.depth}, {"halfspace", halfspace_json(w.halfspace)}});
  });

  auto* center = app.add_subcommand("centerpoint", "Deepest point of the ambient set");
  center->add_option("--m", m, "Required depth")->check(CLI::PositiveNumber);
  on(center, [&] {
    auto doc = load_points(g);
    Centerpoint c;
    if (doc.ambient.kind() == AmbientSet::Kind::Finite)
      c = finite_set_centerpoint(doc.points, doc.ambient, m);
    else if (doc.ambient.is_integer_lattice())
      c = integer_centerpoint(doc.points, m, g.jobs);
    else
      throw InvalidInput("centerpoint: ambient must be Zd or finite");
    return emit(Json{{"point", documents::write_point(c.point)}, {"depth", c.depth}});
  });

  auto* tv = app.add_subcommand("tverberg", "Find a Tverberg partition and print its certificate");
  tv->add_option("--m", m, "Number of parts")->required()->check(CLI::PositiveNumber);
  tv->add_option("--ambient", ambient_name, "Zd, ZjRk, Rd or finite (default: the document's)");
  tv->add_option("--j", ambient_j, "Integer coordinates for --ambient ZjRk");
  on(tv, [&] {
    auto doc = load_points(g);
    AmbientSet S = choose_ambient(ambient_name, ambient_j, doc);
    require_in_lattice(doc.points, S);
    return emit(documents::write_certificate(find_partition(doc.points, m, S, g)));
  });

  auto* verify = app.add_subcommand("verify", "Check a certificate document");
  on(verify, [&] {
    auto cert = documents::read_certificate(documents::parse(read_input(g.input)));
    VerificationReport r = verify_certificate(cert);
    return emit(Json{{"ok", r.ok}, {"diagnostics", r.diagnostics}}, r.ok ? kOk : kFalse);
  });

  auto* refute = app.add_subcommand("refute", "Check that no partition has a common point in the ambient set");
  refute->add_option("--m", m, "Number of parts")->required()->check(CLI::PositiveNumber);
  refute->add_option("--ambient", ambient_name, "Zd, ZjRk, Rd or finite (default: the document's)");
  refute->add_option("--j", ambient_j, "Integer coordinates for --ambient ZjRk");
  refute->add_option("--budget", budget, "Maximum number of partitions to examine");
  on(refute, [&] {
    auto doc = load_points(g);
    AmbientSet S = choose_ambient(ambient_name, ambient_j, doc);
    require_in_lattice(doc.points, S);
    RefutationReport r = refute_partitions(doc.points, m, S, budget);
    Json out{{"no_partition", r.no_partition}, {"examined", r.examined}, {"total", r.total.str()}};
    if (r.certificate) out["certificate"] = documents::write_certificate(*r.certificate);
    return emit(out, r.no_partition ? kOk : kFalse);
  });

  auto* witness = app.add_subcommand("witness", "Point sets without partitions");
  witness->require_subcommand(1);
  auto* onn = witness->add_subcommand("onn", "Five points of Z^2 without an integer Radon partition");
  on(onn, [&] { return emit(documents::write_point_document(onn_witness(), AmbientSet::integer_lattice(2))); });
  auto* doignon = witness->add_subcommand("doignon", "4m-4 points of Z^2 without an integer m-partition");
  doignon->add_option("--m", m, "Number of parts")->required();
  on(doignon, [&] {
    return emit(documents::write_point_document(doignon_witness(m), AmbientSet::integer_lattice(2)));
  });
  auto* dbl = witness->add_subcommand("double", "Product of a witness with {0,1}");
  int at = -1;
  dbl->add_option("--j", at, "Index of the new coordinate (default: end of the integer block)");
  on(dbl, [&] {
    auto doc = load_points(g);
    const AmbientSet& S = doc.ambient;
    const int base = S.base_dim();
    const int index = at < 0 ? base : at;
    if (index > base) throw InvalidInput("--j: the new coordinate must lie in the integer or finite block");
    AmbientSet out;
    if (S.kind() == AmbientSet::Kind::Lattice) {
      out = AmbientSet::mixed(base + 1, S.real_dims());
    } else {
      std::vector<RatPoint> support;
      for (const auto& p : S.support())
        for (int layer = 0; layer < 2; ++layer) {
          RatPoint x(base + 1);
          x.head(index) = p.head(index);
          x[index] = layer;
          x.tail(base - index) = p.tail(base - index);
          support.push_back(std::move(x));
        }
      out = AmbientSet::finite(std::move(support), S.real_dims());
    }
    return emit(documents::write_point_document(double_witness(doc.points, index), out));
  });
  auto* convex_lb = witness->add_subcommand("convex-lb", "He(S)(m-1) points of a finite S without a partition");
  convex_lb->add_option("--m", m, "Number of parts")->required()->check(CLI::PositiveNumber);
  on(convex_lb, [&] {
    AmbientSet S = finite_set_of(load_points(g));
    return emit(documents::write_point_document(convex_lowerbound_witness(S, m), S));
  });

  auto* tvnumber = app.add_subcommand("tvnumber", "Exact Tverberg number of a finite set");
  int n_max = 12;
  tvnumber->add_option("--m", m, "Number of parts")->required()->check(CLI::PositiveNumber);
  tvnumber->add_option("--nmax", n_max, "Largest size tried")->check(CLI::PositiveNumber);
  tvnumber->add_option("--budget", budget, "Maximum number of multisets to examine");
  on(tvnumber, [&] {
    AmbientSet S = finite_set_of(load_points(g));
    TverbergNumberReport r = exact_tverberg_number(S, m, n_max, budget);
    Json out;
    out["tverberg_number"] = r.value ? Json(*r.value) : Json(nullptr);
    out["multisets_checked"] = r.multisets_checked;
    if (r.lower_witness) out["lower_witness"] = documents::write_points(*r.lower_witness);
    if (!r.value) out["n_max"] = n_max;
    return emit(out, r.value ? kOk : kFalse);
  });

  auto* helly = app.add_subcommand("helly", "Helly number of a finite set");
  on(helly, [&] {
    HellyNumber h = helly_number(finite_set_of(load_points(g)));
    Json pts = Json::array();
    for (const auto& p : h.witness.points) pts.push_back(documents::write_point(p));
    return emit(Json{{"helly_number", h.value}, {"witness", std::move(pts)}});
  });

  auto* select = app.add_subcommand("select", "Large subsets whose transversals all surround a point");
  int min_size = 1;
  select->add_option("--q", q_text, "Point to surround")->required();
  select->add_option("--min-size", min_size, "Smallest subset size")->required()->check(CLI::PositiveNumber);
  on(select, [&] {
    auto doc = load_points(g);
    SelectionResult r = fraction_selection(doc.points, documents::parse_point_argument(q_text), min_size, g.seed);
    Json subsets = Json::array();
    for (const auto& s : r.subsets) subsets.push_back(documents::write_points(s));
    return emit(Json{{"q", documents::write_point(r.q)}, {"min_size", r.min_size}, {"subsets", std::move(subsets)}});
  });

  auto* pdepth = app.add_subcommand("partition-depth", "Partition whose transversals contain every deep point");
  std::string alpha_text;
  int r_parts = 0;
  pdepth->add_option("--alpha", alpha_text, "Depth fraction in (0,1], e.g. 1/3")->required();
  pdepth->add_option("--r", r_parts, "Number of parts")->required();
  on(pdepth, [&] {
    auto doc = load_points(g);
    Rational alpha;
    try {
      alpha = parse_rational(alpha_text);
    } catch (const Error&) {
      throw InvalidInput("--alpha: expected a rational such as 1/3");
    }
    DepthPartition r = depth_partition_search(doc.points, alpha, r_parts, g.seed);
    Json parts = Json::array();
    for (const auto& p : r.parts) parts.push_back(documents::write_points(p));
    Json deep = Json::array();
    for (const auto& p : r.deep_points) deep.push_back(documents::write_point(p));
    return emit(Json{{"parts", std::move(parts)}, {"deep_points", std::move(deep)}});
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action();
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return emit(Json{{"error", "budget exceeded"}, {"remaining", e.remaining()}}, kBudget);
  } catch (const NotFound& e) {
    std::cerr << "not found: " << e.what() << "\n";
    return kFalse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
