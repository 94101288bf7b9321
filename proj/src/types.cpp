#include "tverberg/types.hpp"

#include "tverberg/errors.hpp"

#include <algorithm>

namespace tverberg {

void require_same_dim(int a, int b, const char* what) {
  if (a != b)
    throw DimensionMismatch(std::string(what) + ": dimension " + std::to_string(a) + " vs " + std::to_string(b));
}

PointMultiset::PointMultiset(int dim, std::vector<Entry> entries) : dim_(dim), entries_(std::move(entries)) {
  canonicalize();
}

PointMultiset::PointMultiset(int dim, const std::vector<RatPoint>& points) : dim_(dim) {
  entries_.reserve(points.size());
  for (const auto& p : points) entries_.push_back({p, 1});
  canonicalize();
}

PointMultiset PointMultiset::from_points(const std::vector<RatPoint>& points) {
  if (points.empty()) throw InvalidInput("from_points: cannot infer dimension of an empty list");
  return PointMultiset(static_cast<int>(points.front().size()), points);
}

void PointMultiset::canonicalize() {
  for (const auto& e : entries_) {
    require_same_dim(static_cast<int>(e.point.size()), dim_, "multiset entry");
    if (e.multiplicity < 1) throw InvalidInput("multiplicities must be positive");
  }
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return lex_less(a.point, b.point); });
  std::vector<Entry> merged;
  merged.reserve(entries_.size());
  for (auto& e : entries_) {
    if (!merged.empty() && equal(merged.back().point, e.point))
      merged.back().multiplicity += e.multiplicity;
    else
      merged.push_back(std::move(e));
  }
  entries_ = std::move(merged);
  size_ = 0;
  for (const auto& e : entries_) size_ += e.multiplicity;
}

std::optional<std::size_t> PointMultiset::find(const RatPoint& p) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), p,
                             [](const Entry& e, const RatPoint& x) { return lex_less(e.point, x); });
  if (it != entries_.end() && equal(it->point, p)) return static_cast<std::size_t>(it - entries_.begin());
  return std::nullopt;
}

int PointMultiset::multiplicity_of(const RatPoint& p) const {
  auto i = find(p);
  return i ? entries_[*i].multiplicity : 0;
}

void PointMultiset::add(const RatPoint& p, int multiplicity) {
  require_same_dim(static_cast<int>(p.size()), dim_, "add");
  if (multiplicity < 1) throw InvalidInput("multiplicities must be positive");
  if (auto i = find(p)) {
    entries_[*i].multiplicity += multiplicity;
  } else {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), p,
                               [](const Entry& e, const RatPoint& x) { return lex_less(e.point, x); });
    entries_.insert(it, Entry{p, multiplicity});
  }
  size_ += multiplicity;
}

int PointMultiset::remove(const RatPoint& p, int multiplicity) {
  auto i = find(p);
  if (!i) return 0;
  int removed = std::min(multiplicity, entries_[*i].multiplicity);
  entries_[*i].multiplicity -= removed;
  if (entries_[*i].multiplicity == 0) entries_.erase(entries_.begin() + static_cast<std::ptrdiff_t>(*i));
  size_ -= removed;
  return removed;
}

std::vector<std::size_t> PointMultiset::instance_entries() const {
  std::vector<std::size_t> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (std::size_t i = 0; i < entries_.size(); ++i)
    for (int c = 0; c < entries_[i].multiplicity; ++c) out.push_back(i);
  return out;
}

std::vector<RatPoint> PointMultiset::instances() const {
  std::vector<RatPoint> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (const auto& e : entries_)
    for (int c = 0; c < e.multiplicity; ++c) out.push_back(e.point);
  return out;
}

PointMultiset PointMultiset::subset(std::span<const int> instance_indices) const {
  auto owner = instance_entries();
  std::vector<Entry> picked;
  picked.reserve(instance_indices.size());
  for (int idx : instance_indices) {
    if (idx < 0 || idx >= size_) throw InvalidInput("instance index out of range");
    picked.push_back({entries_[owner[static_cast<std::size_t>(idx)]].point, 1});
  }
  return PointMultiset(dim_, std::move(picked));
}

PointMultiset PointMultiset::project(int first, int count) const {
  if (first < 0 || count < 0 || first + count > dim_) throw InvalidInput("projection out of range");
  std::vector<Entry> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back({e.point.segment(first, count), e.multiplicity});
  return PointMultiset(count, std::move(out));
}

bool operator==(const PointMultiset& a, const PointMultiset& b) {
  if (a.dim_ != b.dim_ || a.size_ != b.size_ || a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i)
    if (a.entries_[i].multiplicity != b.entries_[i].multiplicity || !equal(a.entries_[i].point, b.entries_[i].point))
      return false;
  return true;
}

PointMultiset multiset_union(const PointMultiset& a, const PointMultiset& b) {
  require_same_dim(a.dim(), b.dim(), "multiset_union");
  std::vector<Entry> all = a.entries();
  all.insert(all.end(), b.entries().begin(), b.entries().end());
  return PointMultiset(a.dim(), std::move(all));
}

// ---------------------------------------------------------------------------

HalfSpace HalfSpace::through(const RatVector& direction, const RatPoint& through) {
  require_same_dim(static_cast<int>(direction.size()), static_cast<int>(through.size()), "HalfSpace::through");
  auto prim = primitive_integer_vector(direction);
  RatVector normal(direction.size());
  bool nonzero = false;
  for (Eigen::Index i = 0; i < normal.size(); ++i) {
    normal[i] = to_rational(prim[i]);
    nonzero = nonzero || prim[i] != 0;
  }
  if (!nonzero) throw InvalidInput("half-space normal must be nonzero");
  HalfSpace h{normal, normal.dot(through), Side::AtLeast};
  for (Eigen::Index i = 0; i < normal.size(); ++i) {
    if (normal[i] == 0) continue;
    if (normal[i] < 0) {
      h.normal = -h.normal;
      h.offset = -h.offset;
      h.side = Side::AtMost;
    }
    break;
  }
  return h;
}

bool HalfSpace::contains(const RatPoint& x) const {
  Rational v = normal.dot(x);
  return side == Side::AtLeast ? v >= offset : v <= offset;
}

bool HalfSpace::on_boundary(const RatPoint& x) const { return normal.dot(x) == offset; }

int HalfSpace::count(const PointMultiset& A) const {
  int c = 0;
  for (const auto& e : A.entries())
    if (contains(e.point)) c += e.multiplicity;
  return c;
}

// ---------------------------------------------------------------------------

std::size_t ConvexCoefficients::support_size() const {
  return static_cast<std::size_t>(
      std::count_if(weights.begin(), weights.end(), [](const Weight& w) { return w.lambda != 0; }));
}

bool ConvexCoefficients::certifies(const RatPoint& q, const PointMultiset& X) const {
  if (static_cast<int>(q.size()) != X.dim() || weights.empty()) return false;
  Rational total = 0;
  RatVector combo = RatVector::Zero(q.size());
  for (const auto& w : weights) {
    if (w.entry >= X.num_entries() || w.lambda < 0) return false;
    total += w.lambda;
    combo += X.point(w.entry) * w.lambda;
  }
  return total == 1 && equal(combo, q);
}

// ---------------------------------------------------------------------------

AmbientSet AmbientSet::mixed(int integer_dims, int real_dims) {
  if (integer_dims < 0 || real_dims < 0 || integer_dims + real_dims < 1)
    throw InvalidInput("lattice ambient needs nonnegative block sizes with positive total");
  AmbientSet s;
  s.kind_ = Kind::Lattice;
  s.base_dim_ = integer_dims;
  s.real_dims_ = real_dims;
  return s;
}

AmbientSet AmbientSet::finite(std::vector<RatPoint> support, int real_dims) {
  if (support.empty()) throw InvalidInput("finite ambient set must be nonempty");
  if (real_dims < 0) throw InvalidInput("real block size must be nonnegative");
  const int d = static_cast<int>(support.front().size());
  for (const auto& p : support) require_same_dim(static_cast<int>(p.size()), d, "finite ambient support");
  std::sort(support.begin(), support.end(), LexLess{});
  support.erase(std::unique(support.begin(), support.end(), [](const RatPoint& a, const RatPoint& b) { return equal(a, b); }),
                support.end());
  AmbientSet s;
  s.kind_ = Kind::Finite;
  s.base_dim_ = d;
  s.real_dims_ = real_dims;
  s.support_ = std::move(support);
  return s;
}

bool AmbientSet::contains(const RatPoint& p) const {
  if (static_cast<int>(p.size()) != dim()) return false;
  if (kind_ == Kind::Lattice) {
    for (int i = 0; i < base_dim_; ++i)
      if (!is_integer(p[i])) return false;
    return true;
  }
  RatPoint base = p.head(base_dim_);
  return std::binary_search(support_.begin(), support_.end(), base, LexLess{});
}

std::string AmbientSet::describe() const {
  if (kind_ == Kind::Lattice) {
    if (real_dims_ == 0) return "Z^" + std::to_string(base_dim_);
    if (base_dim_ == 0) return "R^" + std::to_string(real_dims_);
    return "Z^" + std::to_string(base_dim_) + " x R^" + std::to_string(real_dims_);
  }
  std::string s = "finite(" + std::to_string(support_.size()) + " points)";
  if (real_dims_ > 0) s += " x R^" + std::to_string(real_dims_);
  return s;
}

}  // namespace tverberg
