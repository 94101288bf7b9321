#pragma once

#include "tverberg/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tverberg {

/// One distinct point of a multiset together with its multiplicity.
struct Entry {
  RatPoint point;
  int multiplicity = 1;
};

/// Finite multiset of points of a common dimension.
///
/// Entries are kept sorted lexicographically and equal points are merged, so
/// two multisets with the same content have identical entry lists. Every
/// algorithm that walks the entries therefore behaves reproducibly.
///
/// Besides entries, a multiset exposes its *instances*: the points counted
/// with multiplicity, numbered 0..size()-1 entry by entry.
class PointMultiset {
 public:
  explicit PointMultiset(int dim = 0) : dim_(dim) {}
  PointMultiset(int dim, std::vector<Entry> entries);
  PointMultiset(int dim, const std::vector<RatPoint>& points);

  static PointMultiset from_points(const std::vector<RatPoint>& points);

  int dim() const { return dim_; }
  /// Cardinality counted with multiplicity.
  int size() const { return size_; }
  bool empty() const { return size_ == 0; }
  std::size_t num_entries() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  const Entry& entry(std::size_t i) const { return entries_[i]; }
  const RatPoint& point(std::size_t i) const { return entries_[i].point; }

  int multiplicity_of(const RatPoint& p) const;
  std::optional<std::size_t> find(const RatPoint& p) const;

  void add(const RatPoint& p, int multiplicity = 1);
  /// Removes up to `multiplicity` copies; returns how many were removed.
  int remove(const RatPoint& p, int multiplicity = 1);

  /// Entry index of every instance, in instance order.
  std::vector<std::size_t> instance_entries() const;
  /// Points counted with multiplicity, in instance order.
  std::vector<RatPoint> instances() const;

  /// Multiset built from a selection of instance indices.
  PointMultiset subset(std::span<const int> instance_indices) const;

  /// Coordinates [first, first+count) of every point.
  PointMultiset project(int first, int count) const;

  friend bool operator==(const PointMultiset& a, const PointMultiset& b);

 private:
  void canonicalize();

  int dim_ = 0;
  int size_ = 0;
  std::vector<Entry> entries_;
};

PointMultiset multiset_union(const PointMultiset& a, const PointMultiset& b);

/// Closed half-space { x : normal . x >= offset } (Side::AtLeast) or
/// { x : normal . x <= offset } (Side::AtMost).
///
/// Normalized: the normal is a primitive integer vector whose first nonzero
/// entry is positive; the side records which closed half is meant.
struct HalfSpace {
  enum class Side { AtLeast, AtMost };

  RatVector normal;
  Rational offset;
  Side side = Side::AtLeast;

  /// Builds the half-space { x : direction . x >= direction . through } and
  /// normalizes it. `direction` must be nonzero.
  static HalfSpace through(const RatVector& direction, const RatPoint& through);

  bool contains(const RatPoint& x) const;
  bool on_boundary(const RatPoint& x) const;
  /// Number of instances of `A` in the closed half-space.
  int count(const PointMultiset& A) const;
};

/// Convex weights over the entries of some multiset.
struct ConvexCoefficients {
  struct Weight {
    std::size_t entry;
    Rational lambda;
  };
  std::vector<Weight> weights;

  std::size_t support_size() const;
  /// True iff all weights are nonnegative, reference valid entries, sum to
  /// exactly one, and combine the entries of X into q.
  bool certifies(const RatPoint& q, const PointMultiset& X) const;
};

/// The set S in which Tverberg points are sought.
///
/// Two families are representable:
///  - lattices Z^j x R^k (Z^d when k = 0, R^d when j = 0);
///  - S' x R^k for an explicit finite S' (plain finite S when k = 0).
/// Coordinates are laid out with the integer or finite block first.
class AmbientSet {
 public:
  enum class Kind { Lattice, Finite };

  static AmbientSet integer_lattice(int d) { return mixed(d, 0); }
  static AmbientSet real_space(int d) { return mixed(0, d); }
  static AmbientSet mixed(int integer_dims, int real_dims);
  static AmbientSet finite(std::vector<RatPoint> support, int real_dims = 0);

  Kind kind() const { return kind_; }
  int dim() const { return base_dim_ + real_dims_; }
  /// j for lattices, dim(S') for finite bases.
  int base_dim() const { return base_dim_; }
  int real_dims() const { return real_dims_; }
  bool is_finite() const { return kind_ == Kind::Finite && real_dims_ == 0; }
  bool is_integer_lattice() const { return kind_ == Kind::Lattice && real_dims_ == 0; }
  /// Canonically sorted, duplicate free.
  const std::vector<RatPoint>& support() const { return support_; }

  bool contains(const RatPoint& p) const;
  std::string describe() const;

 private:
  Kind kind_ = Kind::Lattice;
  int base_dim_ = 0;
  int real_dims_ = 0;
  std::vector<RatPoint> support_;
};

void require_same_dim(int a, int b, const char* what);

}  // namespace tverberg
