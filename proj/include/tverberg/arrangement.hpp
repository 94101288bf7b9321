#pragma once

#include "tverberg/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace tverberg {

using Int128 = __int128;

namespace detail {

template <typename Int>
Int abs_value(const Int& v) {
  return v < 0 ? Int(-v) : v;
}

template <typename Int>
Int gcd_value(Int a, Int b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Fraction-free (Bareiss) determinant of a square matrix stored row-major.
template <typename Int>
Int bareiss_determinant(std::vector<Int> m, int n) {
  if (n == 0) return Int(1);
  Int sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k * n + k] == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i * n + k] != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return Int(0);
      for (int j = 0; j < n; ++j) std::swap(m[k * n + j], m[swap * n + j]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
    prev = m[k * n + k];
  }
  return sign * m[(n - 1) * n + (n - 1)];
}

}  // namespace detail

/// Exhaustive walk over the open cells of a central hyperplane arrangement.
///
/// Input: nonzero integer vectors x_1..x_n in Z^d. A generic direction u
/// (u.x_i != 0 for all i) splits them into a positive set {i : u.x_i > 0} and
/// its complement; the open cells of the arrangement of the hyperplanes
/// {u : u.x_i = 0} are exactly the distinct splits. The walk reports every
/// cell at least once, each time as a lexicographic chain (c_0, c_1, ...):
/// the direction c_0 + e c_1 + e^2 c_2 + ... for small e > 0 lies in it.
///
/// Candidate c_0 are the rays of the arrangement refined by the coordinate
/// hyperplanes, i.e. generalized cross products of d-1 generators; the
/// vectors orthogonal to c_0 form a lower-dimensional instance of the same
/// problem, which is solved recursively. In R^3 this is O(n^2) rays with O(n)
/// work each.
///
/// `Int` must hold products of the input magnitudes: Int128 is enough in
/// d <= 3 for entries up to 2^30 (see fits_fast_kernel); BigInt always works.
template <typename Int>
class CentralArrangement {
 public:
  using Vector = std::vector<Int>;

  CentralArrangement(int dim, std::vector<Vector> vectors, std::vector<int> weights)
      : dim_(dim), vectors_(std::move(vectors)), weights_(std::move(weights)), positive_(vectors_.size(), 0) {}

  int dim() const { return dim_; }
  std::size_t size() const { return vectors_.size(); }

  /// Calls visit(positive_flags, positive_weight, chain) for every cell
  /// reached. Stops early and returns false as soon as visit returns false.
  template <typename Visitor>
  bool for_each_cell(Visitor&& visit) {
    if (vectors_.empty()) return true;
    std::vector<int> all(vectors_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    chain_.clear();
    // recurse() keeps pointers into chain_, so it must never reallocate.
    chain_.reserve(static_cast<std::size_t>(dim_) + 1);
    weight_ = 0;
    return recurse(0, all, visit);
  }

  static Int dot(const Vector& a, const Vector& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  }

  /// Vector orthogonal to the d-1 given vectors (cofactor expansion); zero
  /// iff they are linearly dependent.
  static Vector generalized_cross(const std::vector<const Vector*>& rows, int d) {
    Vector out(static_cast<std::size_t>(d), Int(0));
    if (d == 1) {
      out[0] = 1;
      return out;
    }
    if (d == 2) {
      out[0] = -(*rows[0])[1];
      out[1] = (*rows[0])[0];
      return out;
    }
    if (d == 3) {
      const Vector& a = *rows[0];
      const Vector& b = *rows[1];
      out[0] = a[1] * b[2] - a[2] * b[1];
      out[1] = a[2] * b[0] - a[0] * b[2];
      out[2] = a[0] * b[1] - a[1] * b[0];
      return out;
    }
    const int n = d - 1;
    for (int col = 0; col < d; ++col) {
      std::vector<Int> minor;
      minor.reserve(static_cast<std::size_t>(n * n));
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < d; ++c)
          if (c != col) minor.push_back((*rows[r])[c]);
      Int det = detail::bareiss_determinant(std::move(minor), n);
      out[col] = (col % 2 == 0) ? det : Int(-det);
    }
    return out;
  }

 private:
  static bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
  }

  /// Divides out the content and makes the first nonzero entry positive.
  static void normalize_direction(Vector& v) {
    Int g = 0;
    for (const auto& x : v) g = detail::gcd_value(g, x);
    if (g > 1)
      for (auto& x : v) x /= g;
    for (const auto& x : v)
      if (x != 0) {
        if (x < 0)
          for (auto& y : v) y = -y;
        break;
      }
  }

  template <typename Visitor>
  bool emit(Visitor& visit) {
    return visit(static_cast<const std::vector<char>&>(positive_), weight_, static_cast<const std::vector<Vector>&>(chain_));
  }

  void mark(int i) {
    positive_[static_cast<std::size_t>(i)] = 1;
    weight_ += weights_[static_cast<std::size_t>(i)];
  }
  void unmark(int i) {
    positive_[static_cast<std::size_t>(i)] = 0;
    weight_ -= weights_[static_cast<std::size_t>(i)];
  }

  template <typename Visitor>
  bool recurse(int level, const std::vector<int>& Z, Visitor& visit) {
    const int k = dim_ - level;
    if (k == 1) {
      // Everything left is parallel to one line; the two sides of it.
      const Vector& ref = vectors_[static_cast<std::size_t>(Z.front())];
      for (int s : {1, -1}) {
        std::vector<int> marked;
        for (int i : Z) {
          Int v = dot(vectors_[static_cast<std::size_t>(i)], ref);
          if ((s > 0 && v > 0) || (s < 0 && v < 0)) {
            mark(i);
            marked.push_back(i);
          }
        }
        Vector dir = ref;
        if (s < 0)
          for (auto& x : dir) x = -x;
        chain_.push_back(std::move(dir));
        bool go = emit(visit);
        chain_.pop_back();
        for (int i : marked) unmark(i);
        if (!go) return false;
      }
      return true;
    }

    // Generators: distinct directions among Z, plus coordinate axes when the
    // rays of the arrangement alone might not reach every cell.
    std::set<Vector> gen_set;
    for (int i : Z) {
      Vector g = vectors_[static_cast<std::size_t>(i)];
      normalize_direction(g);
      gen_set.insert(std::move(g));
    }
    std::vector<Vector> gens(gen_set.begin(), gen_set.end());
    if (k >= 3)
      for (int a = 0; a < dim_; ++a) {
        Vector e(static_cast<std::size_t>(dim_), Int(0));
        e[static_cast<std::size_t>(a)] = 1;
        if (!gen_set.count(e)) gens.push_back(std::move(e));
      }

    std::set<Vector> seen;
    std::vector<const Vector*> rows;
    for (const auto& f : chain_) rows.push_back(&f);
    const std::size_t fixed = rows.size();
    const int pick = k - 1;
    std::vector<int> idx(static_cast<std::size_t>(pick));
    for (int i = 0; i < pick; ++i) idx[static_cast<std::size_t>(i)] = i;
    const int G = static_cast<int>(gens.size());
    if (G < pick) return true;
    for (;;) {
      rows.resize(fixed);
      for (int i : idx) rows.push_back(&gens[static_cast<std::size_t>(i)]);
      Vector c = generalized_cross(rows, dim_);
      if (!is_zero(c)) {
        normalize_direction(c);
        if (seen.insert(c).second && !visit_ray(level, Z, c, visit)) return false;
      }
      // next combination
      int p = pick - 1;
      while (p >= 0 && idx[static_cast<std::size_t>(p)] == G - pick + p) --p;
      if (p < 0) break;
      ++idx[static_cast<std::size_t>(p)];
      for (int q = p + 1; q < pick; ++q) idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
    }
    return true;
  }

  template <typename Visitor>
  bool visit_ray(int level, const std::vector<int>& Z, const Vector& c, Visitor& visit) {
    std::vector<Int> dots(Z.size());
    for (std::size_t t = 0; t < Z.size(); ++t) dots[t] = dot(vectors_[static_cast<std::size_t>(Z[t])], c);
    for (int s : {1, -1}) {
      std::vector<int> marked, zero;
      for (std::size_t t = 0; t < Z.size(); ++t) {
        const Int& v = dots[t];
        if (v == 0)
          zero.push_back(Z[t]);
        else if ((s > 0) == (v > 0)) {
          mark(Z[t]);
          marked.push_back(Z[t]);
        }
      }
      Vector dir = c;
      if (s < 0)
        for (auto& x : dir) x = -x;
      chain_.push_back(std::move(dir));
      bool go = zero.empty() ? emit(visit) : recurse(level + 1, zero, visit);
      chain_.pop_back();
      for (int i : marked) unmark(i);
      if (!go) return false;
    }
    return true;
  }

  int dim_;
  std::vector<Vector> vectors_;
  std::vector<int> weights_;
  std::vector<char> positive_;
  std::vector<Vector> chain_;
  long long weight_ = 0;
};

/// True when the Int128 kernel is exact for vectors of dimension `dim` whose
/// entries are bounded by `max_abs` in absolute value.
inline bool fits_fast_kernel(int dim, const BigInt& max_abs) { return dim <= 3 && max_abs <= (BigInt(1) << 30); }

inline Int128 to_int128(const BigInt& v) {
  const bool neg = v < 0;
  BigInt a = neg ? BigInt(-v) : v;
  unsigned long long lo = static_cast<unsigned long long>(a & BigInt(0xFFFFFFFFFFFFFFFFULL));
  unsigned long long hi = static_cast<unsigned long long>(a >> 64);
  Int128 r = (static_cast<Int128>(hi) << 64) | static_cast<Int128>(lo);
  return neg ? -r : r;
}

inline BigInt to_bigint(Int128 v) {
  const bool neg = v < 0;
  unsigned __int128 a = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  BigInt r = BigInt(static_cast<unsigned long long>(a >> 64));
  r <<= 64;
  r += BigInt(static_cast<unsigned long long>(a & 0xFFFFFFFFFFFFFFFFULL));
  return neg ? BigInt(-r) : r;
}

}  // namespace tverberg
