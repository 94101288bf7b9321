#pragma once

#include "tverberg/types.hpp"

#include <initializer_list>
#include <vector>

namespace testing_helpers {

inline tverberg::RatPoint pt(std::initializer_list<tverberg::Rational> c) { return tverberg::make_point(c); }

inline tverberg::PointMultiset pts(std::initializer_list<std::initializer_list<int>> list) {
  std::vector<tverberg::RatPoint> v;
  for (auto p : list) {
    tverberg::RatPoint x(static_cast<Eigen::Index>(p.size()));
    Eigen::Index i = 0;
    for (int c : p) x[i++] = c;
    v.push_back(x);
  }
  return tverberg::PointMultiset::from_points(v);
}

}  // namespace testing_helpers
