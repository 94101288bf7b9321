#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <string>
#include <string_view>

namespace tverberg {

/// Exact rational scalar. Expression templates are disabled so the type
/// behaves as a plain value inside Eigen expressions.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::cpp_int;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RatVector = VectorX<Rational>;
using RatMatrix = MatrixX<Rational>;

/// A point with exact rational coordinates. Rationals are always kept in
/// lowest terms with a positive denominator by the backend.
using RatPoint = RatVector;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);
BigInt floor_of(const Rational& value);
BigInt ceil_of(const Rational& value);
BigInt numerator_of(const Rational& value);
BigInt denominator_of(const Rational& value);
Rational to_rational(const BigInt& value);

/// Strict lexicographic order on coordinates; shorter vectors first.
bool lex_less(const RatVector& a, const RatVector& b);
bool equal(const RatVector& a, const RatVector& b);

struct LexLess {
  bool operator()(const RatVector& a, const RatVector& b) const { return lex_less(a, b); }
};

RatPoint make_point(std::initializer_list<Rational> coords);
std::string to_string(const RatVector& v);

/// Positive multiple of `v` with coprime integer entries. The zero vector maps
/// to itself.
VectorX<BigInt> primitive_integer_vector(const RatVector& v);

}  // namespace tverberg
