#include "tverberg/rational.hpp"

#include "tverberg/errors.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include <cctype>
#include <sstream>

namespace tverberg {

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den))
    throw InvalidInput("malformed rational '" + std::string(text) + "'");
  BigInt n(std::string(num[0] == '+' ? num.substr(1) : num));
  BigInt d(std::string(den[0] == '+' ? den.substr(1) : den));
  if (d == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  return Rational(to_rational(n) / to_rational(d));
}

std::string to_string(const Rational& value) { return value.str(); }

namespace {

BigInt from_mpz(mpz_srcptr z) {
  if (mpz_fits_slong_p(z)) return BigInt(mpz_get_si(z));
  std::string buf(mpz_sizeinbase(z, 10) + 2, '\0');
  mpz_get_str(buf.data(), 10, z);
  buf.resize(std::char_traits<char>::length(buf.c_str()));
  return BigInt(buf);
}

}  // namespace

BigInt numerator_of(const Rational& value) { return from_mpz(mpq_numref(value.backend().data())); }

BigInt denominator_of(const Rational& value) { return from_mpz(mpq_denref(value.backend().data())); }

Rational to_rational(const BigInt& value) {
  if (value >= std::numeric_limits<long long>::min() && value <= std::numeric_limits<long long>::max())
    return Rational(value.convert_to<long long>());
  return Rational(value.str());
}

bool is_integer(const Rational& value) { return boost::multiprecision::denominator(value) == 1; }

BigInt floor_of(const Rational& value) {
  BigInt n = numerator_of(value), d = denominator_of(value);
  BigInt q = n / d;
  if (n % d != 0 && n < 0) q -= 1;
  return q;
}

BigInt ceil_of(const Rational& value) {
  BigInt n = numerator_of(value), d = denominator_of(value);
  BigInt q = n / d;
  if (n % d != 0 && n > 0) q += 1;
  return q;
}

bool lex_less(const RatVector& a, const RatVector& b) {
  const auto n = std::min(a.size(), b.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

bool equal(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

RatPoint make_point(std::initializer_list<Rational> coords) {
  RatPoint p(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (const auto& c : coords) p[i++] = c;
  return p;
}

std::string to_string(const RatVector& v) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].str();
  os << ')';
  return os.str();
}

VectorX<BigInt> primitive_integer_vector(const RatVector& v) {
  VectorX<BigInt> out(v.size());
  BigInt lcm = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    BigInt d = denominator_of(v[i]);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  BigInt g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out[i] = numerator_of(v[i]) * (lcm / denominator_of(v[i]));
    g = boost::multiprecision::gcd(g, boost::multiprecision::abs(out[i]));
  }
  if (g > 1)
    for (Eigen::Index i = 0; i < v.size(); ++i) out[i] /= g;
  return out;
}

}  // namespace tverberg
