#include "orbitvar/algebra/rational.hpp"

#include <cctype>
#include <functional>
#include <ostream>

#include "orbitvar/error.hpp"

namespace orbitvar::alg {

namespace {

bool valid_integer(std::string_view s) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class to_mpz(std::string_view s) {
  std::string str(s);
  if (!str.empty() && str[0] == '+') str.erase(0, 1);
  return mpz_class(str, 10);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string_view s = text.substr(b, e - b);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_integer(s)) {
      throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
    }
    return Rational(to_mpz(s));
  }
  auto num = s.substr(0, slash);
  auto den = s.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+') {
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  }
  mpz_class d = to_mpz(den);
  if (d == 0) {
    throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(to_mpz(num), d);
}

std::string Rational::to_string() const { return q_.get_str(10); }

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  q_ /= o.q_;
  return *this;
}

std::size_t Rational::hash() const {
  return std::hash<std::string>{}(to_string());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational factorial(unsigned k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return Rational(f);
}

}  // namespace orbitvar::alg
