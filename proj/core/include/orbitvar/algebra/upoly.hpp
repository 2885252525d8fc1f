#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orbitvar/algebra/rational.hpp"

namespace orbitvar::alg {

/// Dense univariate polynomial over Q, coefficients stored from degree 0 up.
/// The zero polynomial has no coefficients and degree -1.
class UPoly {
 public:
  UPoly() = default;
  UPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  UPoly(long c) : UPoly(Rational(c)) {}  // NOLINT
  explicit UPoly(std::vector<Rational> coeffs);

  static UPoly monomial(const Rational& c, int degree);
  static UPoly variable() { return monomial(Rational(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of z^k, zero when k is out of range.
  Rational coeff(int k) const;
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

  Rational eval(const Rational& z) const;
  UPoly derivative() const;
  UPoly monic() const;

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division: returns (quotient, remainder).
  std::pair<UPoly, UPoly> divmod(const UPoly& divisor) const;
  /// Division that must leave no remainder; throws DivisionFailure otherwise.
  UPoly exact_div(const UPoly& divisor) const;

  std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
UPoly gcd(UPoly a, UPoly b);

/// Product of the distinct irreducible factors of p (monic), p / gcd(p, p').
UPoly squarefree_part(const UPoly& p);

}  // namespace orbitvar::alg
