#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orbitvar/algebra/rational.hpp"

namespace orbitvar::alg {

inline constexpr std::size_t kMaxVariables = 48;

/// Exponent vector with a fixed capacity of kMaxVariables variables.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(std::size_t i, unsigned exponent = 1);

  unsigned operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, unsigned exponent);
  unsigned degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  /// Assumes other divides *this.
  Monomial quotient(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxVariables> e_{};
  std::uint16_t deg_ = 0;
};

enum class OrderKind { Grevlex, Lex, Block };

/// Monomial order. Block(k): grevlex on the first k variables, ties broken by
/// grevlex on the remaining ones.
struct MonomialOrder {
  OrderKind kind = OrderKind::Grevlex;
  std::size_t block = 0;

  static MonomialOrder grevlex() { return {OrderKind::Grevlex, 0}; }
  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder block_order(std::size_t k) { return {OrderKind::Block, k}; }

  /// Negative, zero or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse multivariate polynomial over Q in a fixed number of variables.
/// Terms are kept sorted decreasingly in grevlex with nonzero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);
  static Polynomial monomial(std::size_t nvars, const Monomial& m, const Rational& c);
  /// Builds from arbitrary terms; merges duplicates and drops zeros.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  unsigned total_degree() const;
  Rational coefficient(const Monomial& m) const;
  /// Largest term under the given order. Polynomial must be nonzero.
  const Term& leading_term(const MonomialOrder& order) const;
  bool uses_variable(std::size_t i) const;

  Rational eval(const std::vector<Rational>& point) const;
  /// Replaces variable i by images[i]; all images share one variable count.
  Polynomial substitute(const std::vector<Polynomial>& images) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(unsigned k) const;
  /// Scales so the leading grevlex coefficient is 1.
  Polynomial monic() const;

  /// Terms printed decreasingly in the given order, e.g. "3/2*z11*a21 - u1*T2".
  std::string to_string(const std::vector<std::string>& names,
                        const MonomialOrder& order = MonomialOrder::grevlex()) const;

  /// Parses sums of products of rationals, variable names and powers, with
  /// parentheses. Throws ParseError.
  static Polynomial parse(std::string_view text, const std::vector<std::string>& names);

 private:
  void normalize();
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

}  // namespace orbitvar::alg
