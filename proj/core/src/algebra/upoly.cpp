#include "orbitvar/algebra/upoly.hpp"

#include <sstream>

#include "orbitvar/error.hpp"

namespace orbitvar::alg {

UPoly::UPoly(const Rational& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const Rational& c, int degree) {
  if (c.is_zero()) return {};
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational UPoly::eval(const Rational& z) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
  return UPoly(std::move(v));
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  Rational inv = leading().inverse();
  UPoly r = *this;
  for (auto& c : r.coeffs_) c *= inv;
  return r;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const UPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(v);
  trim();
  return *this;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  UPoly rem = *this;
  if (rem.degree() < divisor.degree()) return {UPoly(), rem};
  std::vector<Rational> quot(static_cast<std::size_t>(rem.degree() - divisor.degree()) + 1);
  Rational lead_inv = divisor.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    int shift = rem.degree() - divisor.degree();
    Rational c = rem.leading() * lead_inv;
    quot[static_cast<std::size_t>(shift)] = c;
    for (int k = 0; k <= divisor.degree(); ++k) {
      rem.coeffs_[static_cast<std::size_t>(k + shift)] -= c * divisor.coeffs_[static_cast<std::size_t>(k)];
    }
    rem.trim();
  }
  return {UPoly(std::move(quot)), rem};
}

UPoly UPoly::exact_div(const UPoly& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw Error(ErrorCode::DivisionFailure, "inexact univariate division");
  return q;
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (!mag.is_one()) os << mag << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.is_zero()) return {};
  UPoly g = gcd(p, p.derivative());
  return p.exact_div(g).monic();
}

}  // namespace orbitvar::alg
