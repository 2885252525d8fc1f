#include "orbitvar/algebra/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "orbitvar/error.hpp"

namespace orbitvar::alg {

Monomial Monomial::variable(std::size_t i, unsigned exponent) {
  Monomial m;
  m.set(i, exponent);
  return m;
}

void Monomial::set(std::size_t i, unsigned exponent) {
  if (i >= kMaxVariables) throw Error(ErrorCode::ScaleExceeded, "too many polynomial variables");
  if (exponent > 255) throw Error(ErrorCode::ScaleExceeded, "exponent exceeds 255");
  deg_ = static_cast<std::uint16_t>(deg_ - e_[i] + exponent);
  e_[i] = static_cast<std::uint8_t>(exponent);
}

bool Monomial::divides(const Monomial& other) const {
  if (deg_ > other.deg_) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (e_[i] && other.e_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& other) const {
  Monomial q;
  for (std::size_t i = 0; i < kMaxVariables; ++i) q.e_[i] = static_cast<std::uint8_t>(e_[i] - other.e_[i]);
  q.deg_ = static_cast<std::uint16_t>(deg_ - other.deg_);
  return q;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial l;
  unsigned deg = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    l.e_[i] = std::max(a.e_[i], b.e_[i]);
    deg += l.e_[i];
  }
  l.deg_ = static_cast<std::uint16_t>(deg);
  return l;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial p;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    unsigned e = static_cast<unsigned>(a.e_[i]) + b.e_[i];
    if (e > 255) throw Error(ErrorCode::ScaleExceeded, "exponent exceeds 255");
    p.e_[i] = static_cast<std::uint8_t>(e);
  }
  p.deg_ = static_cast<std::uint16_t>(a.deg_ + b.deg_);
  return p;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : e_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  unsigned da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind) {
    case OrderKind::Lex:
      for (std::size_t i = 0; i < kMaxVariables; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    case OrderKind::Block: {
      int c = grevlex_range(a, b, 0, block);
      return c != 0 ? c : grevlex_range(a, b, block, kMaxVariables);
    }
    case OrderKind::Grevlex:
      break;
  }
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = kMaxVariables; i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind) {
    case OrderKind::Lex:
      return "lex";
    case OrderKind::Block:
      return "block(" + std::to_string(block) + ")";
    case OrderKind::Grevlex:
      break;
  }
  return "grevlex";
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  return monomial(nvars, Monomial(), c);
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
  return monomial(nvars, Monomial::variable(i), Rational(1));
}

Polynomial Polynomial::monomial(std::size_t nvars, const Monomial& m, const Rational& c) {
  Polynomial p(nvars);
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  Polynomial p(nvars);
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  const auto order = MonomialOrder::grevlex();
  std::sort(terms_.begin(), terms_.end(),
            [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
  std::vector<Term> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().mono == t.mono) {
      merged.back().coeff += t.coeff;
    } else {
      if (!merged.empty() && merged.back().coeff.is_zero()) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coeff.is_zero()) merged.pop_back();
  terms_ = std::move(merged);
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.mono == m) return t.coeff;
  }
  return Rational(0);
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw Error(ErrorCode::InvalidArgument, "leading term of zero polynomial");
  if (order.kind == OrderKind::Grevlex) return terms_.front();
  const Term* best = &terms_.front();
  for (const auto& t : terms_) {
    if (order.greater(t.mono, best->mono)) best = &t;
  }
  return *best;
}

bool Polynomial::uses_variable(std::size_t i) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono[i] != 0; });
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
  if (point.size() != nvars_) throw Error(ErrorCode::DimensionMismatch, "evaluation point has wrong length");
  Rational acc;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < nvars_ && !v.is_zero(); ++i)
      for (unsigned e = 0; e < t.mono[i]; ++e) v *= point[i];
    acc += v;
  }
  return acc;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != nvars_) throw Error(ErrorCode::DimensionMismatch, "substitution has wrong length");
  std::size_t target = images.empty() ? 0 : images.front().nvars();
  Polynomial out(target);
  for (const auto& t : terms_) {
    Polynomial v = constant(target, t.coeff);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.mono[i]) v = v * images[i].pow(t.mono[i]);
    }
    out += v;
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

namespace {

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  const auto order = MonomialOrder::grevlex();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : (j == b.size() ? 1 : order.compare(a[i].mono, b[j].mono));
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (subtract) out.back().coeff = -out.back().coeff;
    } else {
      Rational s = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!s.is_zero()) out.push_back({a[i].mono, s});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  nvars_ = std::max(nvars_, o.nvars_);
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  nvars_ = std::max(nvars_, o.nvars_);
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) terms.push_back({s.mono * t.mono, s.coeff * t.coeff});
  return Polynomial::from_terms(std::max(a.nvars_, b.nvars_), std::move(terms));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(nvars_, Rational(1));
  Polynomial base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * terms_.front().coeff.inverse();
}

std::string Polynomial::to_string(const std::vector<std::string>& names, const MonomialOrder& order) const {
  if (names.size() < nvars_) throw Error(ErrorCode::InvalidArgument, "missing variable names");
  if (terms_.empty()) return "0";
  std::vector<const Term*> sorted;
  for (const auto& t : terms_) sorted.push_back(&t);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [&](const Term* a, const Term* b) { return order.greater(a->mono, b->mono); });
  std::ostringstream os;
  bool first = true;
  for (const Term* t : sorted) {
    int sign = t->coeff.sign();
    if (first) {
      if (sign < 0) os << "-";
    } else {
      os << (sign < 0 ? " - " : " + ");
    }
    first = false;
    Rational mag = t->coeff.abs();
    bool wrote = false;
    if (!mag.is_one() || t->mono.is_one()) {
      os << mag;
      wrote = true;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (!t->mono[i]) continue;
      if (wrote) os << "*";
      os << names[i];
      if (t->mono[i] > 1) os << "^" << t->mono[i];
      wrote = true;
    }
  }
  return os.str();
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& names) : s_(text), names_(names) {}

  Polynomial run() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError,
                what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    bool neg = eat('-');
    if (!neg) eat('+');
    Polynomial acc = term();
    if (neg) acc = -acc;
    while (true) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      if (eat('*')) {
        acc = acc * factor();
      } else if (eat('/')) {
        Polynomial d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc *= d.terms().front().coeff.inverse();
      } else {
        return acc;
      }
    }
  }

  unsigned exponent() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    return static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (eat('^')) base = base.pow(exponent());
    return base;
  }

  Polynomial atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    std::size_t n = names_.size();
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Polynomial::constant(n, Rational::parse(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < n; ++i) {
        if (names_[i] == name) return Polynomial::variable(n, i);
      }
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "'");
    }
    fail("unexpected character");
  }

  std::string_view s_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, const std::vector<std::string>& names) {
  return Parser(text, names).run();
}

}  // namespace orbitvar::alg
