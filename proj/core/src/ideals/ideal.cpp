#include "orbitvar/ideals/ideal.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

#include "orbitvar/error.hpp"

namespace orbitvar::ideals {

PolyRing::PolyRing(std::vector<std::string> names, MonomialOrder order) : names_(std::move(names)), order_(order) {
  if (names_.size() > alg::kMaxVariables) throw Error(ErrorCode::ScaleExceeded, "too many polynomial variables");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j) {
      if (names_[i] == names_[j]) throw Error(ErrorCode::InvalidArgument, "duplicate variable name " + names_[i]);
    }
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

Polynomial PolyRing::var(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw Error(ErrorCode::InvalidArgument, "unknown variable " + std::string(name));
  return var(*i);
}

Ideal::Ideal(PolyRing ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), gens_(std::move(generators)), gb_(std::make_shared<std::optional<std::vector<Polynomial>>>()) {
  for (auto& g : gens_) {
    if (g.nvars() > ring_.nvars()) throw Error(ErrorCode::DimensionMismatch, "generator outside the ring");
    g = Polynomial::from_terms(ring_.nvars(), g.terms());
  }
}

const std::vector<Polynomial>& Ideal::groebner() const {
  if (!gb_) return gens_;
  if (!gb_->has_value()) *gb_ = groebner_basis(gens_, ring_.order());
  return **gb_;
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
  return reduce(Polynomial::from_terms(ring_.nvars(), f.terms()), groebner(), ring_.order());
}

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Polynomial& g) { return contains(g); });
}

bool Ideal::is_unit() const {
  const auto& gb = groebner();
  return gb.size() == 1 && gb.front().is_constant() && !gb.front().is_zero();
}

bool Ideal::is_zero() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_zero(); });
}

Ideal Ideal::operator+(const Ideal& other) const {
  if (!(other.ring_ == ring_)) throw Error(ErrorCode::InvalidArgument, "ideals live in different rings");
  return with(other.gens_);
}

Ideal Ideal::with(const std::vector<Polynomial>& extra) const {
  std::vector<Polynomial> g = gens_;
  g.insert(g.end(), extra.begin(), extra.end());
  return Ideal(ring_, std::move(g));
}

nlohmann::json Ideal::to_json() const {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : gens_) gens.push_back(ring_.format(g));
  return {{"variables", ring_.names()}, {"order", ring_.order().name()}, {"generators", gens}};
}

Polynomial remap(const Polynomial& f, const std::vector<std::optional<std::size_t>>& map, std::size_t new_nvars) {
  std::vector<alg::Term> terms;
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      if (!t.mono[i]) continue;
      if (i >= map.size() || !map[i]) throw Error(ErrorCode::InvalidArgument, "variable has no image in remap");
      m.set(*map[i], t.mono[i]);
    }
    terms.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(new_nvars, std::move(terms));
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop) {
  const PolyRing& ring = ideal.ring();
  std::vector<bool> dropped(ring.nvars(), false);
  for (const auto& name : drop) {
    auto i = ring.index_of(name);
    if (!i) throw Error(ErrorCode::InvalidArgument, "unknown variable " + name);
    dropped[*i] = true;
  }
  std::vector<std::optional<std::size_t>> to_block(ring.nvars()), to_sub(ring.nvars());
  std::vector<std::string> kept;
  std::size_t k = 0;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (dropped[i]) to_block[i] = k++;
  }
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (dropped[i]) continue;
    to_block[i] = k + kept.size();
    kept.push_back(ring.names()[i]);
  }
  MonomialOrder sub_order = ring.order().kind == alg::OrderKind::Block ? MonomialOrder::grevlex() : ring.order();
  PolyRing sub(kept, sub_order);
  if (k == 0) return Ideal(sub, ideal.generators());

  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(remap(g, to_block, ring.nvars()));
  auto gb = groebner_basis(gens, MonomialOrder::block_order(k));
  std::vector<std::optional<std::size_t>> back(ring.nvars());
  for (std::size_t j = 0; j < kept.size(); ++j) back[k + j] = j;
  std::vector<Polynomial> out;
  for (const auto& g : gb) {
    bool uses_dropped = false;
    for (std::size_t v = 0; v < k; ++v) uses_dropped = uses_dropped || g.uses_variable(v);
    if (!uses_dropped) out.push_back(remap(g, back, kept.size()));
  }
  return Ideal(sub, std::move(out));
}

Polynomial exact_divide(const Polynomial& g, const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by the zero polynomial");
  const auto order = MonomialOrder::grevlex();
  std::size_t nvars = std::max(g.nvars(), f.nvars());
  Polynomial q(nvars), r = g;
  const alg::Term& lf = f.leading_term(order);
  while (!r.is_zero()) {
    const alg::Term& lr = r.leading_term(order);
    if (!lf.mono.divides(lr.mono)) throw Error(ErrorCode::DivisionFailure, "polynomial division leaves a remainder");
    Polynomial t = Polynomial::monomial(nvars, lr.mono.quotient(lf.mono), lr.coeff / lf.coeff);
    q += t;
    r -= t * f;
  }
  return q;
}

Ideal ideal_quotient(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "quotient by the zero polynomial");
  const PolyRing& ring = ideal.ring();
  std::vector<std::string> names = ring.names();
  std::string tag = "w_tag";
  while (ring.index_of(tag)) tag += "_";
  names.push_back(tag);
  std::size_t n = ring.nvars();
  PolyRing ext(names, ring.order());
  Polynomial w = ext.var(n);
  Polynomial fe = Polynomial::from_terms(n + 1, f.terms());
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(w * Polynomial::from_terms(n + 1, g.terms()));
  gens.push_back((ext.constant(Rational(1)) - w) * fe);
  Ideal meet = eliminate(Ideal(ext, gens), {tag});
  std::vector<Polynomial> quotients;
  for (const auto& h : meet.generators()) quotients.push_back(exact_divide(h, f));
  return Ideal(ring, std::move(quotients));
}

std::size_t hilbert_dimension(const Ideal& ideal) {
  if (ideal.is_unit()) throw Error(ErrorCode::UnitIdeal, "dimension of the unit ideal");
  const std::size_t n = ideal.ring().nvars();
  const auto& order = ideal.ring().order();
  std::vector<std::uint64_t> supports;
  for (const auto& g : ideal.groebner()) {
    const Monomial& lm = g.leading_term(order).mono;
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (lm[i]) mask |= std::uint64_t{1} << i;
    }
    supports.push_back(mask);
  }
  std::size_t best = 0;
  std::function<void(std::size_t, std::uint64_t, std::size_t)> dfs = [&](std::size_t idx, std::uint64_t set,
                                                                          std::size_t size) {
    if (size + (n - idx) <= best) return;
    if (idx == n) {
      best = size;
      return;
    }
    std::uint64_t with = set | (std::uint64_t{1} << idx);
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [&](std::uint64_t s) { return (s & ~with) == 0; });
    if (independent) dfs(idx + 1, with, size + 1);
    dfs(idx + 1, set, size);
  };
  dfs(0, 0, 0);
  return best;
}

bool in_radical(const Ideal& ideal, const Polynomial& g) {
  const PolyRing& ring = ideal.ring();
  std::vector<std::string> names = ring.names();
  std::string tag = "r_tag";
  while (ring.index_of(tag)) tag += "_";
  names.push_back(tag);
  std::size_t n = ring.nvars();
  PolyRing ext(names, ring.order());
  std::vector<Polynomial> gens;
  for (const auto& h : ideal.generators()) gens.push_back(Polynomial::from_terms(n + 1, h.terms()));
  gens.push_back(ext.constant(Rational(1)) - ext.var(n) * Polynomial::from_terms(n + 1, g.terms()));
  return Ideal(ext, gens).is_unit();
}

}  // namespace orbitvar::ideals
