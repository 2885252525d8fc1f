#include <algorithm>
#include <limits>

#include "orbitvar/error.hpp"
#include "orbitvar/ideals/ideal.hpp"

namespace orbitvar::ideals {

namespace {

using alg::Term;

// Terms sorted increasingly, so the leading term is back().
struct OPoly {
  std::vector<Term> terms;
  const Term& lead() const { return terms.back(); }
  bool zero() const { return terms.empty(); }
};

OPoly to_ordered(const Polynomial& p, const MonomialOrder& order) {
  OPoly o{p.terms()};
  std::sort(o.terms.begin(), o.terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) < 0; });
  return o;
}

Polynomial from_ordered(const OPoly& o, std::size_t nvars) { return Polynomial::from_terms(nvars, o.terms); }

void make_monic(OPoly& p) {
  if (p.zero() || p.lead().coeff.is_one()) return;
  Rational inv = p.lead().coeff.inverse();
  for (auto& t : p.terms) t.coeff *= inv;
}

// p - c * m * g, both operands increasing.
OPoly sub_scaled(const OPoly& p, const Rational& c, const Monomial& m, const OPoly& g, const MonomialOrder& order) {
  OPoly out;
  out.terms.reserve(p.terms.size() + g.terms.size());
  std::size_t i = 0, j = 0;
  while (i < p.terms.size() || j < g.terms.size()) {
    if (j == g.terms.size()) {
      out.terms.push_back(p.terms[i++]);
      continue;
    }
    Monomial gm = g.terms[j].mono * m;
    int cmp = i == p.terms.size() ? 1 : order.compare(p.terms[i].mono, gm);
    if (cmp < 0) {
      out.terms.push_back(p.terms[i++]);
    } else if (cmp > 0) {
      out.terms.push_back({gm, -(c * g.terms[j].coeff)});
      ++j;
    } else {
      Rational v = p.terms[i].coeff - c * g.terms[j].coeff;
      if (!v.is_zero()) out.terms.push_back({gm, v});
      ++i;
      ++j;
    }
  }
  return out;
}

// Full reduction; basis elements are monic.
OPoly full_reduce(OPoly p, const std::vector<OPoly>& basis, const MonomialOrder& order, std::size_t skip = SIZE_MAX) {
  std::vector<Term> rem;
  while (!p.zero()) {
    const Term lt = p.lead();
    const OPoly* div = nullptr;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip || basis[k].zero()) continue;
      if (basis[k].lead().mono.divides(lt.mono)) {
        div = &basis[k];
        break;
      }
    }
    if (!div) {
      rem.push_back(lt);
      p.terms.pop_back();
      continue;
    }
    p = sub_scaled(p, lt.coeff, lt.mono.quotient(div->lead().mono), *div, order);
  }
  std::reverse(rem.begin(), rem.end());
  return OPoly{std::move(rem)};
}

OPoly s_poly(const OPoly& f, const OPoly& g, const MonomialOrder& order) {
  Monomial l = Monomial::lcm(f.lead().mono, g.lead().mono);
  OPoly a;
  Monomial mf = l.quotient(f.lead().mono);
  for (const auto& t : f.terms) a.terms.push_back({t.mono * mf, t.coeff});
  return sub_scaled(a, Rational(1), l.quotient(g.lead().mono), g, order);
}

}  // namespace

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  std::size_t nvars = 0;
  std::vector<OPoly> g;
  for (const auto& p : gens) {
    nvars = std::max(nvars, p.nvars());
    if (p.is_zero()) continue;
    OPoly o = to_ordered(p, order);
    make_monic(o);
    g.push_back(std::move(o));
  }
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;
  std::vector<std::vector<bool>> pending;
  auto grow = [&](std::size_t size) {
    for (auto& row : pending) row.resize(size, false);
    pending.resize(size, std::vector<bool>(size, false));
  };
  grow(g.size());
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      pairs.push_back({i, j, Monomial::lcm(g[i].lead().mono, g[j].lead().mono)});
      pending[i][j] = pending[j][i] = true;
    }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const Monomial& a = pairs[k].lcm;
      const Monomial& b = pairs[best].lcm;
      if (a.degree() != b.degree() ? a.degree() < b.degree() : order.compare(a, b) < 0) best = k;
    }
    Pair p = pairs[best];
    pairs[best] = pairs.back();
    pairs.pop_back();
    pending[p.i][p.j] = pending[p.j][p.i] = false;

    if (g[p.i].lead().mono.coprime(g[p.j].lead().mono)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      chain = !pending[p.i][k] && !pending[p.j][k] && g[k].lead().mono.divides(p.lcm);
    }
    if (chain) continue;

    OPoly h = full_reduce(s_poly(g[p.i], g[p.j], order), g, order);
    if (h.zero()) continue;
    make_monic(h);
    if (h.lead().mono.is_one()) {
      return {Polynomial::constant(nvars, Rational(1))};
    }
    std::size_t idx = g.size();
    g.push_back(std::move(h));
    grow(g.size());
    for (std::size_t k = 0; k < idx; ++k) {
      pairs.push_back({k, idx, Monomial::lcm(g[k].lead().mono, g[idx].lead().mono)});
      pending[k][idx] = pending[idx][k] = true;
    }
  }

  for (const auto& p : g) {
    if (p.lead().mono.is_one()) return {Polynomial::constant(nvars, Rational(1))};
  }
  // Minimalize, then tail-reduce.
  std::sort(g.begin(), g.end(), [&](const OPoly& a, const OPoly& b) {
    return order.compare(a.lead().mono, b.lead().mono) < 0;
  });
  std::vector<OPoly> minimal;
  for (auto& p : g) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                 [&](const OPoly& q) { return q.lead().mono.divides(p.lead().mono); });
    if (!redundant) minimal.push_back(std::move(p));
  }
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    minimal[k] = full_reduce(minimal[k], minimal, order, k);
    make_monic(minimal[k]);
  }
  std::vector<Polynomial> out;
  for (auto it = minimal.rbegin(); it != minimal.rend(); ++it) out.push_back(from_ordered(*it, nvars));
  return out;
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& gb, const MonomialOrder& order) {
  std::vector<OPoly> basis;
  for (const auto& p : gb) {
    OPoly o = to_ordered(p, order);
    make_monic(o);
    basis.push_back(std::move(o));
  }
  return from_ordered(full_reduce(to_ordered(f, order), basis, order), f.nvars());
}

}  // namespace orbitvar::ideals
