#include "orbitvar/lie/condition4.hpp"

#include <random>

#include "orbitvar/error.hpp"
#include "orbitvar/ideals/ideal.hpp"
#include "orbitvar/lie/analysis.hpp"
#include "orbitvar/lie/symbolic.hpp"
#include "orbitvar/util/random.hpp"

namespace orbitvar::lie {

using alg::Polynomial;
using report::Verdict;

std::vector<std::string> coordinate_names(const WeightedLieAlgebra& alg) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < alg.d(); ++i) names.push_back("t" + std::to_string(i + 1));
  for (const auto& n : alg.names()) names.push_back(n);
  return names;
}

CentralizerMapFamily identity_family(const WeightedLieAlgebra& alg) {
  CentralizerMapFamily fam{"identity", {}};
  std::vector<Polynomial> m;
  for (std::size_t k = 0; k < alg.dim(); ++k) m.push_back(Polynomial::variable(alg.dim(), k));
  fam.maps.push_back(std::move(m));
  return fam;
}

CentralizerMapFamily abelian_family(const WeightedLieAlgebra& alg) {
  CentralizerMapFamily fam{"coordinate-projections", {}};
  const std::size_t dim = alg.dim();
  for (std::size_t i = 0; i < alg.d(); ++i) {
    std::vector<Polynomial> m(dim, Polynomial(dim));
    m[i] = Polynomial::variable(dim, i);
    if (i < alg.n()) m[alg.d() + i] = Polynomial::variable(dim, alg.d() + i);
    fam.maps.push_back(std::move(m));
  }
  return fam;
}

namespace {

using PolyVec = PolyElement;
using PolyMat = std::vector<PolyVec>;

// Fraction-free elimination; entries stay polynomial by exact division.
Polynomial poly_det(PolyMat m, std::size_t nvars) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(nvars, Rational(1));
  Polynomial prev = Polynomial::constant(nvars, Rational(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k].is_zero()) ++p;
    if (p == n) return Polynomial(nvars);
    if (p != k) {
      std::swap(m[p], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = ideals::exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = Polynomial(nvars);
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

std::vector<Polynomial> minors(const PolyMat& m, std::size_t k, std::size_t nvars) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<Polynomial> out;
  std::vector<std::size_t> r(k), c(k);
  auto first = [&](std::vector<std::size_t>& s) {
    for (std::size_t i = 0; i < k; ++i) s[i] = i;
  };
  auto next = [&](std::vector<std::size_t>& s, std::size_t n) {
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
    return true;
  };
  if (k > rows || k > cols) return out;
  first(r);
  do {
    first(c);
    do {
      PolyMat sub(k, PolyVec(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[r[i]][c[j]];
      Polynomial d = poly_det(sub, nvars);
      if (!d.is_zero()) out.push_back(std::move(d));
    } while (next(c, cols));
  } while (next(r, rows));
  return out;
}

}  // namespace

report::VerificationReport verify_condition4(const WeightedLieAlgebra& alg, const CentralizerMapFamily& fam,
                                             std::uint64_t seed, std::size_t samples) {
  if (fam.maps.size() != alg.d()) {
    throw Error(ErrorCode::ArityMismatch,
                "expected " + std::to_string(alg.d()) + " maps, got " + std::to_string(fam.maps.size()));
  }
  const std::size_t dim = alg.dim();
  for (const auto& m : fam.maps) {
    if (m.size() != dim) throw Error(ErrorCode::DimensionMismatch, "map has the wrong number of coordinates");
  }
  report::VerificationReport rep("condition-4");
  rep.summary()["family"] = fam.name;
  auto names = coordinate_names(alg);

  PolyVec x;
  for (std::size_t k = 0; k < dim; ++k) x.push_back(Polynomial::variable(dim, k));
  nlohmann::json bad = nlohmann::json::array();
  for (std::size_t i = 0; i < fam.maps.size(); ++i) {
    PolyVec b = symbolic_bracket(alg, x, fam.maps[i]);
    for (std::size_t k = 0; k < dim; ++k) {
      if (!b[k].is_zero()) {
        bad.push_back({{"map", i + 1}, {"coordinate", names[k]}, {"value", b[k].to_string(names)}});
        break;
      }
    }
  }
  bool commute = bad.empty();
  rep.add("commutes-with-argument", commute ? Verdict::Proven : Verdict::Refuted,
          "each map value commutes with its argument",
          commute ? nlohmann::json::object() : nlohmann::json{{"nonzero_brackets", bad}});

  util::Rng rng(seed);
  std::size_t found = 0, attempts = 0;
  nlohmann::json points = nlohmann::json::array();
  bool independent = true;
  while (found < samples && attempts < 50 * samples + 50) {
    ++attempts;
    QVector p(dim);
    for (auto& c : p) c = Rational(rng.uniform_int(-5, 5));
    if (!regular_test(alg, p)) continue;
    ++found;
    QMatrix e(alg.d(), dim);
    for (std::size_t i = 0; i < alg.d(); ++i)
      for (std::size_t k = 0; k < dim; ++k) e(i, k) = fam.maps[i][k].eval(p);
    Subspace c = centralizer(alg, p);
    Subspace span = Subspace::span(e);
    bool ok = span.dim() == alg.d() && c == span;
    independent = independent && ok;
    if (!ok || points.size() < 3) points.push_back({{"x", alg.format_element(p)}, {"basis_of_centralizer", ok}});
  }
  if (!independent || !commute || dim > 4 || found == 0) {
    Verdict v = !independent ? Verdict::Refuted : (found == 0 ? Verdict::Unknown : Verdict::Sampled);
    rep.add("basis-of-centralizer", v, "the map values form a basis of the centralizer of a regular element",
            {{"samples", found}, {"points", points}, {"scope", dim > 4 ? "sampled regular points" : "sampled"}});
    return rep;
  }

  PolyMat e(dim, PolyVec(alg.d()));
  for (std::size_t i = 0; i < alg.d(); ++i)
    for (std::size_t k = 0; k < dim; ++k) e[k][i] = fam.maps[i][k];
  PolyMat ad(dim, PolyVec(dim, Polynomial(dim)));
  for (std::size_t j = 0; j < dim; ++j) {
    PolyVec ej(dim, Polynomial(dim));
    ej[j] = Polynomial::constant(dim, Rational(1));
    PolyVec col = symbolic_bracket(alg, x, ej);
    for (std::size_t i = 0; i < dim; ++i) ad[i][j] = col[i];
  }
  ideals::Ideal degenerate(ideals::PolyRing(names), minors(e, alg.d(), dim));
  bool proven = true;
  for (const auto& g : minors(ad, dim - alg.d(), dim)) {
    if (!ideals::in_radical(degenerate, g)) {
      proven = false;
      break;
    }
  }
  rep.add("basis-of-centralizer", proven ? Verdict::Proven : Verdict::Sampled,
          "the map values form a basis of the centralizer of a regular element",
          {{"samples", found},
           {"points", points},
           {"scope", proven ? "all regular points (radical membership)" : "sampled regular points"}});
  return rep;
}

}  // namespace orbitvar::lie
