#include "orbitvar/ideals/chart.hpp"

#include <algorithm>

#include "orbitvar/error.hpp"
#include "orbitvar/ideals/determinantal.hpp"
#include "orbitvar/lie/analysis.hpp"
#include "orbitvar/lie/symbolic.hpp"

namespace orbitvar::ideals {

using report::Verdict;

namespace {

std::string index_name(const std::string& prefix, std::size_t i, std::size_t j, bool wide) {
  return prefix + std::to_string(i + 1) + (wide ? "_" : "") + std::to_string(j + 1);
}

// Top-down Lie refinement: repeatedly drop the lowest complement weight that
// no bracket inside the current span produces.
WeightSubset order_complement(const WeightedLieAlgebra& alg, const WeightSubset& s) {
  WeightSubset current = alg.all_weights();
  WeightSubset rest;
  for (auto w : current) {
    if (!std::binary_search(s.begin(), s.end(), w)) rest.push_back(w);
  }
  WeightSubset reversed;
  while (!rest.empty()) {
    std::size_t pick = rest.size();
    for (std::size_t r = 0; r < rest.size() && pick == rest.size(); ++r) {
      bool produced = false;
      for (auto a : current) {
        for (auto b : current) {
          if (!alg.bracket_basis(a, b)[rest[r]].is_zero()) produced = true;
        }
      }
      if (!produced) pick = r;
    }
    if (pick == rest.size()) throw Error(ErrorCode::NotGroupFixed, "no ideal refinement of the complement exists");
    reversed.push_back(rest[pick]);
    current.erase(std::find(current.begin(), current.end(), rest[pick]));
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return {reversed.rbegin(), reversed.rend()};
}

std::vector<std::string> chart_names(std::size_t d, std::size_t m) {
  bool wide = d > 9 || m > 9;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) names.push_back(index_name("z", i, j, wide));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < m; ++k) names.push_back(index_name("a", i, k, wide));
  return names;
}

Ideal extend_with_fiber(const ChartIdeal& chart, const std::vector<std::size_t>& forms) {
  const std::size_t base = chart.ring.nvars(), d = chart.d;
  std::vector<std::string> names = chart.ring.names();
  for (std::size_t k = 0; k < d; ++k) names.push_back("c" + std::to_string(k + 1));
  PolyRing ring(names);
  std::vector<std::optional<std::size_t>> map(base);
  for (std::size_t i = 0; i < base; ++i) map[i] = i;
  std::vector<Polynomial> gens;
  for (const auto& g : chart.ideal.generators()) gens.push_back(remap(g, map, names.size()));
  for (auto i : forms) {
    Polynomial f = ring.zero();
    for (std::size_t k = 0; k < d; ++k) f += ring.var(base + k) * ring.var(chart.z_var(k, i));
    gens.push_back(f);
  }
  return Ideal(ring, gens);
}

}  // namespace

ChartIdeal chart_ideal(const WeightedLieAlgebra& alg, const Subspace& v0) {
  if (lie::center(alg).z.dim() != 0) throw Error(ErrorCode::NotFaithful, "chart requires a trivial center");
  const std::size_t d = alg.d();
  if (v0.ambient_dim() != alg.dim() || v0.dim() != d) {
    throw Error(ErrorCode::NotGroupFixed, "subspace must have dimension d in r");
  }
  WeightSubset s;
  for (auto p : v0.pivots()) {
    if (p < d) throw Error(ErrorCode::NotGroupFixed, "subspace meets the torus directions");
    s.push_back(p - d);
  }
  if (!(alg.a_span(s) == v0)) throw Error(ErrorCode::NotGroupFixed, "subspace is not spanned by weight vectors");
  for (auto a : s)
    for (auto b : s) {
      for (const auto& c : alg.bracket_basis(a, b)) {
        if (!c.is_zero()) throw Error(ErrorCode::NotGroupFixed, "subspace is not commutative");
      }
    }
  if (!lie::is_ideal(alg, v0)) throw Error(ErrorCode::NotGroupFixed, "subspace is not an ideal of r");
  if (alg::rank(alg.weight_matrix(s)) != d) throw Error(ErrorCode::NotGroupFixed, "weights of the subspace are dependent");

  ChartIdeal chart{alg, v0, s, order_complement(alg, s), d, alg.n() - d, {}, {}};
  if (d * d + d * chart.m > kMaxChartVariables) {
    throw Error(ErrorCode::ScaleExceeded, "chart needs " + std::to_string(d * d + d * chart.m) + " variables, limit is " +
                                              std::to_string(kMaxChartVariables));
  }
  chart.ring = PolyRing(chart_names(d, chart.m));
  const std::size_t nv = chart.ring.nvars();
  std::vector<lie::PolyElement> w;
  for (std::size_t i = 0; i < d; ++i) {
    lie::PolyElement e = lie::constant_element(alg.x(s[i]), nv);
    for (std::size_t j = 0; j < d; ++j) e[j] += chart.ring.var(chart.z_var(i, j));
    for (std::size_t k = 0; k < chart.m; ++k) e[d + chart.gammas[k]] += chart.ring.var(chart.a_var(i, k));
    w.push_back(std::move(e));
  }
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = i + 1; k < d; ++k) {
      for (auto& c : lie::symbolic_bracket(alg, w[i], w[k])) {
        if (c.is_zero()) continue;
        bool dup = std::any_of(gens.begin(), gens.end(), [&](const Polynomial& g) { return g == c; });
        if (!dup) gens.push_back(std::move(c));
      }
    }
  chart.ideal = Ideal(chart.ring, gens);
  return chart;
}

Polynomial u_function(const ChartIdeal& chart, std::size_t i, const QVector& gamma) {
  if (i >= chart.d) throw Error(ErrorCode::InvalidArgument, "row index out of range");
  if (gamma.size() != chart.d) throw Error(ErrorCode::DimensionMismatch, "weight length differs from torus dimension");
  Polynomial u = chart.ring.zero();
  for (std::size_t j = 0; j < chart.d; ++j) {
    if (!gamma[j].is_zero()) u += chart.ring.var(chart.z_var(i, j)) * gamma[j];
  }
  return u;
}

std::vector<std::size_t> support_indices(const ChartIdeal& chart, const QVector& gamma) {
  auto c = alg::solve(chart.algebra.weight_matrix(chart.s).transpose(), gamma);
  if (!c) throw Error(ErrorCode::DimensionMismatch, "weight outside the span of the fixed point weights");
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < chart.d; ++j) {
    if (!(*c)[j].is_zero()) out.push_back(j);
  }
  return out;
}

std::vector<Polynomial> u_sequence(const ChartIdeal& chart, const QVector& gamma) {
  std::vector<Polynomial> seq;
  for (auto i : support_indices(chart, gamma)) seq.push_back(u_function(chart, i, gamma));
  return seq;
}

std::optional<QVector> chart_coordinates(const ChartIdeal& chart, const Subspace& v) {
  const std::size_t d = chart.d;
  if (v.dim() != d || v.ambient_dim() != chart.algebra.dim()) return std::nullopt;
  QMatrix m(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t i = 0; i < d; ++i) m(r, i) = v.basis()(r, d + chart.s[i]);
  auto inv = alg::inverse(m);
  if (!inv) return std::nullopt;
  QMatrix w = *inv * v.basis();
  QVector coords(chart.ring.nvars());
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) coords[chart.z_var(i, j)] = w(i, j);
    for (std::size_t k = 0; k < chart.m; ++k) coords[chart.a_var(i, k)] = w(i, d + chart.gammas[k]);
  }
  return coords;
}

report::VerificationReport verify_chart_relation(const ChartIdeal& chart) {
  report::VerificationReport rep("chart-relation");
  const char* anchor = "the gamma_m component of the commutator relation vanishes on the chart";
  if (chart.m == 0) {
    rep.add("chart-relation", Verdict::Proven, anchor, {{"pairs", 0}, {"note", "no complement weights"}});
    return rep;
  }
  const QVector& gm = chart.algebra.weight(chart.gammas.back());
  nlohmann::json failures = nlohmann::json::array();
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < chart.d; ++i)
    for (std::size_t j = 0; j < chart.d; ++j) {
      Polynomial rel = u_function(chart, i, gm) * chart.ring.var(chart.a_var(j, chart.m - 1)) -
                       u_function(chart, j, gm) * chart.ring.var(chart.a_var(i, chart.m - 1));
      ++pairs;
      if (!chart.ideal.contains(rel)) failures.push_back({{"i", i + 1}, {"j", j + 1}, {"relation", chart.ring.format(rel)}});
    }
  rep.add("chart-relation", failures.empty() ? Verdict::Proven : Verdict::Refuted, anchor,
          {{"pairs", pairs}, {"gamma_m", chart.algebra.names()[chart.gammas.back()]}, {"failures", failures}});
  return rep;
}

std::size_t nilcone_dimension(const ChartIdeal& chart, const std::vector<std::size_t>& forms) {
  return hilbert_dimension(extend_with_fiber(chart, forms));
}

std::size_t nilcone_dimension(const ChartIdeal& chart) {
  std::vector<std::size_t> all(chart.d);
  for (std::size_t i = 0; i < chart.d; ++i) all[i] = i;
  return nilcone_dimension(chart, all);
}

std::size_t nilpotent_locus_dimension(const ChartIdeal& chart) {
  std::vector<Polynomial> zs;
  for (std::size_t i = 0; i < chart.d; ++i)
    for (std::size_t j = 0; j < chart.d; ++j) zs.push_back(chart.ring.var(chart.z_var(i, j)));
  return hilbert_dimension(chart.ideal.with(zs));
}

report::VerificationReport chart_report(const ChartIdeal& chart) {
  const auto& alg = chart.algebra;
  const std::size_t n = alg.n();
  report::VerificationReport rep("chart");
  rep.summary()["fixed_point"] = to_json(chart);

  QVector origin(chart.ring.nvars());
  bool at_origin = std::all_of(chart.ideal.generators().begin(), chart.ideal.generators().end(),
                               [&](const Polynomial& g) { return g.eval(origin).is_zero(); });
  rep.add("chart-origin", at_origin ? Verdict::Proven : Verdict::Refuted, "the fixed point is the chart origin");

  std::size_t dim = hilbert_dimension(chart.ideal);
  rep.summary()["chart_dimension"] = dim;
  rep.add("chart-dimension", dim == n ? Verdict::Proven : Verdict::Refuted, "the chart has dimension n",
          {{"dimension", dim}, {"expected", n}});

  rep.append(verify_chart_relation(chart));

  for (auto g : alg.all_weights()) {
    const QVector& gamma = alg.weight(g);
    auto support = support_indices(chart, gamma);
    auto seq = u_sequence(chart, gamma);
    auto sub = regular_sequence_check(chart.ideal, seq);
    nlohmann::json formatted = nlohmann::json::array();
    for (const auto& f : seq) formatted.push_back(chart.ring.format(f));
    nlohmann::json idx = nlohmann::json::array();
    for (auto i : support) idx.push_back(i + 1);
    rep.add("regular-sequence[" + alg.names()[g] + "]", sub.overall(),
            "the u functions indexed by the support of a weight form a regular sequence on the chart",
            {{"weight", alg.format_weight(g)},
             {"support", idx},
             {"sequence", formatted},
             {"scope", "global on the affine chart"},
             {"steps", sub.to_json()["checks"]}});
  }

  return rep;
}

report::VerificationReport nilcone_report(const ChartIdeal& chart) {
  const std::size_t n = chart.algebra.n(), d = chart.d;
  report::VerificationReport rep("nilcone");
  rep.summary()["fixed_point"] = to_json(chart);
  std::size_t nil = nilcone_dimension(chart);
  rep.summary()["nilcone_dimension"] = nil;
  rep.add("nilcone-dimension", nil == n ? Verdict::Proven : Verdict::Refuted, "the nilpotent cone has dimension n",
          {{"dimension", nil}, {"expected", n}});

  nlohmann::json subsets = nlohmann::json::array();
  bool subsets_ok = true;
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << d); ++mask) {
    std::vector<std::size_t> forms;
    for (std::size_t i = 0; i < d; ++i) {
      if (mask >> i & 1) forms.push_back(i);
    }
    if (d > 3 && forms.size() != 1) continue;
    std::size_t got = nilcone_dimension(chart, forms);
    std::size_t expected = n + d - forms.size();
    subsets_ok = subsets_ok && got == expected;
    nlohmann::json idx = nlohmann::json::array();
    for (auto i : forms) idx.push_back(i + 1);
    subsets.push_back({{"forms", idx}, {"dimension", got}, {"expected", expected}});
  }
  if (d >= 2) {
    rep.add("nilcone-subset-dimension", subsets_ok ? Verdict::Proven : Verdict::Refuted,
            "a proper subset I of the forms cuts out dimension n + d - |I|", {{"subsets", subsets}});
  }

  std::size_t nl = nilpotent_locus_dimension(chart);
  rep.summary()["nilpotent_locus_dimension"] = nl;
  rep.add("nilpotent-locus-bound", nl + d <= n ? Verdict::Proven : Verdict::Refuted,
          "points of X_R inside a form a locus of dimension at most n - d", {{"dimension", nl}, {"bound", n - d}});
  return rep;
}

nlohmann::json to_json(const ChartIdeal& chart) {
  nlohmann::json v0 = nlohmann::json::array();
  for (auto i : chart.s) v0.push_back(chart.algebra.names()[i]);
  nlohmann::json gammas = nlohmann::json::array();
  for (auto g : chart.gammas) gammas.push_back(chart.algebra.names()[g]);
  return {{"v0", v0}, {"gammas", gammas}, {"d", chart.d}, {"m", chart.m}, {"ideal", chart.ideal.to_json()}};
}

}  // namespace orbitvar::ideals
