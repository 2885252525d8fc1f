#include "orbitvar/orbit/membership.hpp"

#include <algorithm>
#include <atomic>

#include "orbitvar/algebra/exp.hpp"
#include "orbitvar/error.hpp"
#include "orbitvar/lie/analysis.hpp"
#include "orbitvar/orbit/fixed_points.hpp"

namespace orbitvar::orbit {

using report::Verdict;

namespace {

std::atomic<std::uint64_t> g_certified{0};
std::atomic<std::uint64_t> g_violations{0};

QVector full_torus_element(const WeightedLieAlgebra& alg, const QVector& s) {
  if (s.size() == alg.dim()) return s;
  if (s.size() != alg.d()) throw Error(ErrorCode::DimensionMismatch, "torus element has the wrong length");
  QVector out(alg.dim());
  std::copy(s.begin(), s.end(), out.begin());
  return out;
}

Word formal_word(const WeightSubset& s) {
  Word w;
  for (auto b : s) w.push_back({b, Rational(1), true});
  return w;
}

// Graded V in X_R iff it is z_V + a_S with S independent (torus-fixed form).
bool fixed_point_form(const WeightedLieAlgebra& alg, const Subspace& v, const WeightSubset& s) {
  if (!s.empty() && alg::rank(alg.weight_matrix(s)) != s.size()) return false;
  return v == alg.embed_torus(lie::torus_kernel(alg, s)).sum(alg.a_span(s));
}

MembershipResult certify(const WeightedLieAlgebra& alg, const Subspace& v, MembershipResult r) {
  record_certified(alg, v);
  return r;
}

}  // namespace

std::string to_string(MembershipKind k) {
  switch (k) {
    case MembershipKind::Orbit: return "orbit";
    case MembershipKind::Limit: return "limit";
    case MembershipKind::RegularCentralizer: return "regular-centralizer";
    case MembershipKind::Refuted: return "refuted";
    case MembershipKind::Unknown: return "unknown";
  }
  return "unknown";
}

void record_certified(const WeightedLieAlgebra& alg, const Subspace& v) {
  ++g_certified;
  Subspace z = alg.embed_torus(lie::center(alg).z);
  if (!is_commutative(alg, v) || !v.contains(z)) ++g_violations;
}

CertificationStats certification_stats() { return {g_certified.load(), g_violations.load()}; }

namespace {

// Clears the components of u on weights nonzero at its torus part s, in
// increasing lower-central depth. Returns the word g with g.residual = u.
Word clear_components(const WeightedLieAlgebra& alg, const QVector& u, QVector& residual) {
  const std::size_t d = alg.d();
  QVector s = full_torus_element(alg, QVector(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(d)));
  auto depth = weight_depths(alg);
  std::size_t max_depth = depth.empty() ? 0 : *std::max_element(depth.begin(), depth.end());
  residual = u;
  Word word;
  for (std::size_t k = 1; k <= max_depth; ++k) {
    for (std::size_t b = 0; b < alg.n(); ++b) {
      Rational w = alg.pair(alg.weight(b), s);
      if (depth[b] != k || residual[d + b].is_zero() || w.is_zero()) continue;
      Rational c = residual[d + b] / w;
      residual = alg::multiply(alg::exp_nilpotent(alg.ad(alg.x(b)), c), residual);
      word.push_back({b, -c, false});
    }
  }
  return word;
}

}  // namespace

Word conjugating_word(const WeightedLieAlgebra& alg, const QVector& u) {
  for (std::size_t b = 0; b < alg.n(); ++b) {
    if (alg.pair(alg.weight(b), u).is_zero()) throw Error(ErrorCode::InvalidArgument, "torus part is not regular");
  }
  QVector residual;
  return clear_components(alg, u, residual);
}

MembershipResult membership(const WeightedLieAlgebra& alg, const Subspace& v, std::uint64_t seed) {
  if (v.ambient_dim() != alg.dim() || v.dim() != alg.d()) {
    throw Error(ErrorCode::DimensionMismatch, "membership needs a d-dimensional subspace of r");
  }
  MembershipResult r;
  if (!is_commutative(alg, v)) {
    r.kind = MembershipKind::Refuted;
    r.reason = "not commutative";
    return r;
  }
  const bool faithful = lie::center(alg).z.dim() == 0;
  if (!v.contains(alg.embed_torus(lie::center(alg).z))) {
    r.kind = MembershipKind::Refuted;
    r.reason = "does not contain the center";
    return r;
  }
  if (faithful) {
    for (std::size_t i = 0; i < v.dim(); ++i) {
      try {
        auto parts = lie::jordan_decompose(alg, v.vector(i));
        if (!v.contains(parts.semisimple)) {
          r.kind = MembershipKind::Refuted;
          r.reason = "semisimple part of " + alg.format_element(v.vector(i)) + " lies outside V";
          return r;
        }
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotClosedUnderJordan) throw;
      }
    }
  }

  if (alg.project_torus(v).dim() == alg.d()) {
    QVector s = generic_kernel_element(alg, {});
    QMatrix proj(v.dim(), alg.d());
    for (std::size_t i = 0; i < v.dim(); ++i)
      for (std::size_t j = 0; j < alg.d(); ++j) proj(i, j) = v.basis()(i, j);
    auto coeffs = alg::solve(proj.transpose(), s);
    QVector u(alg.dim());
    for (std::size_t i = 0; i < v.dim(); ++i)
      for (std::size_t k = 0; k < alg.dim(); ++k) u[k] += (*coeffs)[i] * v.basis()(i, k);
    Word w = conjugating_word(alg, u);
    if (act(alg, w, alg.torus()) == v) {
      r.kind = MembershipKind::Orbit;
      r.word = std::move(w);
      r.reason = "V = g.t";
      return certify(alg, v, std::move(r));
    }
  }

  if (is_torus_stable(alg, v)) {
    WeightSubset s = graded_weights(alg, v);
    if (!fixed_point_form(alg, v, s)) {
      r.kind = MembershipKind::Refuted;
      r.reason = "torus-stable but not of the form z_V + a_S with independent S";
      return r;
    }
    r.word = formal_word(s);
    r.witness = act_curve(alg, r.word, alg.torus());
    if (r.witness->limit() == v) {
      r.kind = MembershipKind::Limit;
      r.reason = "limit of a one-parameter curve in the orbit of t";
      return certify(alg, v, std::move(r));
    }
  }

  util::Rng rng(seed);
  for (int attempt = 0; attempt < 16; ++attempt) {
    QVector x(alg.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) {
      Rational c(rng.uniform_int(-3, 3));
      for (std::size_t k = 0; k < alg.dim(); ++k) x[k] += c * v.basis()(i, k);
    }
    if (lie::regular_test(alg, x) && lie::centralizer(alg, x) == v) {
      r.kind = MembershipKind::RegularCentralizer;
      r.regular_element = x;
      r.reason = "centralizer of a regular element";
      return certify(alg, v, std::move(r));
    }
  }
  r.kind = MembershipKind::Unknown;
  r.reason = "no certificate or obstruction found";
  return r;
}

WeightSubset biggest_torus(const WeightedLieAlgebra& alg, const Subspace& v) {
  std::vector<QVector> semisimple;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    auto parts = lie::jordan_decompose(alg, v.vector(i));
    if (!v.contains(parts.semisimple)) {
      throw Error(ErrorCode::NotClosedUnderJordan, "semisimple part of a basis vector lies outside V");
    }
    semisimple.push_back(parts.semisimple);
  }
  Subspace torus_part = alg.project_torus(Subspace::span(alg.dim(), semisimple));
  WeightSubset lambda;
  for (std::size_t b = 0; b < alg.n(); ++b) {
    bool vanishes = true;
    for (std::size_t r = 0; r < torus_part.dim() && vanishes; ++r) {
      if (!alg.pair(alg.weight(b), torus_part.vector(r)).is_zero()) vanishes = false;
    }
    if (vanishes) lambda.push_back(b);
  }
  return lambda;
}

report::VerificationReport property_P_consequences(const WeightedLieAlgebra& alg, const QVector& s_in,
                                                   const Subspace& v) {
  QVector s = full_torus_element(alg, s_in);
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (!is_zero(alg.bracket(s, v.vector(i)))) {
      throw Error(ErrorCode::PreconditionFailed, "V is not contained in the centralizer of s");
    }
  }
  report::VerificationReport rep("property-P");
  WeightSubset lambda = lie::lambda_of(alg, s);
  Subspace center = alg.embed_torus(lie::torus_kernel(alg, lambda));
  nlohmann::json lam = nlohmann::json::array();
  for (auto b : lambda) lam.push_back(alg.names()[b]);
  bool contains = v.contains(center);
  rep.add("center-containment", contains ? Verdict::ConsequenceChecked : Verdict::Refuted,
          "the center of r^s lies in V", {{"lambda_s", lam}, {"center_dim", center.dim()}});

  const char* anchor = "V is a limit of the orbit of t under the centralizer group of s";
  if (is_torus_stable(alg, v)) {
    WeightSubset sv = graded_weights(alg, v);
    Word w = formal_word(sv);
    CurveSubspace curve = act_curve(alg, w, alg.torus());
    bool inside = std::all_of(sv.begin(), sv.end(),
                              [&](std::size_t b) { return std::binary_search(lambda.begin(), lambda.end(), b); });
    if (inside && curve.limit() == v) {
      rep.add("rs-witness", Verdict::Proven, anchor, {{"word", to_json(alg, w)}, {"curve", to_json(curve.basis)}});
      return rep;
    }
  } else {
    auto m = membership(alg, v);
    if (m.kind == MembershipKind::Orbit) {
      bool inside = std::all_of(m.word.begin(), m.word.end(), [&](const WordFactor& f) {
        return std::binary_search(lambda.begin(), lambda.end(), f.weight);
      });
      if (inside) {
        rep.add("rs-witness", Verdict::Proven, anchor, {{"word", to_json(alg, m.word)}, {"kind", "orbit"}});
        return rep;
      }
    }
  }
  rep.add("rs-witness", Verdict::ConsequenceChecked, anchor, {{"note", "no witness constructed"}});
  return rep;
}

report::VerificationReport property_P_suite(const WeightedLieAlgebra& alg) {
  report::VerificationReport rep("property-P");
  auto complete = lie::complete_subsets(alg);
  std::size_t cases = 0, witnesses = 0;
  for (const auto& fp : torus_fixed_points(alg)) {
    nlohmann::json strata = nlohmann::json::array();
    std::size_t refuted = 0, proven = 0, local_cases = 0;
    for (const auto& c : complete) {
      if (!std::includes(c.begin(), c.end(), fp.r_v.begin(), fp.r_v.end())) continue;
      QVector s = generic_kernel_element(alg, c);
      auto sub = property_P_consequences(alg, s, fp.subspace);
      ++local_cases;
      if (sub.refuted()) {
        ++refuted;
        strata.push_back({{"s", alg.format_element(full_torus_element(alg, s))}, {"report", sub.to_json()}});
      }
      if (sub.find("rs-witness")->verdict == Verdict::Proven) ++proven;
    }
    cases += local_cases;
    witnesses += proven;
    nlohmann::json names = nlohmann::json::array();
    for (auto b : fp.r_v) names.push_back(alg.names()[b]);
    Verdict v = refuted ? Verdict::Refuted : (proven == local_cases ? Verdict::Proven : Verdict::ConsequenceChecked);
    std::string label = "property-P[";
    for (std::size_t i = 0; i < fp.r_v.size(); ++i) label += (i ? "," : "") + alg.names()[fp.r_v[i]];
    label += "]";
    rep.add(label, v, "a fixed point inside r^s lies in the closure of the R^s-orbit of t",
            {{"r_v", names}, {"cases", local_cases}, {"witnesses", proven}, {"refutations", strata}});
  }
  rep.summary()["cases"] = cases;
  rep.summary()["witnesses"] = witnesses;
  rep.summary()["scope"] = "torus-fixed points and generic s in each complete-subset stratum";
  return rep;
}

MultiPointResult multipoint_membership(const WeightedLieAlgebra& alg, std::vector<QVector> points) {
  if (points.empty()) throw Error(ErrorCode::InvalidArgument, "at least one point required");
  for (const auto& p : points) {
    if (p.size() != alg.dim()) throw Error(ErrorCode::DimensionMismatch, "point has the wrong length");
  }
  std::sort(points.begin(), points.end());
  MultiPointResult r;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (!is_zero(alg.bracket(points[i], points[j]))) {
        r.verdict = Verdict::Refuted;
        r.reason = "points do not commute";
        return r;
      }
    }
  // Any V in X_R containing the points contains their span, and a regular u
  // in the span forces V = r^u. Try the points, then combinations sum b^i p_i.
  std::vector<QVector> candidates = points;
  if (points.size() > 1) {
    for (long b = 2; b <= 40; ++b) {
      QVector u(alg.dim());
      Rational c(1);
      for (const auto& p : points) {
        for (std::size_t k = 0; k < alg.dim(); ++k) u[k] += c * p[k];
        c *= Rational(b);
      }
      candidates.push_back(std::move(u));
    }
  }
  for (const auto& u : candidates) {
    if (!lie::regular_test(alg, u)) continue;
    Subspace c = lie::centralizer(alg, u);
    bool all = std::all_of(points.begin(), points.end(), [&](const QVector& q) { return c.contains(q); });
    if (!all) {
      r.verdict = Verdict::Refuted;
      r.reason = "the centralizer of a regular element of the span misses a point";
      return r;
    }
    record_certified(alg, c);
    r.verdict = Verdict::Proven;
    r.reason = "centralizer of a regular element of the span";
    r.witness = c;
    return r;
  }
  QMatrix stacked(0, alg.dim());
  for (const auto& p : points) {
    QMatrix ad = alg.ad(p);
    for (std::size_t i = 0; i < ad.rows(); ++i) stacked.append_row(ad.row(i));
  }
  Subspace common = Subspace::span(alg::kernel(stacked));
  if (common.dim() < alg.d()) {
    r.verdict = Verdict::Refuted;
    r.reason = "the common centralizer has dimension below d";
    return r;
  }
  if (common.dim() == alg.d()) {
    auto m = membership(alg, common);
    if (m.certified() || m.kind == MembershipKind::Refuted) {
      r.verdict = m.certified() ? Verdict::Proven : Verdict::Refuted;
      r.reason = "the common centralizer is the only candidate: " + m.reason;
      if (m.certified()) r.witness = common;
      return r;
    }
  }
  // toral span: conjugate a generic element to its torus part
  for (const auto& u : candidates) {
    QVector residual;
    Word w = clear_components(alg, u, residual);
    bool toral = std::all_of(residual.begin() + static_cast<std::ptrdiff_t>(alg.d()), residual.end(),
                             [](const Rational& c) { return c.is_zero(); });
    if (!toral) continue;
    Subspace v = act(alg, w, alg.torus());
    if (std::all_of(points.begin(), points.end(), [&](const QVector& q) { return v.contains(q); })) {
      record_certified(alg, v);
      r.verdict = Verdict::Proven;
      r.reason = "a conjugate of t contains every point";
      r.witness = v;
      return r;
    }
  }
  for (const auto& fp : torus_fixed_points(alg)) {
    if (!fp.witness_verified) continue;
    bool all = std::all_of(points.begin(), points.end(), [&](const QVector& q) { return fp.subspace.contains(q); });
    if (all) {
      r.verdict = Verdict::Proven;
      r.reason = "torus-fixed point containing every point";
      r.witness = fp.subspace;
      return r;
    }
  }
  r.verdict = Verdict::Unknown;
  r.reason = "the span has no regular element and no fixed point contains the points";
  return r;
}

namespace {

void check_slice_point(const WeightedLieAlgebra& alg, std::size_t alpha, const QVector& x0) {
  QVector x = full_torus_element(alg, x0);
  for (std::size_t k = alg.d(); k < alg.dim(); ++k) {
    if (!x[k].is_zero()) throw Error(ErrorCode::BadSlice, "slice point must lie in t");
  }
  for (std::size_t b = 0; b < alg.n(); ++b) {
    bool zero = alg.pair(alg.weight(b), x).is_zero();
    if ((b == alpha) != zero) throw Error(ErrorCode::BadSlice, "slice point must lie in t'_alpha");
  }
}

QVector sample_slice_point(const WeightedLieAlgebra& alg, std::size_t alpha, util::Rng& rng) {
  Subspace k = lie::torus_kernel(alg, {alpha});
  for (int attempt = 0; attempt < 1000; ++attempt) {
    QVector s(alg.d());
    for (std::size_t r = 0; r < k.dim(); ++r) {
      Rational c(rng.uniform_int(-4, 4));
      for (std::size_t j = 0; j < alg.d(); ++j) s[j] += c * k.basis()(r, j);
    }
    try {
      check_slice_point(alg, alpha, s);
      return s;
    } catch (const Error&) {
    }
  }
  return generic_kernel_element(alg, {alpha});
}

Rational nonzero(util::Rng& rng, long bound) {
  long v = rng.uniform_int(1, bound);
  return Rational(rng.uniform_int(0, 1) ? v : -v);
}

}  // namespace

report::VerificationReport verify_pair_relation(const WeightedLieAlgebra& alg, std::size_t alpha, const QVector& x0,
                                                const QVector& y0, std::size_t samples, std::uint64_t seed) {
  if (alpha >= alg.n()) throw Error(ErrorCode::InvalidArgument, "weight index out of range");
  check_slice_point(alg, alpha, x0);
  check_slice_point(alg, alpha, y0);
  QVector xf = full_torus_element(alg, x0), yf = full_torus_element(alg, y0);
  QVector h = h_alpha(alg, alpha);
  const std::size_t xa = alg.d() + alpha;
  util::Rng rng(seed);
  std::size_t on = 0, off = 0;
  nlohmann::json bad = nlohmann::json::array();
  for (std::size_t i = 0; i < samples; ++i) {
    Rational s(rng.uniform_int(-3, 3)), a = nonzero(rng, 4), s2, b;
    if (i % 2 == 0) {
      // on the relation
      if (s.is_zero()) {
        s2 = Rational(0);
        b = nonzero(rng, 4);
      } else {
        s2 = nonzero(rng, 3);
        b = a * s2 / s;
      }
    } else {
      s2 = Rational(rng.uniform_int(-3, 3));
      b = nonzero(rng, 4);
    }
    QVector x = xf, y = yf;
    for (std::size_t k = 0; k < alg.dim(); ++k) {
      x[k] += s * h[k];
      y[k] += s2 * h[k];
    }
    x[xa] += a;
    y[xa] += b;
    Rational expr = y[xa] * alg.pair(alg.weight(alpha), x) - x[xa] * alg.pair(alg.weight(alpha), y);
    auto m = multipoint_membership(alg, {x, y});
    bool vanishes = expr.is_zero();
    (vanishes ? on : off) += 1;
    bool ok = m.verdict != Verdict::Unknown && vanishes == (m.verdict == Verdict::Proven);
    if (!ok && bad.size() < 5) {
      bad.push_back({{"x", alg.format_element(x)},
                     {"y", alg.format_element(y)},
                     {"expression", expr.to_string()},
                     {"membership", report::to_string(m.verdict)}});
    }
  }
  report::VerificationReport rep("pair-relation");
  rep.add("pair-relation[" + alg.names()[alpha] + "]", bad.empty() ? Verdict::Sampled : Verdict::Refuted,
          "on the two slices, joint membership is the vanishing of the pair relation",
          {{"samples", samples},
           {"relation_zero", on},
           {"relation_nonzero", off},
           {"x0", alg.format_element(xf)},
           {"y0", alg.format_element(yf)},
           {"counterexamples", bad}});
  return rep;
}

report::VerificationReport verify_pair_relation(const WeightedLieAlgebra& alg, std::size_t alpha,
                                                std::size_t samples, std::uint64_t seed) {
  util::Rng rng(seed ^ (0x9e3779b97f4a7c15ULL * (alpha + 1)));
  QVector x0 = sample_slice_point(alg, alpha, rng);
  QVector y0 = sample_slice_point(alg, alpha, rng);
  return verify_pair_relation(alg, alpha, x0, y0, samples, seed + alpha);
}

nlohmann::json to_json(const WeightedLieAlgebra& alg, const MembershipResult& r) {
  nlohmann::json j = {{"verdict", to_string(r.kind)}, {"reason", r.reason}};
  if (!r.word.empty()) j["word"] = to_json(alg, r.word);
  if (r.witness) j["witness_curve"] = to_json(r.witness->basis);
  if (r.regular_element) j["regular_element"] = alg.format_element(*r.regular_element);
  return j;
}

}  // namespace orbitvar::orbit
