#include "orbitvar/orbit/fixed_points.hpp"

#include <algorithm>

#include "orbitvar/error.hpp"
#include "orbitvar/lie/analysis.hpp"
#include "orbitvar/orbit/membership.hpp"

namespace orbitvar::orbit {

using report::Verdict;

namespace {

void extend(const WeightedLieAlgebra& alg, WeightSubset& current, std::size_t next, std::vector<WeightSubset>& out) {
  out.push_back(current);
  for (std::size_t b = next; b < alg.n(); ++b) {
    bool abelian = true;
    for (auto a : current) {
      for (const auto& c : alg.bracket_basis(a, b)) {
        if (!c.is_zero()) abelian = false;
      }
    }
    if (!abelian) continue;
    current.push_back(b);
    bool independent = alg::rank(alg.weight_matrix(current)) == current.size();
    if (independent) extend(alg, current, b + 1, out);
    current.pop_back();
  }
}

FixedPointRecord make_record(const WeightedLieAlgebra& alg, const WeightSubset& s) {
  FixedPointRecord r;
  r.r_v = s;
  r.z_v = lie::torus_kernel(alg, s);
  r.subspace = alg.embed_torus(r.z_v).sum(alg.a_span(s));
  Word w;
  for (auto b : s) w.push_back({b, Rational(1), true});
  r.witness = act_curve(alg, w, alg.torus());
  r.witness_verified = r.witness.limit() == r.subspace;
  if (r.witness_verified) record_certified(alg, r.subspace);
  return r;
}

}  // namespace

std::vector<FixedPointRecord> torus_fixed_points(const WeightedLieAlgebra& alg) {
  std::vector<WeightSubset> subsets;
  WeightSubset current;
  extend(alg, current, 0, subsets);
  std::stable_sort(subsets.begin(), subsets.end(), [](const WeightSubset& a, const WeightSubset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<FixedPointRecord> out;
  for (const auto& s : subsets) out.push_back(make_record(alg, s));
  return out;
}

std::vector<FixedPointRecord> group_fixed_points(const WeightedLieAlgebra& alg) {
  Subspace z = lie::center(alg).z;
  std::vector<FixedPointRecord> out;
  for (auto& r : torus_fixed_points(alg)) {
    if (r.z_v == z && lie::is_ideal(alg, r.subspace)) {
      r.fixed_under = FixedUnder::Group;
      out.push_back(std::move(r));
    }
  }
  return out;
}

QVector generic_kernel_element(const WeightedLieAlgebra& alg, const WeightSubset& vanishing) {
  Subspace k = lie::torus_kernel(alg, vanishing);
  std::vector<bool> must_vanish(alg.n(), false);
  for (auto i : vanishing) must_vanish[i] = true;
  // coefficients 1, b, b^2, ... on the canonical basis; avoids each nonzero
  // linear form for all but finitely many b
  for (long b = 2; b < 10000; ++b) {
    QVector s(alg.d());
    Rational c(1);
    for (std::size_t r = 0; r < k.dim(); ++r) {
      for (std::size_t j = 0; j < alg.d(); ++j) s[j] += c * k.basis()(r, j);
      c *= Rational(b);
    }
    bool ok = true;
    for (std::size_t i = 0; i < alg.n() && ok; ++i) {
      if (!must_vanish[i] && alg.pair(alg.weight(i), s).is_zero()) ok = false;
    }
    if (ok) return s;
  }
  throw Error(ErrorCode::BadSlice, "no generic kernel element found");
}

std::vector<BoundaryComponent> boundary_components(const WeightedLieAlgebra& alg) {
  std::vector<BoundaryComponent> out;
  Subspace a_part = alg.a_span(alg.all_weights());
  for (std::size_t alpha = 0; alpha < alg.n(); ++alpha) {
    BoundaryComponent c;
    c.alpha = alpha;
    c.v_alpha = v_alpha(alg, alpha);
    c.normalizer = normalizer(alg, c.v_alpha);
    c.orbit_dim = alg.n() - c.normalizer.intersect(a_part).dim();
    QVector s = generic_kernel_element(alg, lie::closure(alg, {alpha}));
    QVector x = alg.x(alpha);
    for (std::size_t j = 0; j < alg.d(); ++j) x[j] = s[j];
    c.regular_element = x;
    c.regular_centralizer = lie::regular_test(alg, x) && lie::centralizer(alg, x) == c.v_alpha;
    if (c.regular_centralizer) record_certified(alg, c.v_alpha);
    out.push_back(std::move(c));
  }
  return out;
}

nlohmann::json to_json(const WeightedLieAlgebra& alg, const FixedPointRecord& r) {
  nlohmann::json rv = nlohmann::json::array();
  for (auto i : r.r_v) rv.push_back(alg.names()[i]);
  return {{"subspace", to_json(r.subspace)},
          {"r_v", rv},
          {"z_v", to_json(r.z_v)},
          {"fixed_under", r.fixed_under == FixedUnder::Torus ? "torus" : "group"},
          {"witness_curve", to_json(r.witness.basis)},
          {"witness_verified", r.witness_verified}};
}

nlohmann::json to_json(const WeightedLieAlgebra& alg, const BoundaryComponent& c) {
  return {{"alpha", alg.names()[c.alpha]},
          {"v_alpha", to_json(c.v_alpha)},
          {"normalizer_dim", c.normalizer.dim()},
          {"orbit_dim", c.orbit_dim},
          {"regular_element", alg.format_element(c.regular_element)},
          {"regular_centralizer", c.regular_centralizer}};
}

report::VerificationReport fixed_points_report(const WeightedLieAlgebra& alg) {
  report::VerificationReport rep("fixed-points");
  auto torus = torus_fixed_points(alg);
  auto group = group_fixed_points(alg);
  rep.summary()["torus_fixed"] = torus.size();
  rep.summary()["group_fixed"] = group.size();

  nlohmann::json records = nlohmann::json::array();
  bool witnesses = true, shape = true;
  for (const auto& r : torus) {
    witnesses = witnesses && r.witness_verified;
    shape = shape && is_commutative_subalgebra(alg, r.subspace) && is_torus_stable(alg, r.subspace) &&
            r.subspace.dim() == alg.d();
    records.push_back(to_json(alg, r));
  }
  rep.add("torus-fixed-witnesses", witnesses ? Verdict::Proven : Verdict::Refuted,
          "every torus-fixed commutative graded subspace is a limit of the orbit of t",
          {{"count", torus.size()}, {"records", records}});
  rep.add("torus-fixed-shape", shape ? Verdict::Proven : Verdict::Refuted,
          "torus-fixed points are commutative graded subalgebras of dimension d");

  if (alg.n() <= 16) {
    std::vector<WeightSubset> expected;
    for (std::uint32_t mask = 0; mask < (1u << alg.n()); ++mask) {
      WeightSubset sub;
      for (std::size_t i = 0; i < alg.n(); ++i) {
        if (mask >> i & 1) sub.push_back(i);
      }
      if (!sub.empty() && alg::rank(alg.weight_matrix(sub)) != sub.size()) continue;
      bool abelian = true;
      for (auto a : sub)
        for (auto b : sub) {
          if (!alg::is_zero(alg.bracket_basis(a, b))) abelian = false;
        }
      if (abelian) expected.push_back(sub);
    }
    std::vector<WeightSubset> got;
    for (const auto& r : torus) got.push_back(r.r_v);
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    rep.add("brute-force-count", expected == got ? Verdict::Proven : Verdict::Refuted,
            "enumeration agrees with a scan over all weight subsets",
            {{"subsets_scanned", 1u << alg.n()}, {"matches", expected.size()}});
  }

  Subspace z = lie::center(alg).z;
  std::size_t d_sharp = alg.d() - z.dim();
  bool group_ok = true;
  nlohmann::json gnames = nlohmann::json::array();
  for (const auto& r : group) {
    group_ok = group_ok && r.r_v.size() == d_sharp && lie::is_ideal(alg, r.subspace);
    nlohmann::json names = nlohmann::json::array();
    for (auto i : r.r_v) names.push_back(alg.names()[i]);
    gnames.push_back(names);
  }
  rep.add("group-fixed-shape", group_ok ? Verdict::Proven : Verdict::Refuted,
          "group-fixed points are commutative ideals whose weights number d#",
          {{"count", group.size()}, {"r_v", gnames}});
  return rep;
}

report::VerificationReport boundary_report(const WeightedLieAlgebra& alg) {
  report::VerificationReport rep("boundary");
  auto comps = boundary_components(alg);
  rep.summary()["components"] = comps.size();
  nlohmann::json items = nlohmann::json::array();
  bool dims = true, regular = true, limits = true;
  for (const auto& c : comps) {
    dims = dims && c.orbit_dim + 1 == alg.n();
    regular = regular && c.regular_centralizer;
    limits = limits && theta_alpha(alg, c.alpha, std::nullopt) == c.v_alpha;
    items.push_back(to_json(alg, c));
  }
  rep.add("boundary-orbit-dimension", dims ? Verdict::Proven : Verdict::Refuted,
          "each boundary component has dimension n - 1", {{"components", items}});
  rep.add("theta-limit", limits ? Verdict::Proven : Verdict::Refuted,
          "the curve exp(z ad x_alpha)(t) tends to V_alpha");
  rep.add("boundary-regular-element", regular ? Verdict::Proven : Verdict::Refuted,
          "V_alpha is the centralizer of a regular element s + x_alpha");
  return rep;
}

}  // namespace orbitvar::orbit
