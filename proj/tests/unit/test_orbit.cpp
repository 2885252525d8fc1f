#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "orbitvar/error.hpp"
#include "orbitvar/lie/analysis.hpp"
#include "orbitvar/lie/builtins.hpp"
#include "orbitvar/orbit/action.hpp"
#include "orbitvar/orbit/fixed_points.hpp"
#include "orbitvar/orbit/membership.hpp"
#include "orbitvar/util/random.hpp"

using namespace orbitvar;
using namespace orbitvar::orbit;
using lie::builtin;
using report::Verdict;

namespace {

std::vector<lie::WeightSubset> sorted_r_v(const std::vector<FixedPointRecord>& recs) {
  std::vector<lie::WeightSubset> out;
  for (const auto& r : recs) out.push_back(r.r_v);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("group elements act by invertible maps") {
  auto alg = builtin("borel-nilradical-A3");
  util::Rng rng(53);
  for (int k = 0; k < 10; ++k) {
    Word w = sample_word(alg, rng);
    QMatrix g = group_matrix(alg, w);
    QMatrix h = group_matrix(alg, inverse(w));
    CHECK(g * h == QMatrix::identity(alg.dim()));
    Subspace v = act(alg, w, alg.torus());
    CHECK(v.dim() == alg.d());
    CHECK(is_commutative_subalgebra(alg, v));
    CHECK(act(alg, inverse(w), v) == alg.torus());
  }
}

TEST_CASE("formal group matrix specializes to the numeric one") {
  auto alg = builtin("borel-nilradical-A2");
  Word w = {{0, Rational(1), true}, {1, Rational(2), true}};
  alg::PolyMatrix formal = group_matrix_formal(alg, w);
  for (long z = -2; z <= 2; ++z) {
    Word numeric = {{0, Rational(z), false}, {1, Rational(2 * z), false}};
    CHECK(alg::evaluate(formal, Rational(z)) == group_matrix(alg, numeric));
  }
}

TEST_CASE("torus fixed points agree with the bitmask oracle") {
  for (const auto& name : {"borel-nilradical-A2", "borel-nilradical-A3", "heisenberg-3", "abelian:2", "sl2-borel"}) {
    auto alg = builtin(name);
    CAPTURE(name);
    auto recs = torus_fixed_points(alg);
    auto expected = oracle::fixed_point_subsets(alg);
    std::sort(expected.begin(), expected.end());
    CHECK(sorted_r_v(recs) == expected);
    for (const auto& r : recs) {
      CHECK(r.witness_verified);
      CHECK(r.subspace.dim() == alg.d());
      CHECK(is_commutative_subalgebra(alg, r.subspace));
      CHECK(is_torus_stable(alg, r.subspace));
      CHECK(graded_weights(alg, r.subspace) == r.r_v);
    }
  }
}

TEST_CASE("fixed point counts") {
  auto a2 = builtin("borel-nilradical-A2");
  CHECK(torus_fixed_points(a2).size() == 6);
  CHECK(group_fixed_points(a2).size() == 2);
  CHECK(torus_fixed_points(builtin("borel-nilradical-A3")).size() == 25);
  CHECK(group_fixed_points(builtin("borel-nilradical-A3")).size() == 3);
  auto ab1 = builtin("abelian:1");
  CHECK(torus_fixed_points(ab1).size() == 2);
  CHECK(group_fixed_points(ab1).size() == 1);
  for (const auto& r : group_fixed_points(a2)) {
    CHECK(r.fixed_under == FixedUnder::Group);
    CHECK(lie::is_ideal(a2, r.subspace));
  }
  auto rep = fixed_points_report(a2);
  CHECK(rep.count(Verdict::Refuted) == 0);
  CHECK(rep.summary()["torus_fixed"] == 6);
}

TEST_CASE("theta limits reach V_alpha") {
  for (const auto& name : {"borel-nilradical-A2", "borel-nilradical-A3", "heisenberg-3"}) {
    auto alg = builtin(name);
    for (std::size_t a = 0; a < alg.n(); ++a) {
      CAPTURE(name);
      CAPTURE(a);
      Subspace expected = oracle::v_alpha(alg, a);
      CHECK(oracle::theta_limit(alg, a) == expected);
      CHECK(theta_alpha(alg, a, std::nullopt) == expected);
      CHECK(v_alpha(alg, a) == expected);
      CHECK(theta_alpha(alg, a, Rational(3)).dim() == alg.d());
    }
  }
}

TEST_CASE("boundary components") {
  for (const auto& name : {"borel-nilradical-A2", "borel-nilradical-A3", "abelian:1"}) {
    auto alg = builtin(name);
    auto comps = boundary_components(alg);
    CHECK(comps.size() == alg.n());
    for (const auto& c : comps) {
      CHECK(c.orbit_dim == alg.n() - 1);
      CHECK(oracle::a_orbit_dim(alg, c.v_alpha) == alg.n() - 1);
      CHECK(c.regular_centralizer);
    }
  }
}

TEST_CASE("normalizer of the torus") {
  auto alg = builtin("borel-nilradical-A2");
  CHECK(normalizer(alg, alg.torus()) == alg.torus());
  Subspace a = alg.a_span(alg.all_weights());
  CHECK(normalizer(alg, a).dim() == alg.dim());
}

TEST_CASE("membership certifies orbit points and refutes non-commutative spaces") {
  auto alg = builtin("borel-nilradical-A3");
  util::Rng rng(59);
  for (int k = 0; k < 10; ++k) {
    Word w = sample_word(alg, rng);
    Subspace v = act(alg, w, alg.torus());
    auto res = membership(alg, v);
    CHECK(res.certified());
    if (res.kind == MembershipKind::Orbit) CHECK(act(alg, res.word, alg.torus()) == v);
  }
  Subspace bad = alg.a_span({0, 1, 3});
  CHECK(membership(alg, bad).kind == MembershipKind::Refuted);
  for (const auto& r : torus_fixed_points(alg)) CHECK(membership(alg, r.subspace).certified());
}

TEST_CASE("conjugating words clear nilpotent parts") {
  auto alg = builtin("borel-nilradical-A2");
  QVector u = alg.zero();
  u[0] = Rational(1);
  u[1] = Rational(2);
  u[2] = Rational(5);
  u[3] = Rational(-1);
  u[4] = Rational(7);
  Word w = conjugating_word(alg, u);
  Subspace line = Subspace::span(alg.dim(), {u});
  Subspace image = act(alg, inverse(w), line);
  CHECK(alg.torus().contains(image));
  QVector singular = alg.zero();
  singular[0] = Rational(1);
  singular[1] = Rational(-1);
  CHECK_THROWS_AS(conjugating_word(alg, singular), Error);
}

TEST_CASE("multi-point membership") {
  auto alg = builtin("borel-nilradical-A2");
  QVector a = alg.t(0), b = alg.t(1);
  CHECK(multipoint_membership(alg, {a, b}).verdict == Verdict::Proven);
  CHECK(multipoint_membership(alg, {alg.x(0), alg.x(1)}).verdict == Verdict::Refuted);
}

TEST_CASE("property P consequences") {
  for (const auto& name : {"borel-nilradical-A2", "borel-nilradical-A3"}) {
    auto rep = property_P_suite(builtin(name));
    CHECK(rep.count(Verdict::Refuted) == 0);
    CHECK(rep.summary()["cases"] == rep.summary()["witnesses"]);
  }
  auto alg = builtin("borel-nilradical-A2");
  QVector s = {Rational(1), Rational(-1)};
  CHECK_THROWS_AS(property_P_consequences(alg, s, alg.a_span({0, 1})), Error);
}

TEST_CASE("pair relation") {
  auto alg = builtin("borel-nilradical-A2");
  for (std::size_t a = 0; a < alg.n(); ++a) {
    auto rep = verify_pair_relation(alg, a, 40, 1);
    CHECK(rep.count(Verdict::Refuted) == 0);
    CHECK(rep.count(Verdict::Sampled) == 1);
  }
}

TEST_CASE("certified subspaces are commutative and contain the center") {
  (void)torus_fixed_points(builtin("borel-nilradical-A3"));
  auto stats = certification_stats();
  CHECK(stats.certified > 0);
  CHECK(stats.violations == 0);
}
