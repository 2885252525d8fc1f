#include <doctest.h>

#include "orbitvar/error.hpp"
#include "orbitvar/ideals/chart.hpp"
#include "orbitvar/ideals/determinantal.hpp"
#include "orbitvar/lie/builtins.hpp"
#include "orbitvar/orbit/action.hpp"
#include "orbitvar/orbit/fixed_points.hpp"
#include "orbitvar/util/random.hpp"

using namespace orbitvar;
using namespace orbitvar::ideals;
using lie::builtin;
using report::Verdict;

namespace {

ChartIdeal chart_at(const lie::WeightedLieAlgebra& alg, const lie::WeightSubset& s) {
  return chart_ideal(alg, alg.a_span(s));
}

}  // namespace

TEST_CASE("A2 charts at both group-fixed points") {
  auto alg = builtin("borel-nilradical-A2");
  auto points = orbit::group_fixed_points(alg);
  REQUIRE(points.size() == 2);
  for (const auto& p : points) {
    auto chart = chart_ideal(alg, p.subspace);
    CHECK(chart.d == 2);
    CHECK(chart.m == 1);
    CHECK(chart.ring.nvars() == 6);
    CHECK(hilbert_dimension(chart.ideal) == 3);
    CHECK(verify_chart_relation(chart).overall() == Verdict::Proven);
    CHECK(nilcone_dimension(chart) == 3);
    CHECK(nilcone_dimension(chart, {0}) == 4);
    CHECK(nilcone_dimension(chart, {1}) == 4);
    CHECK(nilpotent_locus_dimension(chart) <= 1);
    auto nil = nilcone_report(chart);
    CHECK(nil.count(Verdict::Refuted) == 0);
  }
}

TEST_CASE("orbit points satisfy the chart equations") {
  util::Rng rng(61);
  for (const auto& name : {"borel-nilradical-A2", "heisenberg-3", "borel-nilradical-A3"}) {
    auto alg = builtin(name);
    for (const auto& p : orbit::group_fixed_points(alg)) {
      auto chart = chart_ideal(alg, p.subspace);
      int hits = 0;
      for (int k = 0; k < 12; ++k) {
        Subspace v = orbit::act(alg, orbit::sample_word(alg, rng), alg.torus());
        auto pt = chart_coordinates(chart, v);
        if (!pt) continue;
        ++hits;
        for (const auto& g : chart.ideal.generators()) CHECK(g.eval(*pt).is_zero());
      }
      CHECK(hits > 0);
    }
  }
}

TEST_CASE("chart origin is the fixed point") {
  auto alg = builtin("borel-nilradical-A2");
  auto chart = chart_at(alg, {0, 2});
  auto origin = chart_coordinates(chart, alg.a_span({0, 2}));
  REQUIRE(origin.has_value());
  for (const auto& c : *origin) CHECK(c.is_zero());
  CHECK_FALSE(chart_coordinates(chart, alg.torus()).has_value());
}

TEST_CASE("u sequence at e12 + e13 has a zero divisor for e23") {
  auto alg = builtin("borel-nilradical-A2");
  auto chart = chart_at(alg, {0, 2});
  const auto& r = chart.ring;
  auto seq = u_sequence(chart, alg.weight(1));
  REQUIRE(seq.size() == 2);
  CHECK(r.format(seq[0]) == "z12");
  CHECK(r.format(seq[1]) == "z22");
  Ideal mod_first = chart.ideal.with({seq[0]});
  CHECK_FALSE(mod_first.contains(r.var("a11")));
  CHECK(mod_first.contains(seq[1] * r.var("a11")));
  CHECK(regular_sequence_check(chart.ideal, seq).overall() == Verdict::Refuted);
  CHECK(regular_sequence_check(chart.ideal, u_sequence(chart, alg.weight(0))).overall() == Verdict::Proven);
  CHECK(regular_sequence_check(chart.ideal, u_sequence(chart, alg.weight(2))).overall() == Verdict::Proven);
}

TEST_CASE("abelian and one-dimensional charts") {
  auto ab = builtin("abelian:2");
  auto chart = chart_at(ab, {0, 1});
  CHECK(chart.m == 0);
  CHECK(hilbert_dimension(chart.ideal) == 2);
  CHECK(nilcone_dimension(chart) == 2);
  CHECK(chart_report(chart).count(Verdict::Refuted) == 0);
  auto sl2 = builtin("sl2-borel");
  CHECK(chart_report(chart_at(sl2, {0})).overall() == Verdict::Proven);
}

TEST_CASE("chart preconditions") {
  auto alg = builtin("borel-nilradical-A2");
  CHECK_THROWS_AS(chart_ideal(alg, alg.torus()), Error);
  CHECK_THROWS_AS(chart_ideal(alg, alg.a_span({0, 1})), Error);
  lie::WeightedLieAlgebra unfaithful(2, {"x"}, {{Rational(1), Rational(0)}});
  CHECK_THROWS_AS(chart_ideal(unfaithful, unfaithful.a_span({0})), Error);
  auto a4 = builtin("borel-nilradical-A4");
  try {
    chart_ideal(a4, orbit::group_fixed_points(a4).front().subspace);
    FAIL("expected ScaleExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ScaleExceeded);
  }
}

TEST_CASE("chart json") {
  auto alg = builtin("borel-nilradical-A2");
  auto j = to_json(chart_at(alg, {0, 2}));
  CHECK(j["v0"] == nlohmann::json::array({"e12", "e13"}));
  CHECK(j["gammas"] == nlohmann::json::array({"e23"}));
  CHECK(j["ideal"]["generators"].size() == 3);
}
