#include <doctest.h>

#include <cstdint>

#include "orbitvar/algebra/exp.hpp"
#include "orbitvar/algebra/upoly.hpp"
#include "orbitvar/error.hpp"
#include "orbitvar/lie/analysis.hpp"
#include "orbitvar/lie/builtins.hpp"
#include "orbitvar/lie/condition4.hpp"
#include "orbitvar/util/random.hpp"

using namespace orbitvar;
using namespace orbitvar::lie;
using report::Verdict;

namespace {

const std::vector<std::string> kBuiltins = {"borel-nilradical-A2", "borel-nilradical-A3", "heisenberg-3",
                                            "abelian:1",           "abelian:3",           "sl2-borel"};

QVector random_element(util::Rng& rng, const WeightedLieAlgebra& alg) {
  QVector v(alg.dim());
  for (auto& c : v) c = Rational(rng.uniform_int(-4, 4));
  return v;
}

// One weight on a two-dimensional torus: t2 acts trivially.
WeightedLieAlgebra unfaithful() { return WeightedLieAlgebra(2, {"x"}, {{Rational(1), Rational(0)}}); }

// Subsets closed under "vanishes on the common kernel", by bitmask scan.
std::size_t count_complete(const WeightedLieAlgebra& alg) {
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << alg.n()); ++mask) {
    std::vector<QVector> rows;
    for (std::size_t i = 0; i < alg.n(); ++i) {
      if (mask >> i & 1) rows.push_back(alg.weight(i));
    }
    QMatrix w = rows.empty() ? QMatrix(0, alg.d()) : QMatrix::from_rows(rows);
    QMatrix k = alg::kernel(w);
    bool complete = true;
    for (std::size_t i = 0; i < alg.n() && complete; ++i) {
      if (mask >> i & 1) continue;
      bool vanishes = true;
      for (std::size_t r = 0; r < k.rows(); ++r) {
        Rational s;
        for (std::size_t j = 0; j < alg.d(); ++j) s += alg.weight(i)[j] * k(r, j);
        if (!s.is_zero()) vanishes = false;
      }
      if (vanishes) complete = false;
    }
    if (complete) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("builtin shapes") {
  CHECK(builtin("borel-nilradical-A2").n() == 3);
  CHECK(builtin("borel-nilradical-A2").d() == 2);
  CHECK(builtin("borel-nilradical-A3").n() == 6);
  CHECK(builtin("borel-nilradical-A3").d() == 3);
  CHECK(builtin("abelian:2").n() == 2);
  CHECK(builtin("abelian:2").d() == 2);
  CHECK_THROWS_AS(builtin("e8"), Error);
  CHECK_THROWS_AS(builtin("abelian:0"), Error);
  CHECK_FALSE(builtin_names().empty());
}

TEST_CASE("every builtin validates") {
  for (const auto& name : kBuiltins) {
    CAPTURE(name);
    auto res = validate(builtin(name));
    CHECK(res.passed);
    CHECK(res.category == "C");
    CHECK(res.report.count(Verdict::Refuted) == 0);
  }
  CHECK(validate(builtin("abelian:1")).passed);
}

TEST_CASE("structure constants satisfy Jacobi on random triples") {
  util::Rng rng(43);
  for (const auto& name : kBuiltins) {
    auto alg = builtin(name);
    for (int k = 0; k < 20; ++k) {
      QVector x = random_element(rng, alg), y = random_element(rng, alg), z = random_element(rng, alg);
      QVector sum = alg.bracket(x, alg.bracket(y, z));
      QVector b = alg.bracket(y, alg.bracket(z, x));
      QVector c = alg.bracket(z, alg.bracket(x, y));
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += b[i] + c[i];
      CHECK(alg::is_zero(sum));
      CHECK(alg.bracket(x, x) == alg.zero());
    }
  }
}

TEST_CASE("json round trip and parse diagnostics") {
  for (const auto& name : kBuiltins) {
    auto alg = builtin(name);
    CHECK(WeightedLieAlgebra::from_json(alg.to_json()) == alg);
    CHECK(WeightedLieAlgebra::parse(alg.to_json().dump()) == alg);
  }
  CHECK_THROWS_AS(WeightedLieAlgebra::parse(R"({"t_dim": 1, "a_basis": ["x"], "weights": {"x": ["1/0"]}})"), Error);
  CHECK_THROWS_AS(WeightedLieAlgebra::parse("{"), Error);
  CHECK_THROWS_AS(WeightedLieAlgebra::parse(R"({"t_dim": 1, "a_basis": ["x"]})"), Error);
  try {
    WeightedLieAlgebra::parse(R"({"t_dim": 1, "a_basis": ["x"], "weights": {"x": ["1/0"]}})");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("weights") != std::string::npos);
  }
}

TEST_CASE("validation rejects broken axioms") {
  WeightedLieAlgebra zero_weight(1, {"x"}, {{Rational(0)}});
  CHECK_FALSE(validate(zero_weight).passed);
  WeightedLieAlgebra proportional(1, {"x", "y"}, {{Rational(1)}, {Rational(2)}});
  auto res = validate(proportional);
  CHECK_FALSE(res.passed);
  CHECK(res.report.find("condition-3-non-proportional")->verdict == Verdict::Refuted);
  WeightedLieAlgebra ungraded(2, {"x", "y"}, {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
  ungraded.set_bracket(0, 1, {Rational(1), Rational(0)});
  CHECK(validate(ungraded).report.find("grading")->verdict == Verdict::Refuted);
  auto weak = validate(unfaithful());
  CHECK(weak.passed);
  CHECK(weak.category == "C'");
}

TEST_CASE("center and faithfulness") {
  CHECK(center(builtin("borel-nilradical-A2")).z.dim() == 0);
  auto c = center(unfaithful());
  CHECK(c.z.dim() == 1);
  CHECK(c.z.contains(QVector{Rational(0), Rational(1)}));
  CHECK_THROWS_AS(jordan_decompose(unfaithful(), unfaithful().t(0)), Error);
}

TEST_CASE("jordan decomposition") {
  util::Rng rng(47);
  for (const auto& name : {"borel-nilradical-A2", "borel-nilradical-A3", "heisenberg-3"}) {
    auto alg = builtin(name);
    for (int k = 0; k < 10; ++k) {
      QVector x = random_element(rng, alg);
      auto parts = jordan_decompose(alg, x);
      QVector sum = parts.semisimple;
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += parts.nilpotent[i];
      CHECK(sum == x);
      CHECK(alg::is_zero(alg.bracket(parts.semisimple, parts.nilpotent)));
      QMatrix as = alg.ad(parts.semisimple);
      CHECK(alg::evaluate(alg::squarefree_part(alg::characteristic_polynomial(as)), as).is_zero());
      CHECK(is_semisimple_matrix(as));
      CHECK(alg::is_nilpotent(alg.ad(parts.nilpotent)));
    }
  }
}

TEST_CASE("complete subsets match the bitmask oracle") {
  for (const auto& name : kBuiltins) {
    auto alg = builtin(name);
    CAPTURE(name);
    auto subsets = complete_subsets(alg);
    CHECK(subsets.size() == count_complete(alg));
    for (const auto& s : subsets) CHECK(closure(alg, s) == s);
  }
}

TEST_CASE("restriction to complete subsets") {
  auto alg = builtin("borel-nilradical-A3");
  for (const auto& s : complete_subsets(alg)) {
    auto r = restrict(alg, s);
    if (s.empty()) {
      CHECK(r.zero_algebra);
      continue;
    }
    CHECK(r.algebra.n() == s.size());
    CHECK(r.weights == s);
    CHECK(validate(r.algebra).passed);
  }
  CHECK_THROWS_AS(restrict(alg, {0, 1}), Error);
}

TEST_CASE("regular elements and centralizers") {
  auto alg = builtin("borel-nilradical-A2");
  QVector t = alg.zero();
  t[0] = Rational(1);
  t[1] = Rational(3);
  CHECK(regular_test(alg, t));
  CHECK(centralizer(alg, t) == alg.torus());
  CHECK(lambda_of(alg, t).empty());
  QVector s = alg.zero();
  s[0] = Rational(1);
  s[1] = Rational(-1);
  CHECK(lambda_of(alg, s) == WeightSubset{2});
  CHECK_FALSE(regular_test(alg, s));
  CHECK(lower_central_series(builtin("borel-nilradical-A3")) == std::vector<std::size_t>{6, 3, 1, 0});
  CHECK(is_ideal(alg, alg.a_span({2})));
  CHECK_FALSE(is_ideal(alg, alg.a_span({0})));
  CHECK(is_subalgebra(alg, alg.a_span({0})));
}

TEST_CASE("condition 4 candidates") {
  auto sl2 = builtin("sl2-borel");
  CHECK(verify_condition4(sl2, *builtin_condition4_family("sl2-borel")).overall() == Verdict::Proven);
  auto ab2 = builtin("abelian:2");
  CHECK(verify_condition4(ab2, *builtin_condition4_family("abelian:2")).overall() == Verdict::Proven);
  auto ab3 = builtin("abelian:3");
  CHECK(verify_condition4(ab3, abelian_family(ab3)).count(Verdict::Refuted) == 0);
  CHECK_FALSE(builtin_condition4_family("borel-nilradical-A2").has_value());
  CHECK_THROWS_AS(verify_condition4(ab3, abelian_family(ab2)), Error);
  CHECK(coordinate_names(ab2) == std::vector<std::string>{"t1", "t2", "x1", "x2"});
}
