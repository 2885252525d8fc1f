#include <doctest.h>

#include <algorithm>
#include <cstdint>

#include "orbitvar/algebra/polynomial.hpp"
#include "orbitvar/error.hpp"
#include "orbitvar/ideals/determinantal.hpp"
#include "orbitvar/ideals/ideal.hpp"
#include "orbitvar/util/random.hpp"

using namespace orbitvar;
using namespace orbitvar::ideals;
using report::Verdict;

namespace {

Polynomial random_poly(util::Rng& rng, const PolyRing& r, int terms, unsigned max_deg) {
  Polynomial p = r.zero();
  for (int t = 0; t < terms; ++t) {
    Polynomial m = r.constant(Rational(rng.uniform_int(-3, 3)));
    for (std::size_t v = 0; v < r.nvars(); ++v) {
      auto e = static_cast<unsigned>(rng.uniform_int(0, max_deg));
      if (e) m = m * r.var(v).pow(e);
    }
    p += m;
  }
  return p;
}

// Krull dimension of a monomial ideal: largest variable set containing the
// support of no generator.
std::size_t monomial_dimension(const PolyRing& r, const std::vector<Polynomial>& gens) {
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r.nvars()); ++mask) {
    bool free = true;
    for (const auto& g : gens) {
      bool inside = true;
      for (std::size_t v = 0; v < r.nvars(); ++v) {
        if (g.uses_variable(v) && !(mask >> v & 1)) inside = false;
      }
      if (inside) free = false;
    }
    if (free) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(mask)));
  }
  return best;
}

}  // namespace

TEST_CASE("polynomial formatting round-trips") {
  PolyRing r({"x", "y", "z"});
  Polynomial p = r.parse("3/2*x^2*y - y*z + 7");
  CHECK(r.parse(r.format(p)) == p);
  CHECK(r.format(r.parse("y - y")) == "0");
  CHECK(p.total_degree() == 3);
  CHECK(p.eval({Rational(1), Rational(2), Rational(3)}) == Rational(4));
  CHECK_THROWS_AS(r.parse("x +* y"), Error);
  CHECK_THROWS_AS(r.parse("w"), Error);
}

TEST_CASE("polynomial ring axioms on random values") {
  PolyRing r({"x", "y", "z"});
  util::Rng rng(29);
  for (int k = 0; k < 30; ++k) {
    Polynomial a = random_poly(rng, r, 3, 2), b = random_poly(rng, r, 3, 2), c = random_poly(rng, r, 2, 2);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    std::vector<Rational> pt = {Rational(rng.uniform_int(-3, 3)), Rational(rng.uniform_int(-3, 3)), Rational(2)};
    CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
  }
}

TEST_CASE("groebner basis is independent of generator order") {
  PolyRing r({"x", "y", "z"});
  util::Rng rng(31);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<Polynomial> gens = {random_poly(rng, r, 2, 2), random_poly(rng, r, 2, 2), random_poly(rng, r, 2, 1)};
    auto gb = groebner_basis(gens, r.order());
    std::vector<Polynomial> shuffled = {gens[2], gens[0] * Rational(5), gens[1] + gens[2]};
    CHECK(groebner_basis(shuffled, r.order()) == gb);
  }
}

TEST_CASE("ideal membership absorbs products") {
  PolyRing r({"x", "y", "z"});
  Ideal i(r, {r.parse("x^2 - y*z"), r.parse("x*y - z")});
  util::Rng rng(37);
  for (int k = 0; k < 20; ++k) {
    Polynomial f = r.parse("x^2 - y*z") * random_poly(rng, r, 2, 2) + r.parse("x*y - z") * random_poly(rng, r, 2, 1);
    CHECK(i.contains(f));
    CHECK(i.contains(f * random_poly(rng, r, 3, 2)));
  }
  CHECK_FALSE(i.contains(r.var("x")));
  CHECK(Ideal(r, {r.var(0), r.constant(Rational(1)) - r.var(0)}).is_unit());
  CHECK(Ideal(r, {}).is_zero());
}

TEST_CASE("elimination respects containment") {
  PolyRing r({"t", "x", "y"});
  Ideal small(r, {r.parse("x - t^2")});
  Ideal big = small.with({r.parse("y - t^3")});
  Ideal es = eliminate(small, {"t"});
  Ideal eb = eliminate(big, {"t"});
  CHECK(eb.contains(es));
  // twisted cubic projection: x^3 = y^2
  CHECK(eb.contains(eb.ring().parse("x^3 - y^2")));
  CHECK(eb.ring().nvars() == 2);
}

TEST_CASE("ideal quotient contains the ideal") {
  PolyRing r({"x", "y"});
  Ideal i(r, {r.parse("x*y"), r.parse("x^2")});
  Ideal q = ideal_quotient(i, r.var("x"));
  CHECK(q.contains(i));
  CHECK(q == Ideal(r, {r.var("x"), r.var("y")}));
  CHECK(exact_divide(r.parse("x^2*y - x*y^2"), r.parse("x - y")) == r.parse("x*y"));
}

TEST_CASE("hilbert dimension matches monomial support oracle") {
  PolyRing r({"a", "b", "c", "d", "e"});
  util::Rng rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Polynomial> gens;
    int count = static_cast<int>(rng.uniform_int(1, 4));
    for (int g = 0; g < count; ++g) {
      Polynomial m = r.constant(Rational(1));
      for (std::size_t v = 0; v < r.nvars(); ++v) {
        if (rng.uniform_int(0, 2) == 0) m = m * r.var(v).pow(static_cast<unsigned>(rng.uniform_int(1, 2)));
      }
      if (!m.is_constant()) gens.push_back(m);
    }
    CHECK(hilbert_dimension(Ideal(r, gens)) == monomial_dimension(r, gens));
  }
  CHECK(hilbert_dimension(Ideal(r, {r.parse("a*b - c*d"), r.parse("e")})) == 3);
}

TEST_CASE("radical membership") {
  PolyRing r({"x", "y"});
  Ideal i(r, {r.parse("x^3"), r.parse("y^2")});
  CHECK(in_radical(i, r.parse("x + y")));
  CHECK_FALSE(in_radical(i, r.parse("x + 1")));
}

TEST_CASE("determinantal ideals") {
  for (std::size_t s = 1; s <= 4; ++s) {
    CHECK(hilbert_dimension(determinantal_P(s)) == s + 1);
    auto rep = primality_crosscheck_P(s);
    CHECK(rep.overall() == Verdict::Proven);
    CHECK(determinantal_P(s).contains(determinantal_P_prime(s)));
    CHECK(determinantal_P(s).contains(determinantal_P_second(s)));
  }
  CHECK_THROWS_AS(determinantal_P(0), Error);
  CHECK_THROWS_AS(primality_crosscheck_P(6), Error);
  auto suite = determinantal_suite(4);
  CHECK(suite.count(Verdict::Refuted) == 0);
  CHECK(suite.find("identity-P'4")->verdict == Verdict::Proven);
  CHECK(suite.find("dimension-P3")->witness["dimension"] == 4);
}

TEST_CASE("regular sequences") {
  PolyRing r({"x", "y", "z"});
  Ideal zero(r, {});
  CHECK(regular_sequence_check(zero, {r.var("x"), r.var("y"), r.var("z")}).overall() == Verdict::Proven);
  auto bad = regular_sequence_check(zero, {r.var("x"), r.parse("x*y")});
  CHECK(bad.overall() == Verdict::Refuted);
  CHECK(bad.find("element-2")->verdict == Verdict::Refuted);
  // y*z times x lies in (x*z)
  auto zd = regular_sequence_check(zero, {r.parse("x*z"), r.parse("y*z")});
  CHECK(zd.overall() == Verdict::Refuted);
  Ideal det(r, {r.parse("x*y - z^2")});
  CHECK(regular_sequence_check(det, {r.var("x"), r.var("y")}).overall() == Verdict::Proven);
  CHECK(regular_sequence_check(zero, {r.var("x"), r.constant(Rational(1)) - r.var("x")}).overall() ==
        Verdict::Refuted);
}
