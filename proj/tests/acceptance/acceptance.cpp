#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "orbitvar/ideals/chart.hpp"
#include "orbitvar/ideals/determinantal.hpp"
#include "orbitvar/lie/builtins.hpp"
#include "orbitvar/orbit/action.hpp"
#include "orbitvar/orbit/fixed_points.hpp"
#include "orbitvar/orbit/membership.hpp"

using namespace orbitvar;
using alg::Subspace;
using report::Verdict;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> body;
};

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

Outcome fixed_points_a2() {
  auto alg = lie::builtin("borel-nilradical-A2");
  auto torus = orbit::torus_fixed_points(alg);
  auto group = orbit::group_fixed_points(alg);
  bool witnesses = std::all_of(torus.begin(), torus.end(), [](const auto& r) { return r.witness_verified; });
  auto oracle = oracle::fixed_point_subsets(alg);
  std::sort(oracle.begin(), oracle.end());
  std::vector<lie::WeightSubset> found;
  for (const auto& r : torus) found.push_back(r.r_v);
  std::sort(found.begin(), found.end());
  std::ostringstream os;
  os << torus.size() << " torus-fixed, " << group.size() << " group-fixed, oracle " << oracle.size();
  return {torus.size() == 6 && group.size() == 2 && witnesses && found == oracle, os.str()};
}

Outcome boundary_a2_a3() {
  std::vector<std::string> notes;
  bool ok = true;
  for (const auto& name : {"borel-nilradical-A2", "borel-nilradical-A3"}) {
    auto alg = lie::builtin(name);
    auto comps = orbit::boundary_components(alg);
    bool dims = std::all_of(comps.begin(), comps.end(), [&](const auto& c) {
      return c.orbit_dim == alg.n() - 1 && oracle::a_orbit_dim(alg, c.v_alpha) == alg.n() - 1;
    });
    ok = ok && comps.size() == alg.n() && dims;
    notes.push_back(std::string(name) + ": " + std::to_string(comps.size()) + " components" +
                    (dims ? "" : ", orbit dimension mismatch"));
  }
  return {ok, join(notes)};
}

Outcome theta_limits() {
  bool ok = true;
  std::size_t count = 0;
  for (const auto& name : {"borel-nilradical-A2", "borel-nilradical-A3"}) {
    auto alg = lie::builtin(name);
    for (std::size_t a = 0; a < alg.n(); ++a) {
      Subspace expected = oracle::v_alpha(alg, a);
      ok = ok && oracle::theta_limit(alg, a) == expected && orbit::theta_alpha(alg, a, std::nullopt) == expected;
      ++count;
    }
  }
  return {ok, std::to_string(count) + " weights checked"};
}

Outcome certification() {
  auto stats = orbit::certification_stats();
  return {stats.certified > 0 && stats.violations == 0,
          std::to_string(stats.certified) + " certified, " + std::to_string(stats.violations) + " violations"};
}

Outcome determinantal() {
  bool ok = true;
  std::vector<std::string> notes;
  for (std::size_t s = 2; s <= 4; ++s) {
    std::size_t dim = ideals::hilbert_dimension(ideals::determinantal_P(s));
    bool prime = ideals::primality_crosscheck_P(s).overall() == Verdict::Proven;
    ok = ok && dim == s + 1 && prime;
    notes.push_back("P" + std::to_string(s) + " dim " + std::to_string(dim) + (prime ? " prime" : " not certified"));
  }
  return {ok, join(notes)};
}

Outcome identity() {
  auto rep = ideals::determinantal_suite(4);
  std::size_t proven = 0;
  for (std::size_t s = 1; s <= 4; ++s) {
    const auto* c = rep.find("identity-P'" + std::to_string(s));
    if (c && c->verdict == Verdict::Proven) ++proven;
  }
  return {proven == 4, std::to_string(proven) + "/4 values of s with every pair reducing to 0"};
}

Outcome chart_a2() {
  auto alg = lie::builtin("borel-nilradical-A2");
  bool ok = true;
  std::vector<std::string> notes;
  for (const auto& p : orbit::group_fixed_points(alg)) {
    auto chart = ideals::chart_ideal(alg, p.subspace);
    auto rep = ideals::chart_report(chart);
    std::vector<std::string> failed;
    for (const auto& c : rep.checks()) {
      if (c.verdict != Verdict::Proven) failed.push_back(c.name);
    }
    ok = ok && failed.empty();
    std::string label = ideals::to_json(chart)["v0"].dump();
    notes.push_back(label + (failed.empty() ? " ok" : " failed " + join(failed)));
  }
  return {ok, join(notes)};
}

Outcome nilcone_a2() {
  auto alg = lie::builtin("borel-nilradical-A2");
  bool ok = true;
  std::vector<std::string> notes;
  for (const auto& p : orbit::group_fixed_points(alg)) {
    auto chart = ideals::chart_ideal(alg, p.subspace);
    std::size_t full = ideals::nilcone_dimension(chart);
    std::size_t one = ideals::nilcone_dimension(chart, {0});
    std::size_t two = ideals::nilcone_dimension(chart, {1});
    ok = ok && full == 3 && one == 4 && two == 4;
    notes.push_back(std::to_string(full) + "/" + std::to_string(one) + "/" + std::to_string(two));
  }
  return {ok, "dimensions all/first/second: " + join(notes)};
}

Outcome nilpotent_locus_a2() {
  auto alg = lie::builtin("borel-nilradical-A2");
  bool ok = true;
  std::vector<std::string> notes;
  for (const auto& p : orbit::group_fixed_points(alg)) {
    std::size_t dim = ideals::nilpotent_locus_dimension(ideals::chart_ideal(alg, p.subspace));
    ok = ok && dim <= 1;
    notes.push_back(std::to_string(dim));
  }
  return {ok, "locus dimensions " + join(notes)};
}

Outcome pair_relation_a2() {
  auto alg = lie::builtin("borel-nilradical-A2");
  std::size_t refuted = 0, unknown = 0;
  for (std::size_t a = 0; a < alg.n(); ++a) {
    auto rep = orbit::verify_pair_relation(alg, a, 128, 0);
    refuted += rep.count(Verdict::Refuted);
    unknown += rep.count(Verdict::Unknown);
  }
  return {refuted == 0 && unknown == 0, "128 samples per weight, " + std::to_string(refuted) + " counterexamples"};
}

Outcome property_p() {
  bool ok = true;
  std::vector<std::string> notes;
  for (const auto& name : {"borel-nilradical-A2", "borel-nilradical-A3"}) {
    auto rep = orbit::property_P_suite(lie::builtin(name));
    bool witnesses = rep.summary()["cases"] == rep.summary()["witnesses"];
    ok = ok && rep.count(Verdict::Refuted) == 0 && witnesses;
    notes.push_back(std::string(name) + ": " + rep.summary()["cases"].dump() + " cases, " +
                    std::to_string(rep.count(Verdict::Refuted)) + " refuted");
  }
  return {ok, join(notes)};
}

std::string capture(const std::string& cmd) {
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  return out;
}

Outcome determinism() {
  std::string cmd = std::string(ORBITVAR_BINARY) + " suite --builtin borel-nilradical-A2 --seed 0";
  std::string first = capture(cmd);
  std::string second = capture(cmd);
  bool ok = !first.empty() && first == second;
  return {ok, std::to_string(first.size()) + " bytes" + (ok ? ", identical" : ", differ")};
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "A2 fixed points", 1, fixed_points_a2},
      {2, "boundary components A2/A3", 5, boundary_a2_a3},
      {3, "theta limits", 0, theta_limits},
      {5, "determinantal dimension and primality", 30, determinantal},
      {6, "determinantal identity", 0, identity},
      {7, "A2 chart suite", 60, chart_a2},
      {8, "A2 nilpotent cone", 0, nilcone_a2},
      {9, "A2 nilpotent locus bound", 0, nilpotent_locus_a2},
      {10, "A2 pair relation", 0, pair_relation_a2},
      {11, "property P consequences A2/A3", 0, property_p},
      {12, "suite determinism", 0, determinism},
      {4, "certified subspaces", 0, certification},
  };
  std::vector<std::string> lines(13);
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.body();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = c.budget_seconds <= 0 || secs < c.budget_seconds;
    bool pass = out.pass && in_time;
    if (!pass) ++failures;
    std::ostringstream os;
    os << "criterion " << c.id << " " << (pass ? "PASS" : "FAIL") << " " << c.title << ": " << out.detail;
    os.precision(3);
    os << " (" << std::fixed << secs << " s";
    if (c.budget_seconds > 0) os << ", budget " << c.budget_seconds << " s";
    os << ")";
    lines[static_cast<std::size_t>(c.id)] = os.str();
  }
  for (std::size_t i = 1; i < lines.size(); ++i) std::cout << lines[i] << "\n";
  std::cout << (12 - failures) << "/12 criteria pass\n";
  return failures == 0 ? 0 : 1;
}
