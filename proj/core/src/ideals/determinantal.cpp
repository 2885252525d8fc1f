#include "orbitvar/ideals/determinantal.hpp"

#include "orbitvar/error.hpp"

namespace orbitvar::ideals {

using report::Verdict;

PolyRing determinantal_ring(std::size_t s) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= s; ++i) names.push_back("u" + std::to_string(i));
  for (std::size_t i = 1; i <= s; ++i) names.push_back("T" + std::to_string(i));
  return PolyRing(names);
}

namespace {

Polynomial minor(const PolyRing& r, std::size_t s, std::size_t j, std::size_t k) {
  // u_j T_k - u_k T_j, 1-based
  return r.var(j - 1) * r.var(s + k - 1) - r.var(k - 1) * r.var(s + j - 1);
}

}  // namespace

Ideal determinantal_P(std::size_t s) {
  if (s == 0) throw Error(ErrorCode::InvalidArgument, "s must be positive");
  PolyRing r = determinantal_ring(s);
  std::vector<Polynomial> gens;
  for (std::size_t j = 1; j <= s; ++j)
    for (std::size_t k = j + 1; k <= s; ++k) gens.push_back(minor(r, s, j, k));
  return Ideal(r, gens);
}

Ideal determinantal_P_prime(std::size_t s) {
  if (s == 0) throw Error(ErrorCode::InvalidArgument, "s must be positive");
  PolyRing r = determinantal_ring(s);
  std::vector<Polynomial> gens;
  for (std::size_t j = 2; j <= s; ++j) gens.push_back(minor(r, s, j, 1));
  return Ideal(r, gens);
}

Ideal determinantal_P_second(std::size_t s) {
  if (s == 0) throw Error(ErrorCode::InvalidArgument, "s must be positive");
  PolyRing r = determinantal_ring(s);
  std::vector<Polynomial> gens;
  for (std::size_t j = 1; j < s; ++j)
    for (std::size_t k = j + 1; k < s; ++k) gens.push_back(minor(r, s, j, k));
  if (s >= 2) gens.push_back(minor(r, s, s, 1));
  return Ideal(r, gens);
}

report::VerificationReport primality_crosscheck_P(std::size_t s) {
  if (s > 5) throw Error(ErrorCode::ScaleExceeded, "primality cross-check is limited to s <= 5");
  report::VerificationReport rep("ps-check s=" + std::to_string(s));
  Ideal p = determinantal_P(s);
  if (s <= 1) {
    rep.add("primality-P" + std::to_string(s), Verdict::Proven, "P_s is prime",
            {{"reason", "zero ideal of a polynomial ring"}});
    return rep;
  }
  std::vector<std::string> names = p.ring().names();
  names.push_back("lambda");
  PolyRing ext(names);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < s; ++i) gens.push_back(ext.var(s + i) - ext.var(2 * s) * ext.var(i));
  Ideal kernel = eliminate(Ideal(ext, gens), {"lambda"});
  bool kernel_in_p = p.contains(kernel);
  bool p_in_kernel = kernel.contains(p);
  nlohmann::json w = {{"kernel_generators", kernel.to_json()["generators"]},
                      {"kernel_in_P", kernel_in_p},
                      {"P_in_kernel", p_in_kernel}};
  rep.add("primality-P" + std::to_string(s), kernel_in_p && p_in_kernel ? Verdict::Proven : Verdict::Refuted,
          "P_s is the kernel of T_i -> lambda u_i, hence prime", w);
  return rep;
}

report::VerificationReport regular_sequence_check(const Ideal& ideal, const std::vector<Polynomial>& seq) {
  report::VerificationReport rep("regular-sequence");
  Ideal j = ideal;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    std::string name = "element-" + std::to_string(i + 1);
    nlohmann::json w = {{"element", ideal.ring().format(seq[i])}, {"index", i + 1}};
    if (j.is_unit()) {
      w["failure"] = "unit ideal before this element";
      rep.add(name, Verdict::Refuted, "the sequence is regular", w);
      return rep;
    }
    if (j.with({seq[i]}).is_unit()) {
      w["failure"] = "element is a unit modulo its predecessors";
      rep.add(name, Verdict::Refuted, "the sequence is regular", w);
      return rep;
    }
    bool regular = seq[i].is_zero() ? false : j.contains(ideal_quotient(j, seq[i]));
    if (!regular) w["failure"] = "zero divisor modulo its predecessors";
    rep.add(name, regular ? Verdict::Proven : Verdict::Refuted, "the sequence is regular", w);
    if (!regular) return rep;
    j = j.with({seq[i]});
  }
  return rep;
}

}  // namespace orbitvar::ideals

namespace orbitvar::ideals {

report::VerificationReport determinantal_suite(std::size_t max_s) {
  if (max_s > 5) throw Error(ErrorCode::ScaleExceeded, "determinantal suite is limited to s <= 5");
  report::VerificationReport rep("ps-check");
  nlohmann::json dims = nlohmann::json::object();
  for (std::size_t s = 1; s <= max_s; ++s) {
    const std::string tag = std::to_string(s);
    Ideal p = determinantal_P(s);
    std::size_t dim = hilbert_dimension(p);
    dims["P" + tag] = dim;
    rep.add("dimension-P" + tag, dim == s + 1 ? Verdict::Proven : Verdict::Refuted,
            "P_s has dimension one more than the base ring", {{"dimension", dim}, {"expected", s + 1}});
    rep.append(primality_crosscheck_P(s));

    Ideal pp = determinantal_P_prime(s);
    const PolyRing& r = pp.ring();
    nlohmann::json failures = nlohmann::json::array();
    std::size_t pairs = 0;
    for (std::size_t j = 1; j <= s; ++j)
      for (std::size_t k = 1; k <= s; ++k) {
        Polynomial f = r.var(s) * minor(r, s, j, k);
        ++pairs;
        if (!pp.normal_form(f).is_zero()) failures.push_back({{"j", j}, {"k", k}, {"element", r.format(f)}});
      }
    rep.add("identity-P'" + tag, failures.empty() ? Verdict::Proven : Verdict::Refuted,
            "T_1 times every 2x2 minor lies in the ideal of minors through column 1",
            {{"pairs", pairs}, {"failures", failures}});
  }
  rep.summary()["dimensions"] = dims;
  return rep;
}

}  // namespace orbitvar::ideals
