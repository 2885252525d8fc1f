#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbitvar/orbit/action.hpp"
#include "orbitvar/report/report.hpp"

namespace orbitvar::orbit {

enum class MembershipKind { Orbit, Limit, RegularCentralizer, Refuted, Unknown };

std::string to_string(MembershipKind k);

struct MembershipResult {
  MembershipKind kind = MembershipKind::Unknown;
  std::string reason;
  /// Orbit: V = g.t for this word. Limit: witness curve factors.
  Word word;
  std::optional<CurveSubspace> witness;
  /// RegularCentralizer: x with r^x = V.
  std::optional<QVector> regular_element;

  bool certified() const {
    return kind == MembershipKind::Orbit || kind == MembershipKind::Limit ||
           kind == MembershipKind::RegularCentralizer;
  }
};

/// Semi-decision for V in X_R. Refutes on failed necessary conditions;
/// certifies by explicit orbit parameters, a limit curve for graded V, or a
/// regular element whose centralizer is V. Throws DimensionMismatch.
MembershipResult membership(const WeightedLieAlgebra& alg, const Subspace& v, std::uint64_t seed = 0);

/// Word g with g.t = r^u for u = s + n, s regular in t, built by clearing
/// components of n in increasing lower-central depth.
Word conjugating_word(const WeightedLieAlgebra& alg, const QVector& u);

/// Weights Lambda with t_Lambda conjugate to the largest torus in V.
/// Throws NotClosedUnderJordan when a semisimple part leaves V.
WeightSubset biggest_torus(const WeightedLieAlgebra& alg, const Subspace& v);

/// Center containment and an R^s witness curve for V in X_R with V inside
/// r^s. Throws PreconditionFailed.
report::VerificationReport property_P_consequences(const WeightedLieAlgebra& alg, const QVector& s,
                                                   const Subspace& v);

/// property_P_consequences over every torus-fixed V and generic s in each
/// stratum of the kernel arrangement that keeps V inside r^s.
report::VerificationReport property_P_suite(const WeightedLieAlgebra& alg);

struct MultiPointResult {
  report::Verdict verdict = report::Verdict::Unknown;
  std::string reason;
  std::optional<Subspace> witness;
};

/// Is there V in X_R containing all points? Decisive when the span of the
/// points meets the regular set. Independent of argument order.
MultiPointResult multipoint_membership(const WeightedLieAlgebra& alg, std::vector<QVector> points);

/// Sampled check of the two-point relation on the slices through x0 and y0.
/// Throws BadSlice when x0 or y0 is not in t'_alpha.
report::VerificationReport verify_pair_relation(const WeightedLieAlgebra& alg, std::size_t alpha,
                                                 const QVector& x0, const QVector& y0, std::size_t samples,
                                                 std::uint64_t seed);
/// Same with x0, y0 chosen from the seed.
report::VerificationReport verify_pair_relation(const WeightedLieAlgebra& alg, std::size_t alpha,
                                                std::size_t samples, std::uint64_t seed);

/// Tally of subspaces certified in X_R in this process, and how many of them
/// failed to be commutative or to contain the center.
struct CertificationStats {
  std::uint64_t certified = 0;
  std::uint64_t violations = 0;
};
void record_certified(const WeightedLieAlgebra& alg, const Subspace& v);
CertificationStats certification_stats();

nlohmann::json to_json(const WeightedLieAlgebra& alg, const MembershipResult& r);

}  // namespace orbitvar::orbit
