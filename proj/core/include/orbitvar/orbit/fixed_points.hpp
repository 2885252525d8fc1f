#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "orbitvar/orbit/action.hpp"
#include "orbitvar/report/report.hpp"

namespace orbitvar::orbit {

enum class FixedUnder { Torus, Group };

struct FixedPointRecord {
  Subspace subspace;
  /// Weights whose weight vector lies in the subspace.
  WeightSubset r_v;
  /// Torus part, a subspace of t (ambient d).
  Subspace z_v;
  FixedUnder fixed_under = FixedUnder::Torus;
  /// exp(z ad x_beta), beta in r_v, applied to t.
  CurveSubspace witness;
  bool witness_verified = false;
};

/// z_V + a_S for every S with independent weights and abelian a_S, ordered by
/// |S| then lexicographically.
std::vector<FixedPointRecord> torus_fixed_points(const WeightedLieAlgebra& alg);

/// Torus-fixed points that are ideals of r with z_V equal to the center.
std::vector<FixedPointRecord> group_fixed_points(const WeightedLieAlgebra& alg);

struct BoundaryComponent {
  std::size_t alpha = 0;
  Subspace v_alpha;
  Subspace normalizer;
  /// dim a - dim(normalizer cap a).
  std::size_t orbit_dim = 0;
  /// s + x_alpha with s generic in ker alpha; its centralizer is V_alpha.
  QVector regular_element;
  bool regular_centralizer = false;
};

std::vector<BoundaryComponent> boundary_components(const WeightedLieAlgebra& alg);

/// Element of t (length d) in the kernel of the given weights with every
/// other weight nonzero, found by a deterministic small-integer search.
QVector generic_kernel_element(const WeightedLieAlgebra& alg, const WeightSubset& vanishing);

nlohmann::json to_json(const WeightedLieAlgebra& alg, const FixedPointRecord& r);
nlohmann::json to_json(const WeightedLieAlgebra& alg, const BoundaryComponent& c);

/// Checks for the fixed-point and boundary enumerations.
report::VerificationReport fixed_points_report(const WeightedLieAlgebra& alg);
report::VerificationReport boundary_report(const WeightedLieAlgebra& alg);

}  // namespace orbitvar::orbit
