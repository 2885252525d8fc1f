#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orbitvar/algebra/polynomial.hpp"
#include "orbitvar/lie/algebra.hpp"
#include "orbitvar/report/report.hpp"

namespace orbitvar::lie {

/// d polynomial maps r -> r. maps[i][k] is coordinate k of the i-th map as a
/// polynomial in the coordinates of r (t1..td, then the basis names).
struct CentralizerMapFamily {
  std::string name;
  std::vector<std::vector<alg::Polynomial>> maps;
};

/// Variable names for polynomial functions on r.
std::vector<std::string> coordinate_names(const WeightedLieAlgebra& alg);

/// x -> x. Meaningful when d = 1.
CentralizerMapFamily identity_family(const WeightedLieAlgebra& alg);

/// For the coordinate-weight abelian algebra: x -> s_i t_i + a_i x_i, where
/// s_i and a_i are the t_i and x_i coordinates of x.
CentralizerMapFamily abelian_family(const WeightedLieAlgebra& alg);

/// Symbolic commutation check, sampled independence at seeded regular
/// points, and for dim r <= 4 a radical-membership proof that the maps stay
/// independent on the whole regular set. Throws ArityMismatch.
report::VerificationReport verify_condition4(const WeightedLieAlgebra& alg, const CentralizerMapFamily& fam,
                                             std::uint64_t seed = 0, std::size_t samples = 8);

}  // namespace orbitvar::lie
