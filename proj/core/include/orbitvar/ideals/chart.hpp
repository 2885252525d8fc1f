#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orbitvar/ideals/ideal.hpp"
#include "orbitvar/lie/algebra.hpp"
#include "orbitvar/report/report.hpp"

namespace orbitvar::ideals {

using lie::QMatrix;
using lie::QVector;
using lie::Subspace;
using lie::WeightedLieAlgebra;
using lie::WeightSubset;

/// Affine chart of X_R around a group-fixed V0 = a_S. A point phi of the chart
/// is the span of w_i = v_i + sum_j z_ij t_j + sum_k a_ik x_{gamma_k} with
/// v_i = x_{S_i}; the z coordinates use the standard basis t_1..t_d.
struct ChartIdeal {
  WeightedLieAlgebra algebra;
  Subspace v0;
  WeightSubset s;
  /// Complement weights gamma_1..gamma_m; V0 plus the first k of them is an
  /// ideal of a for every k.
  WeightSubset gammas;
  std::size_t d = 0;
  std::size_t m = 0;
  PolyRing ring;
  Ideal ideal;

  std::size_t z_var(std::size_t i, std::size_t j) const { return i * d + j; }
  std::size_t a_var(std::size_t i, std::size_t k) const { return d * d + i * m + k; }
};

/// Largest d^2 + d m accepted by chart_ideal.
inline constexpr std::size_t kMaxChartVariables = 24;

/// Throws NotFaithful when the center is nonzero and NotGroupFixed unless V0
/// is a d-dimensional commutative ideal of r spanned by weight vectors.
/// Throws ScaleExceeded past kMaxChartVariables.
ChartIdeal chart_ideal(const WeightedLieAlgebra& alg, const Subspace& v0);

/// sum_j z_ij gamma(t_j), i.e. gamma evaluated on the t-part of w_i.
Polynomial u_function(const ChartIdeal& chart, std::size_t i, const QVector& gamma);

/// Indices j with gamma(t'_j) != 0 for the basis t'_1..t'_d of t dual to the
/// weights of v_1..v_d.
std::vector<std::size_t> support_indices(const ChartIdeal& chart, const QVector& gamma);

/// Chart coordinates (z, a in variable order) of a subspace, or nullopt when
/// it does not project isomorphically onto V0.
std::optional<QVector> chart_coordinates(const ChartIdeal& chart, const Subspace& v);

/// u_{i,gamma_m} a_{j,m} - u_{j,gamma_m} a_{i,m} lies in the chart ideal.
report::VerificationReport verify_chart_relation(const ChartIdeal& chart);

/// Dimension of the chart ideal plus beta~_i for i in forms, in the ring with
/// fiber coordinates c_1..c_d appended; beta~_i = sum_k c_k z_ki.
std::size_t nilcone_dimension(const ChartIdeal& chart, const std::vector<std::size_t>& forms);
/// Same with all d forms.
std::size_t nilcone_dimension(const ChartIdeal& chart);

/// Dimension of the chart points lying in a (all z vanish).
std::size_t nilpotent_locus_dimension(const ChartIdeal& chart);

/// u_{i,gamma}, i in support_indices(gamma), as a sequence modulo the chart.
std::vector<Polynomial> u_sequence(const ChartIdeal& chart, const QVector& gamma);

/// Origin, dimension, the gamma_m relation and the regular sequences for every
/// weight.
report::VerificationReport chart_report(const ChartIdeal& chart);

/// Nilpotent cone dimension (all forms and proper subsets) and the bound on
/// the locus of chart points inside a.
report::VerificationReport nilcone_report(const ChartIdeal& chart);

nlohmann::json to_json(const ChartIdeal& chart);

}  // namespace orbitvar::ideals
