#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "orbitvar/lie/algebra.hpp"
#include "orbitvar/report/report.hpp"

namespace orbitvar::lie {

struct ValidationResult {
  report::VerificationReport report;
  bool passed = false;
  /// "C" when in the faithful category, "C'" when only the weaker axioms hold,
  /// "none" when some check failed.
  std::string category;
};

ValidationResult validate(const WeightedLieAlgebra& alg);

struct CenterData {
  Subspace z;  // inside t (ambient d)
  std::size_t d_sharp = 0;
};

CenterData center(const WeightedLieAlgebra& alg);

/// Kernel of ad x on r.
Subspace centralizer(const WeightedLieAlgebra& alg, const QVector& x);

/// Weights vanishing at s in t.
WeightSubset lambda_of(const WeightedLieAlgebra& alg, const QVector& s);

/// Common kernel in t (ambient d) of the weights in the subset; all of t for
/// the empty subset.
Subspace torus_kernel(const WeightedLieAlgebra& alg, const WeightSubset& s);

/// Weights lying in the span of the subset.
WeightSubset closure(const WeightedLieAlgebra& alg, const WeightSubset& s);
bool is_complete(const WeightedLieAlgebra& alg, const WeightSubset& s);
/// All complete subsets, ordered by size then lexicographically.
std::vector<WeightSubset> complete_subsets(const WeightedLieAlgebra& alg);

struct Restriction {
  WeightedLieAlgebra algebra;
  /// Set when the subset is empty; algebra then has t_dim 0 and no basis.
  bool zero_algebra = false;
  /// Indices i of the t_i spanning the chosen complement of torus_kernel.
  std::vector<std::size_t> torus_indices;
  /// Original weight index of each basis vector of the restricted algebra.
  WeightSubset weights;
};

/// a_S over the complement of t_S spanned by the t_i off the pivot columns of
/// rref(t_S). Throws NotComplete.
Restriction restrict(const WeightedLieAlgebra& alg, const WeightSubset& s);

struct JordanParts {
  QVector semisimple;
  QVector nilpotent;
};

/// Additive Jordan decomposition through the adjoint representation.
/// Throws NotFaithful when the center is nonzero.
JordanParts jordan_decompose(const WeightedLieAlgebra& alg, const QVector& x);

/// True when the matrix is diagonalizable over an extension of Q.
bool is_semisimple_matrix(const QMatrix& m);

/// dim r^x = d.
bool regular_test(const WeightedLieAlgebra& alg, const QVector& x);

/// Lower central series dimensions of a, ending in 0 when nilpotent.
std::vector<std::size_t> lower_central_series(const WeightedLieAlgebra& alg);

/// Subspace is closed under the bracket.
bool is_subalgebra(const WeightedLieAlgebra& alg, const Subspace& v);
bool is_ideal(const WeightedLieAlgebra& alg, const Subspace& v);

}  // namespace orbitvar::lie
