#pragma once

#include <cstddef>
#include <vector>

#include "orbitvar/algebra/matrix.hpp"
#include "orbitvar/algebra/subspace.hpp"

namespace orbitvar::alg {

/// Plucker coordinates of a k-dimensional subspace of Q^N, one entry per
/// sorted k-subset of columns in lexicographic order.
template <class T>
struct PluckerVectorT {
  std::size_t ambient_dim = 0;
  std::size_t sub_dim = 0;
  std::vector<T> coords;
};

using PluckerVector = PluckerVectorT<Rational>;
using PolyPluckerVector = PluckerVectorT<UPoly>;

/// All sorted k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> lex_subsets(std::size_t n, std::size_t k);

/// Position of a sorted subset in lex_subsets(n, k).
std::size_t subset_rank(std::size_t n, const std::vector<std::size_t>& subset);

/// Maximal minors of a full-rank k x N matrix. Throws RankDeficient.
PluckerVector plucker(const QMatrix& m);
PluckerVector plucker(const Subspace& v);

/// Maximal minors of a polynomial matrix; throws RankDeficient when every
/// minor vanishes identically.
PolyPluckerVector plucker(const PolyMatrix& m);

/// Clears denominators, divides by the content and makes the first nonzero
/// coordinate positive. Throws AllZero on the zero vector.
PluckerVector normalize_projective(PluckerVector p);

/// Leading (top-degree) coefficients: the limit of the curve as z -> infinity,
/// normalized. Throws AllZero.
PluckerVector plucker_limit(const PolyPluckerVector& p);

/// Value of the curve at a finite parameter, normalized. Throws AllZero when
/// the matrix drops rank there.
PluckerVector plucker_at(const PolyPluckerVector& p, const Rational& z);

/// Subspace whose Plucker vector is p. p must be decomposable.
Subspace subspace_from_plucker(const PluckerVector& p);

/// Checks every three-term-style Grassmann-Plucker quadric.
bool satisfies_plucker_relations(const PluckerVector& p);

/// Limit subspace of the row space of m as z -> infinity.
Subspace curve_limit(const PolyMatrix& m);

}  // namespace orbitvar::alg
