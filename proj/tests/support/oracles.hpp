#pragma once

#include <cstdint>
#include <vector>

#include "orbitvar/algebra/matrix.hpp"
#include "orbitvar/algebra/plucker.hpp"
#include "orbitvar/algebra/subspace.hpp"
#include "orbitvar/lie/algebra.hpp"
#include "orbitvar/util/random.hpp"

// Reference computations that avoid the library routines they are compared
// against: cofactor expansion, explicit power series, bitmask enumeration.
namespace oracle {

using orbitvar::alg::PolyMatrix;
using orbitvar::alg::QMatrix;
using orbitvar::alg::QVector;
using orbitvar::alg::Rational;
using orbitvar::alg::Subspace;
using orbitvar::alg::UPoly;
using orbitvar::lie::WeightedLieAlgebra;
using orbitvar::lie::WeightSubset;

inline Rational laplace_det(const QMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return m(0, 0);
  Rational acc;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    QMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j) {
        if (j == c) continue;
        minor(i - 1, k++) = m(i, j);
      }
    Rational term = m(0, c) * laplace_det(minor);
    acc += (c % 2 == 0) ? term : -term;
  }
  return acc;
}

inline QMatrix random_matrix(orbitvar::util::Rng& rng, std::size_t rows, std::size_t cols, long bound = 5) {
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(rng.uniform_int(-bound, bound));
  return m;
}

// exp(z m) as a polynomial matrix, summing the series until the power vanishes.
inline PolyMatrix exp_series(const QMatrix& m) {
  const std::size_t n = m.rows();
  PolyMatrix out(n, n);
  QMatrix power = QMatrix::identity(n);
  Rational fact(1);
  for (int k = 0; !power.is_zero(); ++k) {
    if (k > 0) fact *= Rational(k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out(i, j) += UPoly::monomial(power(i, j) / fact, k);
    power = power * m;
  }
  return out;
}

// Ad-matrix of x on r, built straight from the structure constants.
inline QMatrix ad_matrix(const WeightedLieAlgebra& alg, const QVector& x) {
  QMatrix m(alg.dim(), alg.dim());
  for (std::size_t c = 0; c < alg.dim(); ++c) {
    QVector col = alg.bracket(x, alg.unit(c));
    for (std::size_t r = 0; r < alg.dim(); ++r) m(r, c) = col[r];
  }
  return m;
}

// Limit of exp(z ad x_alpha) t through Plucker coordinates.
inline Subspace theta_limit(const WeightedLieAlgebra& alg, std::size_t alpha) {
  PolyMatrix g = exp_series(ad_matrix(alg, alg.x(alpha)));
  PolyMatrix rows(alg.d(), alg.dim());
  for (std::size_t i = 0; i < alg.d(); ++i)
    for (std::size_t r = 0; r < alg.dim(); ++r) rows(i, r) = g(r, i);
  return orbitvar::alg::subspace_from_plucker(orbitvar::alg::plucker_limit(orbitvar::alg::plucker(rows)));
}

// ker alpha inside t, plus the line of x_alpha.
inline Subspace v_alpha(const WeightedLieAlgebra& alg, std::size_t alpha) {
  std::vector<QVector> vecs;
  const QVector& w = alg.weight(alpha);
  std::size_t pivot = 0;
  while (w[pivot].is_zero()) ++pivot;
  for (std::size_t j = 0; j < alg.d(); ++j) {
    if (j == pivot) continue;
    QVector v(alg.dim());
    v[j] = Rational(1);
    v[pivot] = -w[j] / w[pivot];
    vecs.push_back(v);
  }
  vecs.push_back(alg.x(alpha));
  return Subspace::span(alg.dim(), vecs);
}

// Dimension of the a-orbit through V: rank of X -> (v -> [X, v] mod V).
inline std::size_t a_orbit_dim(const WeightedLieAlgebra& alg, const Subspace& v) {
  Subspace ann = v.annihilator();
  QMatrix tangent(alg.n(), v.dim() * ann.dim());
  for (std::size_t i = 0; i < alg.n(); ++i)
    for (std::size_t a = 0; a < v.dim(); ++a) {
      QVector b = alg.bracket(alg.x(i), v.vector(a));
      for (std::size_t k = 0; k < ann.dim(); ++k) {
        Rational s;
        for (std::size_t r = 0; r < alg.dim(); ++r) s += ann.basis()(k, r) * b[r];
        tangent(i, a * ann.dim() + k) = s;
      }
    }
  return orbitvar::alg::rank(tangent);
}

// Every subset of weights, the empty one included, whose vectors pairwise
// commute and whose weights are independent, found by scanning all bitmasks.
inline std::vector<WeightSubset> fixed_point_subsets(const WeightedLieAlgebra& alg) {
  std::vector<WeightSubset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << alg.n()); ++mask) {
    WeightSubset s;
    for (std::size_t i = 0; i < alg.n(); ++i) {
      if (mask >> i & 1) s.push_back(i);
    }
    bool ok = true;
    for (std::size_t a = 0; a < s.size() && ok; ++a)
      for (std::size_t b = a + 1; b < s.size() && ok; ++b) ok = orbitvar::alg::is_zero(alg.bracket_basis(s[a], s[b]));
    if (ok && !s.empty()) {
      QMatrix w(s.size(), alg.d());
      for (std::size_t r = 0; r < s.size(); ++r)
        for (std::size_t c = 0; c < alg.d(); ++c) w(r, c) = alg.weight(s[r])[c];
      ok = orbitvar::alg::rank(w) == s.size();
    }
    if (ok) out.push_back(s);
  }
  return out;
}

}  // namespace oracle
