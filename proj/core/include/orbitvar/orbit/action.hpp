#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "orbitvar/algebra/matrix.hpp"
#include "orbitvar/lie/algebra.hpp"
#include "orbitvar/util/random.hpp"

namespace orbitvar::orbit {

using alg::PolyMatrix;
using alg::QMatrix;
using alg::QVector;
using alg::Rational;
using alg::Subspace;
using lie::WeightedLieAlgebra;
using lie::WeightSubset;

/// exp(c ad x_weight), with c = scalar * z when formal.
struct WordFactor {
  std::size_t weight = 0;
  Rational scalar{1};
  bool formal = false;
};

/// Product g_1 g_2 ... g_k of factors; g_k acts first.
using Word = std::vector<WordFactor>;

/// Subspace whose basis depends polynomially on one parameter z.
struct CurveSubspace {
  PolyMatrix basis;

  Subspace at(const Rational& z) const;
  /// Limit as z -> infinity in the Grassmannian.
  Subspace limit() const;
};

/// Matrix of the group element for a word without formal factors.
QMatrix group_matrix(const WeightedLieAlgebra& alg, const Word& word);
PolyMatrix group_matrix_formal(const WeightedLieAlgebra& alg, const Word& word);

/// g.V for a word without formal factors. Throws InvalidArgument otherwise.
Subspace act(const WeightedLieAlgebra& alg, const Word& word, const Subspace& v);
/// g(z).V as a curve; constant factors are allowed.
CurveSubspace act_curve(const WeightedLieAlgebra& alg, const Word& word, const Subspace& v);
/// Word of the inverse element.
Word inverse(const Word& word);

/// exp(z ad x_alpha)(t) for finite z; V_alpha = t_alpha + a^alpha for nullopt.
Subspace theta_alpha(const WeightedLieAlgebra& alg, std::size_t alpha, const std::optional<Rational>& z);
/// t_alpha + a^alpha.
Subspace v_alpha(const WeightedLieAlgebra& alg, std::size_t alpha);
/// t_i / alpha(t_i) for the first i with alpha(t_i) != 0.
QVector h_alpha(const WeightedLieAlgebra& alg, std::size_t alpha);

bool is_commutative(const WeightedLieAlgebra& alg, const Subspace& v);
/// Commutative and closed under the bracket.
bool is_commutative_subalgebra(const WeightedLieAlgebra& alg, const Subspace& v);
bool is_torus_stable(const WeightedLieAlgebra& alg, const Subspace& v);
/// Weights whose weight vector lies in V.
WeightSubset graded_weights(const WeightedLieAlgebra& alg, const Subspace& v);

/// {y : [y, V] in V}.
Subspace normalizer(const WeightedLieAlgebra& alg, const Subspace& v);

/// Depth of x_i in the lower central series of a (1 for weights outside [a, a]).
std::vector<std::size_t> weight_depths(const WeightedLieAlgebra& alg);

/// Weight order used by samplers: coordinate sum, then lexicographic.
WeightSubset height_order(const WeightedLieAlgebra& alg);

/// Random word with one factor per weight in height order, scalars in
/// [-bound, bound].
Word sample_word(const WeightedLieAlgebra& alg, util::Rng& rng, long bound = 3);

nlohmann::json to_json(const Subspace& v);
nlohmann::json to_json(const PolyMatrix& m);
nlohmann::json to_json(const WeightedLieAlgebra& alg, const Word& word);

}  // namespace orbitvar::orbit
