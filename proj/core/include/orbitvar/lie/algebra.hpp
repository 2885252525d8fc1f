#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "orbitvar/algebra/matrix.hpp"
#include "orbitvar/algebra/subspace.hpp"

namespace orbitvar::lie {

using alg::QMatrix;
using alg::QVector;
using alg::Rational;
using alg::Subspace;

/// Indices into the nilpotent basis; each index stands for its weight.
using WeightSubset = std::vector<std::size_t>;

/// r = t + a with t abelian of dimension d acting on the nilpotent algebra a
/// through weights, one basis vector x_i of a per weight. Elements of r are
/// coordinate vectors of length d + n: t_1..t_d first, then x_1..x_n.
class WeightedLieAlgebra {
 public:
  WeightedLieAlgebra() = default;
  WeightedLieAlgebra(std::size_t t_dim, std::vector<std::string> names, std::vector<QVector> weights);

  /// Sets [x_left, x_right] = value (length n) and [x_right, x_left] = -value
  /// unless the reverse pair was set explicitly.
  void set_bracket(std::size_t left, std::size_t right, const QVector& value);

  std::size_t d() const { return d_; }
  std::size_t n() const { return names_.size(); }
  std::size_t dim() const { return d_ + names_.size(); }

  const std::vector<std::string>& names() const { return names_; }
  const std::vector<QVector>& weights() const { return weights_; }
  const QVector& weight(std::size_t i) const { return weights_[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::optional<std::size_t> weight_index(const QVector& w) const;

  /// [x_i, x_j] in a-coordinates.
  const QVector& bracket_basis(std::size_t i, std::size_t j) const { return table_[i * n() + j]; }
  /// Bracket on r.
  QVector bracket(const QVector& u, const QVector& v) const;
  /// Matrix of ad x acting on column coordinate vectors.
  QMatrix ad(const QVector& x) const;

  QVector zero() const { return QVector(dim()); }
  /// Basis vector of r: t_i for k < d, x_{k-d} otherwise.
  QVector unit(std::size_t k) const;
  QVector x(std::size_t i) const { return unit(d_ + i); }
  QVector t(std::size_t i) const { return unit(i); }
  /// alpha(t) for a weight alpha and t in t (given by its first d coordinates).
  Rational pair(const QVector& alpha, const QVector& element) const;

  /// Torus t as a subspace of r.
  Subspace torus() const;
  /// Span of x_i, i in the subset.
  Subspace a_span(const WeightSubset& s) const;
  /// Embeds a subspace of t (ambient d) into r.
  Subspace embed_torus(const Subspace& s) const;
  /// t-component of a subspace of r (its image under the projection to t).
  Subspace project_torus(const Subspace& v) const;

  /// Coordinates of the weights in this subset as rows of a |s| x d matrix.
  QMatrix weight_matrix(const WeightSubset& s) const;
  WeightSubset all_weights() const;

  /// Human label for an element, e.g. "t1 - 2*e12".
  std::string format_element(const QVector& v) const;
  std::string format_weight(std::size_t i) const;

  nlohmann::json to_json() const;
  static WeightedLieAlgebra from_json(const nlohmann::json& j);
  /// Parses the algebra JSON text; throws ParseError with field diagnostics.
  static WeightedLieAlgebra parse(std::string_view text);

  /// Same torus dimension, basis names, weights and bracket table.
  friend bool operator==(const WeightedLieAlgebra& a, const WeightedLieAlgebra& b) {
    return a.d_ == b.d_ && a.names_ == b.names_ && a.weights_ == b.weights_ && a.table_ == b.table_;
  }

 private:
  std::size_t d_ = 0;
  std::vector<std::string> names_;
  std::vector<QVector> weights_;
  std::vector<QVector> table_;
  std::vector<bool> explicit_;
};

}  // namespace orbitvar::lie
