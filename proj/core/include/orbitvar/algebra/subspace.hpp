#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "orbitvar/algebra/matrix.hpp"

namespace orbitvar::alg {

/// Linear subspace of Q^N held as the nonzero rows of its reduced row-echelon
/// basis, so equal subspaces compare equal field by field.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of Q^ambient.
  explicit Subspace(std::size_t ambient);

  static Subspace span(const QMatrix& rows);
  static Subspace span(std::size_t ambient, const std::vector<QVector>& vectors);
  static Subspace whole(std::size_t ambient);
  /// Span of the standard basis vectors e_i, i in indices.
  static Subspace coordinate(std::size_t ambient, const std::vector<std::size_t>& indices);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const QMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  QVector vector(std::size_t i) const { return basis_.row_vector(i); }

  bool contains(const QVector& v) const;
  bool contains(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// {w : <w, v> = 0 for all v in V} under the standard pairing.
  Subspace annihilator() const;
  /// Image under the linear map with matrix g acting on column vectors.
  Subspace image(const QMatrix& g) const;

  /// Coordinates of v in the canonical basis; throws InvalidArgument when v
  /// is not in the subspace.
  QVector coordinates(const QVector& v) const;

  std::string to_string() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  QMatrix basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace orbitvar::alg
