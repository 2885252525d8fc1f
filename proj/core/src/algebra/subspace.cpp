#include "orbitvar/algebra/subspace.hpp"

namespace orbitvar::alg {

Subspace::Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

Subspace Subspace::span(const QMatrix& rows) {
  Subspace s(rows.cols());
  auto [r, pivots] = rref(rows);
  s.basis_ = QMatrix(pivots.size(), rows.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < rows.cols(); ++j) s.basis_(i, j) = r(i, j);
  s.pivots_ = std::move(pivots);
  return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<QVector>& vectors) {
  QMatrix m(0, ambient);
  for (const auto& v : vectors) m.append_row(v);
  return span(m);
}

Subspace Subspace::whole(std::size_t ambient) { return span(QMatrix::identity(ambient)); }

Subspace Subspace::coordinate(std::size_t ambient, const std::vector<std::size_t>& indices) {
  QMatrix m(indices.size(), ambient);
  for (std::size_t i = 0; i < indices.size(); ++i) m(i, indices[i]) = Rational(1);
  return span(m);
}

bool Subspace::contains(const QVector& v) const {
  if (v.size() != ambient_) throw Error(ErrorCode::DimensionMismatch, "vector length differs from ambient dimension");
  QVector rest = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Rational c = rest[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (!basis_(i, j).is_zero()) rest[j] -= c * basis_(i, j);
    }
  }
  for (const auto& e : rest) {
    if (!e.is_zero()) return false;
  }
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.vector(i))) return false;
  }
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error(ErrorCode::DimensionMismatch, "ambient dimensions differ");
  QMatrix m = basis_;
  for (std::size_t i = 0; i < other.dim(); ++i) m.append_row(other.basis_.row(i));
  return span(m);
}

Subspace Subspace::annihilator() const {
  if (dim() == 0) return whole(ambient_);
  return span(kernel(basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error(ErrorCode::DimensionMismatch, "ambient dimensions differ");
  return annihilator().sum(other.annihilator()).annihilator();
}

Subspace Subspace::image(const QMatrix& g) const {
  if (g.cols() != ambient_) throw Error(ErrorCode::DimensionMismatch, "map does not act on this space");
  if (dim() == 0) return Subspace(g.rows());
  return span(basis_ * g.transpose());
}

QVector Subspace::coordinates(const QVector& v) const {
  if (!contains(v)) throw Error(ErrorCode::InvalidArgument, "vector not in subspace");
  QVector c(dim());
  for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

std::string Subspace::to_string() const { return alg::to_string(basis_); }

}  // namespace orbitvar::alg
