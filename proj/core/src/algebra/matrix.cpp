#include "orbitvar/algebra/matrix.hpp"

#include <sstream>

namespace orbitvar::alg {

RrefResult rref(const QMatrix& m) {
  QMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t best = a.rows();
    for (std::size_t i = r; i < a.rows(); ++i) {
      if (a(i, c).is_zero()) continue;
      if (best == a.rows() || mpz_cmpabs(a(i, c).raw().get_num_mpz_t(), a(best, c).raw().get_num_mpz_t()) > 0) best = i;
    }
    if (best == a.rows()) continue;
    a.swap_rows(r, best);
    Rational inv = a(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) {
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

QMatrix row_basis(const QMatrix& m) {
  auto [a, pivots] = rref(m);
  QMatrix b(pivots.size(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) b(i, j) = a(i, j);
  return b;
}

QMatrix kernel(const QMatrix& m) {
  auto [a, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  QMatrix k(0, m.cols());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector v(m.cols());
    v[f] = Rational(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, f);
    k.append_row(v);
  }
  return row_basis(k);
}

std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length mismatch");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto [r, pivots] = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  QVector x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r(i, a.cols());
  return x;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Rational(1);
  }
  auto [r, pivots] = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

Rational determinant(const QMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  QMatrix a = m;
  std::size_t n = a.rows();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      a.swap_rows(p, c);
      det = -det;
    }
    det *= a(c, c);
    Rational inv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      Rational f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

UPoly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return UPoly(1);
  PolyMatrix a = m;
  UPoly prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return {};
    if (p != k) {
      a.swap_rows(p, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)).exact_div(prev);
      }
      a(i, k) = UPoly();
    }
    prev = a(k, k);
  }
  UPoly d = a(n - 1, n - 1);
  return negate ? -d : d;
}

QVector multiply(const QMatrix& m, const QVector& v) {
  if (v.size() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
  QVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero() && !v[j].is_zero()) out[i] += m(i, j) * v[j];
    }
  return out;
}

PolyMatrix to_poly(const QMatrix& m) {
  PolyMatrix p(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) p(i, j) = UPoly(m(i, j));
  return p;
}

QMatrix evaluate(const PolyMatrix& m, const Rational& z) {
  QMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = m(i, j).eval(z);
  return q;
}

UPoly characteristic_polynomial(const QMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "characteristic polynomial of non-square matrix");
  PolyMatrix p(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      p(i, j) = UPoly(-m(i, j));
      if (i == j) p(i, j) += UPoly::variable();
    }
  return determinant(p);
}

QMatrix evaluate(const UPoly& p, const QMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "polynomial of non-square matrix");
  QMatrix acc(m.rows(), m.cols());
  const QMatrix id = QMatrix::identity(m.rows());
  for (int k = p.degree(); k >= 0; --k) acc = acc * m + id * p.coeff(k);
  return acc;
}

std::string to_string(const QMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m(i, j);
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace orbitvar::alg
