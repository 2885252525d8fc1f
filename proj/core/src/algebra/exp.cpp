#include "orbitvar/algebra/exp.hpp"

#include <algorithm>

namespace orbitvar::alg {

std::size_t nilpotency_index(const QMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "exponential of non-square matrix");
  if (m.is_zero()) return 1;
  QMatrix p = m;
  for (std::size_t k = 2; k <= std::max<std::size_t>(m.rows(), 1); ++k) {
    p = p * m;
    if (p.is_zero()) return k;
  }
  throw Error(ErrorCode::NotNilpotent, "matrix is not nilpotent");
}

bool is_nilpotent(const QMatrix& m) {
  try {
    nilpotency_index(m);
    return true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotNilpotent) throw;
    return false;
  }
}

QMatrix exp_nilpotent(const QMatrix& m, const Rational& z) {
  std::size_t k = nilpotency_index(m);
  QMatrix result = QMatrix::identity(m.rows());
  QMatrix term = QMatrix::identity(m.rows());
  for (std::size_t j = 1; j < k; ++j) {
    term = term * m;
    term *= z / Rational(static_cast<long>(j));
    result += term;
  }
  return result;
}

PolyMatrix exp_nilpotent_formal(const QMatrix& m, const Rational& scale) {
  std::size_t k = nilpotency_index(m);
  std::size_t n = m.rows();
  PolyMatrix result = to_poly(QMatrix::identity(n));
  QMatrix power = QMatrix::identity(n);
  Rational c(1);
  for (std::size_t j = 1; j < k; ++j) {
    power = power * m;
    c *= scale / Rational(static_cast<long>(j));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s) {
        if (!power(r, s).is_zero()) result(r, s) += UPoly::monomial(c * power(r, s), static_cast<int>(j));
      }
  }
  return result;
}

}  // namespace orbitvar::alg
