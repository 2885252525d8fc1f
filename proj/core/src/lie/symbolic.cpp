#include "orbitvar/lie/symbolic.hpp"

#include "orbitvar/error.hpp"

namespace orbitvar::lie {

using alg::Polynomial;

PolyElement symbolic_bracket(const WeightedLieAlgebra& alg, const PolyElement& u, const PolyElement& v) {
  const std::size_t d = alg.d(), n = alg.n();
  if (u.size() != alg.dim() || v.size() != alg.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "element length mismatch");
  }
  const std::size_t nvars = u.empty() ? 0 : u[0].nvars();
  PolyElement out(alg.dim(), Polynomial(nvars));
  auto pair = [&](const QVector& w, const PolyElement& e) {
    Polynomial s(nvars);
    for (std::size_t i = 0; i < d; ++i) {
      if (!w[i].is_zero() && !e[i].is_zero()) s += e[i] * w[i];
    }
    return s;
  };
  for (std::size_t b = 0; b < n; ++b) {
    const Polynomial& ub = u[d + b];
    const Polynomial& vb = v[d + b];
    if (!vb.is_zero()) out[d + b] += pair(alg.weight(b), u) * vb;
    if (!ub.is_zero()) out[d + b] -= pair(alg.weight(b), v) * ub;
    if (ub.is_zero()) continue;
    for (std::size_t a = 0; a < n; ++a) {
      const Polynomial& va = v[d + a];
      if (va.is_zero()) continue;
      const QVector& br = alg.bracket_basis(b, a);
      Polynomial prod;
      bool have = false;
      for (std::size_t k = 0; k < n; ++k) {
        if (br[k].is_zero()) continue;
        if (!have) {
          prod = ub * va;
          have = true;
        }
        out[d + k] += prod * br[k];
      }
    }
  }
  return out;
}

PolyElement constant_element(const QVector& v, std::size_t nvars) {
  PolyElement e;
  e.reserve(v.size());
  for (const auto& c : v) e.push_back(Polynomial::constant(nvars, c));
  return e;
}

}  // namespace orbitvar::lie
