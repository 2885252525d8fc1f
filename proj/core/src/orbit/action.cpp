#include "orbitvar/orbit/action.hpp"

#include <algorithm>

#include "orbitvar/algebra/exp.hpp"
#include "orbitvar/algebra/plucker.hpp"
#include "orbitvar/error.hpp"
#include "orbitvar/lie/analysis.hpp"

namespace orbitvar::orbit {

Subspace CurveSubspace::at(const Rational& z) const { return Subspace::span(alg::evaluate(basis, z)); }

Subspace CurveSubspace::limit() const { return alg::curve_limit(basis); }

QMatrix group_matrix(const WeightedLieAlgebra& alg, const Word& word) {
  QMatrix g = QMatrix::identity(alg.dim());
  for (const auto& f : word) {
    if (f.formal) throw Error(ErrorCode::InvalidArgument, "word has a formal factor");
    if (f.weight >= alg.n()) throw Error(ErrorCode::InvalidArgument, "weight index out of range");
    g = g * alg::exp_nilpotent(alg.ad(alg.x(f.weight)), f.scalar);
  }
  return g;
}

PolyMatrix group_matrix_formal(const WeightedLieAlgebra& alg, const Word& word) {
  PolyMatrix g = alg::to_poly(QMatrix::identity(alg.dim()));
  for (const auto& f : word) {
    if (f.weight >= alg.n()) throw Error(ErrorCode::InvalidArgument, "weight index out of range");
    QMatrix ad = alg.ad(alg.x(f.weight));
    g = g * (f.formal ? alg::exp_nilpotent_formal(ad, f.scalar) : alg::to_poly(alg::exp_nilpotent(ad, f.scalar)));
  }
  return g;
}

Subspace act(const WeightedLieAlgebra& alg, const Word& word, const Subspace& v) {
  return v.image(group_matrix(alg, word));
}

CurveSubspace act_curve(const WeightedLieAlgebra& alg, const Word& word, const Subspace& v) {
  return {alg::to_poly(v.basis()) * group_matrix_formal(alg, word).transpose()};
}

Word inverse(const Word& word) {
  Word inv(word.rbegin(), word.rend());
  for (auto& f : inv) f.scalar = -f.scalar;
  return inv;
}

Subspace v_alpha(const WeightedLieAlgebra& alg, std::size_t alpha) {
  return alg.embed_torus(lie::torus_kernel(alg, {alpha})).sum(alg.a_span({alpha}));
}

Subspace theta_alpha(const WeightedLieAlgebra& alg, std::size_t alpha, const std::optional<Rational>& z) {
  if (alpha >= alg.n()) throw Error(ErrorCode::InvalidArgument, "weight index out of range");
  if (z) return act(alg, {{alpha, *z, false}}, alg.torus());
  return act_curve(alg, {{alpha, Rational(1), true}}, alg.torus()).limit();
}

QVector h_alpha(const WeightedLieAlgebra& alg, std::size_t alpha) {
  const QVector& w = alg.weight(alpha);
  QVector h(alg.dim());
  for (std::size_t i = 0; i < alg.d(); ++i) {
    if (!w[i].is_zero()) {
      h[i] = w[i].inverse();
      return h;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "zero weight");
}

bool is_commutative(const WeightedLieAlgebra& alg, const Subspace& v) {
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t j = i + 1; j < v.dim(); ++j) {
      for (const auto& c : alg.bracket(v.vector(i), v.vector(j))) {
        if (!c.is_zero()) return false;
      }
    }
  return true;
}

bool is_commutative_subalgebra(const WeightedLieAlgebra& alg, const Subspace& v) {
  return is_commutative(alg, v) && lie::is_subalgebra(alg, v);
}

bool is_torus_stable(const WeightedLieAlgebra& alg, const Subspace& v) {
  for (std::size_t i = 0; i < alg.d(); ++i) {
    QMatrix ad = alg.ad(alg.t(i));
    for (std::size_t r = 0; r < v.dim(); ++r) {
      if (!v.contains(alg::multiply(ad, v.vector(r)))) return false;
    }
  }
  return true;
}

WeightSubset graded_weights(const WeightedLieAlgebra& alg, const Subspace& v) {
  WeightSubset out;
  for (std::size_t i = 0; i < alg.n(); ++i) {
    if (v.contains(alg.x(i))) out.push_back(i);
  }
  return out;
}

Subspace normalizer(const WeightedLieAlgebra& alg, const Subspace& v) {
  const std::size_t dim = alg.dim();
  Subspace ann = v.annihilator();
  QMatrix rows(0, dim);
  for (std::size_t i = 0; i < v.dim(); ++i) {
    // [y, v_i] = -ad(v_i) y must be annihilated by ann
    QMatrix c = ann.basis() * alg.ad(v.vector(i));
    for (std::size_t r = 0; r < c.rows(); ++r) rows.append_row(c.row(r));
  }
  if (rows.rows() == 0) return Subspace::whole(dim);
  return Subspace::span(alg::kernel(rows));
}

std::vector<std::size_t> weight_depths(const WeightedLieAlgebra& alg) {
  const std::size_t n = alg.n();
  std::vector<std::size_t> depth(n, 1);
  // C^1 = a, C^{k+1} = [a, C^k]; weight spaces are lines so each C^k is graded
  std::vector<bool> in(n, true);
  for (std::size_t k = 2; k <= n + 1; ++k) {
    std::vector<bool> next(n, false);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (!in[b]) continue;
        const QVector& br = alg.bracket_basis(a, b);
        for (std::size_t c = 0; c < n; ++c) {
          if (!br[c].is_zero()) next[c] = true;
        }
      }
    bool any = false;
    for (std::size_t c = 0; c < n; ++c) {
      if (next[c]) {
        depth[c] = k;
        any = true;
      }
    }
    if (!any) break;
    in = next;
  }
  return depth;
}

WeightSubset height_order(const WeightedLieAlgebra& alg) {
  WeightSubset order = alg.all_weights();
  auto height = [&](std::size_t i) {
    Rational s;
    for (const auto& c : alg.weight(i)) s += c;
    return s;
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return alg.weight(a) < alg.weight(b);
  });
  return order;
}

Word sample_word(const WeightedLieAlgebra& alg, util::Rng& rng, long bound) {
  Word w;
  for (auto i : height_order(alg)) w.push_back({i, Rational(rng.uniform_int(-bound, bound)), false});
  return w;
}

nlohmann::json to_json(const Subspace& v) {
  nlohmann::json basis = nlohmann::json::array();
  for (std::size_t r = 0; r < v.dim(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& c : v.basis().row(r)) row.push_back(c.to_string());
    basis.push_back(row);
  }
  return {{"dim", v.dim()}, {"basis", basis}};
}

nlohmann::json to_json(const PolyMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& c : m.row(r)) row.push_back(c.to_string("z"));
    rows.push_back(row);
  }
  return rows;
}

nlohmann::json to_json(const WeightedLieAlgebra& alg, const Word& word) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& f : word) {
    out.push_back({{"weight", alg.names()[f.weight]},
                   {"scalar", f.scalar.to_string()},
                   {"formal", f.formal}});
  }
  return out;
}

}  // namespace orbitvar::orbit
