#include "orbitvar/lie/analysis.hpp"

#include <algorithm>
#include <set>

#include "orbitvar/error.hpp"

namespace orbitvar::lie {

using report::Verdict;

namespace {

bool all_zero(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); });
}

QVector add(const QVector& a, const QVector& b) {
  QVector s = a;
  for (std::size_t i = 0; i < s.size(); ++i) s[i] += b[i];
  return s;
}

bool proportional(const QVector& a, const QVector& b) {
  QMatrix m(2, a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    m(0, i) = a[i];
    m(1, i) = b[i];
  }
  return alg::rank(m) < 2;
}

nlohmann::json pair_witness(const WeightedLieAlgebra& a, std::size_t i, std::size_t j) {
  return {{"pair", {a.names()[i], a.names()[j]}}};
}

}  // namespace

std::vector<std::size_t> lower_central_series(const WeightedLieAlgebra& alg) {
  std::vector<std::size_t> dims;
  std::vector<QVector> current;
  for (std::size_t i = 0; i < alg.n(); ++i) current.push_back(alg.x(i));
  Subspace c = Subspace::span(alg.dim(), current);
  dims.push_back(c.dim());
  while (c.dim() > 0) {
    std::vector<QVector> next;
    for (std::size_t i = 0; i < alg.n(); ++i)
      for (std::size_t k = 0; k < c.dim(); ++k) next.push_back(alg.bracket(alg.x(i), c.vector(k)));
    Subspace nc = Subspace::span(alg.dim(), next);
    if (nc.dim() == c.dim()) break;
    c = nc;
    dims.push_back(c.dim());
  }
  return dims;
}

ValidationResult validate(const WeightedLieAlgebra& alg) {
  ValidationResult res{report::VerificationReport("validate"), false, "none"};
  auto& rep = res.report;
  const std::size_t n = alg.n();

  nlohmann::json bad = nlohmann::json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const QVector& a = alg.bracket_basis(i, j);
      const QVector& b = alg.bracket_basis(j, i);
      bool ok = true;
      for (std::size_t k = 0; k < n; ++k) ok = ok && a[k] == -b[k];
      if (!ok) bad.push_back(pair_witness(alg, i, j));
    }
  rep.add("antisymmetry", bad.empty() ? Verdict::Proven : Verdict::Refuted, "the bracket is alternating",
          bad.empty() ? nlohmann::json::object() : nlohmann::json{{"violations", bad}});

  bad = nlohmann::json::array();
  const std::size_t dim = alg.dim();
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = a + 1; b < dim; ++b)
      for (std::size_t c = b + 1; c < dim; ++c) {
        QVector ea = alg.unit(a), eb = alg.unit(b), ec = alg.unit(c);
        QVector s = alg.bracket(ea, alg.bracket(eb, ec));
        s = add(s, alg.bracket(eb, alg.bracket(ec, ea)));
        s = add(s, alg.bracket(ec, alg.bracket(ea, eb)));
        if (!all_zero(s)) {
          bad.push_back({{"triple", {alg.format_element(ea), alg.format_element(eb), alg.format_element(ec)}}});
        }
      }
  rep.add("jacobi", bad.empty() ? Verdict::Proven : Verdict::Refuted, "the Jacobi identity holds on t + a",
          bad.empty() ? nlohmann::json::object() : nlohmann::json{{"violations", bad}});

  bad = nlohmann::json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const QVector& v = alg.bracket_basis(i, j);
      QVector target = add(alg.weight(i), alg.weight(j));
      for (std::size_t k = 0; k < n; ++k) {
        if (!v[k].is_zero() && alg.weight(k) != target) {
          bad.push_back(pair_witness(alg, i, j));
          break;
        }
      }
    }
  rep.add("grading", bad.empty() ? Verdict::Proven : Verdict::Refuted,
          "brackets of weight vectors land in the sum weight",
          bad.empty() ? nlohmann::json::object() : nlohmann::json{{"violations", bad}});

  auto lcs = lower_central_series(alg);
  bool nilpotent = lcs.back() == 0;
  rep.add("nilpotency", nilpotent ? Verdict::Proven : Verdict::Refuted, "the lower central series of a reaches 0",
          {{"dimensions", lcs}});

  bad = nlohmann::json::array();
  for (std::size_t i = 0; i < n; ++i) {
    if (all_zero(alg.weight(i))) bad.push_back(alg.names()[i]);
  }
  bool c1 = bad.empty();
  rep.add("condition-1-nonzero-weights", c1 ? Verdict::Proven : Verdict::Refuted, "0 is not a weight",
          c1 ? nlohmann::json::object() : nlohmann::json{{"zero_weights", bad}});

  bad = nlohmann::json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (alg.weight(i) == alg.weight(j)) bad.push_back(pair_witness(alg, i, j));
    }
  bool c2 = bad.empty();
  rep.add("condition-2-multiplicity-one", c2 ? Verdict::Proven : Verdict::Refuted, "every weight space is a line",
          c2 ? nlohmann::json::object() : nlohmann::json{{"repeated", bad}});

  bad = nlohmann::json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (alg.weight(i) != alg.weight(j) && !all_zero(alg.weight(i)) && !all_zero(alg.weight(j)) &&
          proportional(alg.weight(i), alg.weight(j))) {
        bad.push_back(pair_witness(alg, i, j));
      }
    }
  bool c3 = bad.empty();
  rep.add("condition-3-non-proportional", c3 ? Verdict::Proven : Verdict::Refuted,
          "distinct weights are not proportional",
          c3 ? nlohmann::json::object() : nlohmann::json{{"proportional", bad}});

  res.passed = !rep.refuted();
  CenterData z = center(alg);
  if (res.passed) res.category = z.z.dim() == 0 ? "C" : "C'";
  rep.summary()["category"] = res.category;
  rep.summary()["d"] = alg.d();
  rep.summary()["n"] = alg.n();
  rep.summary()["d_sharp"] = z.d_sharp;
  rep.summary()["center_dim"] = z.z.dim();
  return res;
}

CenterData center(const WeightedLieAlgebra& alg) {
  QMatrix w = alg.weight_matrix(alg.all_weights());
  CenterData c;
  c.d_sharp = alg::rank(w);
  c.z = torus_kernel(alg, alg.all_weights());
  return c;
}

Subspace centralizer(const WeightedLieAlgebra& alg, const QVector& x) {
  return Subspace::span(alg::kernel(alg.ad(x)));
}

WeightSubset lambda_of(const WeightedLieAlgebra& alg, const QVector& s) {
  WeightSubset out;
  for (std::size_t i = 0; i < alg.n(); ++i) {
    if (alg.pair(alg.weight(i), s).is_zero()) out.push_back(i);
  }
  return out;
}

Subspace torus_kernel(const WeightedLieAlgebra& alg, const WeightSubset& s) {
  if (s.empty()) return Subspace::whole(alg.d());
  return Subspace::span(alg.weight_matrix(s)).annihilator();
}

WeightSubset closure(const WeightedLieAlgebra& alg, const WeightSubset& s) {
  Subspace span = s.empty() ? Subspace(alg.d()) : Subspace::span(alg.weight_matrix(s));
  WeightSubset out;
  for (std::size_t i = 0; i < alg.n(); ++i) {
    if (span.contains(alg.weight(i))) out.push_back(i);
  }
  return out;
}

bool is_complete(const WeightedLieAlgebra& alg, const WeightSubset& s) {
  WeightSubset sorted = s;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return closure(alg, sorted) == sorted;
}

std::vector<WeightSubset> complete_subsets(const WeightedLieAlgebra& alg) {
  std::set<WeightSubset> seen;
  std::vector<WeightSubset> frontier{closure(alg, {})};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<WeightSubset> next;
    for (const auto& s : frontier)
      for (std::size_t i = 0; i < alg.n(); ++i) {
        if (std::binary_search(s.begin(), s.end(), i)) continue;
        WeightSubset grown = s;
        grown.push_back(i);
        grown = closure(alg, grown);
        if (seen.insert(grown).second) next.push_back(grown);
      }
    frontier = std::move(next);
  }
  std::vector<WeightSubset> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [](const WeightSubset& a, const WeightSubset& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

Restriction restrict(const WeightedLieAlgebra& alg, const WeightSubset& s) {
  WeightSubset sorted = s;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (!is_complete(alg, sorted)) throw Error(ErrorCode::NotComplete, "weight subset is not complete");
  Restriction r;
  r.weights = sorted;
  if (sorted.empty()) {
    r.zero_algebra = true;
    r.algebra = WeightedLieAlgebra(0, {}, {});
    return r;
  }
  Subspace tk = torus_kernel(alg, sorted);
  std::vector<bool> pivot(alg.d(), false);
  for (auto p : tk.pivots()) pivot[p] = true;
  for (std::size_t i = 0; i < alg.d(); ++i) {
    if (!pivot[i]) r.torus_indices.push_back(i);
  }
  std::vector<std::string> names;
  std::vector<QVector> weights;
  for (auto i : sorted) {
    names.push_back(alg.names()[i]);
    QVector w;
    for (auto t : r.torus_indices) w.push_back(alg.weight(i)[t]);
    weights.push_back(std::move(w));
  }
  r.algebra = WeightedLieAlgebra(r.torus_indices.size(), names, weights);
  for (std::size_t a = 0; a < sorted.size(); ++a)
    for (std::size_t b = 0; b < sorted.size(); ++b) {
      const QVector& v = alg.bracket_basis(sorted[a], sorted[b]);
      QVector value(sorted.size());
      bool any = false;
      for (std::size_t k = 0; k < sorted.size(); ++k) {
        value[k] = v[sorted[k]];
        any = any || !value[k].is_zero();
      }
      if (any) r.algebra.set_bracket(a, b, value);
    }
  return r;
}

bool is_semisimple_matrix(const QMatrix& m) {
  alg::UPoly f = alg::squarefree_part(alg::characteristic_polynomial(m));
  return alg::evaluate(f, m).is_zero();
}

JordanParts jordan_decompose(const WeightedLieAlgebra& alg, const QVector& x) {
  if (center(alg).z.dim() != 0) throw Error(ErrorCode::NotFaithful, "adjoint representation has a kernel");
  QMatrix a = alg.ad(x);
  alg::UPoly f = alg::squarefree_part(alg::characteristic_polynomial(a));
  alg::UPoly fp = f.derivative();
  QMatrix s = a;
  // Newton iteration on f; converges in O(log n) steps to the semisimple part.
  for (int iter = 0; iter < 64; ++iter) {
    QMatrix fs = alg::evaluate(f, s);
    if (fs.is_zero()) break;
    auto inv = alg::inverse(alg::evaluate(fp, s));
    if (!inv) throw Error(ErrorCode::InvalidArgument, "Newton step for the Jordan decomposition is singular");
    s = s - fs * *inv;
  }
  const std::size_t dim = alg.dim();
  QMatrix system(dim * dim, dim);
  QVector rhs(dim * dim);
  for (std::size_t k = 0; k < dim; ++k) {
    QMatrix ak = alg.ad(alg.unit(k));
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) system(i * dim + j, k) = ak(i, j);
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) rhs[i * dim + j] = s(i, j);
  auto y = alg::solve(system, rhs);
  if (!y) throw Error(ErrorCode::NotClosedUnderJordan, "semisimple part of ad x is not inner");
  JordanParts parts{*y, x};
  for (std::size_t k = 0; k < dim; ++k) parts.nilpotent[k] -= parts.semisimple[k];
  return parts;
}

bool regular_test(const WeightedLieAlgebra& alg, const QVector& x) { return centralizer(alg, x).dim() == alg.d(); }

bool is_subalgebra(const WeightedLieAlgebra& alg, const Subspace& v) {
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t j = i + 1; j < v.dim(); ++j) {
      if (!v.contains(alg.bracket(v.vector(i), v.vector(j)))) return false;
    }
  return true;
}

bool is_ideal(const WeightedLieAlgebra& alg, const Subspace& v) {
  for (std::size_t k = 0; k < alg.dim(); ++k)
    for (std::size_t i = 0; i < v.dim(); ++i) {
      if (!v.contains(alg.bracket(alg.unit(k), v.vector(i)))) return false;
    }
  return true;
}

}  // namespace orbitvar::lie
