#include "orbitvar/algebra/plucker.hpp"

#include <algorithm>

namespace orbitvar::alg {

namespace {

template <class T>
Matrix<T> columns(const Matrix<T>& m, const std::vector<std::size_t>& cols) {
  Matrix<T> sub(m.rows(), cols.size());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) sub(r, c) = m(r, cols[c]);
  return sub;
}

// Coordinate of an arbitrary index sequence: zero on repeats, otherwise the
// sorted coordinate times the sign of the sorting permutation.
Rational signed_coord(const PluckerVector& p, std::vector<std::size_t> seq) {
  int sign = 1;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = 0; j + 1 < seq.size() - i; ++j) {
      if (seq[j] == seq[j + 1]) return Rational(0);
      if (seq[j] > seq[j + 1]) {
        std::swap(seq[j], seq[j + 1]);
        sign = -sign;
      }
    }
  for (std::size_t j = 0; j + 1 < seq.size(); ++j) {
    if (seq[j] == seq[j + 1]) return Rational(0);
  }
  Rational c = p.coords[subset_rank(p.ambient_dim, seq)];
  return sign < 0 ? -c : c;
}

mpz_class binom(std::size_t n, std::size_t k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

}  // namespace

std::vector<std::vector<std::size_t>> lex_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::size_t subset_rank(std::size_t n, const std::vector<std::size_t>& subset) {
  std::size_t k = subset.size();
  mpz_class rank = 0;
  std::size_t prev = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t v = prev; v < subset[i]; ++v) rank += binom(n - v - 1, k - i - 1);
    prev = subset[i] + 1;
  }
  return rank.get_ui();
}

PluckerVector plucker(const QMatrix& m) {
  if (rank(m) != m.rows()) throw Error(ErrorCode::RankDeficient, "basis matrix is not of full row rank");
  PluckerVector p{m.cols(), m.rows(), {}};
  for (const auto& s : lex_subsets(m.cols(), m.rows())) p.coords.push_back(determinant(columns(m, s)));
  return p;
}

PluckerVector plucker(const Subspace& v) { return plucker(v.basis()); }

PolyPluckerVector plucker(const PolyMatrix& m) {
  PolyPluckerVector p{m.cols(), m.rows(), {}};
  bool any = false;
  for (const auto& s : lex_subsets(m.cols(), m.rows())) {
    p.coords.push_back(determinant(columns(m, s)));
    any = any || !p.coords.back().is_zero();
  }
  if (!any) throw Error(ErrorCode::RankDeficient, "curve matrix has generic rank below its row count");
  return p;
}

PluckerVector normalize_projective(PluckerVector p) {
  mpz_class den = 1, content = 0;
  for (const auto& c : p.coords) {
    if (c.is_zero()) continue;
    mpz_class d = c.denominator();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  for (auto& c : p.coords) {
    c *= Rational(den);
    mpz_class num = c.numerator();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
  }
  if (content == 0) throw Error(ErrorCode::AllZero, "all Plucker coordinates vanish");
  Rational scale(mpz_class(1), content);
  auto first = std::find_if(p.coords.begin(), p.coords.end(), [](const Rational& c) { return !c.is_zero(); });
  if (first->sign() < 0) scale = -scale;
  for (auto& c : p.coords) c *= scale;
  return p;
}

PluckerVector plucker_limit(const PolyPluckerVector& p) {
  int top = -1;
  for (const auto& c : p.coords) top = std::max(top, c.degree());
  if (top < 0) throw Error(ErrorCode::AllZero, "all Plucker coordinates vanish");
  PluckerVector out{p.ambient_dim, p.sub_dim, {}};
  for (const auto& c : p.coords) out.coords.push_back(c.coeff(top));
  return normalize_projective(std::move(out));
}

PluckerVector plucker_at(const PolyPluckerVector& p, const Rational& z) {
  PluckerVector out{p.ambient_dim, p.sub_dim, {}};
  for (const auto& c : p.coords) out.coords.push_back(c.eval(z));
  return normalize_projective(std::move(out));
}

Subspace subspace_from_plucker(const PluckerVector& p) {
  auto subsets = lex_subsets(p.ambient_dim, p.sub_dim);
  std::size_t at = 0;
  while (at < p.coords.size() && p.coords[at].is_zero()) ++at;
  if (at == p.coords.size()) throw Error(ErrorCode::AllZero, "all Plucker coordinates vanish");
  const auto& base = subsets[at];
  QMatrix b(p.sub_dim, p.ambient_dim);
  for (std::size_t a = 0; a < p.sub_dim; ++a)
    for (std::size_t j = 0; j < p.ambient_dim; ++j) {
      auto seq = base;
      seq[a] = j;
      b(a, j) = signed_coord(p, seq);
    }
  return Subspace::span(b);
}

bool satisfies_plucker_relations(const PluckerVector& p) {
  std::size_t k = p.sub_dim, n = p.ambient_dim;
  if (k == 0 || k >= n) return true;
  for (const auto& i : lex_subsets(n, k - 1))
    for (const auto& j : lex_subsets(n, k + 1)) {
      Rational sum;
      for (std::size_t l = 0; l <= k; ++l) {
        auto left = i;
        left.push_back(j[l]);
        auto right = j;
        right.erase(right.begin() + static_cast<std::ptrdiff_t>(l));
        Rational term = signed_coord(p, left) * signed_coord(p, right);
        if (l % 2 == 1) term = -term;
        sum += term;
      }
      if (!sum.is_zero()) return false;
    }
  return true;
}

Subspace curve_limit(const PolyMatrix& m) { return subspace_from_plucker(plucker_limit(plucker(m))); }

}  // namespace orbitvar::alg
