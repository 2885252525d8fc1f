#include "orbitvar/lie/builtins.hpp"

#include <charconv>

#include "orbitvar/error.hpp"

namespace orbitvar::lie {

namespace {

std::optional<std::size_t> parse_suffix(std::string_view name, std::string_view prefix) {
  if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
  std::string_view rest = name.substr(prefix.size());
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
  if (ec != std::errc() || ptr != rest.data() + rest.size() || rest.empty()) return std::nullopt;
  return value;
}

[[noreturn]] void unknown(std::string_view name) {
  throw Error(ErrorCode::UnknownBuiltin, "unknown builtin '" + std::string(name) + "'");
}

}  // namespace

WeightedLieAlgebra borel_nilradical(std::size_t rank) {
  struct Root {
    std::size_t i, j;
  };
  std::vector<Root> roots;
  for (std::size_t h = 1; h <= rank; ++h)
    for (std::size_t i = 1; i + h <= rank + 1; ++i) roots.push_back({i, i + h});
  std::vector<std::string> names;
  std::vector<QVector> weights;
  for (const auto& r : roots) {
    names.push_back("e" + std::to_string(r.i) + std::to_string(r.j));
    QVector w(rank);
    for (std::size_t k = r.i; k < r.j; ++k) w[k - 1] = Rational(1);
    weights.push_back(std::move(w));
  }
  WeightedLieAlgebra alg(rank, names, weights);
  for (std::size_t a = 0; a < roots.size(); ++a)
    for (std::size_t b = 0; b < roots.size(); ++b) {
      if (roots[a].j != roots[b].i) continue;
      for (std::size_t c = 0; c < roots.size(); ++c) {
        if (roots[c].i == roots[a].i && roots[c].j == roots[b].j) {
          QVector v(roots.size());
          v[c] = Rational(1);
          alg.set_bracket(a, b, v);
        }
      }
    }
  return alg;
}

WeightedLieAlgebra abelian(std::size_t d) {
  std::vector<std::string> names;
  std::vector<QVector> weights;
  for (std::size_t i = 0; i < d; ++i) {
    names.push_back("x" + std::to_string(i + 1));
    QVector w(d);
    w[i] = Rational(1);
    weights.push_back(std::move(w));
  }
  return WeightedLieAlgebra(d, names, weights);
}

WeightedLieAlgebra builtin(std::string_view name) {
  if (name == "heisenberg-3") {
    WeightedLieAlgebra alg(2, {"x", "y", "z"},
                           {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}, {Rational(1), Rational(1)}});
    alg.set_bracket(0, 1, {Rational(0), Rational(0), Rational(1)});
    return alg;
  }
  if (name == "sl2-borel") return WeightedLieAlgebra(1, {"x"}, {{Rational(1)}});
  if (auto r = parse_suffix(name, "borel-nilradical-A")) {
    if (*r < 1 || *r > 6) unknown(name);
    return borel_nilradical(*r);
  }
  if (auto d = parse_suffix(name, "abelian:")) {
    if (*d < 1 || *d > 16) unknown(name);
    return abelian(*d);
  }
  unknown(name);
}

std::vector<std::string> builtin_names() {
  return {"borel-nilradical-A2", "borel-nilradical-A3", "heisenberg-3", "abelian:<d>", "sl2-borel"};
}

std::optional<CentralizerMapFamily> builtin_condition4_family(std::string_view name) {
  if (name == "sl2-borel") return identity_family(builtin(name));
  if (auto d = parse_suffix(name, "abelian:")) {
    if (*d >= 1 && *d <= 16) return abelian_family(abelian(*d));
  }
  return std::nullopt;
}

}  // namespace orbitvar::lie
