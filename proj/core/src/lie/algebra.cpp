#include "orbitvar/lie/algebra.hpp"

#include <sstream>

#include "orbitvar/error.hpp"

namespace orbitvar::lie {

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::ParseError, "field '" + field + "': " + what);
}

Rational parse_coeff(const nlohmann::json& j, const std::string& field) {
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const Error& e) {
      field_error(field, e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  field_error(field, "expected a rational string");
}

}  // namespace

WeightedLieAlgebra::WeightedLieAlgebra(std::size_t t_dim, std::vector<std::string> names, std::vector<QVector> weights)
    : d_(t_dim), names_(std::move(names)), weights_(std::move(weights)) {
  if (weights_.size() != names_.size()) throw Error(ErrorCode::InvalidArgument, "one weight per basis vector required");
  for (const auto& w : weights_) {
    if (w.size() != d_) throw Error(ErrorCode::DimensionMismatch, "weight length differs from torus dimension");
  }
  table_.assign(n() * n(), QVector(n()));
  explicit_.assign(n() * n(), false);
}

void WeightedLieAlgebra::set_bracket(std::size_t left, std::size_t right, const QVector& value) {
  if (left >= n() || right >= n() || value.size() != n()) {
    throw Error(ErrorCode::InvalidArgument, "bracket index or length out of range");
  }
  table_[left * n() + right] = value;
  explicit_[left * n() + right] = true;
  if (left != right && !explicit_[right * n() + left]) {
    QVector neg(n());
    for (std::size_t k = 0; k < n(); ++k) neg[k] = -value[k];
    table_[right * n() + left] = neg;
  }
}

std::optional<std::size_t> WeightedLieAlgebra::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < n(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> WeightedLieAlgebra::weight_index(const QVector& w) const {
  for (std::size_t i = 0; i < n(); ++i) {
    if (weights_[i] == w) return i;
  }
  return std::nullopt;
}

Rational WeightedLieAlgebra::pair(const QVector& alpha, const QVector& element) const {
  Rational s;
  for (std::size_t i = 0; i < d_; ++i) s += alpha[i] * element[i];
  return s;
}

QVector WeightedLieAlgebra::bracket(const QVector& u, const QVector& v) const {
  if (u.size() != dim() || v.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "element length mismatch");
  QVector out(dim());
  for (std::size_t b = 0; b < n(); ++b) {
    const Rational& ub = u[d_ + b];
    const Rational& vb = v[d_ + b];
    // [t, x_b] = b(t) x_b
    Rational c = pair(weights_[b], u) * vb - pair(weights_[b], v) * ub;
    out[d_ + b] += c;
    if (ub.is_zero()) continue;
    for (std::size_t a = 0; a < n(); ++a) {
      const Rational& va = v[d_ + a];
      if (va.is_zero()) continue;
      const QVector& br = bracket_basis(b, a);
      for (std::size_t k = 0; k < n(); ++k) {
        if (!br[k].is_zero()) out[d_ + k] += ub * va * br[k];
      }
    }
  }
  return out;
}

QMatrix WeightedLieAlgebra::ad(const QVector& x) const {
  QMatrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    QVector col = bracket(x, unit(j));
    for (std::size_t i = 0; i < dim(); ++i) m(i, j) = col[i];
  }
  return m;
}

QVector WeightedLieAlgebra::unit(std::size_t k) const {
  QVector v(dim());
  v[k] = Rational(1);
  return v;
}

Subspace WeightedLieAlgebra::torus() const {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < d_; ++i) idx.push_back(i);
  return Subspace::coordinate(dim(), idx);
}

Subspace WeightedLieAlgebra::a_span(const WeightSubset& s) const {
  std::vector<std::size_t> idx;
  for (auto i : s) idx.push_back(d_ + i);
  return Subspace::coordinate(dim(), idx);
}

Subspace WeightedLieAlgebra::embed_torus(const Subspace& s) const {
  QMatrix m(s.dim(), dim());
  for (std::size_t r = 0; r < s.dim(); ++r)
    for (std::size_t c = 0; c < d_; ++c) m(r, c) = s.basis()(r, c);
  return Subspace::span(m);
}

Subspace WeightedLieAlgebra::project_torus(const Subspace& v) const {
  QMatrix m(v.dim(), d_);
  for (std::size_t r = 0; r < v.dim(); ++r)
    for (std::size_t c = 0; c < d_; ++c) m(r, c) = v.basis()(r, c);
  return Subspace::span(m);
}

QMatrix WeightedLieAlgebra::weight_matrix(const WeightSubset& s) const {
  QMatrix m(s.size(), d_);
  for (std::size_t r = 0; r < s.size(); ++r)
    for (std::size_t c = 0; c < d_; ++c) m(r, c) = weights_[s[r]][c];
  return m;
}

WeightSubset WeightedLieAlgebra::all_weights() const {
  WeightSubset s(n());
  for (std::size_t i = 0; i < n(); ++i) s[i] = i;
  return s;
}

std::string WeightedLieAlgebra::format_element(const QVector& v) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    std::string label = k < d_ ? "t" + std::to_string(k + 1) : names_[k - d_];
    if (first) {
      if (v[k].sign() < 0) os << "-";
    } else {
      os << (v[k].sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (!v[k].abs().is_one()) os << v[k].abs() << "*";
    os << label;
  }
  return first ? "0" : os.str();
}

std::string WeightedLieAlgebra::format_weight(std::size_t i) const {
  std::ostringstream os;
  os << "(";
  for (std::size_t c = 0; c < d_; ++c) os << (c ? "," : "") << weights_[i][c];
  os << ")";
  return os.str();
}

nlohmann::json WeightedLieAlgebra::to_json() const {
  nlohmann::json j;
  j["t_dim"] = d_;
  j["a_basis"] = names_;
  nlohmann::json w = nlohmann::json::object();
  for (std::size_t i = 0; i < n(); ++i) {
    nlohmann::json coords = nlohmann::json::array();
    for (const auto& c : weights_[i]) coords.push_back(c.to_string());
    w[names_[i]] = coords;
  }
  j["weights"] = w;
  nlohmann::json brackets = nlohmann::json::array();
  for (std::size_t a = 0; a < n(); ++a)
    for (std::size_t b = 0; b < n(); ++b) {
      const QVector& v = bracket_basis(a, b);
      bool emit = false;
      if (a < b) {
        emit = !is_zero(v);
      } else if (a == b) {
        emit = !is_zero(v);
      } else {
        const QVector& rev = bracket_basis(b, a);
        for (std::size_t k = 0; k < n() && !emit; ++k) emit = v[k] != -rev[k];
      }
      if (!emit) continue;
      nlohmann::json value = nlohmann::json::array();
      for (std::size_t k = 0; k < n(); ++k) {
        if (!v[k].is_zero()) value.push_back({{"basis", names_[k]}, {"coeff", v[k].to_string()}});
      }
      brackets.push_back({{"left", names_[a]}, {"right", names_[b]}, {"value", value}});
    }
  j["brackets"] = brackets;
  return j;
}

WeightedLieAlgebra WeightedLieAlgebra::from_json(const nlohmann::json& j) {
  if (!j.is_object()) field_error("<root>", "expected an object");
  if (!j.contains("t_dim") || !j["t_dim"].is_number_integer() || j["t_dim"].get<long>() < 0) {
    field_error("t_dim", "expected a non-negative integer");
  }
  std::size_t d = j["t_dim"].get<std::size_t>();
  if (!j.contains("a_basis") || !j["a_basis"].is_array()) field_error("a_basis", "expected an array of names");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < j["a_basis"].size(); ++i) {
    const auto& e = j["a_basis"][i];
    if (!e.is_string() || e.get<std::string>().empty()) {
      field_error("a_basis[" + std::to_string(i) + "]", "expected a non-empty string");
    }
    for (const auto& prev : names) {
      if (prev == e.get<std::string>()) field_error("a_basis[" + std::to_string(i) + "]", "duplicate name");
    }
    names.push_back(e.get<std::string>());
  }
  if (names.empty()) field_error("a_basis", "at least one basis vector is required");
  if (!j.contains("weights") || !j["weights"].is_object()) field_error("weights", "expected an object");
  std::vector<QVector> weights;
  for (const auto& name : names) {
    std::string field = "weights." + name;
    if (!j["weights"].contains(name)) field_error(field, "missing weight");
    const auto& w = j["weights"][name];
    if (!w.is_array() || w.size() != d) field_error(field, "expected " + std::to_string(d) + " coordinates");
    QVector v;
    for (std::size_t c = 0; c < d; ++c) v.push_back(parse_coeff(w[c], field + "[" + std::to_string(c) + "]"));
    weights.push_back(std::move(v));
  }
  for (const auto& [key, _] : j["weights"].items()) {
    bool known = false;
    for (const auto& name : names) known = known || name == key;
    if (!known) field_error("weights." + key, "not in a_basis");
  }
  WeightedLieAlgebra alg(d, names, std::move(weights));
  if (j.contains("brackets")) {
    const auto& bs = j["brackets"];
    if (!bs.is_array()) field_error("brackets", "expected an array");
    for (std::size_t i = 0; i < bs.size(); ++i) {
      std::string field = "brackets[" + std::to_string(i) + "]";
      const auto& b = bs[i];
      if (!b.is_object()) field_error(field, "expected an object");
      auto lookup = [&](const char* key) {
        if (!b.contains(key) || !b[key].is_string()) field_error(field + "." + key, "expected a basis name");
        auto idx = alg.index_of(b[key].get<std::string>());
        if (!idx) field_error(field + "." + key, "unknown basis name '" + b[key].get<std::string>() + "'");
        return *idx;
      };
      std::size_t left = lookup("left");
      std::size_t right = lookup("right");
      if (!b.contains("value") || !b["value"].is_array()) field_error(field + ".value", "expected an array");
      QVector value(alg.n());
      for (std::size_t k = 0; k < b["value"].size(); ++k) {
        std::string vf = field + ".value[" + std::to_string(k) + "]";
        const auto& term = b["value"][k];
        if (!term.is_object() || !term.contains("basis") || !term["basis"].is_string() || !term.contains("coeff")) {
          field_error(vf, "expected {\"basis\": name, \"coeff\": rational}");
        }
        auto idx = alg.index_of(term["basis"].get<std::string>());
        if (!idx) field_error(vf + ".basis", "unknown basis name '" + term["basis"].get<std::string>() + "'");
        value[*idx] += parse_coeff(term["coeff"], vf + ".coeff");
      }
      alg.set_bracket(left, right, value);
    }
  }
  return alg;
}

WeightedLieAlgebra WeightedLieAlgebra::parse(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::ParseError,
                "malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
  return from_json(j);
}

}  // namespace orbitvar::lie
