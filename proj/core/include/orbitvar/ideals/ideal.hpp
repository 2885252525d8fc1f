#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "orbitvar/algebra/polynomial.hpp"

namespace orbitvar::ideals {

using alg::Monomial;
using alg::MonomialOrder;
using alg::Polynomial;
using alg::Rational;

/// Named variables plus a monomial order.
class PolyRing {
 public:
  PolyRing() = default;
  explicit PolyRing(std::vector<std::string> names, MonomialOrder order = MonomialOrder::grevlex());

  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const MonomialOrder& order() const { return order_; }
  PolyRing with_order(MonomialOrder order) const { return PolyRing(names_, order); }

  std::optional<std::size_t> index_of(std::string_view name) const;
  Polynomial var(std::size_t i) const { return Polynomial::variable(nvars(), i); }
  Polynomial var(std::string_view name) const;
  Polynomial constant(const Rational& c) const { return Polynomial::constant(nvars(), c); }
  Polynomial zero() const { return Polynomial(nvars()); }
  Polynomial parse(std::string_view text) const { return Polynomial::parse(text, names_); }
  std::string format(const Polynomial& p) const { return p.to_string(names_, order_); }

  friend bool operator==(const PolyRing&, const PolyRing&) = default;

 private:
  std::vector<std::string> names_;
  MonomialOrder order_;
};

/// Reduced Groebner basis (monic, sorted by decreasing leading monomial).
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens, const MonomialOrder& order);

/// Remainder of f on division by a Groebner basis; unique when gb is reduced.
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& gb, const MonomialOrder& order);

/// Ideal given by generators; the reduced Groebner basis is computed on first
/// use and shared by copies.
class Ideal {
 public:
  Ideal() = default;
  Ideal(PolyRing ring, std::vector<Polynomial> generators);

  const PolyRing& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const std::vector<Polynomial>& groebner() const;

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  bool contains(const Ideal& other) const;
  bool is_unit() const;
  bool is_zero() const;

  Ideal operator+(const Ideal& other) const;
  Ideal with(const std::vector<Polynomial>& extra) const;
  Ideal with_order(MonomialOrder order) const { return Ideal(ring_.with_order(order), gens_); }

  nlohmann::json to_json() const;

  friend bool operator==(const Ideal& a, const Ideal& b) { return a.contains(b) && b.contains(a); }

 private:
  PolyRing ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<std::optional<std::vector<Polynomial>>> gb_;
};

/// Moves each variable i of f to position map[i] in a ring of new_nvars
/// variables; map[i] may be absent only for variables f does not use.
Polynomial remap(const Polynomial& f, const std::vector<std::optional<std::size_t>>& map, std::size_t new_nvars);

/// Ideal in the variables not listed, I intersected with that subring.
Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop);

/// (I : f). Throws InvalidArgument for f = 0 and DivisionFailure if the
/// intersection step yields a non-multiple of f.
Ideal ideal_quotient(const Ideal& ideal, const Polynomial& f);

/// Quotient of g by f; throws DivisionFailure unless f divides g.
Polynomial exact_divide(const Polynomial& g, const Polynomial& f);

/// Krull dimension of ring / I. Throws UnitIdeal.
std::size_t hilbert_dimension(const Ideal& ideal);

/// g lies in the radical of I (Rabinowitsch trick).
bool in_radical(const Ideal& ideal, const Polynomial& g);

}  // namespace orbitvar::ideals
