#pragma once

#include <vector>

#include "orbitvar/algebra/polynomial.hpp"
#include "orbitvar/lie/algebra.hpp"

namespace orbitvar::lie {

/// Element of r whose coordinates are polynomials in a common ring.
using PolyElement = std::vector<alg::Polynomial>;

/// Bracket on r with polynomial coordinates; all entries share nvars.
PolyElement symbolic_bracket(const WeightedLieAlgebra& alg, const PolyElement& u, const PolyElement& v);

/// Constant element: coordinates of v as constants in nvars variables.
PolyElement constant_element(const QVector& v, std::size_t nvars);

}  // namespace orbitvar::lie
