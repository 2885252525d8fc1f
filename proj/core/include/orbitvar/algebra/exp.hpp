#pragma once

#include <cstddef>

#include "orbitvar/algebra/matrix.hpp"

namespace orbitvar::alg {

/// Smallest k >= 1 with m^k = 0. Throws NotNilpotent if none up to rows().
std::size_t nilpotency_index(const QMatrix& m);

bool is_nilpotent(const QMatrix& m);

/// sum_{j<k} z^j m^j / j! for nilpotent m.
QMatrix exp_nilpotent(const QMatrix& m, const Rational& z);

/// Same series with z formal; entry (i, j) is a polynomial in z. The optional
/// scale multiplies the parameter, i.e. the result is exp((scale * z) m).
PolyMatrix exp_nilpotent_formal(const QMatrix& m, const Rational& scale = Rational(1));

}  // namespace orbitvar::alg
