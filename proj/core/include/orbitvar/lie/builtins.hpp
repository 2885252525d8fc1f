#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbitvar/lie/algebra.hpp"
#include "orbitvar/lie/condition4.hpp"

namespace orbitvar::lie {

/// borel-nilradical-A<r> (1 <= r <= 6), heisenberg-3, abelian:<d>
/// (1 <= d <= 16), sl2-borel. Throws UnknownBuiltin.
WeightedLieAlgebra builtin(std::string_view name);

/// Names accepted by builtin(), with the parametric families shown once.
std::vector<std::string> builtin_names();

/// Condition (4) candidate shipped with the builtin, when there is one.
std::optional<CentralizerMapFamily> builtin_condition4_family(std::string_view name);

/// Type A_r nilradical: basis e_ij (1 <= i < j <= r + 1) ordered by height,
/// weights in simple-root coordinates, [e_ij, e_jk] = e_ik.
WeightedLieAlgebra borel_nilradical(std::size_t rank);

/// d-dimensional abelian algebra with the coordinate weights.
WeightedLieAlgebra abelian(std::size_t d);

}  // namespace orbitvar::lie
