#pragma once

#include <cstddef>
#include <vector>

#include "orbitvar/ideals/ideal.hpp"
#include "orbitvar/report/report.hpp"

namespace orbitvar::ideals {

/// Ring Q[u1..us, T1..Ts] in that variable order.
PolyRing determinantal_ring(std::size_t s);

/// 2x2 minors u_j T_k - u_k T_j, j < k.
Ideal determinantal_P(std::size_t s);
/// u_j T_1 - u_1 T_j, j = 2..s.
Ideal determinantal_P_prime(std::size_t s);
/// P_{s-1} (inside the ring for s) together with u_s T_1 - u_1 T_s.
Ideal determinantal_P_second(std::size_t s);

/// Compares P_s with the kernel of T_i -> lambda u_i (both inclusions).
/// Throws ScaleExceeded for s > 5.
report::VerificationReport primality_crosscheck_P(std::size_t s);

/// Dimension, primality cross-check and the T_1 identity modulo P'_s for
/// s = 1..max_s. Throws ScaleExceeded for max_s > 5.
report::VerificationReport determinantal_suite(std::size_t max_s);

/// For each i, with J_i = I + (f_1..f_{i-1}): f_i is a non-unit modulo J_i and
/// (J_i : f_i) = J_i. Stops at the first failure.
report::VerificationReport regular_sequence_check(const Ideal& ideal, const std::vector<Polynomial>& seq);

}  // namespace orbitvar::ideals
