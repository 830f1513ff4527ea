#pragma once

#include <cstdint>

#include "knotfog/fog.hpp"
#include "knotfog/laurent.hpp"
#include "knotfog/matrix.hpp"

namespace knotfog::acceptance {

// Exhaustive minimum of the basis objective over every unimodular
// (p, q, r, s) with |coefficient| <= bound, same tie-break as basis_min_lb.
BasisWitness brute_force_basis_min(std::int64_t g_a, std::int64_t g_b, std::int64_t bound = 10);

// Twist knot polynomial m t^2 - (2m + 1) t + m, canonical.
LaurentPoly twist_knot_polynomial(std::int64_t m);

// Cofactor expansion along the first row. Exponential; small matrices only.
Integer laplace_determinant(const IntMatrix& m);

} // namespace knotfog::acceptance
