#include "knotfog/acceptance/oracles.hpp"

#include <optional>
#include <tuple>

namespace knotfog::acceptance {

namespace {

std::int64_t iabs(std::int64_t x) { return x < 0 ? -x : x; }

std::int64_t curve(std::int64_t u, std::int64_t v, std::int64_t g_a, std::int64_t g_b) {
    std::int64_t best = 1;
    if (iabs(u) * g_a > best)
        best = iabs(u) * g_a;
    if (iabs(v) * g_b > best)
        best = iabs(v) * g_b;
    return best;
}

} // namespace

BasisWitness brute_force_basis_min(std::int64_t g_a, std::int64_t g_b, std::int64_t bound) {
    std::optional<BasisWitness> best;
    const auto key = [](const BasisWitness& w) {
        return std::make_tuple(w.value, iabs(w.p), iabs(w.q), iabs(w.r), iabs(w.s), w.p, w.q, w.r, w.s);
    };
    for (std::int64_t p = -bound; p <= bound; ++p)
        for (std::int64_t q = -bound; q <= bound; ++q)
            for (std::int64_t r = -bound; r <= bound; ++r)
                for (std::int64_t s = -bound; s <= bound; ++s) {
                    if (p * s - q * r != 1)
                        continue;
                    const BasisWitness w{p, q, r, s, curve(p, q, g_a, g_b) + curve(r, s, g_a, g_b)};
                    if (!best || key(w) < key(*best))
                        best = w;
                }
    return *best;
}

LaurentPoly twist_knot_polynomial(std::int64_t m) {
    return canonical(LaurentPoly(0, {Integer(static_cast<long>(m)), Integer(static_cast<long>(-2 * m - 1)),
                                     Integer(static_cast<long>(m))}));
}

Integer laplace_determinant(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    if (n == 1)
        return m(0, 0);
    Integer total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c) == 0)
            continue;
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, k = 0; j < n; ++j)
                if (j != c)
                    minor(i - 1, k++) = m(i, j);
        const Integer term = m(0, c) * laplace_determinant(minor);
        if (c % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

} // namespace knotfog::acceptance
