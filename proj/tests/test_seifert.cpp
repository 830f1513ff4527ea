#include <doctest.h>

#include <random>

#include "knotfog/acceptance/oracles.hpp"
#include "knotfog/seifert.hpp"

using namespace knotfog;

namespace {

const LaurentPoly kBase(0, {-2, 5, -2});

// Laplace expansion of V - x V^T at an integer point; a determinant path
// that shares nothing with the Bareiss code.
Integer alexander_at(const SeifertMatrix& v, long x) {
    const IntMatrix& m = v.entries();
    IntMatrix at(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            at(i, j) = m(i, j) - x * m(j, i);
    return acceptance::laplace_determinant(at);
}

} // namespace

TEST_SUITE("seifert") {

TEST_CASE("theta matrices") {
    CHECK(theta_matrix(1).entries() == IntMatrix{{0, 2}, {1, 0}});
    CHECK(theta_matrix(2).entries() == IntMatrix{{0, 2, 0, 0}, {1, 0, -1, 0}, {0, -2, 0, 2}, {0, 0, 1, 0}});
    CHECK(theta_matrix(3).entries() == IntMatrix{{0, 2, 0, 0, 0, 0},
                                                 {1, 0, -1, 0, 0, 0},
                                                 {0, -2, 0, 2, 0, 0},
                                                 {0, 0, 1, 0, -1, 0},
                                                 {0, 0, 0, -2, 0, 2},
                                                 {0, 0, 0, 0, 1, 0}});
    CHECK_THROWS_AS(theta_matrix(0), std::invalid_argument);
    CHECK_THROWS_AS(theta_matrix(-3), std::invalid_argument);
}

TEST_CASE("Alexander polynomial examples") {
    CHECK(alexander_polynomial(theta_matrix(1)) == kBase);
    CHECK(unit_equivalent(alexander_polynomial(SeifertMatrix(IntMatrix{{-1, 1}, {0, -1}})), LaurentPoly(0, {1, -1, 1})));
    CHECK(alexander_polynomial(SeifertMatrix()) == LaurentPoly::constant(1));
}

TEST_CASE("theta closed form against two determinant paths") {
    for (std::int64_t n = 1; n <= 6; ++n) {
        const SeifertMatrix v = theta_matrix(n);
        const LaurentPoly d = alexander_polynomial(v);
        CHECK(unit_equivalent(d, pow(kBase, static_cast<std::uint64_t>(n))));
        if (n <= 4)
            for (long x : {2L, 3L, -1L})
                CHECK(evaluate(d, x) == alexander_at(v, x));
        CHECK(surface_genus(v) == n);
    }
}

TEST_CASE("shape checks") {
    CHECK_THROWS_AS(SeifertMatrix(IntMatrix(3, 3)), std::invalid_argument);
    CHECK_THROWS_AS(SeifertMatrix(IntMatrix(2, 4)), std::invalid_argument);
    CHECK(surface_genus(SeifertMatrix()) == 0);
    CHECK_THROWS_AS(BasisChange(IntMatrix{{2, 0}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(change_basis(theta_matrix(2), BasisChange(IntMatrix::identity(2))), std::invalid_argument);
}

TEST_CASE("change of basis") {
    const SeifertMatrix v(IntMatrix{{0, 2}, {1, 0}});
    const SeifertMatrix w = change_basis(v, BasisChange(IntMatrix{{1, 1}, {0, 1}}));
    CHECK(w.entries() == IntMatrix{{3, 2}, {1, 0}});
    CHECK(alexander_polynomial(w) == kBase);
    CHECK(change_basis(theta_matrix(3), BasisChange(IntMatrix::identity(6))) == theta_matrix(3));
}

TEST_CASE("intersection forms") {
    const IntersectionForm t = intersection_form(theta_matrix(1));
    CHECK(t.form == IntMatrix{{0, 1}, {-1, 0}});
    CHECK(t.is_standard);
    const IntersectionForm tre = intersection_form(SeifertMatrix(IntMatrix{{-1, 1}, {0, -1}}));
    CHECK(tre.form == IntMatrix{{0, 1}, {-1, 0}});
    CHECK(tre.is_standard);
    const IntersectionForm z = intersection_form(SeifertMatrix(IntMatrix(2, 2)));
    CHECK(z.form == IntMatrix(2, 2));
    CHECK_FALSE(z.is_standard);
    CHECK(standard_form(2) == IntMatrix{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
    // The pretzel surface's basis is not symplectic beyond genus one, but
    // its form is still unimodular.
    const IntersectionForm t2 = intersection_form(theta_matrix(2));
    CHECK_FALSE(t2.is_standard);
    CHECK(determinant(t2.form) == 1);
}

TEST_CASE("random symplectic products") {
    CHECK(random_symplectic(2, 5, 0).entries() == IntMatrix::identity(4));
    CHECK(random_symplectic(3, 9, 40).entries() == random_symplectic(3, 9, 40).entries());
    CHECK_THROWS_AS(random_symplectic(0, 1, 1), std::invalid_argument);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const BasisChange p1 = random_symplectic(1, seed, 1 + seed % 10);
        CHECK(p1.is_symplectic());
        CHECK(unit_equivalent(alexander_polynomial(change_basis(theta_matrix(1), p1)), kBase));
        const BasisChange p3 = random_symplectic(3, seed, 20);
        CHECK(p3.is_symplectic());
    }
}

TEST_CASE("congruence invariance and form transport") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        const std::size_t g = 1 + rng() % 3;
        IntMatrix m(2 * g, 2 * g);
        for (std::size_t a = 0; a < m.rows(); ++a)
            for (std::size_t b = 0; b < m.cols(); ++b)
                m(a, b) = static_cast<long>(rng() % 9) - 4;
        const SeifertMatrix v(m);
        // Unimodular but not necessarily symplectic.
        IntMatrix pm = IntMatrix::identity(2 * g);
        for (int k = 0; k < 6; ++k) {
            const std::size_t a = rng() % (2 * g), b = rng() % (2 * g);
            if (a == b)
                continue;
            const long c = static_cast<long>(rng() % 5) - 2;
            for (std::size_t j = 0; j < 2 * g; ++j)
                pm(a, j) += c * pm(b, j);
        }
        const BasisChange p(pm);
        const SeifertMatrix w = change_basis(v, p);
        REQUIRE(unit_equivalent(alexander_polynomial(w), alexander_polynomial(v)));
        REQUIRE(intersection_form(w).form == pm * intersection_form(v).form * pm.transposed());
    }
}

TEST_CASE("standard form forces value one at t = 1") {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 100; ++i) {
        const std::size_t g = 1 + rng() % 3;
        IntMatrix m(2 * g, 2 * g);
        for (std::size_t a = 0; a < m.rows(); ++a)
            for (std::size_t b = a; b < m.cols(); ++b)
                m(a, b) = m(b, a) = static_cast<long>(rng() % 7) - 3;
        for (std::size_t k = 0; k < g; ++k)
            m(2 * k, 2 * k + 1) += 1;
        const SeifertMatrix v(m);
        REQUIRE(intersection_form(v).is_standard);
        REQUIRE(evaluate(alexander_polynomial(v), 1) == 1);
    }
}

}
