#include <doctest.h>

#include <random>

#include "knotfog/laurent.hpp"

using namespace knotfog;

namespace {

const LaurentPoly kBase(0, {-2, 5, -2});
const LaurentPoly kBaseSquared(0, {4, -20, 33, -20, 4});

LaurentPoly random_poly(std::mt19937_64& rng) {
    std::vector<Integer> c(rng() % 9);
    for (auto& x : c)
        x = static_cast<long>(rng() % 19) - 9;
    return LaurentPoly(static_cast<std::int64_t>(rng() % 9) - 4, c);
}

// a = u b for some unit u = ±t^k, searched over every shift that could align
// the two supports.
bool unit_multiple_by_search(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero())
        return a.is_zero() && b.is_zero();
    for (std::int64_t k = -20; k <= 20; ++k)
        for (int sign : {1, -1})
            if (a == LaurentPoly::monomial(sign, k) * b)
                return true;
    return false;
}

} // namespace

TEST_SUITE("laurent") {

TEST_CASE("normalization strips zero ends") {
    const LaurentPoly p(-2, {0, 0, 3, 0, 1, 0});
    CHECK(p.min_degree() == 0);
    CHECK(p.max_degree() == 2);
    CHECK(p.coeffs() == std::vector<Integer>{3, 0, 1});
    CHECK(LaurentPoly(5, {0, 0}).is_zero());
    CHECK(LaurentPoly(5, {0, 0}) == LaurentPoly());
}

TEST_CASE("multiplication examples") {
    CHECK(kBase * kBase == kBaseSquared);
    CHECK(kBase * LaurentPoly::constant(1) == kBase);
    CHECK(LaurentPoly::monomial(1, 1) * LaurentPoly::monomial(1, -1) == LaurentPoly::constant(1));
    CHECK((kBase * LaurentPoly()).is_zero());
}

TEST_CASE("powers") {
    CHECK(pow(kBase, 1) == kBase);
    CHECK(pow(kBase, 0) == LaurentPoly::constant(1));
    CHECK(pow(kBase, 2) == kBaseSquared);
    LaurentPoly acc = LaurentPoly::constant(1);
    for (std::uint64_t k = 1; k <= 6; ++k) {
        acc = acc * kBase;
        CHECK(pow(kBase, k) == acc);
    }
}

TEST_CASE("evaluation") {
    CHECK(evaluate(kBase, 1) == 1);
    CHECK(evaluate(kBase, -1) == -9);
    CHECK(evaluate(LaurentPoly(), 7) == 0);
    CHECK(evaluate(LaurentPoly::monomial(3, -2), 2) == Rational(3, 4));
    CHECK_THROWS_AS(evaluate(kBase, 0), std::domain_error);
}

TEST_CASE("canonical form") {
    CHECK(canonical(kBase) == LaurentPoly(0, {2, -5, 2}));
    CHECK(canonical(LaurentPoly::monomial(-1, 7)) == LaurentPoly::constant(1));
    CHECK(canonical(LaurentPoly::monomial(1, -3)) == LaurentPoly::constant(1));
    CHECK(canonical(LaurentPoly(0, {2, -5, 2})) == LaurentPoly(0, {2, -5, 2}));
    CHECK(canonical(LaurentPoly()).is_zero());
}

TEST_CASE("unit equivalence examples") {
    CHECK(unit_equivalent(kBase, LaurentPoly(-1, {2, -5, 2})));
    CHECK(unit_equivalent(kBase, kBase));
    CHECK_FALSE(unit_equivalent(LaurentPoly::constant(1), LaurentPoly(0, {1, -1, 1})));
}

TEST_CASE("text form") {
    CHECK(to_string(LaurentPoly(0, {2, -5, 2})) == "2t^2 - 5t + 2");
    CHECK(to_string(LaurentPoly()) == "0");
    CHECK(to_string(LaurentPoly::monomial(1, -1)) == "t^-1");
    CHECK(to_string(LaurentPoly::monomial(-1, 2)) == "-t^2");
    CHECK(to_string(LaurentPoly::constant(-3)) == "-3");
}

TEST_CASE("exact division") {
    CHECK(exact_divide(kBaseSquared, kBase) == kBase);
    CHECK(exact_divide(LaurentPoly::monomial(6, 3), LaurentPoly::monomial(2, -1)) == LaurentPoly::monomial(3, 4));
    CHECK_THROWS_AS(exact_divide(kBase, LaurentPoly(0, {1, 1})), std::domain_error);
    CHECK_THROWS_AS(exact_divide(kBase, LaurentPoly()), std::domain_error);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * b == b * a);
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a + b == b + a);
        REQUIRE((a - a).is_zero());
        // Evaluation is a ring homomorphism, an oracle independent of the
        // convolution code.
        for (long x : {2L, -3L}) {
            REQUIRE(evaluate(a * b, x) == evaluate(a, x) * evaluate(b, x));
            REQUIRE(evaluate(a + b, x) == evaluate(a, x) + evaluate(b, x));
        }
        if (!a.is_zero() && !b.is_zero())
            REQUIRE((a * b).max_degree() - (a * b).min_degree() ==
                    (a.max_degree() - a.min_degree()) + (b.max_degree() - b.min_degree()));
    }
}

TEST_CASE("canonical idempotent and equivalence matches unit search") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 500; ++i) {
        const LaurentPoly a = random_poly(rng);
        REQUIRE(canonical(canonical(a)) == canonical(a));
        const LaurentPoly unit = LaurentPoly::monomial(rng() % 2 ? 1 : -1, static_cast<std::int64_t>(rng() % 9) - 4);
        const LaurentPoly b = rng() % 2 ? unit * a : random_poly(rng);
        REQUIRE(unit_equivalent(a, b) == unit_multiple_by_search(a, b));
        REQUIRE(unit_equivalent(a, a));
        REQUIRE(unit_equivalent(a, b) == unit_equivalent(b, a));
    }
}

TEST_CASE("big coefficients do not overflow") {
    const LaurentPoly big = pow(LaurentPoly(0, {1000, 1}), 12);
    CHECK(big.coeffs().front() == Integer("1000000000000000000000000000000000000"));
    Integer expected = 1;
    for (int i = 0; i < 12; ++i)
        expected *= 1001;
    CHECK(evaluate(big, 1) == expected);
}

}
