#include <doctest.h>

#include "knotfog/acceptance/criteria.hpp"
#include "knotfog/acceptance/oracles.hpp"
#include "knotfog/acceptance/random_expr.hpp"

using namespace knotfog;
using namespace knotfog::acceptance;

TEST_SUITE("acceptance_parts") {

TEST_CASE("corrupted theta builder is caught") {
    const CriterionResult good = pretzel_identity(theta_matrix);
    CHECK(good.passed);
    const CriterionResult bad = pretzel_identity(corrupted_theta);
    CHECK_FALSE(bad.passed);
    CHECK(bad.detail.find("violations") != std::string::npos);
}

TEST_CASE("generator is deterministic and depth bounded") {
    ExprGenerator a(7), b(7);
    for (int i = 0; i < 200; ++i) {
        const KnotExpr x = a.next();
        CHECK(x == b.next());
        CHECK(depth(x) <= 4);
    }
}

TEST_CASE("oracles") {
    CHECK(laplace_determinant(IntMatrix{{2, 1}, {1, 1}}) == 1);
    CHECK(twist_knot_polynomial(1) == LaurentPoly(0, {1, -3, 1}));
    CHECK(twist_knot_polynomial(-1) == LaurentPoly(0, {1, -1, 1}));
    CHECK(twist_knot_polynomial(0) == LaurentPoly::constant(1));
    CHECK(brute_force_basis_min(1, 0).value == 2);
}

TEST_CASE("result formatting") {
    CriterionResult r{3, "name", true, "ok", 0.5, 5.0};
    CHECK(format_result(r) == "PASS  C3  name  0.500 s (limit 5 s)  ok");
    r.passed = false;
    r.time_limit = 0;
    CHECK(format_result(r) == "FAIL  C3  name  0.500 s  ok");
}

}
