#include <doctest.h>

#include "knotfog/acceptance/oracles.hpp"
#include "knotfog/acceptance/random_expr.hpp"
#include "knotfog/fog.hpp"
#include "knotfog/parser.hpp"

using namespace knotfog;

namespace {

IntInterval g1(std::string_view text) { return fog_of(parse(text)).interval; }

const FogProvenance& record(const FogResult& r, Bound b) {
    for (const auto& p : r.provenance)
        if (p.bound == b)
            return p;
    FAIL("missing provenance");
    return r.provenance.front();
}

bool has_reason(const CertificateCheck& c, std::string_view needle) {
    for (const auto& r : c.reasons)
        if (r.find(needle) != std::string::npos)
            return true;
    return false;
}

} // namespace

TEST_SUITE("fog") {

TEST_CASE("grope values") {
    CHECK(grope_value({1, {1, 1}}) == 2);
    CHECK(grope_value({1, {3, 1}}) == 4);
    CHECK(grope_value({1, {0, 0}}) == 0);
    CHECK(grope_value({2, {1, 2, 3, 4}}) == 10);
    CHECK_THROWS_AS(grope_value({1, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(grope_value({1, {1, -1}}), std::invalid_argument);
}

TEST_CASE("certificate validation") {
    CHECK(validate_certificate({1, {1, 1}}, knot::trefoil()).valid);
    const CertificateCheck wrong_genus = validate_certificate({2, {1, 1, 1, 1}}, knot::trefoil());
    CHECK_FALSE(wrong_genus.valid);
    CHECK(has_reason(wrong_genus, "first stage not minimal genus"));
    const CertificateCheck disc = validate_certificate({1, {0, 1}}, knot::fig8());
    CHECK_FALSE(disc.valid);
    CHECK(has_reason(disc, "zero second stage on nontrivial knot"));
    CHECK(has_reason(validate_certificate({1, {1}}, knot::fig8()), "second-stage count"));
    CHECK(has_reason(validate_certificate({1, {1, 1}}, knot::ksat(knot::unknot(), knot::unknot(), 1, 1)),
                     "not known exactly"));
    CHECK(validate_certificate({0, {}}, knot::unknot()).valid);
}

TEST_CASE("basis enumerator examples") {
    const BasisWitness w = basis_min_lb(1, 0);
    CHECK(w.value == 2);
    CHECK(w.p * w.s - w.q * w.r == 1);
    CHECK(basis_min_lb(3, 0).value == 4);
    CHECK(basis_min_lb(2, 3).value == 5);
    CHECK(basis_min_lb(2, 3) == acceptance::brute_force_basis_min(2, 3));
    CHECK_THROWS_AS(basis_min_lb(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(basis_min_lb(1, -1), std::invalid_argument);
    CHECK_THROWS_AS(basis_min_lb(1, 1, 0), std::invalid_argument);
}

TEST_CASE("basis enumerator closed forms and brute force") {
    for (std::int64_t g = 1; g <= 6; ++g)
        CHECK(basis_min_lb(g, 0).value == g + 1);
    for (std::int64_t g = 1; g <= 5; ++g)
        for (std::int64_t h = 0; h <= 5; ++h) {
            const BasisWitness w = basis_min_lb(g, h);
            if (h > 0) {
                CHECK(w.value == g + h);
                // Swapping the companions and the basis curves gives the same
                // minimum.
                CHECK(basis_min_lb(h, g).value == w.value);
            }
            CHECK(w.p * w.s - w.q * w.r == 1);
            CHECK(curve_lower_bound(w.p, w.q, g, h) + curve_lower_bound(w.r, w.s, g, h) == w.value);
            CHECK(w == acceptance::brute_force_basis_min(g, h));
        }
}

TEST_CASE("basis enumerator escalates and certifies from a small cap") {
    CHECK(basis_min_lb(2, 3, 1) == basis_min_lb(2, 3));
    CHECK(basis_min_lb(1, 0, 1) == basis_min_lb(1, 0));
    CHECK(basis_min_lb(1'000'000'000, 0).value == 1'000'000'001);
}

TEST_CASE("point values") {
    CHECK(g1("trefoil") == IntInterval::point(2));
    CHECK(g1("fig8") == IntInterval::point(2));
    CHECK(g1("unknot") == IntInterval::point(0));
    CHECK(g1("wh0(kfam(3))") == IntInterval::point(4));
    CHECK(g1("trefoil # trefoil") == IntInterval::point(4));
    CHECK(g1("ksat(kfam(1), kfam(2), 0, 0)") == IntInterval::point(3));
    CHECK(g1("ksat(fig8, fig8, 2, 3)") == IntInterval{2, std::nullopt});
}

TEST_CASE("guards disable rules") {
    // Trefoil is a cable under the conservative flag table.
    CHECK(g1("wh0(trefoil)") == IntInterval{2, std::nullopt});
    CHECK(g1("wh0(atom(J, genus=3, torus=no, cable=no))") == IntInterval::point(4));
    CHECK(g1("wh0(atom(J, genus=3))") == IntInterval{2, std::nullopt});
    CHECK(g1("wh0(unknot)") == IntInterval::point(0));
    CHECK(g1("ksat(trefoil, fig8, 0, 0)") == IntInterval{2, std::nullopt});
    CHECK(g1("ksat(fig8, unknot, 0, 0)") == IntInterval::point(0));
    CHECK(g1("atom(A, genus=3)") == IntInterval{6, std::nullopt});
}

TEST_CASE("provenance has one record per bound") {
    const FogResult r = fog_of(parse("wh0(kfam(2))"));
    CHECK(r.provenance.size() == 2);
    CHECK(record(r, Bound::lo).rule == "whitehead-enumerator");
    CHECK(record(r, Bound::hi).rule == "whitehead-certificate");
    CHECK(*record(r, Bound::lo).value == 3);

    const FogResult open = fog_of(parse("ksat(fig8, fig8, 2, 3)"));
    CHECK(open.provenance.size() == 2);
    CHECK(record(open, Bound::lo).rule == "ksat-enumerator");
    CHECK_FALSE(record(open, Bound::hi).value.has_value());

    const FogResult sum = fog_of(parse("trefoil # fig8"));
    CHECK(record(sum, Bound::lo).rule == "twice-genus");
    CHECK(record(sum, Bound::hi).rule == "subadditivity");
    CHECK(record(fog_of(knot::unknot()), Bound::lo).rule == "unknot-definition");
}

TEST_CASE("family separation") {
    std::int64_t previous = 0;
    for (std::int64_t n = 1; n <= 8; ++n) {
        const KnotExpr e = knot::wh0(knot::kfam(n));
        const FogResult r = fog_of(e);
        CHECK(r.interval == IntInterval::point(n + 1));
        CHECK(r.interval.lo > previous);
        previous = r.interval.lo;
    }
}

TEST_CASE("soundness properties on random expressions") {
    acceptance::ExprGenerator gen(61);
    int pairs = 0;
    for (int i = 0; i < 1000; ++i) {
        const KnotExpr a = gen.next();
        const FogResult ra = fog_of(a);
        const IntInterval ga = genus_of(a);
        REQUIRE(ra.interval.lo >= 2 * ga.lo);
        if (ra.interval.hi)
            REQUIRE(ra.interval.lo <= *ra.interval.hi);
        REQUIRE(ra.provenance.size() == 2);
        if (ra.interval.is_zero())
            REQUIRE(ga.is_zero());
        const KnotExpr b = gen.next();
        const FogResult rb = fog_of(b);
        if (ra.interval.hi && rb.interval.hi) {
            ++pairs;
            const FogResult rs = fog_of(knot::sum(a, b));
            REQUIRE(rs.interval.hi);
            REQUIRE(*rs.interval.hi <= *ra.interval.hi + *rb.interval.hi);
        }
    }
    CHECK(pairs >= 20);
}

}
