#include <doctest.h>

#include "knotfog/json_io.hpp"
#include "knotfog/parser.hpp"
#include "knotfog/report.hpp"
#include "knotfog/seifert.hpp"

using namespace knotfog;
using nlohmann::json;

namespace {

bool is_tri(const json& j) { return j == "yes" || j == "no" || j == "unknown"; }

void check_interval_schema(const json& j) {
    REQUIRE(j.is_object());
    CHECK(j.size() == 2);
    CHECK(j.at("lo").is_number_integer());
    CHECK((j.at("hi").is_number_integer() || j.at("hi").is_null()));
}

void check_facts_schema(const json& j) {
    REQUIRE(j.is_object());
    check_interval_schema(j.at("genus"));
    const json& a = j.at("alexander");
    if (a.is_string()) {
        CHECK(a == "unknown");
    } else {
        CHECK(a.at("min_degree").is_number_integer());
        CHECK(a.at("coeffs").is_array());
    }
    CHECK(is_tri(j.at("slice")));
    CHECK(is_tri(j.at("in_R")));
    CHECK(is_tri(j.at("trivial")));
    for (const json& p : j.at("provenance")) {
        CHECK(p.size() == 3);
        CHECK(p.at("fact").is_string());
        CHECK(p.at("rule").is_string());
        CHECK(p.at("anchor").is_string());
    }
}

void check_fog_schema(const json& j) {
    CHECK(j.at("lo").is_number_integer());
    CHECK((j.at("hi").is_number_integer() || j.at("hi").is_null()));
    REQUIRE(j.at("provenance").size() == 2);
    CHECK(j.at("provenance")[0].at("bound") == "lo");
    CHECK(j.at("provenance")[1].at("bound") == "hi");
    for (const json& p : j.at("provenance")) {
        CHECK((p.at("value").is_number_integer() || p.at("value").is_null()));
        CHECK(p.at("rule").is_string());
        CHECK(p.at("anchor").is_string());
    }
}

} // namespace

TEST_SUITE("json_report") {

TEST_CASE("polynomial and matrix forms") {
    CHECK(to_json(LaurentPoly(-1, {2, -5, 2})) == json::parse(R"({"min_degree": -1, "coeffs": [2, -5, 2]})"));
    CHECK(to_json(LaurentPoly()) == json::parse(R"({"min_degree": 0, "coeffs": []})"));
    CHECK(to_json(theta_matrix(1).entries()) == json::parse("[[0, 2], [1, 0]]"));
    CHECK(to_json(IntInterval{1, std::nullopt}) == json::parse(R"({"lo": 1, "hi": null})"));
}

TEST_CASE("readers round trip") {
    const LaurentPoly big = pow(LaurentPoly(0, {1000000, 1}), 5);
    CHECK(laurent_from_json(to_json(big)) == big);
    CHECK(to_json(big)["coeffs"][0].is_string());
    const IntMatrix m = theta_matrix(3).entries();
    CHECK(matrix_from_json(to_json(m)) == m);
    CHECK(integer_from_json(json::parse("18446744073709551615")) == Integer("18446744073709551615"));
    CHECK_THROWS_AS(laurent_from_json(json::parse("[1, 2]")), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(json::parse("[1, 2]")), std::invalid_argument);
    CHECK_THROWS_AS(integer_from_json(json::parse(R"("12x")")), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(json::parse("[[1, 2], [3]]")), std::invalid_argument);
}

TEST_CASE("report schema") {
    for (const char* text : {"trefoil", "unknot", "wh0(kfam(2))", "atom(J, genus=2) # fig8", "ksat(fig8, fig8, 2, 3)"}) {
        const json j = to_json(make_report(parse(text)));
        CHECK(j.size() == 4);
        CHECK(j.at("expression").is_string());
        check_facts_schema(j.at("facts"));
        check_fog_schema(j.at("fog"));
        CHECK(j.at("warnings").is_array());
    }
}

TEST_CASE("report mirrors the engines") {
    const Report r = make_report(parse("wh0(kfam(2))"));
    CHECK(r.expression == "wh0(kfam(2), clasp=+)");
    CHECK(r.facts.genus == IntInterval::point(1));
    CHECK(*r.facts.alexander == LaurentPoly::constant(1));
    CHECK(r.facts.slice == TriState::yes);
    CHECK(r.fog.interval == IntInterval::point(3));
    CHECK(r.warnings.empty());
    CHECK(make_report(parse("wh0(atom(J, genus=1))")).warnings.size() == 1);
}

TEST_CASE("table rendering") {
    const std::string t = render_table(make_report(parse("trefoil")));
    CHECK(t.rfind("expression  trefoil\n", 0) == 0);
    CHECK(t.find("alexander   t^2 - t + 1\n") != std::string::npos);
    CHECK(t.find("g1          [2, 2]\n") != std::string::npos);
    CHECK(t.find("warnings\n  (none)\n") != std::string::npos);
    CHECK(t.find(" \n") == std::string::npos);
    CHECK(t == render_table(make_report(parse("trefoil"))));
}

TEST_CASE("column padding") {
    CHECK(pad_columns({{"a", "bb"}, {"ccc", "d"}}) == "a    bb\nccc  d\n");
    CHECK(pad_columns({{"x", ""}}) == "x\n");
}

TEST_CASE("family rows") {
    const auto rows = family_rows(3);
    REQUIRE(rows.size() == 3);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].g1_lo == static_cast<std::int64_t>(i) + 2);
        CHECK(rows[i].g1_hi == rows[i].g1_lo);
        CHECK(rows[i].genus == IntInterval::point(1));
        CHECK(rows[i].alexander == "1");
        CHECK(rows[i].slice == TriState::yes);
    }
    CHECK(family_rows(1).size() == 1);
    CHECK(family_rows(12).back().g1_lo == 13);
    CHECK_THROWS_AS(family_rows(0), std::invalid_argument);
    CHECK_THROWS_AS(family_rows(13), std::invalid_argument);
}

}
