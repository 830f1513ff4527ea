#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "knotfog/classical.hpp"
#include "knotfog/fog.hpp"
#include "knotfog/knot_expr.hpp"

namespace knotfog {

/// Everything the engines produce for one expression. Presentation code
/// only formats these fields.
struct Report {
    std::string expression; // canonical rendering
    KnotFacts facts;
    FogResult fog;
    std::vector<std::string> warnings;
};

Report make_report(const KnotExpr& e);

// Space-padded two-column summary followed by provenance and warnings.
std::string render_table(const Report& r);

// {"expression", "facts": KnotFacts, "fog": FogResult, "warnings": [string]}
nlohmann::json to_json(const Report& r);

struct FamilyRow {
    std::int64_t n;
    std::string knot;
    IntInterval genus;
    std::string alexander; // canonical text
    TriState slice;
    std::int64_t g1_lo;
    std::optional<std::int64_t> g1_hi;
};

inline constexpr std::int64_t kMaxFamilyRows = 12;

// Rows n = 1..n_max for Wh0(K_n). Throws std::invalid_argument unless
// 1 <= n_max <= 12, and std::logic_error if any row breaks the family's
// defining properties (genus one, trivial Alexander polynomial, slice,
// pairwise distinct g1).
std::vector<FamilyRow> family_rows(std::int64_t n_max);
std::string render_family_table(const std::vector<FamilyRow>& rows);

// Left-aligned columns separated by two spaces, no trailing whitespace.
std::string pad_columns(const std::vector<std::vector<std::string>>& rows);

} // namespace knotfog
