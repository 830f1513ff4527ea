#include "knotfog/report.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "knotfog/json_io.hpp"
#include "knotfog/validate.hpp"

namespace knotfog {

Report make_report(const KnotExpr& e) {
    FogEngine engine;
    Report r;
    r.expression = render(e);
    r.fog = engine.fog(e);
    r.facts = engine.classical().facts(e);
    r.warnings = validate(e);
    return r;
}

std::string pad_columns(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (widths.size() <= c)
                widths.push_back(0);
            widths[c] = std::max(widths[c], row[c].size());
        }
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size())
                line += std::string(widths[c] - row[c].size() + 2, ' ');
        }
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        out += line + '\n';
    }
    return out;
}

namespace {

std::string hi_text(const std::optional<std::int64_t>& hi) { return hi ? std::to_string(*hi) : "inf"; }

} // namespace

std::string render_table(const Report& r) {
    const KnotFacts& f = r.facts;
    std::string out = pad_columns({
        {"expression", r.expression},
        {"genus", to_string(f.genus)},
        {"alexander", f.alexander ? to_string(*f.alexander) : "unknown"},
        {"slice", std::string(to_string(f.slice))},
        {"class R", std::string(to_string(f.in_r))},
        {"trivial", std::string(to_string(f.trivial))},
        {"g1", to_string(r.fog.interval)},
    });

    std::vector<std::vector<std::string>> prov;
    for (const Provenance& p : f.provenance)
        prov.push_back({p.fact, p.rule, p.anchor});
    for (const FogProvenance& p : r.fog.provenance)
        prov.push_back({std::string(p.bound == Bound::lo ? "g1.lo = " : "g1.hi = ") + hi_text(p.value), p.rule,
                        p.anchor});
    out += "\nprovenance\n";
    const std::string body = pad_columns(prov);
    std::size_t start = 0;
    while (start < body.size()) {
        const std::size_t end = body.find('\n', start);
        out += "  " + body.substr(start, end - start) + '\n';
        start = end + 1;
    }

    out += "\nwarnings\n";
    if (r.warnings.empty())
        out += "  (none)\n";
    for (const std::string& w : r.warnings)
        out += "  " + w + '\n';
    return out;
}

nlohmann::json to_json(const Report& r) {
    return {{"expression", r.expression},
            {"facts", to_json(r.facts)},
            {"fog", to_json(r.fog)},
            {"warnings", r.warnings}};
}

std::vector<FamilyRow> family_rows(std::int64_t n_max) {
    if (n_max < 1 || n_max > kMaxFamilyRows)
        throw std::invalid_argument("family table size must satisfy 1 <= n <= " + std::to_string(kMaxFamilyRows));
    std::vector<FamilyRow> rows;
    std::set<std::int64_t> seen;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const KnotExpr e = knot::wh0(knot::kfam(n));
        FogEngine engine;
        const FogResult fog = engine.fog(e);
        const KnotFacts& facts = engine.classical().facts(e);
        FamilyRow row{n,
                      render(e),
                      facts.genus,
                      facts.alexander ? to_string(*facts.alexander) : "unknown",
                      facts.slice,
                      fog.interval.lo,
                      fog.interval.hi};
        const bool ok = facts.genus == IntInterval::point(1) && facts.alexander &&
                        *facts.alexander == LaurentPoly::constant(1) && facts.slice == TriState::yes &&
                        fog.interval.is_point() && seen.insert(fog.interval.lo).second;
        if (!ok)
            throw std::logic_error("family self-check failed at n = " + std::to_string(n));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string render_family_table(const std::vector<FamilyRow>& rows) {
    std::vector<std::vector<std::string>> cells{{"knot", "g", "alexander", "slice", "g1_lo", "g1_hi"}};
    for (const FamilyRow& r : rows)
        cells.push_back({r.knot, r.genus.is_point() ? std::to_string(r.genus.lo) : to_string(r.genus), r.alexander,
                         std::string(to_string(r.slice)), std::to_string(r.g1_lo), hi_text(r.g1_hi)});
    return pad_columns(cells);
}

} // namespace knotfog
