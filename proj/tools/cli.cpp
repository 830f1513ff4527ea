#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <optional>

#include <CLI11.hpp>

#include "knotfog/acceptance/criteria.hpp"
#include "knotfog/parser.hpp"
#include "knotfog/report.hpp"

namespace knotfog::cli {

namespace {

int cmd_invariants(const std::string& text, bool json, std::ostream& out, std::ostream& err) {
    std::optional<KnotExpr> e;
    try {
        e.emplace(parse(text));
    } catch (const ParseError& p) {
        err << p.what() << '\n' << "  " << text << '\n' << "  " << std::string(p.position(), ' ') << "^\n";
        return kExitUsage;
    }
    const Report report = make_report(*e);
    if (json)
        out << to_json(report).dump(2) << '\n';
    else
        out << render_table(report);
    return kExitOk;
}

int cmd_family_table(std::int64_t n, std::ostream& out, std::ostream& err) {
    if (n < 1 || n > kMaxFamilyRows) {
        err << "family-table: --n must be between 1 and " << kMaxFamilyRows << '\n';
        return kExitUsage;
    }
    out << render_family_table(family_rows(n));
    return kExitOk;
}

int cmd_selftest(std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    const auto results = acceptance::run_all();
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::size_t failed = 0;
    for (const auto& r : results) {
        out << acceptance::format_result(r) << '\n';
        failed += r.passed ? 0 : 1;
    }
    char line[96];
    std::snprintf(line, sizeof line, "%zu/%zu criteria passed in %.3f s", results.size() - failed, results.size(),
                  total);
    out << line << '\n';
    return failed == 0 ? kExitOk : kExitFailure;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Classical and first-order genus invariants of knot expressions", "knotfog"};
    app.require_subcommand(1);

    std::string expr;
    bool json = false;
    auto* invariants = app.add_subcommand("invariants", "Report the invariants of an expression");
    invariants->add_option("expr", expr, "Knot expression, e.g. 'wh0(kfam(2))'")->required();
    invariants->add_flag("--json", json, "Emit JSON instead of a table");

    std::int64_t n = 0;
    auto* family = app.add_subcommand("family-table", "Tabulate Wh0(K_n) for n = 1..k");
    family->add_option("--n", n, "Number of rows (1..12)")->required();

    auto* selftest = app.add_subcommand("selftest", "Run the acceptance criteria");

    std::vector<const char*> argv{"knotfog"};
    for (const std::string& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (invariants->parsed())
            return cmd_invariants(expr, json, out, err);
        if (family->parsed())
            return cmd_family_table(n, out, err);
        if (selftest->parsed())
            return cmd_selftest(out);
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

} // namespace knotfog::cli
