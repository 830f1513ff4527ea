#include "knotfog/acceptance/criteria.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <set>
#include <sstream>

#include "knotfog/acceptance/oracles.hpp"
#include "knotfog/acceptance/random_expr.hpp"
#include "knotfog/classical.hpp"
#include "knotfog/fog.hpp"
#include "knotfog/parser.hpp"

namespace knotfog::acceptance {

namespace {

// Runs `body`, which fills passed/detail, and stamps timing. Any exception
// escaping the body fails the criterion.
template <class F>
CriterionResult timed(int id, std::string name, double limit, F&& body) {
    CriterionResult r;
    r.id = id;
    r.name = std::move(name);
    r.time_limit = limit;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("unexpected exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.passed && limit > 0 && r.seconds >= limit) {
        r.passed = false;
        r.detail += " (time limit exceeded)";
    }
    return r;
}

// Collects failures, keeping only the first few messages.
struct Tally {
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::string first;

    void check(bool ok, const std::string& what) {
        ++checked;
        if (ok)
            return;
        if (failures++ == 0)
            first = what;
    }
    void finish(CriterionResult& r, const std::string& summary) const {
        r.passed = failures == 0;
        r.detail = summary + ", " + std::to_string(failures) + " violations";
        if (failures)
            r.detail += "; first: " + first;
    }
};

LaurentPoly pretzel_base() { return LaurentPoly(0, {-2, 5, -2}); }

} // namespace

SeifertMatrix corrupted_theta(std::int64_t n) {
    IntMatrix m = theta_matrix(n).entries();
    m(0, 1) = -m(0, 1);
    return SeifertMatrix(m);
}

CriterionResult pretzel_identity(const ThetaBuilder& theta) {
    return timed(1, "pretzel polynomial identity", 1.0, [&](CriterionResult& r) {
        Tally t;
        for (std::int64_t n = 1; n <= 6; ++n) {
            const LaurentPoly got = canonical(alexander_polynomial(theta(n)));
            const LaurentPoly want = canonical(pow(pretzel_base(), static_cast<std::uint64_t>(n)));
            t.check(got == want, "n = " + std::to_string(n) + ": " + to_string(got) + " != " + to_string(want));
        }
        t.finish(r, "n = 1..6");
    });
}

CriterionResult family_table() {
    return timed(2, "Whitehead double family table", 1.0, [](CriterionResult& r) {
        Tally t;
        std::set<std::int64_t> values;
        for (std::int64_t n = 1; n <= 8; ++n) {
            const KnotExpr e = knot::wh0(knot::kfam(n));
            const KnotFacts f = facts_of(e);
            const FogResult g1 = fog_of(e);
            const std::string tag = render(e) + ": ";
            t.check(f.genus == IntInterval::point(1), tag + "genus " + to_string(f.genus));
            t.check(f.alexander && *f.alexander == LaurentPoly::constant(1), tag + "alexander not 1");
            t.check(f.slice == TriState::yes, tag + "slice " + std::string(to_string(f.slice)));
            t.check(g1.interval == IntInterval::point(n + 1), tag + "g1 " + to_string(g1.interval));
            values.insert(g1.interval.lo);
        }
        t.check(values.size() == 8, "g1 values not pairwise distinct");
        t.finish(r, "n = 1..8");
    });
}

CriterionResult twice_genus(std::uint64_t seed) {
    return timed(3, "twice-genus lower bound", 5.0, [&](CriterionResult& r) {
        ExprGenerator gen(seed);
        Tally t;
        for (int i = 0; i < 1000; ++i) {
            const KnotExpr e = gen.next();
            const std::int64_t lo = fog_of(e).interval.lo;
            const std::int64_t g = genus_of(e).lo;
            t.check(lo >= 2 * g, render(e) + ": lo " + std::to_string(lo) + " < 2 * " + std::to_string(g));
        }
        t.finish(r, std::to_string(t.checked) + " expressions");
    });
}

CriterionResult subadditivity(std::uint64_t seed) {
    return timed(4, "subadditivity under connected sum", 0.0, [&](CriterionResult& r) {
        ExprGenerator gen(seed + 1);
        const auto finite = [&] {
            for (;;) {
                KnotExpr e = gen.next();
                if (fog_of(e).interval.hi)
                    return e;
            }
        };
        Tally t;
        for (int i = 0; i < 500; ++i) {
            const KnotExpr a = finite();
            const KnotExpr b = finite();
            const std::int64_t ha = *fog_of(a).interval.hi;
            const std::int64_t hb = *fog_of(b).interval.hi;
            const FogResult s = fog_of(knot::sum(a, b));
            t.check(s.interval.hi && *s.interval.hi <= ha + hb,
                    render(knot::sum(a, b)) + ": hi " + to_string(s.interval) + " vs " + std::to_string(ha + hb));
        }
        t.finish(r, std::to_string(t.checked) + " pairs");
    });
}

CriterionResult basis_enumerator() {
    return timed(5, "basis enumerator vs closed forms and brute force", 5.0, [](CriterionResult& r) {
        Tally t;
        const auto agree = [&](std::int64_t g, std::int64_t h, std::int64_t closed) {
            const BasisWitness w = basis_min_lb(g, h);
            const BasisWitness b = brute_force_basis_min(g, h);
            const std::string tag = "(" + std::to_string(g) + ", " + std::to_string(h) + "): ";
            t.check(w.value == closed, tag + "value " + std::to_string(w.value) + " != " + std::to_string(closed));
            t.check(w == b, tag + "witness differs from brute force");
        };
        for (std::int64_t g = 1; g <= 6; ++g)
            agree(g, 0, g + 1);
        for (std::int64_t g = 1; g <= 5; ++g)
            for (std::int64_t h = 1; h <= 5; ++h)
                agree(g, h, g + h);
        t.finish(r, "31 genus pairs");
    });
}

CriterionResult congruence_invariance(std::uint64_t seed) {
    return timed(6, "congruence invariance", 0.0, [&](CriterionResult& r) {
        std::mt19937_64 rng(seed + 2);
        Tally t;
        for (int i = 0; i < 200; ++i) {
            const std::size_t genus = 1 + rng() % 3;
            IntMatrix m(2 * genus, 2 * genus);
            for (std::size_t a = 0; a < m.rows(); ++a)
                for (std::size_t b = a; b < m.cols(); ++b)
                    m(a, b) = m(b, a) = static_cast<long>(rng() % 7) - 3;
            for (std::size_t k = 0; k < genus; ++k)
                m(2 * k, 2 * k + 1) += 1;
            const SeifertMatrix v(m);
            const BasisChange p = random_symplectic(static_cast<std::int64_t>(genus), rng(), 1 + rng() % 12);
            const SeifertMatrix w = change_basis(v, p);
            const std::string tag = "case " + std::to_string(i) + ": ";
            t.check(p.is_symplectic(), tag + "basis change not symplectic");
            t.check(unit_equivalent(alexander_polynomial(w), alexander_polynomial(v)), tag + "alexander changed");
            t.check(intersection_form(v).is_standard && intersection_form(w).is_standard,
                    tag + "intersection form not standard");
        }
        t.finish(r, "200 (V, P) pairs");
    });
}

CriterionResult alexander_sanity(std::uint64_t seed) {
    return timed(7, "Alexander polynomial sanity", 0.0, [&](CriterionResult& r) {
        ExprGenerator gen(seed + 3);
        Tally t;
        std::size_t produced = 0;
        for (int i = 0; produced < 1000 && i < 100000; ++i) {
            const KnotExpr e = gen.next();
            const std::optional<LaurentPoly> d = alexander_of(e);
            if (!d)
                continue;
            ++produced;
            const Rational at_one = evaluate(*d, 1);
            t.check(abs(at_one) == 1, render(e) + ": Δ(1) = " + at_one.get_str());
        }
        t.check(produced >= 1000, "only " + std::to_string(produced) + " expressions with a known polynomial");
        const KnotExpr companions[] = {knot::unknot(), knot::trefoil(), knot::kfam(2)};
        for (std::int64_t m = -5; m <= 5; ++m)
            for (const KnotExpr& j : companions) {
                const KnotExpr e = knot::ksat(j, knot::unknot(), m, -1);
                const std::optional<LaurentPoly> d = alexander_of(e);
                t.check(d && unit_equivalent(*d, twist_knot_polynomial(m)), render(e) + ": not the twist polynomial");
            }
        for (std::int64_t m = -5; m <= 5; ++m)
            for (std::int64_t n = -5; n <= 5; ++n) {
                if (m * n != 0)
                    continue;
                const KnotExpr e = knot::ksat(knot::trefoil(), knot::fig8(), m, n);
                const std::optional<LaurentPoly> d = alexander_of(e);
                t.check(d && unit_equivalent(*d, LaurentPoly::constant(1)), render(e) + ": polynomial not trivial");
            }
        t.finish(r, std::to_string(produced) + " random polynomials, twist and untwisted families");
    });
}

CriterionResult point_values() {
    return timed(8, "exact point values", 0.0, [](CriterionResult& r) {
        Tally t;
        const std::pair<KnotExpr, std::int64_t> cases[] = {
            {knot::trefoil(), 2},
            {knot::fig8(), 2},
            {knot::ksat(knot::kfam(1), knot::kfam(2), 0, 0), 3},
            {knot::unknot(), 0},
        };
        for (const auto& [e, v] : cases) {
            const IntInterval got = fog_of(e).interval;
            t.check(got == IntInterval::point(v), render(e) + ": " + to_string(got));
        }
        t.finish(r, "4 knots");
    });
}

CriterionResult parser_round_trip(std::uint64_t seed) {
    return timed(9, "parser round trip and fuzzing", 0.0, [&](CriterionResult& r) {
        ExprGenerator gen(seed + 4);
        Tally t;
        for (int i = 0; i < 1000; ++i) {
            const KnotExpr e = gen.next();
            const std::string text = render(e);
            bool ok = false;
            try {
                ok = parse(text) == e;
            } catch (const ParseError&) {
            }
            t.check(ok, "round trip failed: " + text);
        }
        std::mt19937_64& rng = gen.engine();
        std::size_t accepted = 0;
        for (int i = 0; i < 10000; ++i) {
            const std::string text = i % 2 ? fuzz_text(rng) : mutate(render(gen.next()), rng);
            try {
                const KnotExpr e = parse(text);
                ++accepted;
                t.check(parse(render(e)) == e, "unstable rendering: " + text);
            } catch (const ParseError&) {
            } catch (const std::exception& err) {
                t.check(false, "non-parse exception on '" + text + "': " + err.what());
            }
        }
        t.finish(r, "1000 round trips, 10000 fuzz inputs (" + std::to_string(accepted) + " accepted)");
    });
}

std::vector<CriterionResult> run_all(const Options& options) {
    return {
        pretzel_identity(options.theta), family_table(),           twice_genus(options.seed),
        subadditivity(options.seed),     basis_enumerator(),       congruence_invariance(options.seed),
        alexander_sanity(options.seed),  point_values(),           parser_round_trip(options.seed),
    };
}

std::string format_result(const CriterionResult& r) {
    char timing[64];
    if (r.time_limit > 0)
        std::snprintf(timing, sizeof timing, "%.3f s (limit %g s)", r.seconds, r.time_limit);
    else
        std::snprintf(timing, sizeof timing, "%.3f s", r.seconds);
    std::ostringstream out;
    out << (r.passed ? "PASS" : "FAIL") << "  C" << r.id << "  " << r.name << "  " << timing << "  " << r.detail;
    return out.str();
}

} // namespace knotfog::acceptance
