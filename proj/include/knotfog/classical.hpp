#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "knotfog/knot_expr.hpp"
#include "knotfog/laurent.hpp"

namespace knotfog {

/// Closed integer interval [lo, hi] with lo >= 0; an empty `hi` is +infinity.
struct IntInterval {
    std::int64_t lo = 0;
    std::optional<std::int64_t> hi;

    static IntInterval point(std::int64_t v) { return {v, v}; }
    bool is_point() const { return hi && *hi == lo; }
    bool is_zero() const { return lo == 0 && hi && *hi == 0; }

    friend bool operator==(const IntInterval&, const IntInterval&) = default;
};

IntInterval operator+(const IntInterval& a, const IntInterval& b);
std::string to_string(const IntInterval& i);

struct Provenance {
    std::string fact;
    std::string rule;
    std::string anchor;

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// Classical invariants derived for one expression.
///
/// `trivial` is yes exactly when genus = [0,0]; `in_r` = yes implies
/// `trivial` = no; a present Alexander polynomial is in canonical form and
/// satisfies |Δ(1)| = 1. `torus` and `cable` are the curated or declared
/// flags used by the class-R and Whitehead guards.
struct KnotFacts {
    IntInterval genus;
    std::optional<LaurentPoly> alexander;
    TriState slice = TriState::unknown;
    TriState in_r = TriState::unknown;
    TriState trivial = TriState::unknown;
    TriState torus = TriState::unknown;
    TriState cable = TriState::unknown;
    std::vector<Provenance> provenance;
};

/// Lower bound |winding| * g(companion) + g(pattern) for a satellite's genus.
std::int64_t schubert_bound(std::int64_t winding, std::int64_t g_companion, std::int64_t g_pattern);

/// Whether K(J, L, m, n) is a satellite of J: yes iff n != 0 or L is
/// nontrivial, no iff n = 0 and L is trivial.
TriState is_satellite_of_first(const node::Ksat& k);

/// Evaluates expressions bottom-up. Results are cached per node for the
/// lifetime of the engine, so shared subtrees are evaluated once.
class ClassicalEngine {
public:
    const KnotFacts& facts(const KnotExpr& e);

private:
    KnotFacts compute(const KnotExpr& e);

    std::unordered_map<const KnotExpr*, KnotFacts> memo_;
};

KnotFacts facts_of(const KnotExpr& e);
IntInterval genus_of(const KnotExpr& e);
std::optional<LaurentPoly> alexander_of(const KnotExpr& e);
TriState slice_of(const KnotExpr& e);
TriState class_r_of(const KnotExpr& e);
TriState trivial_of(const KnotExpr& e);

} // namespace knotfog
