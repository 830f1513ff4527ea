#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "knotfog/knot_expr.hpp"

namespace knotfog::acceptance {

/// Seeded generator of well-formed expressions. Leaves are the curated
/// knots, kfam(1..4) and atoms of genus 1..4 with random flags; inner nodes
/// are wh0, ksat with twists in [-3, 3], and sums.
class ExprGenerator {
public:
    explicit ExprGenerator(std::uint64_t seed, int max_depth = 4);

    KnotExpr next();
    std::mt19937_64& engine() { return rng_; }

private:
    KnotExpr leaf();
    KnotExpr expr(int depth);
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

    std::mt19937_64 rng_;
    int max_depth_;
};

// Random text over the expression alphabet, mixing valid fragments with
// noise. Meant for parser fuzzing.
std::string fuzz_text(std::mt19937_64& rng);

// One to three random character edits of `text`.
std::string mutate(std::string text, std::mt19937_64& rng);

} // namespace knotfog::acceptance
