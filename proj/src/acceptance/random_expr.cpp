#include "knotfog/acceptance/random_expr.hpp"

#include <array>
#include <string_view>

namespace knotfog::acceptance {

ExprGenerator::ExprGenerator(std::uint64_t seed, int max_depth) : rng_(seed), max_depth_(max_depth) {}

std::int64_t ExprGenerator::uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
}

KnotExpr ExprGenerator::leaf() {
    static constexpr std::array<TriState, 3> kTri{TriState::no, TriState::unknown, TriState::yes};
    static constexpr std::array<std::string_view, 4> kNames{"J", "L", "A1", "knot_x"};
    switch (uniform(0, 5)) {
    case 0: return knot::unknot();
    case 1: return knot::trefoil();
    case 2: return knot::fig8();
    case 3:
    case 4: return knot::kfam(uniform(1, 4));
    default: {
        const std::string name(kNames[uniform(0, 3)]);
        const std::int64_t genus = uniform(1, 4);
        const TriState torus = kTri[uniform(0, 2)];
        const TriState cable = kTri[uniform(0, 2)];
        const TriState slice = kTri[uniform(0, 2)];
        return knot::atom(name, genus, torus, cable, slice);
    }
    }
}

KnotExpr ExprGenerator::expr(int depth) {
    if (depth <= 1 || uniform(0, 3) == 0)
        return leaf();
    switch (uniform(0, 2)) {
    case 0: {
        KnotExpr j = expr(depth - 1);
        const Clasp clasp = uniform(0, 1) ? Clasp::positive : Clasp::negative;
        return knot::wh0(std::move(j), clasp);
    }
    case 1: {
        KnotExpr j = expr(depth - 1);
        KnotExpr l = expr(depth - 1);
        const std::int64_t m = uniform(-3, 3);
        const std::int64_t n = uniform(-3, 3);
        return knot::ksat(std::move(j), std::move(l), m, n);
    }
    default: {
        KnotExpr a = expr(depth - 1);
        KnotExpr b = expr(depth - 1);
        return knot::sum(std::move(a), std::move(b));
    }
    }
}

KnotExpr ExprGenerator::next() { return expr(max_depth_); }

std::string fuzz_text(std::mt19937_64& rng) {
    static constexpr std::array<std::string_view, 26> kPieces{
        "unknot", "trefoil", "fig8", "kfam(", "wh0(", "ksat(", "atom(", "genus=", "torus=", "cable=", "slice=",
        "clasp=", "yes",     "no",   "unknown", "(",  ")",     ",",     "#",     "+",      "-",      "0",
        "7",      "99999999999999999999", " ", "x"};
    std::string out;
    const std::size_t pieces = rng() % 16;
    for (std::size_t i = 0; i < pieces; ++i) {
        if (rng() % 8 == 0)
            out.push_back(static_cast<char>(rng() % 256));
        else
            out += kPieces[rng() % kPieces.size()];
    }
    return out;
}

std::string mutate(std::string text, std::mt19937_64& rng) {
    const std::size_t edits = 1 + rng() % 3;
    for (std::size_t i = 0; i < edits; ++i) {
        const std::size_t at = text.empty() ? 0 : rng() % (text.size() + 1);
        switch (rng() % 3) {
        case 0:
            if (at < text.size())
                text.erase(at, 1);
            break;
        case 1: text.insert(at, 1, "()#,=-+0a "[rng() % 10]); break;
        default:
            if (at < text.size())
                text[at] = static_cast<char>(rng() % 128);
        }
    }
    return text;
}

} // namespace knotfog::acceptance
