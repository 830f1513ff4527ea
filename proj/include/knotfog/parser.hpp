#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "knotfog/knot_expr.hpp"

namespace knotfog {

/// Syntax, arity or range error. `position` is the 0-based byte offset of
/// the offending token in the input.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message);

    std::size_t position() const { return position_; }
    const std::string& detail() const { return detail_; }

private:
    std::size_t position_;
    std::string detail_;
};

// Longest root-to-leaf path accepted by the parser (counts nodes, with each
// '#' adding one level).
inline constexpr std::size_t kMaxParseDepth = 512;

/// Parse the knot-construction language:
///
///     expr  := term ( "#" term )*
///     term  := "unknot" | "trefoil" | "fig8"
///            | "kfam" "(" INT ")"
///            | "wh0" "(" expr [ "," "clasp" "=" ("+"|"-") ] ")"
///            | "ksat" "(" expr "," expr "," INT "," INT ")"
///            | "atom" "(" NAME "," "genus" "=" INT { "," FLAG "=" TRI } ")"
///            | "(" expr ")"
///     FLAG  := "torus" | "cable" | "slice"   (each at most once)
///     TRI   := "yes" | "no" | "unknown"
///
/// `#` is left-associative. Whitespace is insignificant.
KnotExpr parse(std::string_view text);

} // namespace knotfog
