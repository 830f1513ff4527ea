#include "knotfog/knot_expr.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace knotfog {

std::string_view to_string(TriState s) {
    switch (s) {
    case TriState::yes:
        return "yes";
    case TriState::no:
        return "no";
    case TriState::unknown:
        break;
    }
    return "unknown";
}

TriState refine(TriState current, TriState derived) {
    if (current == TriState::unknown)
        return derived;
    if (derived != TriState::unknown && derived != current)
        throw std::logic_error("contradictory derivation: " + std::string(to_string(current)) + " vs " +
                               std::string(to_string(derived)));
    return current;
}

namespace node {

bool operator==(const Unknot&, const Unknot&) { return true; }
bool operator==(const Trefoil&, const Trefoil&) { return true; }
bool operator==(const Fig8&, const Fig8&) { return true; }
bool operator==(const Kfam& a, const Kfam& b) { return a.n == b.n; }
bool operator==(const Wh0& a, const Wh0& b) { return a.clasp == b.clasp && *a.companion == *b.companion; }
bool operator==(const Ksat& a, const Ksat& b) { return a.m == b.m && a.n == b.n && *a.j == *b.j && *a.l == *b.l; }
bool operator==(const Atom& a, const Atom& b) {
    return a.name == b.name && a.genus == b.genus && a.torus == b.torus && a.cable == b.cable && a.slice == b.slice;
}
bool operator==(const Sum& a, const Sum& b) { return *a.left == *b.left && *a.right == *b.right; }

} // namespace node

namespace knot {

namespace {
KnotPtr share(KnotExpr e) { return std::make_shared<const KnotExpr>(std::move(e)); }
} // namespace

KnotExpr unknot() { return node::Unknot{}; }
KnotExpr trefoil() { return node::Trefoil{}; }
KnotExpr fig8() { return node::Fig8{}; }

KnotExpr kfam(std::int64_t n) {
    if (n < 1 || n > kMaxKfamIndex)
        throw std::invalid_argument("kfam index must satisfy 1 <= n <= " + std::to_string(kMaxKfamIndex));
    return node::Kfam{n};
}

KnotExpr wh0(KnotExpr companion, Clasp clasp) { return node::Wh0{share(std::move(companion)), clasp}; }

KnotExpr ksat(KnotExpr j, KnotExpr l, std::int64_t m, std::int64_t n) {
    if (m < -kMaxTwist || m > kMaxTwist || n < -kMaxTwist || n > kMaxTwist)
        throw std::invalid_argument("ksat twist counts must satisfy |m|, |n| <= " + std::to_string(kMaxTwist));
    return node::Ksat{share(std::move(j)), share(std::move(l)), m, n};
}

KnotExpr atom(std::string name, std::int64_t genus, TriState torus, TriState cable, TriState slice) {
    const bool valid_name = !name.empty() && std::isalpha(static_cast<unsigned char>(name.front())) &&
                            std::all_of(name.begin(), name.end(), [](char c) {
                                return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
                            });
    if (!valid_name)
        throw std::invalid_argument("atom name must match letter (letter|digit|_)*");
    if (genus < 1 || genus > kMaxAtomGenus)
        throw std::invalid_argument("atom genus must satisfy 1 <= genus <= " + std::to_string(kMaxAtomGenus));
    return node::Atom{std::move(name), genus, torus, cable, slice};
}

KnotExpr sum(KnotExpr left, KnotExpr right) { return node::Sum{share(std::move(left)), share(std::move(right))}; }

} // namespace knot

std::size_t depth(const KnotExpr& e) {
    return std::visit(
        [](const auto& n) -> std::size_t {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, node::Wh0>)
                return 1 + depth(*n.companion);
            else if constexpr (std::is_same_v<T, node::Ksat>)
                return 1 + std::max(depth(*n.j), depth(*n.l));
            else if constexpr (std::is_same_v<T, node::Sum>)
                return 1 + std::max(depth(*n.left), depth(*n.right));
            else
                return 1;
        },
        e.node());
}

namespace {

void render_into(const KnotExpr& e, std::string& out);

void render_term(const KnotExpr& e, std::string& out) {
    if (e.as<node::Sum>()) {
        out += '(';
        render_into(e, out);
        out += ')';
    } else {
        render_into(e, out);
    }
}

void render_into(const KnotExpr& e, std::string& out) {
    std::visit(
        [&out](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, node::Unknot>) {
                out += "unknot";
            } else if constexpr (std::is_same_v<T, node::Trefoil>) {
                out += "trefoil";
            } else if constexpr (std::is_same_v<T, node::Fig8>) {
                out += "fig8";
            } else if constexpr (std::is_same_v<T, node::Kfam>) {
                out += "kfam(" + std::to_string(n.n) + ")";
            } else if constexpr (std::is_same_v<T, node::Wh0>) {
                out += "wh0(";
                render_into(*n.companion, out);
                out += n.clasp == Clasp::positive ? ", clasp=+)" : ", clasp=-)";
            } else if constexpr (std::is_same_v<T, node::Ksat>) {
                out += "ksat(";
                render_into(*n.j, out);
                out += ", ";
                render_into(*n.l, out);
                out += ", " + std::to_string(n.m) + ", " + std::to_string(n.n) + ")";
            } else if constexpr (std::is_same_v<T, node::Atom>) {
                out += "atom(" + n.name + ", genus=" + std::to_string(n.genus);
                out += ", torus=" + std::string(to_string(n.torus));
                out += ", cable=" + std::string(to_string(n.cable));
                out += ", slice=" + std::string(to_string(n.slice)) + ")";
            } else {
                // '#' is left-associative, so only a right-hand sum needs parentheses.
                render_into(*n.left, out);
                out += " # ";
                render_term(*n.right, out);
            }
        },
        e.node());
}

} // namespace

std::string render(const KnotExpr& e) {
    std::string out;
    render_into(e, out);
    return out;
}

} // namespace knotfog
