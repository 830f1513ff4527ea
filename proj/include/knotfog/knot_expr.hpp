#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>

namespace knotfog {

/// Partial knowledge of a yes/no attribute. Rules may refine `unknown` to a
/// definite value but never flip one definite value to the other.
enum class TriState { no, unknown, yes };

std::string_view to_string(TriState s);

// Combine a current value with a newly derived one. Throws std::logic_error
// when the two are definite and disagree.
TriState refine(TriState current, TriState derived);

enum class Clasp { positive, negative };

class KnotExpr;
using KnotPtr = std::shared_ptr<const KnotExpr>;

namespace node {

struct Unknot {};
struct Trefoil {};
struct Fig8 {};

// Ribbon pretzel knot K_n, n >= 1.
struct Kfam {
    std::int64_t n;
};

// Untwisted Whitehead double of the companion.
struct Wh0 {
    KnotPtr companion;
    Clasp clasp = Clasp::positive;
};

// K(J, L, m, n): J-band with m full twists, L-band with n full twists.
struct Ksat {
    KnotPtr j;
    KnotPtr l;
    std::int64_t m;
    std::int64_t n;
};

// A user-declared nontrivial knot with known genus and optional flags.
struct Atom {
    std::string name;
    std::int64_t genus;
    TriState torus = TriState::unknown;
    TriState cable = TriState::unknown;
    TriState slice = TriState::unknown;
};

// Connected sum.
struct Sum {
    KnotPtr left;
    KnotPtr right;
};

bool operator==(const Unknot&, const Unknot&);
bool operator==(const Trefoil&, const Trefoil&);
bool operator==(const Fig8&, const Fig8&);
bool operator==(const Kfam&, const Kfam&);
bool operator==(const Wh0&, const Wh0&);
bool operator==(const Ksat&, const Ksat&);
bool operator==(const Atom&, const Atom&);
bool operator==(const Sum&, const Sum&);

} // namespace node

/// Immutable construction tree for a knot. Subtrees are shared, so copies
/// are cheap and equality is structural.
class KnotExpr {
public:
    using Node = std::variant<node::Unknot, node::Trefoil, node::Fig8, node::Kfam, node::Wh0, node::Ksat,
                              node::Atom, node::Sum>;

    template <class T>
        requires std::is_constructible_v<Node, T&&>
    KnotExpr(T&& n) : node_(std::forward<T>(n)) {}

    const Node& node() const { return node_; }

    template <class T>
    const T* as() const {
        return std::get_if<T>(&node_);
    }

    friend bool operator==(const KnotExpr& a, const KnotExpr& b) { return a.node_ == b.node_; }

private:
    Node node_;
};

// Limits enforced by the constructors below and by the parser.
inline constexpr std::int64_t kMaxKfamIndex = 1000;
inline constexpr std::int64_t kMaxAtomGenus = 1'000'000'000;
inline constexpr std::int64_t kMaxTwist = 1'000'000'000;

namespace knot {

// Constructors validate ranges and throw std::invalid_argument.
KnotExpr unknot();
KnotExpr trefoil();
KnotExpr fig8();
KnotExpr kfam(std::int64_t n);
KnotExpr wh0(KnotExpr companion, Clasp clasp = Clasp::positive);
KnotExpr ksat(KnotExpr j, KnotExpr l, std::int64_t m, std::int64_t n);
KnotExpr atom(std::string name, std::int64_t genus, TriState torus = TriState::unknown,
              TriState cable = TriState::unknown, TriState slice = TriState::unknown);
KnotExpr sum(KnotExpr left, KnotExpr right);

} // namespace knot

// Number of nodes on the longest root-to-leaf path.
std::size_t depth(const KnotExpr& e);

// Canonical text; parse(render(e)) == e. Optional arguments are always
// printed.
std::string render(const KnotExpr& e);

} // namespace knotfog
