#include "knotfog/validate.hpp"

#include "knotfog/classical.hpp"

namespace knotfog {

namespace {

void walk(const KnotExpr& e, ClassicalEngine& engine, std::vector<std::string>& out) {
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, node::Wh0>) {
                walk(*n.companion, engine, out);
                const KnotFacts& j = engine.facts(*n.companion);
                if (j.trivial != TriState::no)
                    out.push_back("Whitehead closed form requires nontrivial companion: " + render(*n.companion));
                if (j.cable != TriState::no)
                    out.push_back("Whitehead closed form requires noncable companion: " + render(*n.companion));
            } else if constexpr (std::is_same_v<T, node::Ksat>) {
                walk(*n.j, engine, out);
                walk(*n.l, engine, out);
                if (engine.facts(*n.j).in_r != TriState::yes)
                    out.push_back("ksat lower bound requires first companion in class R: " + render(*n.j));
                if (engine.facts(*n.l).in_r != TriState::yes)
                    out.push_back("ksat lower bound requires second companion in class R: " + render(*n.l));
            } else if constexpr (std::is_same_v<T, node::Sum>) {
                walk(*n.left, engine, out);
                walk(*n.right, engine, out);
            }
        },
        e.node());
}

} // namespace

std::vector<std::string> validate(const KnotExpr& e) {
    ClassicalEngine engine;
    std::vector<std::string> out;
    walk(e, engine, out);
    return out;
}

} // namespace knotfog
