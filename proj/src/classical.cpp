#include "knotfog/classical.hpp"

#include <cstdlib>
#include <stdexcept>

#include "knotfog/seifert.hpp"

namespace knotfog {

IntInterval operator+(const IntInterval& a, const IntInterval& b) {
    IntInterval r{a.lo + b.lo, std::nullopt};
    if (a.hi && b.hi)
        r.hi = *a.hi + *b.hi;
    return r;
}

std::string to_string(const IntInterval& i) {
    return "[" + std::to_string(i.lo) + ", " + (i.hi ? std::to_string(*i.hi) : std::string("inf")) + "]";
}

std::int64_t schubert_bound(std::int64_t winding, std::int64_t g_companion, std::int64_t g_pattern) {
    return std::llabs(winding) * g_companion + g_pattern;
}

namespace {

TriState satellite_of_first(const node::Ksat& k, TriState l_trivial) {
    if (k.n != 0)
        return TriState::yes;
    if (l_trivial == TriState::no)
        return TriState::yes;
    if (l_trivial == TriState::yes)
        return TriState::no;
    return TriState::unknown;
}

TriState trivial_from_genus(const IntInterval& g) {
    if (g.is_zero())
        return TriState::yes;
    return g.lo >= 1 ? TriState::no : TriState::unknown;
}

TriState both_yes(TriState a, TriState b) {
    return a == TriState::yes && b == TriState::yes ? TriState::yes : TriState::unknown;
}

LaurentPoly seifert_alexander(IntMatrix v) { return canonical(alexander_polynomial(SeifertMatrix(std::move(v)))); }

const LaurentPoly& pretzel_factor() {
    static const LaurentPoly f(0, {-2, 5, -2});
    return f;
}

struct Rule {
    const char* name;
    const char* anchor;
};

// Rule catalogue. Anchors state the mathematical fact the rule relies on.
constexpr Rule kUnknotGenus{"unknot", "the unknot bounds a disc"};
constexpr Rule kBuiltinGenus{"builtin-genus", "trefoil and figure-eight bound genus-one surfaces and have deg(Alexander) = 2"};
constexpr Rule kPretzelGenus{"pretzel-genus", "g(K_n) = n: V_n has genus n and deg (-2t^2+5t-2)^n = 2n"};
constexpr Rule kAtomGenus{"atom-declared", "genus declared by the atom"};
constexpr Rule kSumGenus{"genus-additivity", "g(K # J) = g(K) + g(J)"};
constexpr Rule kWhGenus{"whitehead-genus", "Wh0(J) has genus one for nontrivial J and is the unknot for trivial J"};
constexpr Rule kKsatSatellite{"ksat-satellite", "K(J,L,m,n) is a satellite of J iff n != 0 or L nontrivial, so it has genus one"};
constexpr Rule kKsatSymmetric{"ksat-satellite-symmetric",
                              "K(J,L,m,n) = K(L,J,n,m) by symmetry of the diagram; satellite of L, so genus one"};
constexpr Rule kKsatTrivial{"ksat-trivial", "K(J,unknot,m,0) and K(unknot,L,0,n) are the unknot"};
constexpr Rule kKsatOpen{"ksat-undetermined", "standard genus-one surface; nontriviality not established"};

constexpr Rule kSeifertDet{"seifert-determinant", "Alexander polynomial = det(V - tV^T)"};
constexpr Rule kPretzelAlex{"pretzel-closed-form", "Alexander(K_n) = (-2t^2+5t-2)^n"};
constexpr Rule kWhAlex{"whitehead-trivial-alexander", "untwisted Whitehead doubles have trivial Alexander polynomial"};
constexpr Rule kKsatAlex{"ksat-seifert-model", "Alexander(K(J,L,m,n)) = det([[m,1],[0,n]] - t[[m,0],[1,n]]) = mn t^2 + (1-2mn) t + mn"};
constexpr Rule kProductAlex{"product-rule", "Alexander(K # J) = Alexander(K) Alexander(J)"};
constexpr Rule kNoAlex{"no-rule", "no Alexander polynomial derivable"};

constexpr Rule kUnknotSlice{"unknot-slice", "the unknot bounds a disc in the 4-ball"};
constexpr Rule kCuratedSlice{"curated-flag", "trefoil and figure-eight are not slice (signature / Fox-Milnor)"};
constexpr Rule kRibbonSlice{"ribbon-pretzel", "K_n is ribbon and ribbon knots are slice"};
constexpr Rule kAtomSlice{"atom-declared", "slice flag declared by the atom"};
constexpr Rule kWhSlice{"whitehead-of-slice", "the untwisted Whitehead double of a slice knot is slice"};
constexpr Rule kSumSlice{"sum-of-slice", "a connected sum of slice knots is slice"};
constexpr Rule kTrivialSlice{"trivial-knot", "an expression of genus zero is the unknot"};
constexpr Rule kNoSlice{"no-rule", "sliceness not derivable"};

constexpr Rule kClassR{"class-R-definition", "R = nontrivial knots that are neither torus nor cable knots"};
constexpr Rule kTrivial{"genus-zero-iff-unknot", "a knot is trivial iff its genus is zero"};

void note(KnotFacts& f, std::string fact, const Rule& r) { f.provenance.push_back({std::move(fact), r.name, r.anchor}); }

} // namespace

TriState is_satellite_of_first(const node::Ksat& k) { return satellite_of_first(k, trivial_of(*k.l)); }

const KnotFacts& ClassicalEngine::facts(const KnotExpr& e) {
    if (auto it = memo_.find(&e); it != memo_.end())
        return it->second;
    KnotFacts f = compute(e);
    return memo_.emplace(&e, std::move(f)).first->second;
}

KnotFacts ClassicalEngine::compute(const KnotExpr& e) {
    KnotFacts f;
    const Rule* genus_rule = nullptr;
    const Rule* alex_rule = nullptr;
    const Rule* slice_rule = nullptr;

    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, node::Unknot>) {
                f.genus = IntInterval::point(0);
                genus_rule = &kUnknotGenus;
                f.alexander = seifert_alexander(IntMatrix(0, 0));
                alex_rule = &kSeifertDet;
                f.slice = TriState::yes;
                slice_rule = &kUnknotSlice;
            } else if constexpr (std::is_same_v<T, node::Trefoil>) {
                f.genus = IntInterval::point(1);
                genus_rule = &kBuiltinGenus;
                f.alexander = seifert_alexander({{-1, 1}, {0, -1}});
                alex_rule = &kSeifertDet;
                f.slice = TriState::no;
                slice_rule = &kCuratedSlice;
                f.torus = TriState::yes;
                f.cable = TriState::yes;
            } else if constexpr (std::is_same_v<T, node::Fig8>) {
                f.genus = IntInterval::point(1);
                genus_rule = &kBuiltinGenus;
                f.alexander = seifert_alexander({{1, 1}, {0, -1}});
                alex_rule = &kSeifertDet;
                f.slice = TriState::no;
                slice_rule = &kCuratedSlice;
                f.torus = TriState::no;
                f.cable = TriState::no;
            } else if constexpr (std::is_same_v<T, node::Kfam>) {
                f.genus = IntInterval::point(n.n);
                genus_rule = &kPretzelGenus;
                f.alexander = canonical(pow(pretzel_factor(), static_cast<std::uint64_t>(n.n)));
                alex_rule = &kPretzelAlex;
                f.slice = TriState::yes;
                slice_rule = &kRibbonSlice;
                f.torus = TriState::no;
                f.cable = TriState::no;
            } else if constexpr (std::is_same_v<T, node::Atom>) {
                f.genus = IntInterval::point(n.genus);
                genus_rule = &kAtomGenus;
                alex_rule = &kNoAlex;
                f.slice = n.slice;
                slice_rule = n.slice == TriState::unknown ? &kNoSlice : &kAtomSlice;
                f.torus = n.torus;
                f.cable = n.cable;
            } else if constexpr (std::is_same_v<T, node::Sum>) {
                const KnotFacts& a = facts(*n.left);
                const KnotFacts& b = facts(*n.right);
                f.genus = a.genus + b.genus;
                genus_rule = &kSumGenus;
                if (a.alexander && b.alexander) {
                    f.alexander = canonical(*a.alexander * *b.alexander);
                    alex_rule = &kProductAlex;
                } else {
                    alex_rule = &kNoAlex;
                }
                f.slice = both_yes(a.slice, b.slice);
                slice_rule = f.slice == TriState::yes ? &kSumSlice : &kNoSlice;
            } else if constexpr (std::is_same_v<T, node::Wh0>) {
                const KnotFacts& j = facts(*n.companion);
                genus_rule = &kWhGenus;
                if (j.trivial == TriState::no)
                    f.genus = IntInterval::point(1);
                else if (j.trivial == TriState::yes)
                    f.genus = IntInterval::point(0);
                else
                    f.genus = {0, 1};
                f.alexander = LaurentPoly::constant(1);
                alex_rule = &kWhAlex;
                f.slice = j.slice == TriState::yes ? TriState::yes : TriState::unknown;
                slice_rule = f.slice == TriState::yes ? &kWhSlice : &kNoSlice;
            } else {
                static_assert(std::is_same_v<T, node::Ksat>);
                const KnotFacts& j = facts(*n.j);
                const KnotFacts& l = facts(*n.l);
                // A satellite needs a nontrivial companion; then the knot is
                // nontrivial and the standard genus-one surface is minimal.
                const bool sat_of_j =
                    satellite_of_first(n, l.trivial) == TriState::yes && j.trivial == TriState::no;
                const bool sat_of_l = (n.m != 0 || j.trivial == TriState::no) && l.trivial == TriState::no;
                if (sat_of_j || sat_of_l) {
                    f.genus = IntInterval::point(1);
                    genus_rule = sat_of_j ? &kKsatSatellite : &kKsatSymmetric;
                } else if ((n.n == 0 && l.trivial == TriState::yes) || (n.m == 0 && j.trivial == TriState::yes)) {
                    f.genus = IntInterval::point(0);
                    genus_rule = &kKsatTrivial;
                } else {
                    f.genus = {0, 1};
                    genus_rule = &kKsatOpen;
                }
                IntMatrix v(2, 2);
                v(0, 0) = static_cast<long>(n.m);
                v(0, 1) = 1;
                v(1, 1) = static_cast<long>(n.n);
                f.alexander = seifert_alexander(std::move(v));
                alex_rule = &kKsatAlex;
                f.slice = TriState::unknown;
                slice_rule = &kNoSlice;
            }
        },
        e.node());

    f.trivial = trivial_from_genus(f.genus);
    if (f.trivial == TriState::yes && f.slice != TriState::yes) {
        f.slice = refine(f.slice, TriState::yes);
        slice_rule = &kTrivialSlice;
    }

    if (f.trivial == TriState::yes || f.torus == TriState::yes || f.cable == TriState::yes)
        f.in_r = TriState::no;
    else if (f.trivial == TriState::no && f.torus == TriState::no && f.cable == TriState::no)
        f.in_r = TriState::yes;
    else
        f.in_r = TriState::unknown;

    if (f.alexander && abs(evaluate(*f.alexander, 1)) != 1)
        throw std::logic_error("derived Alexander polynomial violates |Δ(1)| = 1");

    note(f, "genus = " + to_string(f.genus), *genus_rule);
    note(f, "alexander = " + (f.alexander ? to_string(*f.alexander) : std::string("unknown")), *alex_rule);
    note(f, "slice = " + std::string(to_string(f.slice)), *slice_rule);
    note(f, "in_R = " + std::string(to_string(f.in_r)), kClassR);
    note(f, "trivial = " + std::string(to_string(f.trivial)), kTrivial);
    return f;
}

KnotFacts facts_of(const KnotExpr& e) { return ClassicalEngine().facts(e); }
IntInterval genus_of(const KnotExpr& e) { return ClassicalEngine().facts(e).genus; }
std::optional<LaurentPoly> alexander_of(const KnotExpr& e) { return ClassicalEngine().facts(e).alexander; }
TriState slice_of(const KnotExpr& e) { return ClassicalEngine().facts(e).slice; }
TriState class_r_of(const KnotExpr& e) { return ClassicalEngine().facts(e).in_r; }
TriState trivial_of(const KnotExpr& e) { return ClassicalEngine().facts(e).trivial; }

} // namespace knotfog
