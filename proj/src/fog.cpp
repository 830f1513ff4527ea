#include "knotfog/fog.hpp"

#include <algorithm>
#include <tuple>

namespace knotfog {

namespace {

std::int64_t iabs(std::int64_t x) { return x < 0 ? -x : x; }

} // namespace

std::int64_t grope_value(const WeakGropeCertificate& c) {
    if (c.first_stage_genus < 0)
        throw std::invalid_argument("first-stage genus must be nonnegative");
    if (c.second_stage_genera.size() != 2 * static_cast<std::size_t>(c.first_stage_genus))
        throw std::invalid_argument("expected " + std::to_string(2 * c.first_stage_genus) + " second-stage genera, got " +
                                    std::to_string(c.second_stage_genera.size()));
    std::int64_t total = 0;
    for (std::int64_t g : c.second_stage_genera) {
        if (g < 0)
            throw std::invalid_argument("second-stage genus must be nonnegative");
        total += g;
    }
    return total;
}

CertificateCheck validate_certificate(const WeakGropeCertificate& c, const KnotExpr& e) {
    CertificateCheck check;
    auto& reasons = check.reasons;
    if (c.first_stage_genus < 0 || c.second_stage_genera.size() != 2 * static_cast<std::size_t>(c.first_stage_genus))
        reasons.emplace_back("second-stage count must be twice the first-stage genus");
    if (std::any_of(c.second_stage_genera.begin(), c.second_stage_genera.end(), [](std::int64_t g) { return g < 0; }))
        reasons.emplace_back("negative second-stage genus");

    const KnotFacts facts = facts_of(e);
    if (!facts.genus.is_point())
        reasons.emplace_back("genus of expression not known exactly");
    else if (c.first_stage_genus != facts.genus.lo)
        reasons.emplace_back("first stage not minimal genus");
    if (facts.trivial == TriState::no &&
        std::any_of(c.second_stage_genera.begin(), c.second_stage_genera.end(), [](std::int64_t g) { return g == 0; }))
        reasons.emplace_back("zero second stage on nontrivial knot");

    check.valid = reasons.empty();
    return check;
}

std::int64_t curve_lower_bound(std::int64_t u, std::int64_t v, std::int64_t g_a, std::int64_t g_b) {
    return std::max({std::int64_t{1}, iabs(u) * g_a, iabs(v) * g_b});
}

namespace {

auto tie_key(const BasisWitness& w) {
    return std::make_tuple(iabs(w.p), iabs(w.q), iabs(w.r), iabs(w.s), w.p, w.q, w.r, w.s);
}

// One pass over the box |coefficient| <= cap. Returns the incumbent and
// whether it is certified.
std::pair<BasisWitness, bool> search_box(std::int64_t g_a, std::int64_t g_b, std::int64_t cap) {
    BasisWitness best{1, 0, 0, 1, curve_lower_bound(1, 0, g_a, g_b) + curve_lower_bound(0, 1, g_a, g_b)};

    const auto consider = [&](std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
        BasisWitness w{p, q, r, s, curve_lower_bound(p, q, g_a, g_b) + curve_lower_bound(r, s, g_a, g_b)};
        if (w.value < best.value || (w.value == best.value && tie_key(w) < tie_key(best)))
            best = w;
    };
    // A coefficient c on a companion of genus g contributes at least |c| g
    // to its curve, and the other curve contributes at least 1.
    const auto alive = [&](std::int64_t c, std::int64_t g) { return g == 0 || iabs(c) * g + 1 <= best.value; };

    for (std::int64_t p = -cap; p <= cap; ++p) {
        if (!alive(p, g_a))
            continue;
        for (std::int64_t r = -cap; r <= cap; ++r) {
            if (!alive(r, g_a))
                continue;
            if (p == 0) {
                // -q r = 1
                if (iabs(r) != 1)
                    continue;
                const std::int64_t q = -r;
                if (!alive(q, g_b))
                    continue;
                for (std::int64_t s = -cap; s <= cap; ++s)
                    if (alive(s, g_b))
                        consider(p, q, r, s);
                continue;
            }
            for (std::int64_t q = -cap; q <= cap; ++q) {
                if (!alive(q, g_b))
                    continue;
                const std::int64_t num = 1 + q * r;
                if (num % p != 0)
                    continue;
                const std::int64_t s = num / p;
                if (iabs(s) <= cap && alive(s, g_b))
                    consider(p, q, r, s);
            }
        }
    }

    // Every tuple with value <= best has |p|, |r| <= (best - 1) / g_a and,
    // when g_b > 0, |q|, |s| <= (best - 1) / g_b. When g_b = 0 the value
    // ignores q and s, and the lexicographically smallest optimum has
    // |q| <= max(1, |p|/2) and |s| <= |r| + 1.
    const std::int64_t bound_pr = (best.value - 1) / g_a;
    bool certified = bound_pr <= cap;
    if (g_b > 0)
        certified = certified && (best.value - 1) / g_b <= cap;
    else
        certified = certified && bound_pr + 1 <= cap;
    return {best, certified};
}

} // namespace

BasisWitness basis_min_lb(std::int64_t g_a, std::int64_t g_b, std::int64_t cap) {
    if (g_a < 1)
        throw std::invalid_argument("basis_min_lb requires a nontrivial first companion (g_a >= 1)");
    if (g_b < 0)
        throw std::invalid_argument("basis_min_lb requires g_b >= 0");
    if (cap < 1)
        throw std::invalid_argument("basis_min_lb requires cap >= 1");
    for (std::int64_t c = cap;; c = std::min(2 * c, kMaxBasisCap)) {
        auto [witness, certified] = search_box(g_a, g_b, c);
        if (certified)
            return witness;
        if (c >= kMaxBasisCap)
            throw CapInsufficient("cap insufficient: basis search up to " + std::to_string(c) +
                                  " cannot certify the minimum for genera (" + std::to_string(g_a) + ", " +
                                  std::to_string(g_b) + ")");
    }
}

namespace {

struct Candidate {
    std::int64_t value;
    std::string rule;
    std::string anchor;
};

constexpr const char* kTwiceAnchor = "g1(K) >= 2 g(K): no basis curve of a minimal surface bounds a disc";
constexpr const char* kUnknotAnchor = "g1 of the unknot is zero by definition";
constexpr const char* kGropeAnchor = "a weak grope of height two bounds K; g1 <= sum of second-stage genera";
constexpr const char* kWhLowerAnchor =
    "Wh0(J), J nontrivial noncable: unique minimal surface; min over bases of combined Schubert bounds = 1 + g(J)";
constexpr const char* kKsatLowerAnchor =
    "K(J,L,m,n), J,L in R: every minimal surface has a basis (a ~ J, b ~ L); min over bases >= g(J) + g(L)";
constexpr const char* kSubadditiveAnchor = "g1(K # J) <= g1(K) + g1(J)";

} // namespace

const FogResult& FogEngine::fog(const KnotExpr& e) {
    if (auto it = memo_.find(&e); it != memo_.end())
        return it->second;
    FogResult r = compute(e);
    return memo_.emplace(&e, std::move(r)).first->second;
}

FogResult FogEngine::compute(const KnotExpr& e) {
    const KnotFacts facts = classical_.facts(e);
    std::vector<Candidate> lower;
    std::vector<Candidate> upper;

    const auto certify = [&](const WeakGropeCertificate& c, const char* rule) {
        if (validate_certificate(c, e).valid)
            upper.push_back({grope_value(c), rule, kGropeAnchor});
    };

    if (facts.trivial == TriState::yes) {
        lower.push_back({0, "unknot-definition", kUnknotAnchor});
        upper.push_back({0, "unknot-definition", kUnknotAnchor});
    }

    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, node::Trefoil> || std::is_same_v<T, node::Fig8>) {
                // Each basis curve of the genus-one surface bounds a punctured
                // torus in the complement.
                certify({1, {1, 1}}, "grope-certificate");
            } else if constexpr (std::is_same_v<T, node::Wh0>) {
                const KnotFacts j = classical_.facts(*n.companion);
                if (j.trivial == TriState::no && j.cable == TriState::no) {
                    const BasisWitness w = basis_min_lb(j.genus.lo, 0);
                    lower.push_back({w.value, "whitehead-enumerator", kWhLowerAnchor});
                    if (j.genus.hi)
                        certify({1, {*j.genus.hi, 1}}, "whitehead-certificate");
                }
            } else if constexpr (std::is_same_v<T, node::Ksat>) {
                const KnotFacts j = classical_.facts(*n.j);
                const KnotFacts l = classical_.facts(*n.l);
                if (j.in_r == TriState::yes && l.in_r == TriState::yes) {
                    try {
                        const BasisWitness w = basis_min_lb(j.genus.lo, l.genus.lo);
                        lower.push_back({w.value, "ksat-enumerator", kKsatLowerAnchor});
                    } catch (const CapInsufficient&) {
                        lower.push_back({j.genus.lo + l.genus.lo, "ksat-closed-form", kKsatLowerAnchor});
                    }
                    if (n.m == 0 && n.n == 0 && j.genus.hi && l.genus.hi)
                        certify({1, {*j.genus.hi, *l.genus.hi}}, "ksat-certificate");
                }
            } else if constexpr (std::is_same_v<T, node::Sum>) {
                const std::optional<std::int64_t> a = fog(*n.left).interval.hi;
                const std::optional<std::int64_t> b = fog(*n.right).interval.hi;
                if (a && b)
                    upper.push_back({*a + *b, "subadditivity", kSubadditiveAnchor});
            }
        },
        e.node());

    lower.push_back({2 * facts.genus.lo, "twice-genus", kTwiceAnchor});

    // Earlier candidates win ties, so specific rules outrank generic ones.
    const Candidate* lo = &lower.front();
    for (const Candidate& c : lower)
        if (c.value > lo->value)
            lo = &c;
    const Candidate* hi = nullptr;
    for (const Candidate& c : upper)
        if (!hi || c.value < hi->value)
            hi = &c;

    FogResult result;
    result.interval.lo = lo->value;
    result.provenance.push_back({Bound::lo, lo->value, lo->rule, lo->anchor});
    if (hi) {
        if (hi->value < lo->value)
            throw std::logic_error("first-order genus bounds are inconsistent: " + lo->rule + " vs " + hi->rule);
        result.interval.hi = hi->value;
        result.provenance.push_back({Bound::hi, hi->value, hi->rule, hi->anchor});
    } else {
        result.provenance.push_back({Bound::hi, std::nullopt, "no-certificate", "no upper-bound certificate applies"});
    }
    return result;
}

FogResult fog_of(const KnotExpr& e) { return FogEngine().fog(e); }

} // namespace knotfog
