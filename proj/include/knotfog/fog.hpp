#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "knotfog/classical.hpp"
#include "knotfog/knot_expr.hpp"

namespace knotfog {

/// Weak grope of height two: a first-stage surface of the given genus whose
/// 2g symplectic basis curves bound second-stage surfaces of the listed
/// genera (in basis order a1, b1, a2, b2, ...).
struct WeakGropeCertificate {
    std::int64_t first_stage_genus = 0;
    std::vector<std::int64_t> second_stage_genera;
};

// Sum of the second-stage genera; an upper bound for g1 of any knot the
// certificate is valid for. Throws std::invalid_argument on a length
// mismatch or a negative entry.
std::int64_t grope_value(const WeakGropeCertificate& c);

struct CertificateCheck {
    bool valid = false;
    std::vector<std::string> reasons;
};

// A certificate is usable for `e` when its first stage has exactly the genus
// of e and, for nontrivial e, no basis curve bounds a disc.
CertificateCheck validate_certificate(const WeakGropeCertificate& c, const KnotExpr& e);

/// Basis change x = p a + q b, y = r a + s b with p s - q r = 1, together
/// with the lower bound it attains.
struct BasisWitness {
    std::int64_t p = 1;
    std::int64_t q = 0;
    std::int64_t r = 0;
    std::int64_t s = 1;
    std::int64_t value = 0;

    friend bool operator==(const BasisWitness&, const BasisWitness&) = default;
};

class CapInsufficient : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::int64_t kDefaultBasisCap = 16;
inline constexpr std::int64_t kMaxBasisCap = 128;

// Lower bound for the genus of a curve with winding numbers (u, v) around
// the two companions: max(1, |u| gA, |v| gB).
std::int64_t curve_lower_bound(std::int64_t u, std::int64_t v, std::int64_t g_a, std::int64_t g_b);

/// Minimum of curve_lower_bound(p, q) + curve_lower_bound(r, s) over all
/// unimodular (p, q, r, s), the lexicographically smallest witness by
/// (|p|, |q|, |r|, |s|, p, q, r, s) on ties.
///
/// The search runs over the box |coefficient| <= cap, skipping any
/// coefficient whose own contribution already exceeds the incumbent. The
/// result is certified once the incumbent value proves every tuple of equal
/// or smaller value lies inside the box; otherwise the cap is doubled up to
/// kMaxBasisCap and CapInsufficient is thrown if that still does not
/// certify. Throws std::invalid_argument for g_a < 1, g_b < 0 or cap < 1.
BasisWitness basis_min_lb(std::int64_t g_a, std::int64_t g_b, std::int64_t cap = kDefaultBasisCap);

enum class Bound { lo, hi };

struct FogProvenance {
    Bound bound;
    std::optional<std::int64_t> value; // empty for an unbounded hi
    std::string rule;
    std::string anchor;
};

/// Certified interval for the first-order genus with exactly one
/// provenance record per bound.
struct FogResult {
    IntInterval interval;
    std::vector<FogProvenance> provenance;
};

class FogEngine {
public:
    const FogResult& fog(const KnotExpr& e);
    ClassicalEngine& classical() { return classical_; }

private:
    FogResult compute(const KnotExpr& e);

    ClassicalEngine classical_;
    std::unordered_map<const KnotExpr*, FogResult> memo_;
};

FogResult fog_of(const KnotExpr& e);

} // namespace knotfog
