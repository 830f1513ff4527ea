#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "knotfog/seifert.hpp"

namespace knotfog::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
    double time_limit = 0.0; // seconds; 0 means no limit
};

using ThetaBuilder = std::function<SeifertMatrix(std::int64_t)>;

inline constexpr std::uint64_t kDefaultSeed = 0x6b6e6f74666f6755ULL;

struct Options {
    ThetaBuilder theta = theta_matrix;
    std::uint64_t seed = kDefaultSeed;
};

CriterionResult pretzel_identity(const ThetaBuilder& theta);
CriterionResult family_table();
CriterionResult twice_genus(std::uint64_t seed);
CriterionResult subadditivity(std::uint64_t seed);
CriterionResult basis_enumerator();
CriterionResult congruence_invariance(std::uint64_t seed);
CriterionResult alexander_sanity(std::uint64_t seed);
CriterionResult point_values();
CriterionResult parser_round_trip(std::uint64_t seed);

std::vector<CriterionResult> run_all(const Options& options = {});

// "PASS  3  twice-genus invariant  0.123 s  <detail>"
std::string format_result(const CriterionResult& r);

// theta_matrix with the sign of one off-diagonal entry flipped; used to show
// the pretzel criterion catches a corrupted builder.
SeifertMatrix corrupted_theta(std::int64_t n);

} // namespace knotfog::acceptance
