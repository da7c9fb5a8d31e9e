#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "illume/oracle.hpp"

namespace illume {

enum class Suite { all, lemmas, oracle, montecarlo };
Suite parse_suite(std::string_view s);

struct CheckResult {
    std::string name;
    long long trials = 0;
    long long violations = 0;
    /// Violations tolerated before the check fails (binomial noise for Monte Carlo).
    long long allowed_violations = 0;
    /// Smallest slack observed; negative means a violation.
    double worst_margin = 0.0;

    bool passed() const { return violations <= allowed_violations; }
};

struct VerificationReport {
    std::string suite;
    std::uint64_t seed;
    std::vector<CheckResult> checks;

    bool passed() const;
};

/// Scenarios exercised by the Monte-Carlo suite (10 environments x 2 modes).
struct BundledCase {
    Scenario scenario;
    Mode mode;
};
std::vector<BundledCase> bundled_montecarlo_cases();
std::vector<BundledCase> bundled_oracle_cases();

/// `trials` sizes the lemma suite (positivity instances; the bipartite and
/// convexity checks use trials/10) and the per-scenario Monte-Carlo trials.
VerificationReport run_verification(Suite suite, std::uint64_t seed, long long trials);

CheckResult verify_single_negative_eigenvalue(std::uint64_t seed, long long instances);
CheckResult verify_eigenvalue_lower_bound(std::uint64_t seed, long long instances);
CheckResult verify_perr_linear_in_Ed(std::uint64_t seed, long long instances);
CheckResult verify_convexity_reduction(std::uint64_t seed, long long instances);
CheckResult verify_optimal_state_saturation(std::uint64_t seed, long long instances);
CheckResult verify_oracle_agreement(std::uint64_t seed);
CheckResult verify_montecarlo(std::uint64_t seed, long long trials);

} // namespace illume
