#pragma once

#include <cstdint>
#include <optional>

#include "illume/analytic.hpp"

namespace illume {

struct SearchConfig {
    int restarts = 32;
    int steps_per_restart = 2000;
    double initial_step = 0.5;
    double shrink_factor = 0.9;
    std::uint64_t seed = 0;
    double tolerance = 1e-6;

    /// Throws ConfigurationError on restarts < 1, shrink outside (0,1), ...
    void validate() const;
};

/// Largest search sphere: quantum probes live on C^(d*d).
inline constexpr std::size_t kMaxOracleDim = 8;

struct OracleResult {
    double best_value;
    PureState best_state;
    double perr;
    long long evaluations;
};

struct MeasurementStats {
    long long trials;
    long long errors;
    double empirical_perr;
    double std_error;
};

/// Helstrom error (1 - ||Omega||) / 2 for a specific probe.
double perr_of_state(const Scenario& s, const PureState& probe, Mode mode);
double trace_norm_of_state(const Scenario& s, const PureState& probe, Mode mode);

/// Multi-start stochastic hill climb of ||Omega(|psi><psi|)|| over the unit
/// sphere of C^d (conventional) or C^(d^2) (quantum).
OracleResult maximize_trace_norm(const Scenario& s, Mode mode, const SearchConfig& cfg);
/// Every restart starts from `start` instead of a random state.
OracleResult maximize_trace_norm(const Scenario& s, Mode mode, const SearchConfig& cfg,
                                 const PureState& start);

/// At most one eigenvalue of rho - alpha |psi><psi| below -1e-10.
bool check_single_negative_eigenvalue(const DensityMatrix& rho, double alpha,
                                      const PureState& psi);
/// Second-smallest eigenvalue of rho - alpha |psi><psi| (the quantity the
/// lemma keeps non-negative).
double second_smallest_eigenvalue(const DensityMatrix& rho, double alpha, const PureState& psi);

/// Smallest eigenvalue of rho_E (x) rho_B - alpha |psi><psi|.
double min_eigenvalue_hq(const EnvironmentState& env, double alpha, const PureState& psi);
/// E_g >= lambda_h - alpha when alpha > lambda_h; E_g >= 0 when alpha <= lambda_h.
bool check_eigenvalue_lower_bound(const EnvironmentState& env, double alpha,
                                  const PureState& psi);

/// P_err(psi) = (1 - |gamma| (1 - alpha - 2 E_d)) / 2 with E_d the smallest
/// eigenvalue of rho_E - alpha |psi><psi|. nullopt when E_d > 0 (identity
/// not claimed there); otherwise |lhs - rhs|.
std::optional<double> perr_linear_identity_gap(const Scenario& s, const PureState& psi);
bool check_perr_linear_in_Ed(const Scenario& s, const PureState& psi);

/// ||Omega(rho)|| minus the best ||Omega(|psi_i><psi_i|)|| over eigenvectors
/// of rho; non-positive up to rounding by convexity.
double convexity_gap(const Scenario& s, const DensityMatrix& rho, Mode mode);
bool check_convexity_reduction(const Scenario& s, const DensityMatrix& rho, Mode mode);

/// Helstrom measurement on the probe's output, sampled trial by trial.
MeasurementStats simulate_measurement(const Scenario& s, const PureState& probe, Mode mode,
                                      long long trials, std::uint64_t seed);

} // namespace illume
