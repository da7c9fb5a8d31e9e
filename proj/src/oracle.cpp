#include "illume/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "illume/error.hpp"
#include "illume/parallel.hpp"
#include "illume/tolerances.hpp"

namespace illume {
namespace {

std::size_t probe_dim(const Scenario& s, Mode mode) {
    return mode == Mode::conventional ? s.dim() : s.dim() * s.dim();
}

HermitianOperator omega(const Scenario& s, const PureState& probe, Mode mode) {
    return mode == Mode::conventional ? omega_c(s, probe) : omega_q(s, probe);
}

HermitianOperator omega(const Scenario& s, const DensityMatrix& probe, Mode mode) {
    return mode == Mode::conventional ? omega_c(s, probe) : omega_q(s, probe);
}

HermitianOperator shifted(const DensityMatrix& rho, double alpha, const PureState& psi) {
    if (rho.dim() != psi.dim()) {
        throw DimensionError("rho and psi dimensions differ");
    }
    return rho.op() - alpha * HermitianOperator::projector(psi);
}

struct RestartOutcome {
    double value;
    ComplexVector state;
    long long evaluations;
};

// Consecutive non-improving proposals before the step is shrunk.
constexpr int kPatience = 4;

RestartOutcome climb(const Scenario& s, Mode mode, const SearchConfig& cfg, std::size_t restart,
                     const PureState* start) {
    CounterRng rng = CounterRng(cfg.seed).split(restart);
    const std::size_t n = probe_dim(s, mode);
    PureState best = start ? *start : haar_random_state(n, rng);
    double best_value = trace_norm_of_state(s, best, mode);
    long long evals = 1;

    const double scale = 1.0 / std::sqrt(2.0 * static_cast<double>(n));
    const double floor = cfg.tolerance * cfg.tolerance;
    double step = cfg.initial_step;
    int failures = 0;
    ComplexVector trial(static_cast<Eigen::Index>(n));

    for (int k = 0; k < cfg.steps_per_restart && step >= floor; ++k) {
        for (Eigen::Index i = 0; i < trial.size(); ++i) {
            trial(i) = best.vector()(i) + step * scale * rng.complex_normal();
        }
        PureState candidate = PureState::normalized(trial);
        const double value = trace_norm_of_state(s, candidate, mode);
        ++evals;
        if (value > best_value) {
            best_value = value;
            best = std::move(candidate);
            step /= cfg.shrink_factor;
            failures = 0;
        } else if (++failures >= kPatience) {
            step *= cfg.shrink_factor;
            failures = 0;
        }
    }
    return {best_value, best.vector(), evals};
}

OracleResult search(const Scenario& s, Mode mode, const SearchConfig& cfg,
                    const PureState* start) {
    cfg.validate();
    if (mode == Mode::quantum && s.dim() > kMaxOracleDim) {
        throw ConfigurationError("quantum search supports d <= " +
                                 std::to_string(kMaxOracleDim) + ", got d = " +
                                 std::to_string(s.dim()));
    }
    if (start && start->dim() != probe_dim(s, mode)) {
        throw DimensionError("search start state has the wrong dimension");
    }

    const auto restarts = static_cast<std::size_t>(cfg.restarts);
    std::vector<RestartOutcome> outcomes(restarts);
    parallel_for(restarts, [&](std::size_t r) { outcomes[r] = climb(s, mode, cfg, r, start); });

    std::size_t winner = 0;
    long long evals = 0;
    for (std::size_t r = 0; r < restarts; ++r) {
        evals += outcomes[r].evaluations;
        if (outcomes[r].value > outcomes[winner].value) {
            winner = r;
        }
    }
    const double value = outcomes[winner].value;
    return OracleResult{value, PureState::normalized(outcomes[winner].state), (1.0 - value) / 2.0,
                        evals};
}

} // namespace

void SearchConfig::validate() const {
    if (restarts < 1) {
        throw ConfigurationError("restarts must be >= 1");
    }
    if (steps_per_restart < 0) {
        throw ConfigurationError("steps_per_restart must be >= 0");
    }
    if (!(initial_step > 0.0)) {
        throw ConfigurationError("initial_step must be > 0");
    }
    if (!(shrink_factor > 0.0 && shrink_factor < 1.0)) {
        throw ConfigurationError("shrink_factor must lie in (0, 1)");
    }
    if (!(tolerance > 0.0)) {
        throw ConfigurationError("tolerance must be > 0");
    }
}

double trace_norm_of_state(const Scenario& s, const PureState& probe, Mode mode) {
    return trace_norm(omega(s, probe, mode));
}

double perr_of_state(const Scenario& s, const PureState& probe, Mode mode) {
    return (1.0 - trace_norm_of_state(s, probe, mode)) / 2.0;
}

OracleResult maximize_trace_norm(const Scenario& s, Mode mode, const SearchConfig& cfg) {
    return search(s, mode, cfg, nullptr);
}

OracleResult maximize_trace_norm(const Scenario& s, Mode mode, const SearchConfig& cfg,
                                 const PureState& start) {
    return search(s, mode, cfg, &start);
}

// -- Lemma checks ------------------------------------------------------------

double second_smallest_eigenvalue(const DensityMatrix& rho, double alpha, const PureState& psi) {
    const Eigen::VectorXd e = eigenvalues(shifted(rho, alpha, psi));
    const auto n = e.size();
    return n >= 2 ? e(n - 2) : std::numeric_limits<double>::infinity();
}

bool check_single_negative_eigenvalue(const DensityMatrix& rho, double alpha,
                                      const PureState& psi) {
    const Eigen::VectorXd e = eigenvalues(shifted(rho, alpha, psi));
    const auto negatives = (e.array() < -Tolerances::lemma).count();
    return negatives <= 1;
}

double min_eigenvalue_hq(const EnvironmentState& env, double alpha, const PureState& psi) {
    const std::size_t d = env.dim();
    if (psi.dim() != d * d) {
        throw DimensionError("bipartite state must have dimension d^2");
    }
    const HermitianOperator hq = tensor(env.density().op(), reduced_second(psi, d, d)) -
                                 alpha * HermitianOperator::projector(psi);
    return eigenvalues(hq).minCoeff();
}

bool check_eigenvalue_lower_bound(const EnvironmentState& env, double alpha,
                                  const PureState& psi) {
    const double eg = min_eigenvalue_hq(env, alpha, psi);
    const double lambda_h = harmonic_lambda(env.spectrum());
    // Below lambda_h the bound is E_g >= 0; lambda_h - alpha would be stronger and false.
    const double bound = alpha > lambda_h ? lambda_h - alpha : 0.0;
    return eg >= bound - Tolerances::lemma;
}

std::optional<double> perr_linear_identity_gap(const Scenario& s, const PureState& psi) {
    const DerivedParams dp = derived_params(s);
    if (!dp.alpha) {
        throw InvalidArgument("linear identity requires gamma < 0");
    }
    const double alpha = *dp.alpha;
    const double ed = eigenvalues(shifted(s.env().density(), alpha, psi)).minCoeff();
    if (ed > 0.0) {
        return std::nullopt;
    }
    const double predicted = 0.5 * (1.0 - std::abs(dp.gamma) * (1.0 - alpha - 2.0 * ed));
    return std::abs(predicted - perr_of_state(s, psi, Mode::conventional));
}

bool check_perr_linear_in_Ed(const Scenario& s, const PureState& psi) {
    const auto gap = perr_linear_identity_gap(s, psi);
    return !gap || *gap <= Tolerances::lemma;
}

double convexity_gap(const Scenario& s, const DensityMatrix& rho, Mode mode) {
    const double mixed = trace_norm(omega(s, rho, mode));
    const EigenDecomposition ed = eig(rho.op());
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < ed.dim(); ++k) {
        if (ed.eigenvalues(static_cast<Eigen::Index>(k)) <= Tolerances::zero_eigenvalue) {
            continue;
        }
        best = std::max(best,
                        trace_norm_of_state(s, PureState::normalized(ed.vector(k)), mode));
    }
    return mixed - best;
}

bool check_convexity_reduction(const Scenario& s, const DensityMatrix& rho, Mode mode) {
    return convexity_gap(s, rho, mode) <= Tolerances::lemma;
}

// -- Measurement simulation --------------------------------------------------

MeasurementStats simulate_measurement(const Scenario& s, const PureState& probe, Mode mode,
                                      long long trials, std::uint64_t seed) {
    if (trials < 1) {
        throw InvalidArgument("simulate_measurement: trials must be >= 1");
    }
    if (probe.dim() != probe_dim(s, mode)) {
        throw DimensionError("probe dimension does not match the mode");
    }
    const auto [rho0, rho1] =
        mode == Mode::conventional ? hypotheses_c(s, probe) : hypotheses_q(s, probe);
    const EigenDecomposition split = eig(s.p1() * rho1.op() - s.p0() * rho0.op());

    // Probability of the "present" outcome under each hypothesis.
    double q0 = 0.0;
    double q1 = 0.0;
    for (std::size_t k = 0; k < split.dim(); ++k) {
        if (split.eigenvalues(static_cast<Eigen::Index>(k)) <= Tolerances::projector) {
            continue;
        }
        const PureState v = PureState::normalized(split.vector(k));
        q0 += rho0.op().expectation(v);
        q1 += rho1.op().expectation(v);
    }
    q0 = std::clamp(q0, 0.0, 1.0);
    q1 = std::clamp(q1, 0.0, 1.0);

    constexpr long long kShard = 1 << 14;
    const auto shards = static_cast<std::size_t>((trials + kShard - 1) / kShard);
    std::vector<long long> errors(shards, 0);
    const CounterRng root(seed);
    const double p1 = s.p1();
    parallel_for(shards, [&](std::size_t k) {
        CounterRng rng = root.split(k);
        const long long begin = static_cast<long long>(k) * kShard;
        const long long end = std::min(trials, begin + kShard);
        long long wrong = 0;
        for (long long t = begin; t < end; ++t) {
            const bool present = rng.uniform() < p1;
            const bool says_present = rng.uniform() < (present ? q1 : q0);
            wrong += present != says_present ? 1 : 0;
        }
        errors[k] = wrong;
    });

    long long total = 0;
    for (long long e : errors) {
        total += e;
    }
    const double p = static_cast<double>(total) / static_cast<double>(trials);
    return {trials, total, p, std::sqrt(p * (1.0 - p) / static_cast<double>(trials))};
}

} // namespace illume
