#include "illume/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "illume/error.hpp"
#include "illume/tolerances.hpp"

namespace illume {
namespace {

// Stream ids keep the checks statistically independent for one seed.
enum Stream : std::uint64_t {
    kPositivity = 1,
    kLowerBound,
    kLinear,
    kConvexity,
    kSaturation,
    kOracle,
    kMonteCarlo,
};

CheckResult start(std::string name) {
    CheckResult c;
    c.name = std::move(name);
    c.worst_margin = std::numeric_limits<double>::infinity();
    return c;
}

void record(CheckResult& c, double margin, bool violated) {
    ++c.trials;
    c.worst_margin = std::min(c.worst_margin, margin);
    if (violated) {
        ++c.violations;
    }
}

void record(CheckResult& c, double margin) { record(c, margin, margin < 0.0); }

std::vector<double> random_spectrum(std::size_t d, CounterRng& rng) {
    std::vector<double> l(d);
    double sum = 0.0;
    for (auto& v : l) {
        // Bounded away from zero so lambda_h stays well conditioned.
        v = 0.02 + rng.uniform();
        sum += v;
    }
    for (auto& v : l) {
        v /= sum;
    }
    return l;
}

EnvironmentState random_environment(std::size_t d, CounterRng& rng) {
    auto spectrum = random_spectrum(d, rng);
    return EnvironmentState(std::move(spectrum), random_unitary(d, rng));
}

/// Scenario with gamma <= -0.01.
Scenario random_negative_gamma_scenario(const EnvironmentState& env, CounterRng& rng) {
    for (;;) {
        const double p0 = 0.05 + 0.9 * rng.uniform();
        const double eta = rng.uniform();
        if ((1.0 - p0) * (1.0 - eta) - p0 <= -0.01) {
            return Scenario(p0, eta, env);
        }
    }
}

} // namespace

Suite parse_suite(std::string_view s) {
    if (s == "all") return Suite::all;
    if (s == "lemmas") return Suite::lemmas;
    if (s == "oracle") return Suite::oracle;
    if (s == "montecarlo") return Suite::montecarlo;
    throw InvalidArgument("unknown suite '" + std::string(s) + "'");
}

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed(); });
}

CheckResult verify_single_negative_eigenvalue(std::uint64_t seed, long long instances) {
    static constexpr std::size_t kDims[] = {2, 3, 4, 6};
    auto c = start("single_negative_eigenvalue");
    CounterRng rng = CounterRng(seed).split(kPositivity);
    for (long long t = 0; t < instances; ++t) {
        const std::size_t d = kDims[t % 4];
        const std::size_t rank = 1 + static_cast<std::size_t>(rng.uniform() * d);
        const DensityMatrix rho = random_density(d, std::min(rank, d), rng);
        const double alpha = 3.0 * rng.uniform();
        const PureState psi = haar_random_state(d, rng);
        record(c, second_smallest_eigenvalue(rho, alpha, psi) + Tolerances::lemma,
               !check_single_negative_eigenvalue(rho, alpha, psi));
    }
    return c;
}

CheckResult verify_eigenvalue_lower_bound(std::uint64_t seed, long long instances) {
    auto c = start("eigenvalue_lower_bound");
    CounterRng rng = CounterRng(seed).split(kLowerBound);
    for (long long t = 0; t < instances; ++t) {
        const std::size_t d = 2 + static_cast<std::size_t>(t % 2);
        const EnvironmentState env = random_environment(d, rng);
        const double lambda_h = harmonic_lambda(env.spectrum());
        const double alpha = 3.0 * lambda_h * rng.uniform();
        const PureState psi = haar_random_state(d * d, rng);
        const double eg = min_eigenvalue_hq(env, alpha, psi);
        const double bound = alpha > lambda_h ? lambda_h - alpha : 0.0;
        record(c, eg - bound + Tolerances::lemma, !check_eigenvalue_lower_bound(env, alpha, psi));
    }
    return c;
}

CheckResult verify_perr_linear_in_Ed(std::uint64_t seed, long long instances) {
    auto c = start("perr_linear_in_smallest_eigenvalue");
    CounterRng rng = CounterRng(seed).split(kLinear);
    for (long long t = 0; t < instances; ++t) {
        const Scenario s = random_negative_gamma_scenario(random_environment(4, rng), rng);
        const PureState psi = haar_random_state(4, rng);
        if (const auto gap = perr_linear_identity_gap(s, psi)) {
            record(c, Tolerances::lemma - *gap);
        }
    }
    return c;
}

CheckResult verify_convexity_reduction(std::uint64_t seed, long long instances) {
    auto c = start("pure_state_reduction");
    CounterRng rng = CounterRng(seed).split(kConvexity);
    for (long long t = 0; t < instances; ++t) {
        const std::size_t d = 2 + static_cast<std::size_t>(t % 2);
        const Mode mode = t % 4 < 2 ? Mode::conventional : Mode::quantum;
        const EnvironmentState env = random_environment(d, rng);
        const Scenario s(rng.uniform(), rng.uniform(), env);
        const std::size_t n = mode == Mode::conventional ? d : d * d;
        const DensityMatrix rho = random_density(n, n, rng);
        record(c, Tolerances::lemma - convexity_gap(s, rho, mode));
    }
    return c;
}

CheckResult verify_optimal_state_saturation(std::uint64_t seed, long long instances) {
    auto c = start("optimal_state_saturation");
    CounterRng rng = CounterRng(seed).split(kSaturation);
    for (long long t = 0; t < instances; ++t) {
        const std::size_t d = 2 + static_cast<std::size_t>(t % 3);
        const Scenario s = random_negative_gamma_scenario(random_environment(d, rng), rng);
        const PureState psi = optimal_probe_quantum(s);
        const DerivedParams dp = derived_params(s);

        double margin = Tolerances::lemma -
                        std::abs(perr_of_state(s, psi, Mode::quantum) - perr_quantum(s));
        if (*dp.alpha > dp.lambda_h) {
            const double eg = min_eigenvalue_hq(s.env(), *dp.alpha, psi);
            margin = std::min(margin, Tolerances::lemma - std::abs(eg - (dp.lambda_h - *dp.alpha)));
            const Eigen::VectorXd e = eigenvalues(omega_q(s, psi));
            if ((e.array() > Tolerances::projector).count() != 1) {
                margin = std::min(margin, -1.0);
            }
        }
        record(c, margin);
    }
    return c;
}

std::vector<BundledCase> bundled_oracle_cases() {
    const EnvironmentState mixed2 = EnvironmentState::maximally_mixed(2);
    const EnvironmentState three({0.5, 0.3, 0.2});
    const EnvironmentState pure({1.0, 0.0});
    const EnvironmentState two({0.7, 0.3});
    std::vector<BundledCase> out;
    for (Mode m : {Mode::conventional, Mode::quantum}) {
        out.push_back({Scenario(0.5, 0.6, mixed2), m});
        out.push_back({Scenario(0.5, 0.6, three), m});
        out.push_back({Scenario(0.6, 0.08, three), m});
        out.push_back({Scenario(0.3, 0.5, two), m});
        out.push_back({Scenario(0.5, 0.7, pure), m});
    }
    return out;
}

std::vector<BundledCase> bundled_montecarlo_cases() {
    CounterRng basis_rng(20240601);
    const std::vector<Scenario> scenarios = {
        Scenario(0.5, 0.6, EnvironmentState::maximally_mixed(2)),
        Scenario(0.5, 0.6, EnvironmentState({0.5, 0.3, 0.2})),
        Scenario(0.6, 0.08, EnvironmentState({0.5, 0.3, 0.2})),
        Scenario(0.3, 0.5, EnvironmentState({0.7, 0.3})),
        Scenario(0.5, 0.7, EnvironmentState({1.0, 0.0})),
        Scenario(0.4, 0.9, EnvironmentState::maximally_mixed(3)),
        Scenario(0.55, 0.5, EnvironmentState({0.4, 0.3, 0.2, 0.1})),
        Scenario(0.7, 0.3, EnvironmentState({0.6, 0.25, 0.15})),
        Scenario(0.35, 0.0, EnvironmentState({0.5, 0.5})),
        Scenario(0.45, 0.8,
                 EnvironmentState({0.45, 0.35, 0.2}, random_unitary(3, basis_rng))),
    };
    std::vector<BundledCase> out;
    for (const auto& s : scenarios) {
        out.push_back({s, Mode::conventional});
        out.push_back({s, Mode::quantum});
    }
    return out;
}

CheckResult verify_oracle_agreement(std::uint64_t seed) {
    auto c = start("oracle_matches_analytic");
    SearchConfig cfg;
    cfg.seed = CounterRng(seed).split(kOracle)();
    for (const auto& bc : bundled_oracle_cases()) {
        const double analytic = perr_analytic(bc.scenario, bc.mode);
        const OracleResult r = maximize_trace_norm(bc.scenario, bc.mode, cfg);
        record(c, cfg.tolerance - std::abs(r.perr - analytic));
    }
    return c;
}

CheckResult verify_montecarlo(std::uint64_t seed, long long trials) {
    auto c = start("montecarlo_matches_analytic");
    const auto cases = bundled_montecarlo_cases();
    // One 4-sigma excursion in 20 is within binomial noise.
    c.allowed_violations = static_cast<long long>(cases.size()) / 20;
    CounterRng seeds = CounterRng(seed).split(kMonteCarlo);
    for (const auto& bc : cases) {
        const PureState probe = bc.mode == Mode::conventional
                                    ? optimal_probe_conventional(bc.scenario)
                                    : optimal_probe_quantum(bc.scenario);
        const MeasurementStats m = simulate_measurement(bc.scenario, probe, bc.mode, trials, seeds());
        const double diff = std::abs(m.empirical_perr - perr_analytic(bc.scenario, bc.mode));
        // A degenerate rate (std_error 0) must match exactly.
        record(c, 4.0 * m.std_error - diff);
    }
    return c;
}

VerificationReport run_verification(Suite suite, std::uint64_t seed, long long trials) {
    if (trials < 1) {
        throw InvalidArgument("trials must be >= 1");
    }
    VerificationReport r;
    r.seed = seed;
    const long long bipartite = std::max(1LL, trials / 10);
    switch (suite) {
    case Suite::all:
        r.suite = "all";
        break;
    case Suite::lemmas:
        r.suite = "lemmas";
        break;
    case Suite::oracle:
        r.suite = "oracle";
        break;
    case Suite::montecarlo:
        r.suite = "montecarlo";
        break;
    }
    if (suite == Suite::all || suite == Suite::lemmas) {
        r.checks.push_back(verify_single_negative_eigenvalue(seed, trials));
        r.checks.push_back(verify_eigenvalue_lower_bound(seed, bipartite));
        r.checks.push_back(verify_perr_linear_in_Ed(seed, bipartite));
        r.checks.push_back(verify_convexity_reduction(seed, bipartite));
        r.checks.push_back(verify_optimal_state_saturation(seed, bipartite));
    }
    if (suite == Suite::all || suite == Suite::oracle) {
        r.checks.push_back(verify_oracle_agreement(seed));
    }
    if (suite == Suite::all || suite == Suite::montecarlo) {
        r.checks.push_back(verify_montecarlo(seed, trials));
    }
    return r;
}

} // namespace illume
