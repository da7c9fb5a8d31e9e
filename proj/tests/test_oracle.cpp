#include <doctest.h>

#include <cmath>

#include <illume/error.hpp>
#include <illume/oracle.hpp>

#include "helpers.hpp"

using namespace illume;

namespace {

const EnvironmentState kEnv3({0.5, 0.3, 0.2});

SearchConfig small_config(std::uint64_t seed = 0) {
    SearchConfig cfg;
    cfg.restarts = 8;
    cfg.seed = seed;
    return cfg;
}

} // namespace

TEST_SUITE("numeric-oracle") {

TEST_CASE("perr_of_state examples") {
    CounterRng rng(41);
    for (double p0 : {0.2, 0.5, 0.9}) {
        const Scenario s(p0, 0.0, kEnv3);
        for (int t = 0; t < 5; ++t) {
            CHECK(perr_of_state(s, haar_random_state(3, rng), Mode::conventional) ==
                  doctest::Approx(std::min(p0, 1.0 - p0)).epsilon(1e-12));
            CHECK(perr_of_state(s, haar_random_state(9, rng), Mode::quantum) ==
                  doctest::Approx(std::min(p0, 1.0 - p0)).epsilon(1e-12));
        }
    }

    // Probe orthogonal to the environment's support.
    const EnvironmentState env({1.0, 0.0});
    for (double p0 : {0.2, 0.5, 0.8}) {
        for (double eta : {0.1, 0.5, 0.9}) {
            const Scenario s(p0, eta, env);
            const double p1 = 1.0 - p0;
            const double gamma = p1 * (1.0 - eta) - p0;
            const double got = perr_of_state(s, PureState::basis(2, 1), Mode::conventional);
            CHECK(std::abs(got - 0.5 * (1.0 - (p1 * eta + std::abs(gamma)))) <= 1e-14);
            CHECK(std::abs(got - (gamma >= 0 ? p0 : p1 * (1.0 - eta))) <= 1e-14);
        }
    }

    const Scenario s(0.5, 0.6, kEnv3);
    CHECK(perr_of_state(s, optimal_probe_quantum(s), Mode::quantum) ==
          doctest::Approx(0.229032).epsilon(1e-6));
    CHECK_THROWS_AS(perr_of_state(s, haar_random_state(3, rng), Mode::quantum), DimensionError);
}

TEST_CASE("region I landscape is flat") {
    const Scenario s(0.3, 0.5, kEnv3);
    CounterRng rng(42);
    for (int t = 0; t < 200; ++t) {
        CHECK(std::abs(perr_of_state(s, haar_random_state(3, rng), Mode::conventional) - 0.3) <=
              1e-12);
        CHECK(std::abs(perr_of_state(s, haar_random_state(9, rng), Mode::quantum) - 0.3) <= 1e-12);
    }
    const OracleResult r = maximize_trace_norm(s, Mode::quantum, small_config());
    CHECK(std::abs(r.perr - 0.3) <= 1e-6);
}

TEST_CASE("search finds the conventional optimum") {
    const Scenario s(0.5, 0.6, kEnv3);
    const OracleResult r = maximize_trace_norm(s, Mode::conventional, SearchConfig{});
    CHECK(std::abs(r.perr - 0.26) <= 1e-6);
    CHECK(r.perr >= 0.26 - 1e-12);
    CHECK(std::norm(r.best_state[2]) >= 1.0 - 1e-4);
    CHECK(std::abs(r.perr - (1.0 - r.best_value) / 2.0) <= 1e-14);
    CHECK(r.evaluations > 32);
}

TEST_CASE("search finds the quantum optimum") {
    const Scenario s(0.5, 0.6, kEnv3);
    const OracleResult r = maximize_trace_norm(s, Mode::quantum, SearchConfig{});
    CHECK(std::abs(r.perr - perr_quantum(s)) <= 1e-6);
    CHECK(r.perr >= perr_quantum(s) - 1e-12);
}

TEST_CASE("oracle never beats the analytic optimum") {
    CounterRng rng(43);
    for (int t = 0; t < 12; ++t) {
        const std::size_t d = 2 + static_cast<std::size_t>(t % 2);
        std::vector<double> lam(d);
        double sum = 0.0;
        for (auto& l : lam) {
            l = rng.uniform() + 0.05;
            sum += l;
        }
        for (auto& l : lam) {
            l /= sum;
        }
        const Scenario s(rng.uniform(), rng.uniform(), EnvironmentState(lam));
        for (Mode m : {Mode::conventional, Mode::quantum}) {
            const OracleResult r = maximize_trace_norm(s, m, small_config(t));
            INFO("t=" << t << " mode=" << to_string(m));
            CHECK(r.perr >= perr_analytic(s, m) - 1e-6);
        }
    }
}

TEST_CASE("search is deterministic and seed dependent") {
    const Scenario s(0.45, 0.7, kEnv3);
    SearchConfig cfg = small_config(5);
    cfg.steps_per_restart = 300;
    const OracleResult a = maximize_trace_norm(s, Mode::quantum, cfg);
    const OracleResult b = maximize_trace_norm(s, Mode::quantum, cfg);
    CHECK(a.best_value == b.best_value);
    CHECK(a.best_state.vector() == b.best_state.vector());
    CHECK(a.evaluations == b.evaluations);
    cfg.seed = 6;
    const OracleResult c = maximize_trace_norm(s, Mode::quantum, cfg);
    CHECK(c.best_state.vector() != a.best_state.vector());
}

TEST_CASE("search configuration errors") {
    const Scenario big(0.5, 0.5, EnvironmentState::maximally_mixed(9));
    CHECK_THROWS_AS(maximize_trace_norm(big, Mode::quantum, SearchConfig{}), ConfigurationError);
    SearchConfig cfg;
    cfg.restarts = 0;
    CHECK_THROWS_AS(cfg.validate(), ConfigurationError);
    cfg = SearchConfig{};
    cfg.shrink_factor = 1.0;
    CHECK_THROWS_AS(cfg.validate(), ConfigurationError);
    cfg = SearchConfig{};
    cfg.tolerance = 0.0;
    CHECK_THROWS_AS(cfg.validate(), ConfigurationError);
    CHECK_NOTHROW(SearchConfig{}.validate());
}

TEST_CASE("analytic quantum state is a fixed point of the search") {
    for (double eta : {0.3, 0.6, 0.9}) {
        const Scenario s(0.5, eta, kEnv3);
        const PureState start = optimal_probe_quantum(s);
        const double initial = trace_norm_of_state(s, start, Mode::quantum);
        const OracleResult r = maximize_trace_norm(s, Mode::quantum, small_config(), start);
        CHECK(r.best_value - initial <= 1e-8);
    }
}

TEST_CASE("single negative eigenvalue") {
    CounterRng rng(44);
    for (int t = 0; t < 500; ++t) {
        const std::size_t d = 1 + static_cast<std::size_t>(t % 6);
        const DensityMatrix rho = random_density(d, 1 + t % d, rng);
        const PureState psi = haar_random_state(d, rng);
        CHECK(check_single_negative_eigenvalue(rho, 0.0, psi));
        CHECK(check_single_negative_eigenvalue(rho, 3.0 * rng.uniform(), psi));
    }
    // psi an eigenvector with eigenvalue 0.3.
    const DensityMatrix rho(HermitianOperator::diagonal(Eigen::Vector3d(0.5, 0.3, 0.2)));
    const PureState e1 = PureState::basis(3, 1);
    const auto min_ev = [&](double a) {
        return eigenvalues(rho.op() - a * HermitianOperator::projector(e1)).minCoeff();
    };
    CHECK(min_ev(0.29) >= 0.0);
    CHECK(min_ev(0.31) < 0.0);
    CHECK(second_smallest_eigenvalue(rho, 0.31, e1) >= 0.0);
}

TEST_CASE("eigenvalue lower bound") {
    const double lambda_h = 3.0 / 31.0;
    const PureState opt = optimal_probe_quantum(kEnv3);
    for (double alpha : {0.2, 0.5, 1.0, 2.0}) {
        CHECK(std::abs(min_eigenvalue_hq(kEnv3, alpha, opt) - (lambda_h - alpha)) <= 1e-12);
        CHECK(check_eigenvalue_lower_bound(kEnv3, alpha, opt));
    }
    CounterRng rng(45);
    for (int t = 0; t < 300; ++t) {
        const std::size_t d = 2 + static_cast<std::size_t>(t % 2);
        const EnvironmentState env =
            EnvironmentState(d == 2 ? std::vector<double>{0.7, 0.3} : kEnv3.spectrum())
                .rotated(random_unitary(d, rng));
        const PureState psi = haar_random_state(d * d, rng);
        const double alpha = 2.0 * rng.uniform();
        CHECK(check_eigenvalue_lower_bound(env, alpha, psi));
        const double lh = harmonic_lambda(env.spectrum());
        const double small = lh * rng.uniform();
        CHECK(min_eigenvalue_hq(env, small, psi) >= -1e-10);
    }
}

TEST_CASE("error is linear in the smallest shifted eigenvalue") {
    const Scenario s(0.5, 0.6, kEnv3);
    const auto gap = perr_linear_identity_gap(s, kEnv3.theta(2));
    REQUIRE(gap.has_value());
    CHECK(*gap <= 1e-12);
    CHECK(perr_of_state(s, kEnv3.theta(2), Mode::conventional) == doctest::Approx(0.26));

    CounterRng rng(46);
    const EnvironmentState env4({0.4, 0.3, 0.2, 0.1});
    const Scenario s4(0.55, 0.7, env4);
    int checked = 0;
    for (int t = 0; t < 300; ++t) {
        const PureState psi = haar_random_state(4, rng);
        const auto g = perr_linear_identity_gap(s4, psi);
        CHECK(check_perr_linear_in_Ed(s4, psi));
        if (g) {
            ++checked;
            CHECK(*g <= 1e-10);
        }
    }
    CHECK(checked > 0);

    // alpha = 0.02 / 0.62 < lambda_d keeps E_d > 0, so the identity is skipped.
    const Scenario weak(0.8, 0.1, EnvironmentState({0.5, 0.5}));
    CHECK_FALSE(perr_linear_identity_gap(weak, PureState::basis(2, 0)).has_value());
    CHECK_THROWS_AS(perr_linear_identity_gap(Scenario(0.3, 0.2, kEnv3), kEnv3.theta(0)),
                    InvalidArgument);
}

TEST_CASE("mixed probes never beat pure ones") {
    CounterRng rng(47);
    const Scenario s(0.5, 0.6, kEnv3);
    CHECK(check_convexity_reduction(s, kEnv3.density(), Mode::conventional));
    CHECK(std::abs(convexity_gap(s, DensityMatrix::pure(kEnv3.theta(1)), Mode::conventional)) <=
          1e-14);
    for (int t = 0; t < 200; ++t) {
        const Scenario r(rng.uniform(), rng.uniform(), kEnv3);
        CHECK(check_convexity_reduction(r, random_density(3, 3, rng), Mode::conventional));
        CHECK(check_convexity_reduction(r, random_density(9, 1 + t % 9, rng), Mode::quantum));
    }
}

TEST_CASE("simulated measurement examples") {
    const auto half = EnvironmentState::maximally_mixed(2);
    const long long n = 100000;

    const Scenario blind(0.3, 0.0, half);
    const auto a = simulate_measurement(blind, PureState::basis(2, 0), Mode::conventional, n, 1);
    CHECK(std::abs(a.empirical_perr - 0.3) <= 4.0 * a.std_error);

    const Scenario s2(0.5, 0.6, half);
    const auto b = simulate_measurement(s2, PureState::basis(2, 1), Mode::conventional, n, 2);
    CHECK(std::abs(b.empirical_perr - 0.35) <= 4.0 * b.std_error);
    CHECK(b.trials == n);
    CHECK(b.empirical_perr == static_cast<double>(b.errors) / static_cast<double>(n));
    CHECK(b.std_error ==
          doctest::Approx(std::sqrt(b.empirical_perr * (1 - b.empirical_perr) / n)));

    const Scenario s3(0.5, 0.6, kEnv3);
    const auto c = simulate_measurement(s3, optimal_probe_quantum(s3), Mode::quantum, n, 3);
    CHECK(std::abs(c.empirical_perr - 0.229032258) <= 4.0 * c.std_error);
}

TEST_CASE("simulation is reproducible and validates input") {
    const Scenario s(0.4, 0.7, kEnv3);
    const PureState probe = optimal_probe_quantum(s);
    const auto a = simulate_measurement(s, probe, Mode::quantum, 50000, 9);
    const auto b = simulate_measurement(s, probe, Mode::quantum, 50000, 9);
    CHECK(a.errors == b.errors);
    CHECK_THROWS_AS(simulate_measurement(s, probe, Mode::quantum, 0, 9), InvalidArgument);
    CHECK_THROWS_AS(simulate_measurement(s, probe, Mode::conventional, 10, 9), DimensionError);
}

TEST_CASE("simulated error is non-increasing in eta") {
    double prev = 1.0;
    double prev_se = 0.0;
    for (int i = 0; i <= 10; ++i) {
        const Scenario s(0.5, i / 10.0, kEnv3);
        const auto m = simulate_measurement(s, optimal_probe_quantum(s), Mode::quantum, 40000,
                                            100 + static_cast<std::uint64_t>(i));
        CHECK(m.empirical_perr <= prev + 4.0 * std::hypot(m.std_error, prev_se));
        prev = m.empirical_perr;
        prev_se = m.std_error;
    }
}

TEST_CASE("one positive eigenvalue of omega_q at the optimum") {
    CounterRng rng(48);
    for (int t = 0; t < 50; ++t) {
        const Scenario s(0.5 + 0.5 * rng.uniform(), rng.uniform(), kEnv3);
        if (derived_params(s).gamma >= 0.0) {
            continue;
        }
        const Eigen::VectorXd e = eigenvalues(omega_q(s, optimal_probe_quantum(s)));
        CHECK((e.array() > 1e-12).count() <= 1);
        if (classify(s).second.value == Region::III) {
            CHECK((e.array() > 1e-12).count() == 1);
        }
    }
}

}
