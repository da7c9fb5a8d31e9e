#include "illume/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "illume/error.hpp"
#include "illume/tolerances.hpp"

namespace illume {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// (p0/p1 - 1) * lambda / (1 - lambda), with the degenerate corners resolved
// by their limits: no region II once lambda = 0, unbounded once p1 = 0 or d = 1.
double region_two_boundary(double excess, double lambda) {
    if (lambda <= 0.0 || excess == 0.0) {
        return 0.0;
    }
    if (std::isinf(excess) || lambda >= 1.0) {
        return excess > 0.0 ? kInf : -kInf;
    }
    return excess * lambda / (1.0 - lambda);
}

bool below(double eta, double boundary) { return eta < boundary - Tolerances::boundary; }

double perr_for(const Scenario& s, Region r, double lambda) {
    switch (r) {
    case Region::I:
        return s.p0();
    case Region::II:
        return s.p1();
    case Region::III:
        break;
    }
    // p0 + gamma (1 - lambda), arranged so lambda = 0 gives p1 (1 - eta) bit-exactly.
    const double gamma = s.p1() * (1.0 - s.eta()) - s.p0();
    const double value = s.p1() * (1.0 - s.eta()) - gamma * lambda;
    // Ties on a boundary can leave gamma a rounding error above zero.
    return std::min(value, std::min(s.p0(), s.p1()));
}

} // namespace

std::string_view to_string(Mode m) {
    return m == Mode::conventional ? "conventional" : "quantum";
}

std::string_view to_string(Region r) {
    switch (r) {
    case Region::I:
        return "I";
    case Region::II:
        return "II";
    case Region::III:
        return "III";
    }
    return "?";
}

Mode parse_mode(std::string_view s) {
    if (s == "conventional" || s == "c") {
        return Mode::conventional;
    }
    if (s == "quantum" || s == "q") {
        return Mode::quantum;
    }
    throw InvalidArgument("unknown mode '" + std::string(s) + "'");
}

Boundaries boundaries(double p0, const EnvironmentState& env) {
    const double p1 = 1.0 - p0;
    const double eta_star = p1 > 0.0 ? 1.0 - p0 / p1 : -kInf;
    const double excess = p1 > 0.0 ? p0 / p1 - 1.0 : kInf;
    return {eta_star, region_two_boundary(excess, env.lambda_min()),
            region_two_boundary(excess, harmonic_lambda(env.spectrum()))};
}

Boundaries boundaries(const Scenario& s) { return boundaries(s.p0(), s.env()); }

std::pair<RegionLabel, RegionLabel> classify(const Scenario& s) {
    const double p0 = s.p0();
    const double p1 = s.p1();
    auto both = [](Region r) {
        return std::pair{RegionLabel{r, Mode::conventional}, RegionLabel{r, Mode::quantum}};
    };
    // Degenerate priors: labelled by their limits.
    if (p0 <= 0.0) {
        return both(Region::I);
    }
    if (p1 <= 0.0) {
        return both(Region::II);
    }

    const Boundaries b = boundaries(s);
    if (p0 < p1) {
        return both(below(s.eta(), b.eta_star) ? Region::I : Region::III);
    }
    if (p0 > p1) {
        return {RegionLabel{below(s.eta(), b.eta_c) ? Region::II : Region::III,
                            Mode::conventional},
                RegionLabel{below(s.eta(), b.eta_q) ? Region::II : Region::III, Mode::quantum}};
    }
    return both(Region::III);
}

double perr_conventional(const Scenario& s) {
    return perr_for(s, classify(s).first.value, s.env().lambda_min());
}

double perr_quantum(const Scenario& s) {
    return perr_for(s, classify(s).second.value, harmonic_lambda(s.env().spectrum()));
}

double perr_analytic(const Scenario& s, Mode m) {
    return m == Mode::conventional ? perr_conventional(s) : perr_quantum(s);
}

PureState optimal_probe_conventional(const EnvironmentState& env) {
    return env.theta(env.dim() - 1);
}

PureState optimal_probe_conventional(const Scenario& s) {
    return optimal_probe_conventional(s.env());
}

std::vector<double> schmidt_weights(const EnvironmentState& env) {
    const std::size_t d = env.dim();
    std::vector<double> w(d, 0.0);
    if (env.has_zero_eigenvalue()) {
        w.back() = 1.0;
        return w;
    }
    const double lambda_h = harmonic_lambda(env.spectrum());
    for (std::size_t i = 0; i < d; ++i) {
        w[i] = lambda_h / env.spectrum()[i];
    }
    return w;
}

PureState optimal_probe_quantum(const EnvironmentState& env) {
    const std::size_t d = env.dim();
    const auto w = schmidt_weights(env);
    ComplexVector psi = ComplexVector::Zero(static_cast<Eigen::Index>(d * d));
    for (std::size_t i = 0; i < d; ++i) {
        if (w[i] == 0.0) {
            continue;
        }
        const PureState theta = env.theta(i);
        psi += std::sqrt(w[i]) * tensor(theta, theta).vector();
    }
    return PureState::normalized(std::move(psi));
}

PureState optimal_probe_quantum(const Scenario& s) { return optimal_probe_quantum(s.env()); }

DetectionReport report(const Scenario& s) {
    const auto [rc, rq] = classify(s);
    const double pc = perr_for(s, rc.value, s.env().lambda_min());
    const double pq = perr_for(s, rq.value, harmonic_lambda(s.env().spectrum()));
    return DetectionReport{rc,
                           rq,
                           pc,
                           pq,
                           pc - pq,
                           optimal_probe_conventional(s),
                           optimal_probe_quantum(s),
                           boundaries(s),
                           schmidt_weights(s.env())};
}

} // namespace illume
