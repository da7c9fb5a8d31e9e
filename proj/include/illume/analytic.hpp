#pragma once

#include <string_view>
#include <vector>

#include "illume/model.hpp"

namespace illume {

enum class Mode { conventional, quantum };
enum class Region { I, II, III };

std::string_view to_string(Mode m);
std::string_view to_string(Region r);
Mode parse_mode(std::string_view s);

struct RegionLabel {
    Region value;
    Mode mode;
    friend bool operator==(const RegionLabel&, const RegionLabel&) = default;
};

/// Critical reflectivities. eta_star separates I from III when p0 < p1;
/// eta_c / eta_q separate II from III when p0 > p1. Not clamped to [0, 1]
/// and may be infinite for p1 = 0 or a one-dimensional environment.
struct Boundaries {
    double eta_star;
    double eta_c;
    double eta_q;
};

Boundaries boundaries(double p0, const EnvironmentState& env);
Boundaries boundaries(const Scenario& s);

std::pair<RegionLabel, RegionLabel> classify(const Scenario& s);

double perr_conventional(const Scenario& s);
double perr_quantum(const Scenario& s);
double perr_analytic(const Scenario& s, Mode m);

/// |theta_d>, the eigenvector of the smallest environment eigenvalue.
PureState optimal_probe_conventional(const Scenario& s);
PureState optimal_probe_conventional(const EnvironmentState& env);
/// sum_i sqrt(lambda_h / lambda_i) |theta_i>|theta_i>, or |theta_d>|theta_d>
/// when the environment has a zero eigenvalue.
PureState optimal_probe_quantum(const Scenario& s);
PureState optimal_probe_quantum(const EnvironmentState& env);
/// Schmidt coefficients squared of the optimal entangled probe.
std::vector<double> schmidt_weights(const EnvironmentState& env);

struct DetectionReport {
    RegionLabel region_c;
    RegionLabel region_q;
    double perr_c;
    double perr_q;
    double advantage;
    PureState optimal_probe_c;
    PureState optimal_probe_q;
    Boundaries bounds;
    std::vector<double> mu_sq;
};

DetectionReport report(const Scenario& s);

} // namespace illume
