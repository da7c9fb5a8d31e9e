#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "illume/oracle.hpp"

namespace illume {

/// Inclusive linspace.
struct GridRange {
    double min;
    double max;
    int steps;

    double at(int i) const;
};

struct SweepSpec {
    GridRange p0_range;
    GridRange eta_range;
    EnvironmentState env;
    bool include_oracle = false;
    SearchConfig oracle_cfg{};

    /// Throws ConfigurationError for steps < 2, ranges outside [0,1], or an
    /// oracle request above the quantum dimension cap.
    void validate() const;
};

struct SweepRecord {
    double p0;
    double eta;
    Region region_c;
    Region region_q;
    double perr_c;
    double perr_q;
    double advantage;
    std::optional<double> oracle_perr_c;
    std::optional<double> oracle_perr_q;
};

/// Called with (cells done, total cells); serialised across workers.
using SweepProgress = std::function<void(std::size_t, std::size_t)>;

/// Row-major records, p0 outer and eta inner.
std::vector<SweepRecord> run_sweep(const SweepSpec& spec);
std::vector<SweepRecord> run_sweep(const SweepSpec& spec, const SweepProgress& progress);

struct BoundaryPoint {
    double p0;
    /// Clamped to [0, 1] for plotting.
    double eta;
    double eta_raw;
};

struct BoundaryCurves {
    std::vector<BoundaryPoint> eta_star;
    std::vector<BoundaryPoint> eta_c;
    std::vector<BoundaryPoint> eta_q;
};

BoundaryCurves region_boundaries(const EnvironmentState& env, const GridRange& p0_range);

/// p0,eta,region_c,region_q,perr_c,perr_q,advantage[,oracle_perr_c,oracle_perr_q]
void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records,
                     bool include_oracle);
std::string format_number(double v);

} // namespace illume
