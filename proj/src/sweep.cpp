#include "illume/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <mutex>
#include <ostream>
#include <string>

#include "illume/error.hpp"
#include "illume/parallel.hpp"

namespace illume {
namespace {

void check_range(const GridRange& r, const char* name) {
    if (r.steps < 2) {
        throw ConfigurationError(std::string(name) + " range needs at least 2 steps");
    }
    if (!(r.min >= 0.0 && r.max <= 1.0 && r.min <= r.max)) {
        throw ConfigurationError(std::string(name) + " range must satisfy 0 <= min <= max <= 1");
    }
}

BoundaryPoint point(double p0, double raw) {
    return {p0, std::clamp(raw, 0.0, 1.0), raw};
}

} // namespace

double GridRange::at(int i) const {
    if (i <= 0) {
        return min;
    }
    if (i >= steps - 1) {
        return max;
    }
    return min + (max - min) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

void SweepSpec::validate() const {
    check_range(p0_range, "p0");
    check_range(eta_range, "eta");
    if (include_oracle) {
        oracle_cfg.validate();
        if (env.dim() > kMaxOracleDim) {
            throw ConfigurationError("oracle columns need d <= " + std::to_string(kMaxOracleDim) +
                                     " for the quantum search, got d = " +
                                     std::to_string(env.dim()));
        }
    }
}

std::vector<SweepRecord> run_sweep(const SweepSpec& spec) { return run_sweep(spec, {}); }

std::vector<SweepRecord> run_sweep(const SweepSpec& spec, const SweepProgress& progress) {
    spec.validate();
    const auto rows = static_cast<std::size_t>(spec.p0_range.steps);
    const auto cols = static_cast<std::size_t>(spec.eta_range.steps);
    const std::size_t total = rows * cols;

    std::vector<SweepRecord> records(total);
    std::atomic<std::size_t> done{0};
    std::mutex progress_mutex;

    parallel_for(total, [&](std::size_t cell) {
        const double p0 = spec.p0_range.at(static_cast<int>(cell / cols));
        const double eta = spec.eta_range.at(static_cast<int>(cell % cols));
        const Scenario s(p0, eta, spec.env);
        const auto [rc, rq] = classify(s);
        SweepRecord r{p0, eta, rc.value, rq.value, perr_conventional(s), perr_quantum(s), 0.0,
                      std::nullopt, std::nullopt};
        r.advantage = r.perr_c - r.perr_q;
        if (spec.include_oracle) {
            SearchConfig cfg = spec.oracle_cfg;
            cfg.seed = CounterRng(spec.oracle_cfg.seed).split(cell)();
            r.oracle_perr_c = maximize_trace_norm(s, Mode::conventional, cfg).perr;
            r.oracle_perr_q = maximize_trace_norm(s, Mode::quantum, cfg).perr;
        }
        records[cell] = r;
        const std::size_t n = ++done;
        if (progress) {
            std::lock_guard lock(progress_mutex);
            progress(n, total);
        }
    });
    return records;
}

BoundaryCurves region_boundaries(const EnvironmentState& env, const GridRange& p0_range) {
    check_range(p0_range, "p0");
    BoundaryCurves out;
    for (int i = 0; i < p0_range.steps; ++i) {
        const double p0 = p0_range.at(i);
        const Boundaries b = boundaries(p0, env);
        out.eta_star.push_back(point(p0, b.eta_star));
        out.eta_c.push_back(point(p0, b.eta_c));
        out.eta_q.push_back(point(p0, b.eta_q));
    }
    return out;
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records,
                     bool include_oracle) {
    out << "p0,eta,region_c,region_q,perr_c,perr_q,advantage";
    if (include_oracle) {
        out << ",oracle_perr_c,oracle_perr_q";
    }
    out << '\n';
    for (const auto& r : records) {
        out << format_number(r.p0) << ',' << format_number(r.eta) << ',' << to_string(r.region_c)
            << ',' << to_string(r.region_q) << ',' << format_number(r.perr_c) << ','
            << format_number(r.perr_q) << ',' << format_number(r.advantage);
        if (include_oracle) {
            out << ',' << (r.oracle_perr_c ? format_number(*r.oracle_perr_c) : "")
                << ',' << (r.oracle_perr_q ? format_number(*r.oracle_perr_q) : "");
        }
        out << '\n';
    }
}

} // namespace illume
