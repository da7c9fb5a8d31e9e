#include "illume/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "illume/tolerances.hpp"

namespace illume::io {
namespace {

double number(const json& j, const char* key) {
    if (!j.contains(key)) {
        throw InvalidArgument(std::string("missing field '") + key + "'");
    }
    if (!j.at(key).is_number()) {
        throw InvalidArgument(std::string("field '") + key + "' must be a number");
    }
    return j.at(key).get<double>();
}

std::vector<double> spectrum_field(const json& j) {
    if (!j.contains("spectrum") || !j.at("spectrum").is_array()) {
        throw InvalidArgument("missing array field 'spectrum'");
    }
    std::vector<double> out;
    for (const auto& v : j.at("spectrum")) {
        if (!v.is_number()) {
            throw InvalidArgument("spectrum entries must be numbers");
        }
        out.push_back(v.get<double>());
    }
    return out;
}

GridRange range_from_json(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_object()) {
        throw InvalidArgument(std::string("missing object field '") + key + "'");
    }
    const json& r = j.at(key);
    if (!r.contains("steps") || !r.at("steps").is_number_integer()) {
        throw InvalidArgument(std::string(key) + ".steps must be an integer");
    }
    return {number(r, "min"), number(r, "max"), r.at("steps").get<int>()};
}

/// JSON has no infinity; unbounded boundaries are written as null.
json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

} // namespace

std::vector<double> normalize_spectrum(std::vector<double> spectrum) {
    if (spectrum.empty()) {
        throw InvalidArgument("spectrum is empty");
    }
    double sum = 0.0;
    for (double v : spectrum) {
        if (!std::isfinite(v) || v < 0.0) {
            throw InvalidArgument("spectrum entries must be finite and non-negative");
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > Tolerances::input_spectrum_sum) {
        std::ostringstream msg;
        msg << "spectrum sums to " << sum << ", expected 1";
        throw InvalidArgument(msg.str());
    }
    for (double& v : spectrum) {
        v /= sum;
    }
    return spectrum;
}

std::vector<double> parse_spectrum(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception&) {
            throw InvalidArgument("cannot parse spectrum entry '" + item + "'");
        }
    }
    return normalize_spectrum(std::move(out));
}

ComplexMatrix basis_from_json(const json& rows) {
    if (!rows.is_array() || rows.empty()) {
        throw InvalidArgument("basis must be a non-empty array of rows");
    }
    const auto d = static_cast<Eigen::Index>(rows.size());
    ComplexMatrix b(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        const json& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != d) {
            throw InvalidArgument("basis must be square");
        }
        for (Eigen::Index k = 0; k < d; ++k) {
            const json& z = row[static_cast<std::size_t>(k)];
            if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
                throw InvalidArgument("basis entries must be [re, im] pairs");
            }
            // Row i is the i-th eigenvector.
            b(k, i) = Complex(z[0].get<double>(), z[1].get<double>());
        }
    }
    return b;
}

EnvironmentState environment_from_json(const json& j) {
    auto spectrum = normalize_spectrum(spectrum_field(j));
    if (j.contains("basis") && !j.at("basis").is_null()) {
        ComplexMatrix basis = basis_from_json(j.at("basis"));
        if (static_cast<std::size_t>(basis.rows()) != spectrum.size()) {
            throw DimensionError("basis dimension does not match spectrum length");
        }
        return EnvironmentState(std::move(spectrum), std::move(basis));
    }
    return EnvironmentState(std::move(spectrum));
}

Scenario scenario_from_json(const json& j) {
    if (!j.is_object()) {
        throw InvalidArgument("scenario must be a JSON object");
    }
    return Scenario(number(j, "p0"), number(j, "eta"), environment_from_json(j));
}

SearchConfig search_config_from_json(const json& j) {
    SearchConfig cfg;
    if (!j.is_object()) {
        throw InvalidArgument("oracle configuration must be an object");
    }
    try {
        cfg.restarts = j.value("restarts", cfg.restarts);
        cfg.steps_per_restart = j.value("steps_per_restart", cfg.steps_per_restart);
        cfg.initial_step = j.value("initial_step", cfg.initial_step);
        cfg.shrink_factor = j.value("shrink_factor", cfg.shrink_factor);
        cfg.seed = j.value("seed", cfg.seed);
        cfg.tolerance = j.value("tolerance", cfg.tolerance);
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("bad oracle configuration: ") + e.what());
    }
    return cfg;
}

SweepSpec sweep_spec_from_json(const json& j) {
    if (!j.is_object()) {
        throw InvalidArgument("sweep spec must be a JSON object");
    }
    SweepSpec spec{range_from_json(j, "p0"), range_from_json(j, "eta"),
                   environment_from_json(j), false, SearchConfig{}};
    if (j.contains("oracle")) {
        const json& o = j.at("oracle");
        if (o.is_boolean()) {
            spec.include_oracle = o.get<bool>();
        } else {
            spec.include_oracle = true;
            spec.oracle_cfg = search_config_from_json(o);
        }
    }
    return spec;
}

json to_json(const DetectionReport& r) {
    return json{{"schema", kSchemaVersion},
                {"region_c", to_string(r.region_c.value)},
                {"region_q", to_string(r.region_q.value)},
                {"perr_c", r.perr_c},
                {"perr_q", r.perr_q},
                {"advantage", r.advantage},
                {"eta_star", finite_or_null(r.bounds.eta_star)},
                {"eta_c", finite_or_null(r.bounds.eta_c)},
                {"eta_q", finite_or_null(r.bounds.eta_q)},
                {"mu_sq", r.mu_sq}};
}

json to_json(const MeasurementStats& m) {
    return json{{"trials", m.trials},
                {"errors", m.errors},
                {"empirical_perr", m.empirical_perr},
                {"std_error", m.std_error}};
}

json to_json(const VerificationReport& r) {
    json checks = json::array();
    long long violations = 0;
    for (const auto& c : r.checks) {
        violations += c.violations;
        checks.push_back({{"name", c.name},
                          {"trials", c.trials},
                          {"violations", c.violations},
                          {"allowed_violations", c.allowed_violations},
                          {"worst_margin", finite_or_null(c.worst_margin)},
                          {"passed", c.passed()}});
    }
    return json{{"schema", kSchemaVersion}, {"suite", r.suite},         {"seed", r.seed},
                {"checks", checks},         {"violations", violations}, {"passed", r.passed()}};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InvalidArgument("malformed JSON in '" + path + "': " + e.what());
    }
}

} // namespace illume::io
