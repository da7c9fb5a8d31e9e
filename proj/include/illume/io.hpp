#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "illume/error.hpp"
#include "illume/sweep.hpp"
#include "illume/verify.hpp"

namespace illume::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Validates sum within Tolerances::input_spectrum_sum of 1 and no negative
/// entries, then renormalises.
std::vector<double> normalize_spectrum(std::vector<double> spectrum);
/// "0.5,0.3,0.2"
std::vector<double> parse_spectrum(const std::string& text);

/// Rows of [re, im] pairs; row i is the eigenvector paired with spectrum[i].
ComplexMatrix basis_from_json(const json& rows);
EnvironmentState environment_from_json(const json& j);
/// {"p0", "eta", "spectrum", optional "basis"}
Scenario scenario_from_json(const json& j);
SearchConfig search_config_from_json(const json& j);
/// {"p0": {min,max,steps}, "eta": {...}, "spectrum", "basis"?, "oracle"?: bool|config}
SweepSpec sweep_spec_from_json(const json& j);

json to_json(const DetectionReport& r);
json to_json(const MeasurementStats& m);
json to_json(const VerificationReport& r);

/// Parses a file; throws InvalidArgument on malformed JSON, IoError on read failure.
json read_json_file(const std::string& path);

class IoError : public Error {
  public:
    using Error::Error;
};

} // namespace illume::io
