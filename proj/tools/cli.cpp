#include "cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "illume/io.hpp"

namespace illume::cli {
namespace {

using io::json;

struct ScenarioArgs {
    std::string scenario_path;
    std::optional<double> p0;
    std::optional<double> eta;
    std::string spectrum;

    void attach(CLI::App& cmd) {
        cmd.add_option("--scenario", scenario_path, "scenario JSON file");
        cmd.add_option("--p0", p0, "probability the target is absent");
        cmd.add_option("--eta", eta, "target reflectivity");
        cmd.add_option("--spectrum", spectrum, "environment spectrum, comma separated");
    }

    Scenario resolve() const {
        if (!scenario_path.empty()) {
            return io::scenario_from_json(io::read_json_file(scenario_path));
        }
        if (!p0 || !eta || spectrum.empty()) {
            throw InvalidArgument("give --scenario FILE or all of --p0, --eta, --spectrum");
        }
        return Scenario(*p0, *eta, EnvironmentState(io::parse_spectrum(spectrum)));
    }

    EnvironmentState environment() const {
        if (!scenario_path.empty()) {
            return io::environment_from_json(io::read_json_file(scenario_path));
        }
        if (spectrum.empty()) {
            throw InvalidArgument("give --scenario FILE or --spectrum");
        }
        return EnvironmentState(io::parse_spectrum(spectrum));
    }
};

void print(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_solve(const ScenarioArgs& args, std::ostream& out) {
    print(out, io::to_json(report(args.resolve())));
    return kSuccess;
}

int cmd_optimal_state(const ScenarioArgs& args, std::ostream& out) {
    const EnvironmentState env = args.environment();
    const auto weights = schmidt_weights(env);
    std::vector<double> mu;
    for (double w : weights) {
        mu.push_back(std::sqrt(w));
    }
    print(out, json{{"schema", io::kSchemaVersion},
                    {"spectrum", env.spectrum()},
                    {"lambda_h", harmonic_lambda(env.spectrum())},
                    {"mu", mu},
                    {"mu_sq", weights},
                    {"conventional_index", env.dim() - 1}});
    return kSuccess;
}

int cmd_sweep(const std::string& spec_path, const std::string& out_path, bool oracle,
              std::ostream& out, std::ostream& err) {
    SweepSpec spec = io::sweep_spec_from_json(io::read_json_file(spec_path));
    spec.include_oracle = spec.include_oracle || oracle;

    std::size_t last_pct = 0;
    const auto records = run_sweep(spec, [&](std::size_t done, std::size_t total) {
        const std::size_t pct = done * 100 / total;
        if (pct >= last_pct + 10 || done == total) {
            err << "sweep: " << done << "/" << total << " cells\n";
            last_pct = pct;
        }
    });

    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        throw io::IoError("cannot open '" + out_path + "' for writing");
    }
    write_sweep_csv(file, records, spec.include_oracle);
    file.close();
    if (!file) {
        throw io::IoError("failed writing '" + out_path + "'");
    }
    print(out, json{{"schema", io::kSchemaVersion},
                    {"out", out_path},
                    {"rows", records.size()},
                    {"oracle", spec.include_oracle}});
    return kSuccess;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, long long trials,
               std::ostream& out) {
    const VerificationReport r = run_verification(parse_suite(suite), seed, trials);
    print(out, io::to_json(r));
    return r.passed() ? kSuccess : kVerificationFailed;
}

int cmd_simulate(const ScenarioArgs& args, const std::string& mode_name, long long trials,
                 std::uint64_t seed, std::ostream& out) {
    const Scenario s = args.resolve();
    const Mode mode = parse_mode(mode_name);
    const PureState probe = mode == Mode::conventional ? optimal_probe_conventional(s)
                                                       : optimal_probe_quantum(s);
    const MeasurementStats m = simulate_measurement(s, probe, mode, trials, seed);
    json j = io::to_json(m);
    j["schema"] = io::kSchemaVersion;
    j["mode"] = to_string(mode);
    j["seed"] = seed;
    j["analytic_perr"] = perr_analytic(s, mode);
    print(out, j);
    return kSuccess;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimal-error detection limits for conventional and quantum illumination"};
    app.require_subcommand(1, 1);

    ScenarioArgs solve_args;
    auto* solve = app.add_subcommand("solve", "closed-form detection report as JSON");
    solve_args.attach(*solve);

    ScenarioArgs state_args;
    auto* state = app.add_subcommand("optimal-state", "optimal entangled probe amplitudes");
    state_args.attach(*state);

    std::string spec_path;
    std::string out_path;
    bool with_oracle = false;
    auto* sweep = app.add_subcommand("sweep", "phase-diagram grid as CSV");
    sweep->add_option("--spec", spec_path, "sweep spec JSON")->required();
    sweep->add_option("--out", out_path, "output CSV path")->required();
    sweep->add_flag("--oracle", with_oracle, "add numeric-search columns");

    std::string suite = "all";
    std::uint64_t verify_seed = 7;
    long long verify_trials = 10000;
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", suite, "all|lemmas|oracle|montecarlo")
        ->check(CLI::IsMember({"all", "lemmas", "oracle", "montecarlo"}));
    verify->add_option("--seed", verify_seed);
    verify->add_option("--trials", verify_trials)->check(CLI::PositiveNumber);

    ScenarioArgs sim_args;
    std::string mode = "quantum";
    long long sim_trials = 100000;
    std::uint64_t sim_seed = 0;
    auto* simulate = app.add_subcommand("simulate", "Monte-Carlo Helstrom measurement");
    sim_args.attach(*simulate);
    simulate->add_option("--mode", mode, "conventional|quantum")
        ->check(CLI::IsMember({"conventional", "quantum"}));
    simulate->add_option("--trials", sim_trials)->check(CLI::PositiveNumber);
    simulate->add_option("--seed", sim_seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    try {
        if (*solve) return cmd_solve(solve_args, out);
        if (*state) return cmd_optimal_state(state_args, out);
        if (*sweep) return cmd_sweep(spec_path, out_path, with_oracle, out, err);
        if (*verify) return cmd_verify(suite, verify_seed, verify_trials, out);
        if (*simulate) return cmd_simulate(sim_args, mode, sim_trials, sim_seed, out);
    } catch (const io::IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

} // namespace illume::cli
