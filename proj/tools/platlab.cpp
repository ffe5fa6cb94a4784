// platlab command-line front end.
//
//   platlab analyze LEVEL [--noise ...] [--rt ...] [--ps ...] [--samples N]
//                         [--seed N|random] [--metric ...] [--traj-points N] [--out FILE]
//   platlab validate SUITE TRIALS [--noise a,b] [--rt a,b,...] [--ps a,b,...] [--csv] [--out FILE]
//   platlab synth SUITE --trials N [--trial-seed N] [--noise ...] [--rt ...] [--ps ...] [--out FILE]
//   platlab serve [--port N] [--host H] [--static DIR]
//   platlab defaults
//
// Exit codes: 0 success, 1 I/O error, 2 invalid input (schema or level
// validation).

#include <cstdint>
#include <functional>
#include <sstream>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "platlab/analysis.hpp"
#include "platlab/errors.hpp"
#include "platlab/level_io.hpp"
#include "platlab/service.hpp"
#include "platlab/validation.hpp"

namespace {

using namespace platlab;

constexpr int kExitIo = 1;
constexpr int kExitInvalid = 2;

struct CommonFlags {
    std::optional<std::string> noise;
    std::optional<double> rt;
    std::optional<double> ps;
    std::optional<int> samples;
    std::optional<std::string> seed;
    unsigned threads = 0;
    std::optional<std::string> out;
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t parse_seed(const std::string& s) {
    if (s == "random") return std::random_device{}() | (std::uint64_t{std::random_device{}()} << 32);
    try {
        std::size_t used = 0;
        const auto v = std::stoull(s, &used);
        if (used != s.size()) throw InputError("");
        return v;
    } catch (const std::exception&) {
        throw InputError("--seed expects a nonnegative integer or 'random'");
    }
}

NoiseKind parse_noise(const std::string& s) {
    const auto kind = noise_kind_from_string(s);
    if (!kind) throw InputError("unknown noise kind '" + s + "' (uniform, gauss-nr, gauss-r)");
    return *kind;
}

AnalysisParameters resolve_parameters(const CommonFlags& f) {
    AnalysisParameters p = default_parameters();
    if (f.noise) p.noise.kind = parse_noise(*f.noise);
    if (f.rt) p.noise.reaction_time = *f.rt;
    if (f.ps) p.noise.player_skill = *f.ps;
    if (f.samples) p.sampling.samples = *f.samples;
    if (f.seed) p.sampling.seed = parse_seed(*f.seed);
    return p;
}

void write_output(const std::optional<std::string>& out, const std::string& text) {
    if (!out || *out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(*out, std::ios::binary);
    if (!file) throw IoError("cannot open " + *out + " for writing");
    file << text;
    if (!file) throw IoError("failed writing " + *out);
}

void print_diagnostics(const std::vector<Diagnostic>& diagnostics) {
    for (const auto& d : diagnostics) {
        std::cerr << "invalid level: [" << d.rule << "]";
        if (!d.platform_id.empty()) std::cerr << " platform " << d.platform_id;
        std::cerr << ": " << d.message << '\n';
    }
}

int run_guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const ParseError& e) {
        std::cerr << "parse error at line " << e.line() << ", column " << e.column() << ": " << e.what() << '\n';
        return kExitInvalid;
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const TrialFormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const UnknownScreenError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
}

void add_common(CLI::App* cmd, CommonFlags& f, bool single_noise) {
    if (single_noise) {
        cmd->add_option("--noise", f.noise, "Noise model: uniform, gauss-nr, gauss-r");
        cmd->add_option("--rt", f.rt, "Average reaction time Rt in seconds");
        cmd->add_option("--ps", f.ps, "Player skill Ps");
    }
    cmd->add_option("--samples", f.samples, "Noisy samples per optimal trajectory");
    cmd->add_option("--seed", f.seed, "RNG seed, or 'random'");
    cmd->add_option("--out", f.out, "Output file (default stdout)");
}

std::vector<double> parse_list(const std::string& s, const char* flag) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw InputError("");
        } catch (const std::exception&) {
            throw InputError(std::string(flag) + " expects a comma-separated list of numbers");
        }
    }
    if (out.empty()) throw InputError(std::string(flag) + " needs at least one value");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Platformer level analysis: reachability, jump probabilities and path difficulty"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kEngineVersion));

    // analyze
    CommonFlags af;
    std::string level_path;
    std::optional<std::string> metric;
    std::optional<std::size_t> traj_points;
    auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a level document and print a JSON report");
    analyze_cmd->add_option("level", level_path, "Level JSON file")->required();
    add_common(analyze_cmd, af, true);
    analyze_cmd->add_option("--metric", metric, "Best-path metric: difficulty or probability");
    analyze_cmd->add_option("--traj-points", traj_points, "Points per trajectory polyline");
    analyze_cmd->add_option("--threads", af.threads, "Worker threads (0 = all cores)");

    // validate
    CommonFlags vf;
    std::string suite_path;
    std::string trials_path;
    std::string noise_list = "gauss-r";
    std::optional<std::string> rt_list;
    std::optional<std::string> ps_list;
    bool csv = false;
    auto* validate_cmd = app.add_subcommand("validate", "Compare estimates with trial logs over an (Rt, Ps) grid");
    validate_cmd->add_option("suite", suite_path, "Screen suite JSON")->required();
    validate_cmd->add_option("trials", trials_path, "Trial log (CSV or JSON)")->required();
    validate_cmd->add_option("--noise", noise_list, "Comma-separated noise kinds");
    validate_cmd->add_option("--rt", rt_list, "Comma-separated reaction times");
    validate_cmd->add_option("--ps", ps_list, "Comma-separated player skills");
    validate_cmd->add_flag("--csv", csv, "Emit the grid as CSV instead of JSON");
    add_common(validate_cmd, vf, false);

    // synth
    CommonFlags sf;
    std::string synth_suite;
    std::size_t trials_per_screen = 150;
    std::uint64_t trial_seed = 1;
    auto* synth_cmd = app.add_subcommand("synth", "Synthesize a trial log from the engine's own estimates");
    synth_cmd->add_option("suite", synth_suite, "Screen suite JSON")->required();
    synth_cmd->add_option("--trials", trials_per_screen, "Trials per screen");
    synth_cmd->add_option("--trial-seed", trial_seed, "Seed for the Bernoulli draws");
    add_common(synth_cmd, sf, true);

    // serve
    platlab::service::ServerOptions server;
    std::optional<std::string> static_dir;
    auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP API");
    serve_cmd->add_option("--port", server.port, "Port (0 picks a free one)");
    serve_cmd->add_option("--host", server.host, "Listen address");
    serve_cmd->add_option("--static", static_dir, "Directory served at /");

    auto* defaults_cmd = app.add_subcommand("defaults", "Print the default analysis parameters");

    CLI11_PARSE(app, argc, argv);

    if (analyze_cmd->parsed()) {
        return run_guarded([&] {
            auto params = resolve_parameters(af);
            if (metric) {
                const auto m = path_metric_from_string(*metric);
                if (!m) throw InputError("--metric expects difficulty or probability");
                params.metric = *m;
            }
            if (traj_points) params.traj_points = *traj_points;
            params.validate();
            const Level level = load_level(level_path);
            const auto analysis = analyze(level, params, af.threads);
            if (!analysis.valid()) {
                print_diagnostics(analysis.diagnostics);
                return kExitInvalid;
            }
            write_output(af.out, dump_report(report_to_json(analysis)));
            if (!analysis.paths.completable()) std::cerr << "note: level is not completable\n";
            return 0;
        });
    }

    if (validate_cmd->parsed()) {
        return run_guarded([&] {
            const auto params = resolve_parameters(vf);
            std::vector<NoiseKind> kinds;
            {
                std::stringstream ss(noise_list);
                std::string item;
                while (std::getline(ss, item, ',')) kinds.push_back(parse_noise(item));
                if (kinds.empty()) throw InputError("--noise needs at least one kind");
            }
            const auto rts = rt_list ? parse_list(*rt_list, "--rt") : std::vector<double>{params.noise.reaction_time};
            const auto pss = ps_list ? parse_list(*ps_list, "--ps") : std::vector<double>{params.noise.player_skill};

            const auto suite = load_suite(suite_path);
            for (const auto& screen : suite.screens) {
                const auto diagnostics = validate_level(screen.level);
                if (!diagnostics.empty()) {
                    std::cerr << "screen " << screen.id << ":\n";
                    print_diagnostics(diagnostics);
                    return kExitInvalid;
                }
            }
            const auto ids = suite.ids();
            const auto log = load_trials(trials_path, &ids);
            for (const auto& w : log.warnings) std::cerr << "warning: " << w << '\n';
            if (log.records.empty()) {
                std::cerr << "error: trial log has no records\n";
                return kExitInvalid;
            }
            const auto grid = mae_grid(suite, summarize(log.records, suite), kinds, rts, pss, params.sampling,
                                       params.difficulty);
            write_output(vf.out, csv ? grid_to_csv(grid) : dump_report(grid_to_json(grid)));
            for (auto kind : kinds) {
                const auto& c = grid.cells[grid.argmin_for(kind)];
                std::cerr << "argmin " << to_string(kind) << ": rt=" << c.reaction_time << " ps=" << c.player_skill
                          << " mae=" << c.result.mae << " +/- " << c.result.standard_error << '\n';
            }
            return 0;
        });
    }

    if (synth_cmd->parsed()) {
        return run_guarded([&] {
            const auto params = resolve_parameters(sf);
            params.validate();
            const auto suite = load_suite(synth_suite);
            const auto trials =
                synthesize_trials(suite, params.noise, params.sampling, trials_per_screen, trial_seed, params.difficulty);
            write_output(sf.out, trials_to_csv(trials));
            return 0;
        });
    }

    if (serve_cmd->parsed()) {
        return run_guarded([&] {
            if (static_dir) server.static_dir = *static_dir;
            const auto defaults = default_parameters();
            platlab::service::Server srv(server, defaults);
            const int port = srv.bind();
            if (port < 0) {
                std::cerr << "error: cannot bind " << server.host << ":" << server.port << '\n';
                return kExitIo;
            }
            std::cerr << "listening on http://" << server.host << ":" << port << '\n';
            return srv.listen() ? 0 : kExitIo;
        });
    }

    if (defaults_cmd->parsed()) {
        return run_guarded([&] {
            std::cout << dump_report(parameters_to_json(default_parameters()));
            return 0;
        });
    }
    return 0;
}
