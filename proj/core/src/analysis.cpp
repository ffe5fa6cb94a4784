#include "platlab/analysis.hpp"

#include <cstdlib>
#include <stdexcept>

#include "platlab/detail/json_reader.hpp"
#include "platlab/errors.hpp"
#include "platlab/level_io.hpp"

namespace platlab {

namespace {

nlohmann::json point_json(const Point& p) { return nlohmann::json::array({p.x, p.y}); }

nlohmann::json approach_json(const ApproachMode& a) {
    nlohmann::json j = {{"horizontal_takeoff_speed", a.horizontal_takeoff_speed}, {"running", a.running}};
    j["double_jump"] = a.double_jump ? nlohmann::json(to_string(*a.double_jump)) : nlohmann::json();
    return j;
}

void rethrow_as_schema(const std::string& path, const std::invalid_argument& e) { throw SchemaError(path, e.what()); }

}  // namespace

void AnalysisParameters::validate() const {
    noise.validate();
    sampling.validate();
    difficulty.validate();
    if (traj_points < 2) throw std::invalid_argument("traj_points must be at least 2");
    if (vertical_step && !(*vertical_step > 0.0)) throw std::invalid_argument("vertical_step must be positive");
}

nlohmann::json parameters_to_json(const AnalysisParameters& p) {
    nlohmann::json j;
    j["noise"] = {{"kind", to_string(p.noise.kind)}, {"rt", p.noise.reaction_time}, {"ps", p.noise.player_skill}};
    j["sampling"] = {{"samples", p.sampling.samples},
                     {"seed", p.sampling.seed},
                     {"resample_cap", p.sampling.resample_cap}};
    j["difficulty"] = {{"weight_moving", p.difficulty.weight_moving},
                       {"weight_fading", p.difficulty.weight_fading},
                       {"weight_spikes", p.difficulty.weight_spikes}};
    j["metric"] = to_string(p.metric);
    j["traj_points"] = p.traj_points;
    j["vertical_step"] = p.vertical_step ? nlohmann::json(*p.vertical_step) : nlohmann::json();
    return j;
}

AnalysisParameters apply_parameter_overrides(AnalysisParameters base, const nlohmann::json& overrides,
                                             const std::string& path) {
    if (overrides.is_null()) return base;
    detail::ObjectReader r(overrides, path);

    if (const auto* n = r.optional_raw("noise")) {
        detail::ObjectReader nr(*n, r.child_path("noise"));
        if (nr.has("kind")) {
            const auto s = nr.string("kind");
            const auto kind = noise_kind_from_string(s);
            if (!kind) throw SchemaError(nr.child_path("kind"), "unknown noise kind '" + s + "'");
            base.noise.kind = *kind;
        }
        base.noise.reaction_time = nr.number_or("rt", base.noise.reaction_time);
        base.noise.player_skill = nr.number_or("ps", base.noise.player_skill);
        nr.finish();
        try {
            base.noise.validate();
        } catch (const std::invalid_argument& e) {
            rethrow_as_schema(r.child_path("noise"), e);
        }
    }
    if (const auto* s = r.optional_raw("sampling")) {
        detail::ObjectReader sr(*s, r.child_path("sampling"));
        base.sampling.samples = static_cast<int>(sr.integer_or("samples", base.sampling.samples));
        if (const auto* seed = sr.optional_raw("seed")) {
            if (!seed->is_number_unsigned() && !(seed->is_number_integer() && seed->get<std::int64_t>() >= 0)) {
                throw SchemaError(sr.child_path("seed"), "expected a nonnegative integer");
            }
            base.sampling.seed = seed->get<std::uint64_t>();
        }
        base.sampling.resample_cap = static_cast<int>(sr.integer_or("resample_cap", base.sampling.resample_cap));
        sr.finish();
        try {
            base.sampling.validate();
        } catch (const std::invalid_argument& e) {
            rethrow_as_schema(r.child_path("sampling"), e);
        }
    }
    if (const auto* d = r.optional_raw("difficulty")) {
        detail::ObjectReader dr(*d, r.child_path("difficulty"));
        base.difficulty.weight_moving = dr.number_or("weight_moving", base.difficulty.weight_moving);
        base.difficulty.weight_fading = dr.number_or("weight_fading", base.difficulty.weight_fading);
        base.difficulty.weight_spikes = dr.number_or("weight_spikes", base.difficulty.weight_spikes);
        dr.finish();
        try {
            base.difficulty.validate();
        } catch (const std::invalid_argument& e) {
            rethrow_as_schema(r.child_path("difficulty"), e);
        }
    }
    if (r.has("metric")) {
        const auto s = r.string("metric");
        const auto metric = path_metric_from_string(s);
        if (!metric) throw SchemaError(r.child_path("metric"), "expected \"difficulty\" or \"probability\"");
        base.metric = *metric;
    }
    if (r.has("traj_points")) {
        const auto n = r.integer("traj_points");
        if (n < 2) throw SchemaError(r.child_path("traj_points"), "must be at least 2");
        base.traj_points = static_cast<std::size_t>(n);
    }
    if (r.has("vertical_step")) {
        const auto* v = r.optional_raw("vertical_step");
        if (!v) {
            base.vertical_step.reset();
        } else {
            const double step = detail::ObjectReader::as_number(*v, r.child_path("vertical_step"));
            if (!(step > 0.0)) throw SchemaError(r.child_path("vertical_step"), "must be positive");
            base.vertical_step = step;
        }
    }
    r.finish();
    return base;
}

AnalysisParameters default_parameters() {
    AnalysisParameters params;
    if (const char* file = std::getenv("PLATLAB_DEFAULTS"); file && *file) {
        params = apply_parameter_overrides(params, parse_json(read_file(file)), "PLATLAB_DEFAULTS");
    }
    return params;
}

Analysis analyze(const Level& level, const AnalysisParameters& params, unsigned threads) {
    params.validate();
    Analysis a;
    a.level = level;
    a.parameters = params;
    a.diagnostics = validate_level(level);
    if (!a.valid()) return a;
    GraphOptions options;
    options.vertical_step = params.vertical_step;
    options.threads = threads;
    a.graph = build_graph(level, params.noise, params.sampling, params.difficulty, options);
    a.paths = build_path_report(a.graph, level, params.metric);
    return a;
}

nlohmann::json diagnostics_to_json(const std::vector<Diagnostic>& diagnostics) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& d : diagnostics) {
        out.push_back({{"rule", d.rule}, {"platform_id", d.platform_id}, {"message", d.message}});
    }
    return out;
}

nlohmann::json path_report_to_json(const NavGraph& graph, const PathReport& report) {
    nlohmann::json paths = nlohmann::json::array();
    for (const auto& entry : report.paths) {
        nlohmann::json edges = nlohmann::json::array();
        for (auto idx : entry.path.edges) {
            const Edge& e = graph.edges[idx];
            edges.push_back({{"from", e.from}, {"to", e.to}, {"probability", e.probability}, {"difficulty", e.difficulty}});
        }
        paths.push_back({{"platforms", entry.path.platforms},
                         {"edges", edges},
                         {"probability", entry.probability},
                         {"difficulty", entry.difficulty},
                         {"damage", entry.path.damage}});
    }
    return {{"metric", to_string(report.metric)},
            {"completable", report.completable()},
            {"truncated", report.truncated},
            {"level_success_probability", report.level_success_probability},
            {"best_path", report.best_path ? nlohmann::json(*report.best_path) : nlohmann::json()},
            {"paths", paths}};
}

nlohmann::json report_to_json(const Analysis& a) {
    nlohmann::json report;
    report["engine"] = {{"name", kEngineName}, {"version", kEngineVersion}};
    report["level"] = level_to_json(a.level);
    report["parameters"] = parameters_to_json(a.parameters);
    report["valid"] = a.valid();
    report["diagnostics"] = diagnostics_to_json(a.diagnostics);

    nlohmann::json edges = nlohmann::json::array();
    nlohmann::json trajectories = nlohmann::json::array();
    for (std::size_t k = 0; k < a.graph.edges.size(); ++k) {
        const Edge& e = a.graph.edges[k];
        nlohmann::json witness_ids = nlohmann::json::array();
        const Platform* target = a.level.find(e.to);
        for (const auto& traj : e.witness_trajectories) {
            std::optional<double> t_land;
            if (target) t_land = landing_time(traj, placed_at(*target, e.target_offset));
            const double t_end = t_land ? *t_land : traj.duration();
            nlohmann::json points = nlohmann::json::array();
            for (const auto& p : sample_polyline(traj, a.parameters.traj_points, t_end)) points.push_back(point_json(p));
            witness_ids.push_back(trajectories.size());
            trajectories.push_back({{"edge", k},
                                    {"from", e.from},
                                    {"to", e.to},
                                    {"approach", approach_json(traj.approach)},
                                    {"color", to_string(color_class(traj.approach))},
                                    {"takeoff", point_json(traj.takeoff_point)},
                                    {"landing", t_land ? point_json(traj.position_at(*t_land)) : nlohmann::json()},
                                    {"points", points}});
        }
        edges.push_back({{"from", e.from},
                         {"to", e.to},
                         {"jump_type", to_string(e.jump_type)},
                         {"probability", e.probability},
                         {"difficulty", e.difficulty},
                         {"coefficient", e.metrics.coefficient},
                         {"raw_success_fraction", e.metrics.raw_success_fraction},
                         {"optimal_success_fraction", e.metrics.optimal_success_fraction},
                         {"start_offset", e.start_offset},
                         {"target_offset", e.target_offset},
                         {"trajectories", witness_ids}});
    }
    report["graph"] = {{"nodes", a.graph.nodes}, {"edges", edges}};
    report["trajectories"] = trajectories;
    report["paths"] = path_report_to_json(a.graph, a.paths);
    return report;
}

std::string dump_report(const nlohmann::json& report) { return report.dump(2) + "\n"; }

}  // namespace platlab
