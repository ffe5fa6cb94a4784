#pragma once

// Full level analysis (validate -> trajectories -> graph -> path metrics)
// and its JSON report. The CLI and the HTTP service both go through
// analyze() + report_to_json(), so equal inputs give byte-equal output.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "platlab/model.hpp"
#include "platlab/navgraph.hpp"
#include "platlab/pathmetrics.hpp"
#include "platlab/probability.hpp"

namespace platlab {

inline constexpr std::string_view kEngineName = "platlab";
inline constexpr std::string_view kEngineVersion = "0.1.0";

struct AnalysisParameters {
    NoiseModel noise;
    SamplingConfig sampling;
    DifficultyConfig difficulty;
    PathMetric metric = PathMetric::Difficulty;
    std::size_t traj_points = 50;
    std::optional<double> vertical_step;

    void validate() const;

    bool operator==(const AnalysisParameters&) const = default;
};

/// {"noise": {"kind", "rt", "ps"}, "sampling": {"samples", "seed",
/// "resample_cap"}, "difficulty": {"weight_moving", "weight_fading",
/// "weight_spikes"}, "metric", "traj_points", "vertical_step"}
nlohmann::json parameters_to_json(const AnalysisParameters& params);

/// Applies the fields present in `overrides` on top of `base`. Unknown
/// fields are a SchemaError.
AnalysisParameters apply_parameter_overrides(AnalysisParameters base, const nlohmann::json& overrides,
                                             const std::string& path = "parameters");

/// Built-in defaults, overridden by the file named in PLATLAB_DEFAULTS
/// when that variable is set.
AnalysisParameters default_parameters();

struct Analysis {
    Level level;
    AnalysisParameters parameters;
    std::vector<Diagnostic> diagnostics;
    NavGraph graph;
    PathReport paths;

    bool valid() const { return diagnostics.empty(); }
};

/// Runs the pipeline. When the level has diagnostics the graph and path
/// report stay empty. `threads` only affects speed.
Analysis analyze(const Level& level, const AnalysisParameters& params, unsigned threads = 0);

nlohmann::json path_report_to_json(const NavGraph& graph, const PathReport& report);
nlohmann::json report_to_json(const Analysis& analysis);
nlohmann::json diagnostics_to_json(const std::vector<Diagnostic>& diagnostics);

/// Two-space indented JSON with a trailing newline.
std::string dump_report(const nlohmann::json& report);

}  // namespace platlab
