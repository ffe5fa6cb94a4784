#pragma once

// Directed level-navigation graph: nodes are platforms, an edge a -> b
// exists iff at least one optimal trajectory from a reaches b.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "platlab/model.hpp"
#include "platlab/probability.hpp"
#include "platlab/trajectory.hpp"

namespace platlab {

struct Edge {
    std::string from;
    std::string to;
    JumpType jump_type = JumpType::Simple;
    double difficulty = 0.0;   // d(e) >= 0
    double probability = 0.0;  // p(e) in [0, 1]
    EdgeMetrics metrics;
    std::vector<JumpTrajectory> witness_trajectories;  // successful optimal trajectories
    double start_offset = 0.0;   // chosen discretized position of a dynamic start
    double target_offset = 0.0;  // chosen discretized position of a dynamic target
};

struct NavGraph {
    std::vector<std::string> nodes;  // platform ids in level order
    std::vector<Edge> edges;         // sorted by (from, to)

    const Edge* find(std::string_view from, std::string_view to) const;
    /// Indices into `edges` leaving `from`, in ascending target-id order.
    std::vector<std::size_t> out_edges(std::string_view from) const;
};

struct GraphOptions {
    /// Step between positions of vertically moving platforms; defaults to
    /// the platform length.
    std::optional<double> vertical_step;
    /// Worker threads for pair evaluation; 0 selects the hardware count.
    unsigned threads = 0;
};

/// Offsets along the motion axis covering the sweep at steps of the
/// platform length (or `vertical_step`), always including both extremes.
/// Static platforms yield {0}.
std::vector<double> discretize_dynamic(const Platform& platform, std::optional<double> vertical_step = {});

/// Copy of the platform displaced by `offset` along its motion axis.
Platform placed_at(const Platform& platform, double offset);

struct PairEstimate {
    bool reachable = false;
    JumpType jump_type = JumpType::Simple;
    EdgeMetrics metrics;
    std::vector<JumpTrajectory> witnesses;
    double start_offset = 0.0;
    double target_offset = 0.0;
};

/// Evaluates one ordered pair over every discretized position. Metrics are
/// taken at the lowest-difficulty position pair; for a dynamic target the
/// probability is averaged over that position and its neighbours.
PairEstimate estimate_pair(const Platform& start, const Platform& target, const MovementConfig& movement,
                           const NoiseModel& noise, const SamplingConfig& sampling,
                           const DifficultyConfig& difficulty, const GraphOptions& options = {});

/// Evaluates every ordered platform pair. Requires validate_level(level)
/// to be empty. Deterministic for a fixed seed and any thread count.
NavGraph build_graph(const Level& level, const NoiseModel& noise, const SamplingConfig& sampling,
                     const DifficultyConfig& difficulty = {}, const GraphOptions& options = {});

}  // namespace platlab
