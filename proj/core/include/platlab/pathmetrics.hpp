#pragma once

// Whole-level metrics over acyclic start -> exit paths of a NavGraph.
// Jumps are treated as independent events.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "platlab/model.hpp"
#include "platlab/navgraph.hpp"

namespace platlab {

struct Path {
    std::vector<std::size_t> edges;       // indices into NavGraph::edges, in travel order
    std::vector<std::string> platforms;   // visited ids, start first
    int damage = 0;                       // cumulative spike damage

    bool operator==(const Path&) const = default;
};

enum class PathMetric { Difficulty, Probability };

inline constexpr std::size_t kDefaultPathCap = 1'000'000;

struct PathEnumeration {
    std::vector<Path> paths;
    bool truncated = false;
};

/// Depth-first enumeration of acyclic Start -> Exit paths that stay alive
/// (cumulative spike damage < health) and use only edges with p(e) > 0.
/// A path ends at the first exit it reaches. Paths come out in
/// lexicographic order of their platform-id sequences.
PathEnumeration enumerate_paths(const NavGraph& graph, const Level& level, std::size_t cap = kDefaultPathCap);

/// Product of edge probabilities (1 for an empty path). Factors are
/// multiplied in sorted order so the result is independent of edge order.
double path_probability(std::span<const double> edge_probabilities);
double path_probability(const NavGraph& graph, const Path& path);

/// Sum of edge difficulties (0 for an empty path), summed in sorted order.
double path_difficulty(std::span<const double> edge_difficulties);
double path_difficulty(const NavGraph& graph, const Path& path);

struct PathEntry {
    Path path;
    double probability = 1.0;
    double difficulty = 0.0;
};

/// Index of the best entry: lowest d_t (Difficulty) or highest p(P)
/// (Probability), then fewer edges, then lexicographic id order.
/// nullopt when there is no feasible path.
std::optional<std::size_t> min_difficulty_path(std::span<const PathEntry> entries,
                                               PathMetric metric = PathMetric::Difficulty);

struct PathReport {
    std::vector<PathEntry> paths;
    std::optional<std::size_t> best_path;
    double level_success_probability = 0.0;  // max over paths of p(P)
    bool truncated = false;
    PathMetric metric = PathMetric::Difficulty;

    bool completable() const { return !paths.empty(); }
};

PathReport build_path_report(const NavGraph& graph, const Level& level,
                             PathMetric metric = PathMetric::Difficulty, std::size_t cap = kDefaultPathCap);

std::string_view to_string(PathMetric metric);
std::optional<PathMetric> path_metric_from_string(std::string_view s);

}  // namespace platlab
