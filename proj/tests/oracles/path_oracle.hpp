#pragma once

// Exhaustive reference for path enumeration on small graphs: breadth-first
// growth of every simple walk from the start, filtered afterwards, with the
// metrics accumulated in plain travel order.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "platlab/model.hpp"
#include "platlab/navgraph.hpp"

namespace platlab::oracle {

struct OraclePath {
    std::vector<std::string> platforms;
    double probability = 1.0;
    double difficulty = 0.0;
    int damage = 0;
};

/// All acyclic start -> exit paths (stopping at the first exit), sorted
/// by platform sequence.
std::vector<OraclePath> exhaustive_paths(const NavGraph& graph, const Level& level);

/// Index into `paths` of the lowest total difficulty, ties broken by fewer
/// edges then lexicographic platform order; -1 when empty.
int exhaustive_min_difficulty(const std::vector<OraclePath>& paths);

struct RandomGraph {
    Level level;
    NavGraph graph;
};

/// Random level/graph pair with up to `max_nodes` platforms. Some edges
/// get p = 0, some platforms spikes, and difficulties are drawn from a
/// small set so that ties occur.
RandomGraph random_graph(std::mt19937_64& rng, int max_nodes = 10);

}  // namespace platlab::oracle
