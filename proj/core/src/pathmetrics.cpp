#include "platlab/pathmetrics.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace platlab {

namespace {

class Enumerator {
public:
    Enumerator(const NavGraph& graph, const Level& level, std::size_t cap)
        : graph_(graph), level_(level), cap_(cap) {
        for (const auto& id : graph.nodes) adjacency_[id] = graph.out_edges(id);
    }

    PathEnumeration run() {
        const Platform* start = level_.start();
        if (!start) return std::move(result_);
        Path path;
        path.platforms.push_back(start->id);
        visited_.insert(start->id);
        visit(path);
        return std::move(result_);
    }

private:
    void visit(Path& path) {
        const auto it = adjacency_.find(path.platforms.back());
        if (it == adjacency_.end()) return;
        for (std::size_t idx : it->second) {
            if (result_.truncated) return;
            const Edge& e = graph_.edges[idx];
            if (!(e.probability > 0.0) || visited_.count(e.to)) continue;
            const Platform* target = level_.find(e.to);
            if (!target) continue;
            const int damage = path.damage + (target->spikes ? level_.character.spike_damage : 0);
            if (damage >= level_.character.health) continue;

            path.edges.push_back(idx);
            path.platforms.push_back(e.to);
            const int saved = path.damage;
            path.damage = damage;
            if (target->role == PlatformRole::Exit) {
                if (result_.paths.size() >= cap_) {
                    result_.truncated = true;
                } else {
                    result_.paths.push_back(path);
                }
            } else {
                visited_.insert(e.to);
                visit(path);
                visited_.erase(e.to);
            }
            path.damage = saved;
            path.platforms.pop_back();
            path.edges.pop_back();
        }
    }

    const NavGraph& graph_;
    const Level& level_;
    std::size_t cap_;
    std::map<std::string, std::vector<std::size_t>> adjacency_;
    std::set<std::string> visited_;
    PathEnumeration result_;
};

std::vector<double> edge_values(const NavGraph& graph, const Path& path, bool probability) {
    std::vector<double> v;
    v.reserve(path.edges.size());
    for (auto idx : path.edges) {
        v.push_back(probability ? graph.edges[idx].probability : graph.edges[idx].difficulty);
    }
    return v;
}

}  // namespace

PathEnumeration enumerate_paths(const NavGraph& graph, const Level& level, std::size_t cap) {
    return Enumerator(graph, level, cap).run();
}

double path_probability(std::span<const double> ps) {
    std::vector<double> sorted(ps.begin(), ps.end());
    std::sort(sorted.begin(), sorted.end());
    double product = 1.0;
    for (double p : sorted) product *= p;
    return product;
}

double path_probability(const NavGraph& graph, const Path& path) {
    return path_probability(edge_values(graph, path, true));
}

double path_difficulty(std::span<const double> ds) {
    std::vector<double> sorted(ds.begin(), ds.end());
    std::sort(sorted.begin(), sorted.end());
    double sum = 0.0;
    for (double d : sorted) sum += d;
    return sum;
}

double path_difficulty(const NavGraph& graph, const Path& path) {
    return path_difficulty(edge_values(graph, path, false));
}

std::optional<std::size_t> min_difficulty_path(std::span<const PathEntry> entries, PathMetric metric) {
    if (entries.empty()) return std::nullopt;
    auto better = [metric](const PathEntry& a, const PathEntry& b) {
        if (metric == PathMetric::Difficulty) {
            if (a.difficulty != b.difficulty) return a.difficulty < b.difficulty;
        } else {
            if (a.probability != b.probability) return a.probability > b.probability;
        }
        if (a.path.edges.size() != b.path.edges.size()) return a.path.edges.size() < b.path.edges.size();
        return a.path.platforms < b.path.platforms;
    };
    std::size_t best = 0;
    for (std::size_t i = 1; i < entries.size(); ++i) {
        if (better(entries[i], entries[best])) best = i;
    }
    return best;
}

PathReport build_path_report(const NavGraph& graph, const Level& level, PathMetric metric, std::size_t cap) {
    PathReport report;
    report.metric = metric;
    auto enumeration = enumerate_paths(graph, level, cap);
    report.truncated = enumeration.truncated;
    for (auto& path : enumeration.paths) {
        PathEntry entry;
        entry.probability = path_probability(graph, path);
        entry.difficulty = path_difficulty(graph, path);
        entry.path = std::move(path);
        report.level_success_probability = std::max(report.level_success_probability, entry.probability);
        report.paths.push_back(std::move(entry));
    }
    report.best_path = min_difficulty_path(report.paths, metric);
    return report;
}

std::string_view to_string(PathMetric metric) {
    return metric == PathMetric::Difficulty ? "difficulty" : "probability";
}

std::optional<PathMetric> path_metric_from_string(std::string_view s) {
    if (s == "difficulty") return PathMetric::Difficulty;
    if (s == "probability") return PathMetric::Probability;
    return std::nullopt;
}

}  // namespace platlab
