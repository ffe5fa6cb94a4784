#include "platlab/navgraph.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

namespace platlab {

const Edge* NavGraph::find(std::string_view from, std::string_view to) const {
    auto it = std::find_if(edges.begin(), edges.end(), [&](const Edge& e) { return e.from == from && e.to == to; });
    return it == edges.end() ? nullptr : &*it;
}

std::vector<std::size_t> NavGraph::out_edges(std::string_view from) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].from == from) out.push_back(i);
    }
    std::sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) { return edges[a].to < edges[b].to; });
    return out;
}

std::vector<double> discretize_dynamic(const Platform& platform, std::optional<double> vertical_step) {
    if (platform.kind != PlatformKind::Dynamic || !platform.motion) return {0.0};
    const double amplitude = platform.motion->amplitude;
    double step = platform.length;
    if (platform.motion->axis == MotionAxis::Vertical && vertical_step && *vertical_step > 0.0) {
        step = *vertical_step;
    }
    std::vector<double> out{0.0};
    if (amplitude <= kGeomTol) return out;
    for (int k = 1;; ++k) {
        const double offset = step * k;
        if (offset >= amplitude - kGeomTol) break;
        out.push_back(offset);
    }
    out.push_back(amplitude);
    return out;
}

Platform placed_at(const Platform& platform, double offset) {
    Platform p = platform;
    if (!p.motion) return p;
    if (p.motion->axis == MotionAxis::Horizontal) {
        p.x += offset;
    } else {
        p.y += offset;
    }
    return p;
}

PairEstimate estimate_pair(const Platform& start, const Platform& target, const MovementConfig& movement,
                           const NoiseModel& noise, const SamplingConfig& sampling,
                           const DifficultyConfig& difficulty, const GraphOptions& options) {
    const auto s_offsets = discretize_dynamic(start, options.vertical_step);
    const auto t_offsets = discretize_dynamic(target, options.vertical_step);

    struct Cell {
        std::vector<JumpTrajectory> trajectories;
        std::size_t reaching = 0;
    };
    std::vector<Cell> cells(s_offsets.size() * t_offsets.size());
    auto cell = [&](std::size_t i, std::size_t j) -> Cell& { return cells[i * t_offsets.size() + j]; };

    // Lowest difficulty = highest fraction of reaching optimal trajectories;
    // ties go to the first position pair.
    PairEstimate out;
    std::optional<std::pair<std::size_t, std::size_t>> best;
    double best_fraction = -1.0;
    for (std::size_t i = 0; i < s_offsets.size(); ++i) {
        const Platform s = placed_at(start, s_offsets[i]);
        for (std::size_t j = 0; j < t_offsets.size(); ++j) {
            const Platform t = placed_at(target, t_offsets[j]);
            Cell& c = cell(i, j);
            c.trajectories = generate_trajectories(s, t, movement);
            for (const auto& traj : c.trajectories) {
                if (is_reachable(traj, t)) ++c.reaching;
            }
            if (c.reaching == 0) continue;
            const double fraction = static_cast<double>(c.reaching) / static_cast<double>(c.trajectories.size());
            if (fraction > best_fraction) {
                best_fraction = fraction;
                best = {i, j};
            }
        }
    }
    if (!best) return out;

    const auto [bi, bj] = *best;
    const Platform s_best = placed_at(start, s_offsets[bi]);
    auto estimate_at = [&](std::size_t j) {
        const Platform t = placed_at(target, t_offsets[j]);
        Rng rng = make_substream(sampling.seed, {start.id, target.id, std::to_string(bi), std::to_string(j)});
        return estimate_edge(s_best, t, cell(bi, j).trajectories, noise, sampling, difficulty, movement, rng);
    };

    out.reachable = true;
    out.start_offset = s_offsets[bi];
    out.target_offset = t_offsets[bj];
    out.jump_type = classify_jump(s_best, placed_at(target, t_offsets[bj]));
    out.metrics = estimate_at(bj);

    if (target.kind == PlatformKind::Dynamic && t_offsets.size() > 1) {
        double sum = out.metrics.probability;
        int count = 1;
        if (bj > 0) {
            sum += estimate_at(bj - 1).probability;
            ++count;
        }
        if (bj + 1 < t_offsets.size()) {
            sum += estimate_at(bj + 1).probability;
            ++count;
        }
        out.metrics.probability = sum / count;
    }

    const Platform t_best = placed_at(target, t_offsets[bj]);
    for (const auto& traj : cell(bi, bj).trajectories) {
        if (is_reachable(traj, t_best)) out.witnesses.push_back(traj);
    }
    return out;
}

NavGraph build_graph(const Level& level, const NoiseModel& noise, const SamplingConfig& sampling,
                     const DifficultyConfig& difficulty, const GraphOptions& options) {
    NavGraph graph;
    const auto& ps = level.platforms;
    for (const auto& p : ps) graph.nodes.push_back(p.id);

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < ps.size(); ++a) {
        for (std::size_t b = 0; b < ps.size(); ++b) {
            if (a != b) pairs.emplace_back(a, b);
        }
    }

    std::vector<PairEstimate> results(pairs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < pairs.size(); k = next++) {
            const auto [a, b] = pairs[k];
            results[k] = estimate_pair(ps[a], ps[b], level.movement, noise, sampling, difficulty, options);
        }
    };

    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, pairs.size())));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    }

    for (std::size_t k = 0; k < pairs.size(); ++k) {
        auto& r = results[k];
        if (!r.reachable) continue;
        Edge e;
        e.from = ps[pairs[k].first].id;
        e.to = ps[pairs[k].second].id;
        e.jump_type = r.jump_type;
        e.probability = r.metrics.probability;
        e.difficulty = r.metrics.difficulty;
        e.metrics = std::move(r.metrics);
        e.witness_trajectories = std::move(r.witnesses);
        e.start_offset = r.start_offset;
        e.target_offset = r.target_offset;
        graph.edges.push_back(std::move(e));
    }
    std::sort(graph.edges.begin(), graph.edges.end(),
              [](const Edge& x, const Edge& y) { return std::tie(x.from, x.to) < std::tie(y.from, y.to); });
    return graph;
}

}  // namespace platlab
