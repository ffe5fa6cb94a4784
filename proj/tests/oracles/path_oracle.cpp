#include "path_oracle.hpp"

#include <algorithm>
#include <array>
#include <deque>

namespace platlab::oracle {

std::vector<OraclePath> exhaustive_paths(const NavGraph& graph, const Level& level) {
    std::vector<OraclePath> done;
    const Platform* start = nullptr;
    for (const auto& p : level.platforms) {
        if (p.role == PlatformRole::Start) start = &p;
    }
    if (!start) return done;

    auto platform = [&](const std::string& id) -> const Platform& {
        return *std::find_if(level.platforms.begin(), level.platforms.end(),
                             [&](const Platform& p) { return p.id == id; });
    };

    std::deque<OraclePath> open;
    open.push_back({{start->id}, 1.0, 0.0, 0});
    while (!open.empty()) {
        OraclePath cur = open.front();
        open.pop_front();
        for (const auto& e : graph.edges) {
            if (e.from != cur.platforms.back()) continue;
            if (e.probability <= 0.0) continue;
            if (std::count(cur.platforms.begin(), cur.platforms.end(), e.to)) continue;
            const Platform& t = platform(e.to);
            OraclePath next = cur;
            next.platforms.push_back(e.to);
            next.probability *= e.probability;
            next.difficulty += e.difficulty;
            if (t.spikes) next.damage += level.character.spike_damage;
            if (next.damage >= level.character.health) continue;
            if (t.role == PlatformRole::Exit) {
                done.push_back(next);
            } else {
                open.push_back(next);
            }
        }
    }
    std::sort(done.begin(), done.end(),
              [](const OraclePath& a, const OraclePath& b) { return a.platforms < b.platforms; });
    return done;
}

int exhaustive_min_difficulty(const std::vector<OraclePath>& paths) {
    int best = -1;
    for (int i = 0; i < static_cast<int>(paths.size()); ++i) {
        if (best < 0) {
            best = i;
            continue;
        }
        const auto& a = paths[i];
        const auto& b = paths[best];
        // Totals compared with a relative slack so that rounding in the
        // summation order cannot decide a tie.
        const double slack = 1e-12 * std::max(1.0, std::abs(b.difficulty));
        if (a.difficulty < b.difficulty - slack) {
            best = i;
        } else if (std::abs(a.difficulty - b.difficulty) <= slack) {
            if (a.platforms.size() < b.platforms.size() ||
                (a.platforms.size() == b.platforms.size() && a.platforms < b.platforms)) {
                best = i;
            }
        }
    }
    return best;
}

RandomGraph random_graph(std::mt19937_64& rng, int max_nodes) {
    std::uniform_int_distribution<int> n_dist(2, max_nodes);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const int n = n_dist(rng);

    RandomGraph out;
    out.level.character.health = 1 + static_cast<int>(u(rng) * 3);
    for (int i = 0; i < n; ++i) {
        Platform p;
        p.id = "p" + std::to_string(i);
        p.x = 3.0 * i;
        p.y = 0.0;
        p.length = 1.0;
        p.spikes = u(rng) < 0.2;
        out.level.platforms.push_back(p);
    }
    // Start and one or two exits at random positions.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    out.level.platforms[order[0]].role = PlatformRole::Start;
    out.level.platforms[order[0]].spikes = false;
    out.level.platforms[order[1]].role = PlatformRole::Exit;
    if (n > 3 && u(rng) < 0.3) out.level.platforms[order[2]].role = PlatformRole::Exit;

    const double density = 0.2 + 0.6 * u(rng);
    const std::array<double, 5> difficulties{0.0, 0.25, 0.5, 1.0, 1.25};
    for (int a = 0; a < n; ++a) {
        out.graph.nodes.push_back(out.level.platforms[a].id);
        for (int b = 0; b < n; ++b) {
            if (a == b || u(rng) > density) continue;
            Edge e;
            e.from = out.level.platforms[a].id;
            e.to = out.level.platforms[b].id;
            const double r = u(rng);
            e.probability = r < 0.1 ? 0.0 : r;
            e.difficulty = u(rng) < 0.5 ? difficulties[static_cast<std::size_t>(u(rng) * 5)] : 2.0 * u(rng);
            out.graph.edges.push_back(e);
        }
    }
    std::sort(out.graph.edges.begin(), out.graph.edges.end(), [](const Edge& x, const Edge& y) {
        return x.from != y.from ? x.from < y.from : x.to < y.to;
    });
    return out;
}

}  // namespace platlab::oracle
