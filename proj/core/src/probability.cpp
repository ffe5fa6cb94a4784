#include "platlab/probability.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace platlab {

void NoiseModel::validate() const {
    if (!(reaction_time >= 0.01 && reaction_time <= 1.0)) {
        throw std::invalid_argument("reaction time Rt must lie in [0.01, 1] s, got " + std::to_string(reaction_time));
    }
    if (!(player_skill >= 1.0 && player_skill <= 50.0)) {
        throw std::invalid_argument("player skill Ps must lie in [1, 50], got " + std::to_string(player_skill));
    }
}

void SamplingConfig::validate() const {
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    if (resample_cap < 1) throw std::invalid_argument("resample_cap must be >= 1");
}

void DifficultyConfig::validate() const {
    if (!(weight_moving >= 0.0) || !(weight_fading >= 0.0) || !(weight_spikes >= 0.0)) {
        throw std::invalid_argument("difficulty weights must be >= 0");
    }
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

bool on_platform(double x, const Platform& p) {
    return x >= p.left() - kGeomTol && x <= p.right() + kGeomTol;
}

// Zero-mean offset from the kind's distribution (no platform constraint).
double draw_offset(NoiseKind kind, double sigma, Rng& rng) {
    if (sigma <= 0.0) return 0.0;
    if (kind == NoiseKind::Uniform) {
        const double half = 0.5 * uniform_interval(sigma);
        return std::uniform_real_distribution<double>(-half, half)(rng);
    }
    return std::normal_distribution<double>(0.0, sigma)(rng);
}

std::optional<double> draw_takeoff(NoiseKind kind, double optimal_x, const Platform& platform, double sigma,
                                   Rng& rng, int resample_cap) {
    const int attempts = kind == NoiseKind::GaussianResample ? 1 + resample_cap : 1;
    for (int i = 0; i < attempts; ++i) {
        const double x = optimal_x + draw_offset(kind, sigma, rng);
        if (on_platform(x, platform)) return x;
    }
    return std::nullopt;
}

// Button hold for the dynamic jump model: full hold perturbed by the
// reaction-time noise, truncated to [0, full].
std::optional<double> draw_hold(const NoiseModel& noise, double full, Rng& rng) {
    const double sd = noise.reaction_time / noise.player_skill;
    const double hold = full + std::normal_distribution<double>(0.0, sd)(rng);
    if (hold >= full) return std::nullopt;
    return std::max(0.0, hold);
}

}  // namespace

Rng make_substream(std::uint64_t seed, std::initializer_list<std::string_view> keys) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto key : keys) {
        for (unsigned char ch : key) {
            h ^= ch;
            h *= 0x100000001b3ULL;
        }
        h ^= 0xff;
        h *= 0x100000001b3ULL;
    }
    return Rng(splitmix64(seed ^ splitmix64(h)));
}

double noise_sigma(const NoiseModel& noise, double approach_speed) {
    return noise.reaction_time * (std::abs(approach_speed) + kNoiseSpeedFloor) / noise.player_skill;
}

double uniform_interval(double sigma) { return 2.0 * std::sqrt(3.0) * sigma; }

std::vector<std::optional<double>> sample_takeoffs(const NoiseModel& noise, double optimal_x,
                                                   const Platform& platform, double sigma, std::size_t n,
                                                   Rng& rng, int resample_cap) {
    std::vector<std::optional<double>> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(draw_takeoff(noise.kind, optimal_x, platform, sigma, rng, resample_cap));
    }
    return out;
}

double difficulty_coefficient(const Platform& start, const Platform& target, const DifficultyConfig& config,
                              const MovementConfig& movement) {
    auto moving = [&](const Platform& p) {
        if (p.kind != PlatformKind::Dynamic || !p.motion) return 0.0;
        return p.motion->speed / movement.run_speed;
    };
    const double fading = start.kind == PlatformKind::Fading ? 1.0 : 0.0;
    const double spiked = target.spikes ? 1.0 : 0.0;
    return 1.0 + config.weight_moving * (moving(start) + moving(target)) + config.weight_fading * fading +
           config.weight_spikes * spiked;
}

bool sample_variant_success(const JumpTrajectory& optimal, const Platform& start, const Platform& target,
                            const NoiseModel& noise, const SamplingConfig& sampling,
                            const MovementConfig& movement, Rng& rng) {
    const double sigma = noise_sigma(noise, optimal.approach.horizontal_takeoff_speed);
    const auto x = draw_takeoff(noise.kind, optimal.plan.takeoff.x, start, sigma, rng, sampling.resample_cap);
    if (!x) return false;

    JumpPlan plan = optimal.plan;
    const double shift = *x - plan.takeoff.x;
    plan.takeoff.x = *x;

    if (plan.double_jump) {
        if (optimal.double_jump_point) {
            // Second takeoff sampled along the first-jump curve.
            const double sigma2 = noise_sigma(noise, optimal.double_jump_speed);
            const double xd = optimal.double_jump_point->x + shift + draw_offset(noise.kind, sigma2, rng);
            if ((xd - *x) * sign(plan.input_direction) < 0.0) return false;
            plan.double_jump = DoubleJumpTrigger{DoubleJumpTrigger::Kind::ReachX, xd, plan.double_jump->reverse};
        } else if (plan.double_jump->kind == DoubleJumpTrigger::Kind::ReachX) {
            plan.double_jump->value += shift;
        }
    }

    if (movement.jump_model == JumpModel::Dynamic) {
        if (plan.vy0 > 0.0) plan.first_hold = draw_hold(noise, plan.vy0 / movement.gravity, rng);
        if (plan.double_jump) {
            plan.second_hold = draw_hold(noise, movement.takeoff_speed / movement.gravity, rng);
        }
    }

    return is_reachable(build_trajectory(plan, movement), target);
}

EdgeMetrics estimate_edge(const Platform& start, const Platform& target,
                          const std::vector<JumpTrajectory>& trajectories, const NoiseModel& noise,
                          const SamplingConfig& sampling, const DifficultyConfig& config,
                          const MovementConfig& movement, Rng& rng) {
    EdgeMetrics m;
    m.coefficient = difficulty_coefficient(start, target, config, movement);
    if (trajectories.empty()) {
        m.infeasible = true;
        m.probability = 0.0;
        m.difficulty = m.coefficient;
        return m;
    }

    const auto n = static_cast<std::size_t>(sampling.samples);
    std::size_t successes = 0;
    std::size_t optimal_ok = 0;
    for (const auto& traj : trajectories) {
        ApproachBreakdown b;
        b.approach = traj.approach;
        b.samples = n;
        b.optimal_success = is_reachable(traj, target);
        if (b.optimal_success) {
            ++optimal_ok;
            for (std::size_t i = 0; i < n; ++i) {
                if (sample_variant_success(traj, start, target, noise, sampling, movement, rng)) ++b.successes;
            }
        }
        successes += b.successes;
        m.breakdown.push_back(b);
    }

    const double total = static_cast<double>(n) * static_cast<double>(trajectories.size());
    m.raw_success_fraction = static_cast<double>(successes) / total;
    m.optimal_success_fraction =
        static_cast<double>(optimal_ok) / static_cast<double>(trajectories.size());
    m.probability = std::min(1.0, m.raw_success_fraction / m.coefficient);
    m.difficulty = m.coefficient * (1.0 - m.optimal_success_fraction);
    return m;
}

std::string_view to_string(NoiseKind kind) {
    switch (kind) {
        case NoiseKind::Uniform: return "uniform";
        case NoiseKind::GaussianNoResample: return "gauss-nr";
        case NoiseKind::GaussianResample: return "gauss-r";
    }
    return "gauss-r";
}

std::optional<NoiseKind> noise_kind_from_string(std::string_view s) {
    if (s == "uniform") return NoiseKind::Uniform;
    if (s == "gauss-nr") return NoiseKind::GaussianNoResample;
    if (s == "gauss-r") return NoiseKind::GaussianResample;
    return std::nullopt;
}

}  // namespace platlab
