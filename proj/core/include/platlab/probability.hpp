#pragma once

// Player-skill noise models and Monte-Carlo estimation of per-jump
// success probability and difficulty.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "platlab/model.hpp"
#include "platlab/trajectory.hpp"

namespace platlab {

enum class NoiseKind { Uniform, GaussianNoResample, GaussianResample };

struct NoiseModel {
    NoiseKind kind = NoiseKind::GaussianResample;
    double reaction_time = 0.1;  // Rt, seconds, [0.01, 1]
    double player_skill = 1.0;   // Ps, [1, 50]

    /// Throws std::invalid_argument when Rt or Ps is out of range.
    void validate() const;

    bool operator==(const NoiseModel&) const = default;
};

struct SamplingConfig {
    int samples = 1000;        // noisy variants per optimal trajectory
    std::uint64_t seed = 42;
    int resample_cap = 100;    // redraws before a resampling draw gives up

    void validate() const;

    bool operator==(const SamplingConfig&) const = default;
};

struct DifficultyConfig {
    double weight_moving = 0.5;  // per dynamic endpoint, scaled by motion speed / run speed
    double weight_fading = 0.5;  // fading start platform
    double weight_spikes = 0.25; // spiked target platform

    void validate() const;

    bool operator==(const DifficultyConfig&) const = default;
};

using Rng = std::mt19937_64;

/// Deterministic sub-stream for a keyed unit of work, so that serial and
/// parallel evaluation draw identical numbers.
Rng make_substream(std::uint64_t seed, std::initializer_list<std::string_view> keys);

/// Minimum speed term so that standing jumps keep nonzero noise.
inline constexpr double kNoiseSpeedFloor = 1.0;

/// sigma = Rt * (speed + 1) / Ps
double noise_sigma(const NoiseModel& noise, double approach_speed);

/// Half-width-free interval size of the uniform model, variance-matched to
/// a Gaussian of the same sigma: delta = 2*sqrt(3)*sigma.
double uniform_interval(double sigma);

/// Takeoff abscissae drawn around `optimal_x`; nullopt marks a draw that
/// fell off the platform (a failed sample).
std::vector<std::optional<double>> sample_takeoffs(const NoiseModel& noise, double optimal_x,
                                                   const Platform& platform, double sigma, std::size_t n,
                                                   Rng& rng, int resample_cap = 100);

/// c = 1 + w_m (m_start + m_target) + w_f f_start + w_s s_target
double difficulty_coefficient(const Platform& start, const Platform& target, const DifficultyConfig& config,
                              const MovementConfig& movement);

struct ApproachBreakdown {
    ApproachMode approach;
    bool optimal_success = false;
    std::size_t successes = 0;
    std::size_t samples = 0;
};

struct EdgeMetrics {
    double probability = 0.0;               // p = min(1, raw / c)
    double difficulty = 0.0;                // d = c (1 - optimal_success_fraction)
    double raw_success_fraction = 0.0;
    double optimal_success_fraction = 0.0;
    double coefficient = 1.0;
    bool infeasible = false;                // no optimal trajectory at all
    std::vector<ApproachBreakdown> breakdown;
};

/// Monte-Carlo estimate for platforms at fixed positions. Trajectories must
/// come from generate_trajectories(start, target, movement).
EdgeMetrics estimate_edge(const Platform& start, const Platform& target,
                          const std::vector<JumpTrajectory>& trajectories, const NoiseModel& noise,
                          const SamplingConfig& sampling, const DifficultyConfig& config,
                          const MovementConfig& movement, Rng& rng);

/// Draws one noisy variant of an optimal trajectory and reports whether it
/// reaches the target. Exposed for trial synthesis and tests.
bool sample_variant_success(const JumpTrajectory& optimal, const Platform& start, const Platform& target,
                            const NoiseModel& noise, const SamplingConfig& sampling,
                            const MovementConfig& movement, Rng& rng);

std::string_view to_string(NoiseKind kind);
/// Accepts "uniform", "gauss-nr", "gauss-r".
std::optional<NoiseKind> noise_kind_from_string(std::string_view s);

}  // namespace platlab
