#pragma once

// Brute-force time stepping of a JumpPlan, used to check the closed-form
// segments. Shares no code with the trajectory builder: accelerations are
// re-derived from the movement rules each step, velocity caps are clamped,
// and the discrete events (button release, second jump) are located inside
// a step by bisection.

#include <vector>

#include "platlab/model.hpp"
#include "platlab/trajectory.hpp"

namespace platlab::oracle {

struct Sample {
    double t;
    double x;
    double y;
    double vx;
    double vy;
};

struct IntegratedJump {
    std::vector<Sample> samples;
    Direction final_direction = Direction::Right;
    /// Index of the first sample of the final approach leg (after the last
    /// step that moved against final_direction).
    std::size_t reach_begin = 0;
};

IntegratedJump integrate(const JumpPlan& plan, const MovementConfig& movement, double dt = 1e-4);

/// y of the final approach leg at x by linear interpolation; nullopt when
/// x is outside the leg.
std::optional<double> integrated_y_at(const IntegratedJump& jump, double x);

struct TrajectoryComparison {
    double max_abs_dy = 0.0;
    std::size_t points = 0;
};

/// Compares evaluate_at against the integrator over `n` abscissae spread
/// across the overlap of both final approach legs.
TrajectoryComparison compare_with_integrator(const JumpTrajectory& trajectory, const MovementConfig& movement,
                                             std::size_t n = 200, double dt = 1e-4);

}  // namespace platlab::oracle
