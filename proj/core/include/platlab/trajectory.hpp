#pragma once

// Closed-form piecewise jump trajectories.
//
// A trajectory is a time-ordered list of uniformly accelerated segments.
// Segment boundaries fall exactly where the motion regime changes: the
// horizontal speed reaching its air cap (or crossing zero after a reversal),
// the vertical speed reaching max_fall_speed, a dynamic-jump button release,
// and a double-jump re-takeoff. Within a segment x(t) is monotone, so y is a
// function of x on every segment.

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "platlab/model.hpp"

namespace platlab {

enum class JumpType { Trivial, Simple, Falling, Reentrant };

enum class Direction { Left = -1, Right = 1 };

inline double sign(Direction d) { return d == Direction::Left ? -1.0 : 1.0; }
inline Direction opposite(Direction d) { return d == Direction::Left ? Direction::Right : Direction::Left; }

/// When the second (mid-air) jump is triggered on an optimal trajectory.
enum class DoubleJumpTiming {
    AtApex,           // peak of the first jump
    AtTakeoffHeight,  // back at the takeoff ordinate, descending
    AfterDrop,        // falling jumps: half the vertical gap fallen
    AtClearance,      // reentrant jumps: clear of the target's projection
};

struct ApproachMode {
    double horizontal_takeoff_speed = 0.0;  // magnitude, >= 0
    bool running = false;
    std::optional<DoubleJumpTiming> double_jump;

    bool operator==(const ApproachMode&) const = default;
};

/// Display class of an approach: green = still, yellow = moving,
/// orange = still with run held, red = moving and running.
enum class ColorClass { Green, Yellow, Orange, Red };

ColorClass color_class(const ApproachMode& approach);

struct MotionSegment {
    double t_start = 0.0;
    double t_end = 0.0;
    double x0 = 0.0;
    double y0 = 0.0;
    double vx0 = 0.0;
    double vy0 = 0.0;
    double ax = 0.0;
    double ay = 0.0;

    double duration() const { return t_end - t_start; }
    Point position(double t) const;
    Point velocity(double t) const;
    Point start() const { return {x0, y0}; }
    Point end() const { return position(t_end); }
};

/// Event that fires the second jump.
struct DoubleJumpTrigger {
    enum class Kind { Apex, DescendTo, ReachX };
    Kind kind = Kind::Apex;
    double value = 0.0;     // target y for DescendTo, target x for ReachX
    bool reverse = false;   // flip horizontal input direction on the second jump
};

/// Everything needed to integrate a trajectory. Times are seconds after
/// takeoff; hold durations are measured from the corresponding press.
struct JumpPlan {
    Point takeoff;
    Direction input_direction = Direction::Right;  // horizontal input held after takeoff
    double vx0 = 0.0;                 // signed horizontal velocity at takeoff
    double vy0 = 0.0;                 // vertical velocity at takeoff (0 for falls)
    double air_target_speed = 0.0;    // air control accelerates up to this speed
    std::optional<double> first_hold;   // dynamic model: release after this long
    std::optional<DoubleJumpTrigger> double_jump;
    std::optional<double> second_hold;
    double y_floor = 0.0;             // integration stops when descending through this
    double t_max = 30.0;
};

struct JumpTrajectory {
    std::vector<MotionSegment> segments;
    Direction direction = Direction::Right;  // direction of the final approach
    ApproachMode approach;
    Point takeoff_point;
    JumpPlan plan;
    std::size_t reach_begin = 0;             // first segment of the final approach leg
    std::optional<Point> double_jump_point;
    std::optional<double> double_jump_time;
    double double_jump_speed = 0.0;          // |vx| just before the second jump
    double full_hold = 0.0;                  // hold that reaches the natural apex

    double duration() const { return segments.empty() ? 0.0 : segments.back().t_end; }
    Point position_at(double t) const;
    Point velocity_at(double t) const;
};

/// Classifies a pair by the horizontal projections of their surfaces.
/// Falling: target strictly below and covered by the start. Reentrant:
/// target strictly above and covering the start. Trivial: any other
/// positive-length overlap. Simple: disjoint projections.
JumpType classify_jump(const Platform& start, const Platform& target);

/// Integrates a plan into closed-form segments.
JumpTrajectory build_trajectory(const JumpPlan& plan, const MovementConfig& movement);

/// Optimal trajectories for a platform pair. Counts: Trivial 1; Simple 4
/// (12 with double jump); Falling 2 (4); Reentrant 0 (4).
std::vector<JumpTrajectory> generate_trajectories(const Platform& start, const Platform& target,
                                                  const MovementConfig& movement);

/// Highest horizontal takeoff speed reachable from a standing start at the
/// far edge of the platform, capped at `cap`.
double reachable_ground_speed(double cap, double accel, double run_up);

/// y of the final approach leg at abscissa x. Throws std::out_of_range
/// when x is not covered by that leg.
double evaluate_at(const JumpTrajectory& trajectory, double x);

/// True iff, somewhere over the target's walkable span, the final approach
/// leg passes strictly above the surface.
bool is_reachable(const JumpTrajectory& trajectory, const Platform& target);

/// First descending crossing of the target surface inside its span, in
/// trajectory direction; nullopt when the character overshoots.
std::optional<Point> landing_point(const JumpTrajectory& trajectory, const Platform& target);
std::optional<double> landing_time(const JumpTrajectory& trajectory, const Platform& target);

/// `points` samples evenly spaced in time over [0, t_end].
std::vector<Point> sample_polyline(const JumpTrajectory& trajectory, std::size_t points, double t_end);

std::string_view to_string(JumpType type);
std::string_view to_string(ColorClass color);
std::string_view to_string(DoubleJumpTiming timing);
std::optional<JumpType> jump_type_from_string(std::string_view s);

}  // namespace platlab
