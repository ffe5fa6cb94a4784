#include "platlab/trajectory.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace platlab {

namespace {

constexpr double kTimeEps = 1e-12;
constexpr double kSpeedEps = 1e-12;
constexpr double kCharacterStep = 0.1;  // extra clearance for reentrant jumps
constexpr int kMaxSegments = 512;

struct Roots {
    std::array<double, 2> r{};
    int n = 0;
};

// Real roots of 0.5*a*t^2 + b*t + c = 0 in ascending order.
Roots solve_motion(double a, double b, double c) {
    Roots out;
    const double qa = 0.5 * a;
    if (std::abs(qa) < 1e-300) {
        if (b != 0.0) {
            out.r[0] = -c / b;
            out.n = 1;
        }
        return out;
    }
    double disc = b * b - 4.0 * qa * c;
    if (disc < 0.0) {
        // Tangency lost to rounding.
        if (disc > -1e-12 * (b * b + std::abs(4.0 * qa * c))) {
            disc = 0.0;
        } else {
            return out;
        }
    }
    const double sq = std::sqrt(disc);
    const double q = -0.5 * (b + std::copysign(sq, b));
    double r1 = q / qa;
    double r2 = q != 0.0 ? c / q : r1;
    if (r1 > r2) std::swap(r1, r2);
    out.r = {r1, r2};
    out.n = 2;
    return out;
}

// Earliest tau >= lo where y(tau) == level while descending.
std::optional<double> descending_crossing(double y0, double vy, double ay, double level, double lo) {
    const Roots roots = solve_motion(ay, vy, y0 - level);
    for (int i = 0; i < roots.n; ++i) {
        const double tau = roots.r[i];
        if (tau < lo) continue;
        if (vy + ay * tau < 0.0) return tau;
    }
    return std::nullopt;
}

// Parameter of abscissa x on a monotone segment, clamped to [0, duration].
double invert_x(const MotionSegment& s, double x) {
    const double d = s.duration();
    if (std::abs(s.vx0) < kSpeedEps && std::abs(s.ax) < kSpeedEps) return 0.0;
    const Roots roots = solve_motion(s.ax, s.vx0, s.x0 - x);
    double best = 0.0;
    double best_dist = kInfinite;
    for (int i = 0; i < roots.n; ++i) {
        const double tau = roots.r[i];
        const double dist = tau < 0.0 ? -tau : (tau > d ? tau - d : 0.0);
        if (dist < best_dist) {
            best_dist = dist;
            best = std::clamp(tau, 0.0, d);
        }
    }
    return best;
}

double y_at(const MotionSegment& s, double tau) { return s.y0 + s.vy0 * tau + 0.5 * s.ay * tau * tau; }
double x_at(const MotionSegment& s, double tau) { return s.x0 + s.vx0 * tau + 0.5 * s.ax * tau * tau; }

std::pair<double, double> x_range(const MotionSegment& s) {
    const double a = s.x0;
    const double b = x_at(s, s.duration());
    return {std::min(a, b), std::max(a, b)};
}

double apex_height(const MovementConfig& m) {
    return m.takeoff_speed * m.takeoff_speed / (2.0 * m.gravity);
}

}  // namespace

Point MotionSegment::position(double t) const {
    const double tau = t - t_start;
    return {x0 + vx0 * tau + 0.5 * ax * tau * tau, y0 + vy0 * tau + 0.5 * ay * tau * tau};
}

Point MotionSegment::velocity(double t) const {
    const double tau = t - t_start;
    return {vx0 + ax * tau, vy0 + ay * tau};
}

namespace {

const MotionSegment& segment_at(const std::vector<MotionSegment>& segs, double t) {
    auto it = std::upper_bound(segs.begin(), segs.end(), t,
                               [](double v, const MotionSegment& s) { return v < s.t_end; });
    if (it == segs.end()) return segs.back();
    return *it;
}

}  // namespace

Point JumpTrajectory::position_at(double t) const {
    if (segments.empty()) return takeoff_point;
    const auto& s = segment_at(segments, t);
    return s.position(std::clamp(t, s.t_start, s.t_end));
}

Point JumpTrajectory::velocity_at(double t) const {
    if (segments.empty()) return {};
    const auto& s = segment_at(segments, t);
    return s.velocity(std::clamp(t, s.t_start, s.t_end));
}

ColorClass color_class(const ApproachMode& a) {
    const bool moving = a.horizontal_takeoff_speed > 0.0;
    if (a.running) return moving ? ColorClass::Red : ColorClass::Orange;
    return moving ? ColorClass::Yellow : ColorClass::Green;
}

JumpType classify_jump(const Platform& start, const Platform& target) {
    const double overlap = std::min(start.right(), target.right()) - std::max(start.left(), target.left());
    if (overlap <= kGeomTol) return JumpType::Simple;

    const bool start_covers_target =
        start.left() <= target.left() + kGeomTol && start.right() >= target.right() - kGeomTol;
    const bool target_covers_start =
        target.left() <= start.left() + kGeomTol && target.right() >= start.right() - kGeomTol;

    if (target.y < start.y - kGeomTol && start_covers_target) return JumpType::Falling;
    if (target.y > start.y + kGeomTol && target_covers_start) return JumpType::Reentrant;
    return JumpType::Trivial;
}

JumpTrajectory build_trajectory(const JumpPlan& plan, const MovementConfig& m) {
    const double g = m.gravity;
    const double fall_cap = m.max_fall_speed;
    const double accel = m.air_accel;
    const bool instant = std::isinf(accel);
    const double target_speed = plan.air_target_speed;

    JumpTrajectory traj;
    traj.plan = plan;
    traj.takeoff_point = plan.takeoff;
    traj.full_hold = plan.vy0 > 0.0 ? plan.vy0 / g : 0.0;
    const bool reverses = plan.double_jump && plan.double_jump->reverse;
    traj.direction = reverses ? opposite(plan.input_direction) : plan.input_direction;

    double t = 0.0;
    double x = plan.takeoff.x;
    double y = plan.takeoff.y;
    double vx = plan.vx0;
    double vy = std::max(plan.vy0, -fall_cap);
    double s = sign(plan.input_direction);

    auto snap_horizontal = [&] {
        if (instant) vx = s * std::max(target_speed, s * vx);
    };
    snap_horizontal();

    double release_at = plan.first_hold.value_or(kInfinite);  // infinite: no pending release
    std::optional<DoubleJumpTrigger> pending = plan.double_jump;

    enum class Event { Timeout, Floor, HCap, HZero, VCap, Release, DoubleJump };

    for (int iter = 0; iter < kMaxSegments; ++iter) {
        double ax = 0.0;
        if (!instant && s * vx < target_speed - kSpeedEps) ax = s * accel;
        double ay = -g;
        if (vy <= -fall_cap + kSpeedEps) {
            vy = -fall_cap;
            ay = 0.0;
        }

        double best = plan.t_max - t;
        Event ev = Event::Timeout;
        auto consider = [&](std::optional<double> dt, Event e) {
            if (dt && *dt >= 0.0 && *dt < best) {
                best = *dt;
                ev = e;
            }
        };

        if (ax != 0.0) {
            if (s * vx < 0.0) {
                consider(-s * vx / accel, Event::HZero);
            } else {
                consider((target_speed - s * vx) / accel, Event::HCap);
            }
        }
        if (ay != 0.0) consider((vy + fall_cap) / g, Event::VCap);
        if (release_at < kInfinite) consider(std::max(0.0, release_at - t), Event::Release);
        if (pending) {
            std::optional<double> dt;
            switch (pending->kind) {
                case DoubleJumpTrigger::Kind::Apex:
                    dt = (vy > 0.0 && ay < 0.0) ? vy / g : 0.0;
                    break;
                case DoubleJumpTrigger::Kind::DescendTo:
                    if (y < pending->value && vy <= 0.0) {
                        dt = 0.0;
                    } else {
                        dt = descending_crossing(y, vy, ay, pending->value, 0.0);
                    }
                    break;
                case DoubleJumpTrigger::Kind::ReachX: {
                    const Roots roots = solve_motion(ax, vx, x - pending->value);
                    for (int i = 0; i < roots.n; ++i) {
                        if (roots.r[i] >= 0.0) {
                            dt = roots.r[i];
                            break;
                        }
                    }
                    break;
                }
            }
            consider(dt, Event::DoubleJump);
        }
        consider(descending_crossing(y, vy, ay, plan.y_floor, kTimeEps), Event::Floor);
        if (y < plan.y_floor && vy <= 0.0) {
            best = 0.0;
            ev = Event::Floor;
        }

        if (best > kTimeEps) {
            MotionSegment seg{t, t + best, x, y, vx, vy, ax, ay};
            traj.segments.push_back(seg);
            x = x_at(seg, best);
            y = y_at(seg, best);
            vx += ax * best;
            vy += ay * best;
            t += best;
        }

        switch (ev) {
            case Event::Timeout:
            case Event::Floor:
                iter = kMaxSegments;
                break;
            case Event::HCap:
                vx = s * target_speed;
                break;
            case Event::HZero:
                vx = 0.0;
                break;
            case Event::VCap:
                vy = -fall_cap;
                break;
            case Event::Release:
                if (vy > 0.0) vy = 0.0;
                release_at = kInfinite;
                break;
            case Event::DoubleJump:
                traj.double_jump_speed = std::abs(vx);
                vy = m.takeoff_speed;
                if (pending->reverse) s = -s;
                snap_horizontal();
                traj.double_jump_point = Point{x, y};
                traj.double_jump_time = t;
                release_at = plan.second_hold ? t + *plan.second_hold : kInfinite;
                pending.reset();
                break;
        }
    }

    // Final approach leg: segments after the last one moving against the
    // final direction.
    const double fd = sign(traj.direction);
    traj.reach_begin = 0;
    for (std::size_t i = 0; i < traj.segments.size(); ++i) {
        const auto& seg = traj.segments[i];
        const double dx = x_at(seg, seg.duration()) - seg.x0;
        if (fd * dx < -kGeomTol) traj.reach_begin = i + 1;
    }
    return traj;
}

double reachable_ground_speed(double cap, double accel, double run_up) {
    if (std::isinf(accel)) return cap;
    return std::min(cap, std::sqrt(2.0 * accel * std::max(0.0, run_up)));
}

std::vector<JumpTrajectory> generate_trajectories(const Platform& start, const Platform& target,
                                                  const MovementConfig& m) {
    std::vector<JumpTrajectory> out;
    const JumpType type = classify_jump(start, target);
    const bool can_jump = m.jump_enabled;
    const bool can_double = m.jump_enabled && m.double_jump_enabled;

    const double walk_air = m.air_speed;
    const double run_air = std::max(m.air_speed, m.run_speed);
    const double walk_takeoff = reachable_ground_speed(m.walk_speed, m.ground_accel, start.length);
    const double run_takeoff = reachable_ground_speed(m.run_speed, m.ground_accel, start.length);

    JumpPlan base;
    base.y_floor = std::min(start.y, target.y) - apex_height(m) - 1.0;

    auto emit = [&](JumpPlan plan, ApproachMode approach) {
        auto traj = build_trajectory(plan, m);
        traj.approach = approach;
        out.push_back(std::move(traj));
    };

    struct Approach {
        double speed;
        bool running;
        double air;
    };
    const std::array<Approach, 4> approaches{{
        {0.0, false, walk_air},
        {walk_takeoff, false, walk_air},
        {0.0, true, run_air},
        {run_takeoff, true, run_air},
    }};

    switch (type) {
        case JumpType::Trivial: {
            // Edges of the start lying under/over the target; prefer the one
            // nearest the target centre, ties to the right.
            const double c = target.center();
            auto within = [&](double e) { return e >= target.left() - kGeomTol && e <= target.right() + kGeomTol; };
            std::optional<double> edge;
            const bool r_in = within(start.right());
            const bool l_in = within(start.left());
            if (r_in && l_in) {
                edge = std::abs(start.right() - c) <= std::abs(start.left() - c) + kGeomTol ? start.right()
                                                                                            : start.left();
            } else if (r_in) {
                edge = start.right();
            } else if (l_in) {
                edge = start.left();
            }

            JumpPlan plan = base;
            plan.air_target_speed = m.walk_speed;
            if (target.y >= start.y) {
                if (!can_jump) break;
                const double x0 = edge ? *edge : std::clamp(c, start.left(), start.right());
                plan.takeoff = {x0, start.y};
                plan.input_direction = c < x0 - kGeomTol ? Direction::Left : Direction::Right;
                plan.vy0 = m.takeoff_speed;
            } else {
                // Target below with partial overlap: step off the edge above it.
                const double x0 = *edge;
                plan.takeoff = {x0, start.y};
                const bool right_edge = std::abs(x0 - start.right()) <= kGeomTol;
                plan.input_direction = right_edge ? Direction::Right : Direction::Left;
                plan.vy0 = 0.0;
            }
            emit(plan, ApproachMode{0.0, false, std::nullopt});
            break;
        }
        case JumpType::Simple: {
            if (!can_jump) break;
            const bool to_right = target.left() >= start.right() - kGeomTol;
            JumpPlan plan = base;
            plan.takeoff = {to_right ? start.right() : start.left(), start.y};
            plan.input_direction = to_right ? Direction::Right : Direction::Left;
            plan.vy0 = m.takeoff_speed;
            const double s = sign(plan.input_direction);

            std::vector<std::pair<JumpPlan, ApproachMode>> singles;
            for (const auto& a : approaches) {
                JumpPlan p = plan;
                p.vx0 = s * a.speed;
                p.air_target_speed = a.air;
                ApproachMode mode{a.speed, a.running, std::nullopt};
                emit(p, mode);
                singles.emplace_back(p, mode);
            }
            if (can_double) {
                for (const auto& [p, mode] : singles) {
                    JumpPlan apex = p;
                    apex.double_jump = DoubleJumpTrigger{DoubleJumpTrigger::Kind::Apex, 0.0, false};
                    ApproachMode apex_mode = mode;
                    apex_mode.double_jump = DoubleJumpTiming::AtApex;
                    emit(apex, apex_mode);

                    JumpPlan level = p;
                    level.double_jump = DoubleJumpTrigger{DoubleJumpTrigger::Kind::DescendTo, start.y, false};
                    ApproachMode level_mode = mode;
                    level_mode.double_jump = DoubleJumpTiming::AtTakeoffHeight;
                    emit(level, level_mode);
                }
            }
            break;
        }
        case JumpType::Falling: {
            const double d_left = target.left() - start.left();
            const double d_right = start.right() - target.right();
            const bool right_edge = d_right <= d_left + kGeomTol;
            JumpPlan plan = base;
            plan.takeoff = {right_edge ? start.right() : start.left(), start.y};
            plan.input_direction = right_edge ? Direction::Left : Direction::Right;
            plan.vy0 = 0.0;
            const double drop_to = start.y - 0.5 * (start.y - target.y);

            const std::array<Approach, 2> falls{{approaches[0], approaches[2]}};
            for (const auto& a : falls) {
                JumpPlan p = plan;
                p.air_target_speed = a.air;
                emit(p, ApproachMode{0.0, a.running, std::nullopt});
            }
            if (can_double) {
                for (const auto& a : falls) {
                    JumpPlan p = plan;
                    p.air_target_speed = a.air;
                    p.double_jump = DoubleJumpTrigger{DoubleJumpTrigger::Kind::DescendTo, drop_to, false};
                    emit(p, ApproachMode{0.0, a.running, DoubleJumpTiming::AfterDrop});
                }
            }
            break;
        }
        case JumpType::Reentrant: {
            if (!can_double) break;
            const double d_right = target.right() - start.right();
            const double d_left = start.left() - target.left();
            const bool right_edge = d_right <= d_left + kGeomTol;
            JumpPlan plan = base;
            plan.takeoff = {right_edge ? start.right() : start.left(), start.y};
            plan.input_direction = right_edge ? Direction::Right : Direction::Left;
            plan.vy0 = m.takeoff_speed;
            const double s = sign(plan.input_direction);
            const double clearance = right_edge ? target.right() + kCharacterStep : target.left() - kCharacterStep;
            for (const auto& a : approaches) {
                JumpPlan p = plan;
                p.vx0 = s * a.speed;
                p.air_target_speed = a.air;
                p.double_jump = DoubleJumpTrigger{DoubleJumpTrigger::Kind::ReachX, clearance, true};
                emit(p, ApproachMode{a.speed, a.running, DoubleJumpTiming::AtClearance});
            }
            break;
        }
    }
    return out;
}

double evaluate_at(const JumpTrajectory& traj, double x) {
    for (std::size_t i = traj.reach_begin; i < traj.segments.size(); ++i) {
        const auto& s = traj.segments[i];
        const auto [lo, hi] = x_range(s);
        if (x < lo - kGeomTol || x > hi + kGeomTol) continue;
        return y_at(s, invert_x(s, x));
    }
    throw std::out_of_range("x = " + std::to_string(x) + " is not covered by the trajectory");
}

bool is_reachable(const JumpTrajectory& traj, const Platform& target) {
    for (std::size_t i = traj.reach_begin; i < traj.segments.size(); ++i) {
        const auto& s = traj.segments[i];
        const auto [slo, shi] = x_range(s);
        const double lo = std::max(slo, target.left());
        const double hi = std::min(shi, target.right());
        if (lo > hi + kGeomTol) continue;
        double ta = invert_x(s, lo);
        double tb = invert_x(s, std::max(lo, hi));
        if (ta > tb) std::swap(ta, tb);
        double ymax = std::max(y_at(s, ta), y_at(s, tb));
        if (s.ay < 0.0) {
            const double tv = -s.vy0 / s.ay;
            if (tv > ta && tv < tb) ymax = std::max(ymax, y_at(s, tv));
        }
        if (ymax > target.y + kGeomTol) return true;
    }
    return false;
}

std::optional<double> landing_time(const JumpTrajectory& traj, const Platform& target) {
    for (std::size_t i = traj.reach_begin; i < traj.segments.size(); ++i) {
        const auto& s = traj.segments[i];
        const Roots roots = solve_motion(s.ay, s.vy0, s.y0 - target.y);
        for (int k = 0; k < roots.n; ++k) {
            const double tau = roots.r[k];
            if (tau < -kTimeEps || tau > s.duration() + kTimeEps) continue;
            if (s.vy0 + s.ay * tau >= 0.0) continue;
            const double x = x_at(s, tau);
            if (x >= target.left() - kGeomTol && x <= target.right() + kGeomTol) {
                return s.t_start + std::clamp(tau, 0.0, s.duration());
            }
        }
    }
    return std::nullopt;
}

std::optional<Point> landing_point(const JumpTrajectory& traj, const Platform& target) {
    const auto t = landing_time(traj, target);
    if (!t) return std::nullopt;
    return Point{traj.position_at(*t).x, target.y};
}

std::vector<Point> sample_polyline(const JumpTrajectory& traj, std::size_t points, double t_end) {
    std::vector<Point> out;
    if (traj.segments.empty() || points == 0) return out;
    t_end = std::clamp(t_end, 0.0, traj.duration());
    if (points == 1) {
        out.push_back(traj.position_at(0.0));
        return out;
    }
    out.reserve(points);
    for (std::size_t i = 0; i < points; ++i) {
        const double t = t_end * static_cast<double>(i) / static_cast<double>(points - 1);
        out.push_back(traj.position_at(t));
    }
    return out;
}

std::string_view to_string(JumpType type) {
    switch (type) {
        case JumpType::Trivial: return "trivial";
        case JumpType::Simple: return "simple";
        case JumpType::Falling: return "falling";
        case JumpType::Reentrant: return "reentrant";
    }
    return "simple";
}

std::optional<JumpType> jump_type_from_string(std::string_view s) {
    if (s == "trivial") return JumpType::Trivial;
    if (s == "simple") return JumpType::Simple;
    if (s == "falling") return JumpType::Falling;
    if (s == "reentrant") return JumpType::Reentrant;
    return std::nullopt;
}

std::string_view to_string(ColorClass color) {
    switch (color) {
        case ColorClass::Green: return "green";
        case ColorClass::Yellow: return "yellow";
        case ColorClass::Orange: return "orange";
        case ColorClass::Red: return "red";
    }
    return "green";
}

std::string_view to_string(DoubleJumpTiming timing) {
    switch (timing) {
        case DoubleJumpTiming::AtApex: return "at_apex";
        case DoubleJumpTiming::AtTakeoffHeight: return "at_takeoff_height";
        case DoubleJumpTiming::AfterDrop: return "after_drop";
        case DoubleJumpTiming::AtClearance: return "at_clearance";
    }
    return "at_apex";
}

}  // namespace platlab
