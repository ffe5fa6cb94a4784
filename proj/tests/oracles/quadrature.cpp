#include "quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace platlab::oracle {

namespace {

constexpr double kPi = 3.14159265358979323846;

double normal_pdf(double z) { return std::exp(-0.5 * z * z) / std::sqrt(2.0 * kPi); }

MovementConfig fixture_movement() {
    MovementConfig m;
    m.max_fall_speed = 1e6;
    m.double_jump_enabled = false;
    m.jump_model = JumpModel::Static;
    m.ground_accel = m.turn_accel = m.stop_accel = m.air_accel = kInfinite;
    return m;
}

Platform make(const char* id, double x, double y, double length) {
    Platform p;
    p.id = id;
    p.x = x;
    p.y = y;
    p.length = length;
    return p;
}

}  // namespace

bool parabola_reaches(double x0, double y0, double air_speed, double direction, const MovementConfig& m,
                      const Platform& target) {
    const double v0 = m.takeoff_speed;
    const double g = m.gravity;
    const double vx = direction * air_speed;
    double ta = (target.left() - x0) / vx;
    double tb = (target.right() - x0) / vx;
    if (ta > tb) std::swap(ta, tb);
    // The flight ends once it sinks below the floor used by the engine.
    const double apex = v0 * v0 / (2.0 * g);
    const double floor = std::min(y0, target.y) - apex - 1.0;
    const double t_floor = (v0 + std::sqrt(v0 * v0 + 2.0 * g * (y0 - floor))) / g;
    const double lo = std::max(0.0, ta);
    const double hi = std::min(tb, t_floor);
    if (hi < lo) return false;
    const double t_peak = std::clamp(v0 / g, lo, hi);
    const double y_max = y0 + v0 * t_peak - 0.5 * g * t_peak * t_peak;
    return y_max > target.y + kGeomTol;
}

double quadrature_probability(const QuadratureFixture& f, std::size_t grid) {
    const auto& m = f.movement;
    const bool right = f.target.left() >= f.start.right();
    const double dir = right ? 1.0 : -1.0;
    const double x_opt = right ? f.start.right() : f.start.left();

    struct Mode {
        double ground;  // speed at takeoff
        double air;     // horizontal speed while airborne
    };
    const std::array<Mode, 4> modes{{
        {0.0, m.air_speed},
        {m.walk_speed, std::max(m.air_speed, m.walk_speed)},
        {0.0, std::max(m.air_speed, m.run_speed)},
        {m.run_speed, std::max(m.air_speed, m.run_speed)},
    }};

    double total = 0.0;
    for (const auto& mode : modes) {
        if (!parabola_reaches(x_opt, f.start.y, mode.air, dir, m, f.target)) continue;
        const double sigma = f.noise.reaction_time * (mode.ground + 1.0) / f.noise.player_skill;
        auto on_start = [&](double x) { return x >= f.start.left() && x <= f.start.right(); };
        auto ok = [&](double x) { return on_start(x) && parabola_reaches(x, f.start.y, mode.air, dir, m, f.target); };

        double hit = 0.0;
        double mass_on = 0.0;
        if (f.noise.kind == NoiseKind::Uniform) {
            const double delta = 2.0 * std::sqrt(3.0) * sigma;
            const double a = x_opt - 0.5 * delta;
            const double h = delta / static_cast<double>(grid);
            for (std::size_t i = 0; i < grid; ++i) {
                const double x = a + (static_cast<double>(i) + 0.5) * h;
                if (ok(x)) hit += h / delta;
            }
            total += hit;
            continue;
        }
        const double a = x_opt - 8.0 * sigma;
        const double h = 16.0 * sigma / static_cast<double>(grid);
        for (std::size_t i = 0; i < grid; ++i) {
            const double x = a + (static_cast<double>(i) + 0.5) * h;
            const double w = normal_pdf((x - x_opt) / sigma) * h / sigma;
            if (on_start(x)) mass_on += w;
            if (ok(x)) hit += w;
        }
        total += f.noise.kind == NoiseKind::GaussianResample ? hit / mass_on : hit;
    }
    return total / static_cast<double>(modes.size());
}

std::vector<QuadratureFixture> quadrature_fixtures() {
    const MovementConfig m = fixture_movement();
    MovementConfig slow = m;
    slow.air_speed = 5.0;
    slow.walk_speed = 4.0;
    slow.run_speed = 7.0;
    slow.gravity = 20.0;
    slow.takeoff_speed = 9.0;

    auto fx = [](Platform s, Platform t, MovementConfig mv, double rt, double ps) {
        return QuadratureFixture{s, t, mv, NoiseModel{NoiseKind::GaussianResample, rt, ps}};
    };
    return {
        fx(make("s", 0, 0, 6), make("t", 12.3, 0, 3), m, 0.1, 1.0),
        fx(make("s", 0, 0, 6), make("t", 13.7, 0, 2), m, 0.1, 1.0),
        fx(make("s", 0, 0, 4), make("t", 9.5, 1.0, 3), m, 0.05, 1.0),
        fx(make("s", 0, 0, 6), make("t", 14.6, -2.0, 2), m, 0.2, 1.0),
        fx(make("s", 0, 0, 3), make("t", 9.2, 0.0, 1.5), m, 0.5, 5.0),
        fx(make("s", 10, 0, 6), make("t", 1.5, 0.5, 1.0), m, 0.1, 1.0),
        fx(make("s", 0, 0, 5), make("t", 9.3, 0.0, 4), slow, 0.1, 1.0),
        fx(make("s", 0, 0, 5), make("t", 10.8, -1.0, 4), slow, 0.3, 2.0),
        fx(make("s", 0, 2, 6), make("t", 13.2, 0, 2), m, 0.1, 1.0),
        fx(make("s", 0, 0, 1.5), make("t", 9.1, 0, 1), m, 0.05, 1.0),
    };
}

}  // namespace platlab::oracle
