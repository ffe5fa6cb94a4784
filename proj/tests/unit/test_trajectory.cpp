#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "fixtures.hpp"
#include "integrator.hpp"
#include "platlab/trajectory.hpp"

using namespace platlab;
using platlab::fixtures::platform;

namespace {

MovementConfig projectile_movement() {
    MovementConfig m;
    m.walk_speed = 10;
    m.run_speed = 10;
    m.air_speed = 10;
    m.gravity = 10;
    m.takeoff_speed = 10;
    m.max_fall_speed = 1e6;
    m.double_jump_enabled = false;
    return m;
}

// Takeoff (0,0), vx = 10, vy = 10, g = 10: apex (10, 5), back at y = 0 at x = 20.
JumpTrajectory projectile() {
    JumpPlan plan;
    plan.vx0 = 10;
    plan.vy0 = 10;
    plan.air_target_speed = 10;
    plan.y_floor = -100;
    return build_trajectory(plan, projectile_movement());
}

MovementConfig with_double_jump(MovementConfig m, bool on) {
    m.double_jump_enabled = on;
    return m;
}

}  // namespace

TEST_SUITE("trajectory") {
    TEST_CASE("classify_jump examples") {
        const Platform wide = platform("s", 0, 5, 10);
        CHECK(classify_jump(wide, platform("t", 3, 0, 2)) == JumpType::Falling);
        CHECK(classify_jump(platform("s", 3, 0, 2), platform("t", 0, 5, 10)) == JumpType::Reentrant);
        CHECK(classify_jump(platform("s", 0, 0, 4), platform("t", 8, 0, 3)) == JumpType::Simple);
        CHECK(classify_jump(platform("s", 0, 0, 4), platform("t", 4, 0, 3)) == JumpType::Simple);  // touching ends
        CHECK(classify_jump(platform("s", 0, 0, 4), platform("t", 3, 1, 3)) == JumpType::Trivial);
        CHECK(classify_jump(platform("s", 0, 0, 4), platform("t", 1, 0, 2)) == JumpType::Trivial);  // same height
    }

    TEST_CASE("generate_trajectories counts") {
        const MovementConfig base = projectile_movement();
        const Platform s = platform("s", 0, 0, 4);
        CHECK(generate_trajectories(s, platform("t", 8, 0, 3), with_double_jump(base, true)).size() == 12);
        CHECK(generate_trajectories(s, platform("t", 8, 0, 3), with_double_jump(base, false)).size() == 4);
        CHECK(generate_trajectories(platform("s", 3, 0, 2), platform("t", 0, 5, 10), with_double_jump(base, false))
                  .empty());
        CHECK(generate_trajectories(platform("s", 3, 0, 2), platform("t", 0, 5, 10), with_double_jump(base, true))
                  .size() == 4);
        CHECK(generate_trajectories(platform("s", 0, 5, 10), platform("t", 3, 0, 2), with_double_jump(base, false))
                  .size() == 2);
        CHECK(generate_trajectories(platform("s", 0, 5, 10), platform("t", 3, 0, 2), with_double_jump(base, true))
                  .size() == 4);
        CHECK(generate_trajectories(s, platform("t", 3, 1, 3), base).size() == 1);
    }

    TEST_CASE("evaluate_at on a pure projectile") {
        const auto traj = projectile();
        CHECK(evaluate_at(traj, 10.0) == doctest::Approx(5.0).epsilon(1e-12));
        CHECK(std::abs(evaluate_at(traj, 20.0)) <= 1e-9);
        CHECK(evaluate_at(traj, 5.0) == doctest::Approx(3.75).epsilon(1e-12));
        CHECK_THROWS_AS(evaluate_at(traj, -1.0), std::out_of_range);
    }

    TEST_CASE("is_reachable examples") {
        const auto traj = projectile();
        CHECK(is_reachable(traj, platform("t", 9, 4, 2)));
        CHECK_FALSE(is_reachable(traj, platform("t", 9, 5.5, 2)));
        CHECK_FALSE(is_reachable(traj, platform("t", -6, -1, 4)));
    }

    TEST_CASE("landing_point examples") {
        const auto traj = projectile();
        const auto land = landing_point(traj, platform("t", 15, 0, 10));
        REQUIRE(land.has_value());
        CHECK(land->x == doctest::Approx(20.0).epsilon(1e-12));
        CHECK(std::abs(land->y) <= 1e-9);
        // Reachable but passes over the whole span while still above it.
        const Platform short_target = platform("t", 12, 0, 2);
        CHECK(is_reachable(traj, short_target));
        CHECK_FALSE(landing_point(traj, short_target).has_value());
    }

    TEST_CASE("trajectory invariants over random pairs") {
        std::mt19937_64 rng(3);
        for (int i = 0; i < 200; ++i) {
            const MovementConfig m = fixtures::random_movement(rng);
            const auto type = static_cast<JumpType>(i % 4);
            const auto pair = fixtures::random_pair(rng, type);
            for (const auto& traj : generate_trajectories(pair.start, pair.target, m)) {
                // Takeoff lies on the start surface.
                CHECK(std::abs(traj.takeoff_point.y - pair.start.y) <= 1e-9);
                CHECK(traj.takeoff_point.x >= pair.start.left() - 1e-9);
                CHECK(traj.takeoff_point.x <= pair.start.right() + 1e-9);
                for (const auto& seg : traj.segments) {
                    CHECK(seg.t_end >= seg.t_start);
                    CHECK(seg.velocity(seg.t_end).y >= -m.max_fall_speed - 1e-9);
                }
                if (const auto land = landing_point(traj, pair.target)) {
                    CHECK(std::abs(land->y - pair.target.y) <= 1e-9);
                    CHECK(land->x >= pair.target.left() - 1e-9);
                    CHECK(land->x <= pair.target.right() + 1e-9);
                }
            }
        }
    }

    TEST_CASE("static model keeps vertical velocity continuous without a double jump") {
        MovementConfig m = projectile_movement();
        m.gravity = 30;
        m.takeoff_speed = 12;
        m.max_fall_speed = 20;
        const auto ts = generate_trajectories(platform("s", 0, 0, 4), platform("t", 8, 0, 3), m);
        REQUIRE(ts.size() == 4);
        for (const auto& traj : ts) {
            for (std::size_t k = 1; k < traj.segments.size(); ++k) {
                const auto& a = traj.segments[k - 1];
                const auto& b = traj.segments[k];
                CHECK(a.velocity(a.t_end).y == doctest::Approx(b.vy0).epsilon(1e-9));
            }
        }
    }

    TEST_CASE("dynamic model release cuts vertical velocity to zero") {
        MovementConfig m = projectile_movement();
        m.jump_model = JumpModel::Dynamic;
        m.gravity = 30;
        m.takeoff_speed = 12;
        JumpPlan plan;
        plan.vx0 = 5;
        plan.vy0 = 12;
        plan.air_target_speed = 8;
        plan.first_hold = 0.2;
        plan.y_floor = -10;
        const auto traj = build_trajectory(plan, m);
        bool found = false;
        for (const auto& seg : traj.segments) {
            if (std::abs(seg.t_start - 0.2) <= 1e-12) {
                found = true;
                CHECK(seg.vy0 == 0.0);
                CHECK(seg.y0 == doctest::Approx(12 * 0.2 - 15 * 0.04).epsilon(1e-12));
            }
        }
        CHECK(found);
        // Full hold leaves the natural arc unchanged.
        plan.first_hold = traj.full_hold;
        JumpPlan held = plan;
        held.first_hold.reset();
        const auto a = build_trajectory(plan, m);
        const auto b = build_trajectory(held, m);
        for (double t = 0.0; t < 1.0; t += 0.05) {
            CHECK(a.position_at(t).y == doctest::Approx(b.position_at(t).y).epsilon(1e-9));
        }
    }

    TEST_CASE("closed form matches the time-stepped integrator") {
        std::mt19937_64 rng(19);
        for (int i = 0; i < 40; ++i) {
            MovementConfig m = fixtures::random_movement(rng);
            const auto type = static_cast<JumpType>(i % 4);
            if (type == JumpType::Reentrant) m.double_jump_enabled = true;
            const auto pair = fixtures::random_pair(rng, type);
            for (const auto& traj : generate_trajectories(pair.start, pair.target, m)) {
                const auto cmp = oracle::compare_with_integrator(traj, m, 100);
                CHECK(cmp.max_abs_dy <= 1e-3);
            }
        }
    }

    TEST_CASE("sample_polyline spans the requested interval") {
        const auto traj = projectile();
        const auto pts = sample_polyline(traj, 5, 2.0);
        REQUIRE(pts.size() == 5);
        CHECK(pts.front().x == 0.0);
        CHECK(pts.back().x == doctest::Approx(20.0));
        CHECK(pts[2].y == doctest::Approx(5.0));
    }

    TEST_CASE("color classes follow the approach") {
        CHECK(color_class({0.0, false, {}}) == ColorClass::Green);
        CHECK(color_class({6.0, false, {}}) == ColorClass::Yellow);
        CHECK(color_class({0.0, true, {}}) == ColorClass::Orange);
        CHECK(color_class({10.0, true, {}}) == ColorClass::Red);
    }
}
