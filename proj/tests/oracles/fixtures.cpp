#include "fixtures.hpp"

#include <cmath>

#ifndef PLATLAB_TEST_DATA_DIR
#define PLATLAB_TEST_DATA_DIR "data"
#endif

namespace platlab::fixtures {

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng, double p = 0.5) { return uniform(rng, 0.0, 1.0) < p; }

void mirror(PlatformPair& pair) {
    for (Platform* p : {&pair.start, &pair.target}) p->x = -(p->x + p->length);
}

}  // namespace

Platform platform(std::string id, double x, double y, double length) {
    Platform p;
    p.id = std::move(id);
    p.x = x;
    p.y = y;
    p.length = length;
    return p;
}

MovementConfig random_movement(std::mt19937_64& rng) {
    MovementConfig m;
    m.walk_speed = uniform(rng, 2.0, 8.0);
    m.run_speed = uniform(rng, m.walk_speed, 14.0);
    m.air_speed = uniform(rng, 2.0, 11.0);
    auto accel = [&] { return coin(rng) ? kInfinite : uniform(rng, 5.0, 120.0); };
    m.ground_accel = accel();
    m.turn_accel = accel();
    m.stop_accel = accel();
    m.air_accel = accel();
    m.gravity = uniform(rng, 10.0, 60.0);
    m.takeoff_speed = uniform(rng, 5.0, 20.0);
    m.max_fall_speed = uniform(rng, 5.0, 40.0);
    m.jump_model = coin(rng) ? JumpModel::Static : JumpModel::Dynamic;
    m.jump_enabled = true;
    m.double_jump_enabled = coin(rng);
    return m;
}

PlatformPair random_pair(std::mt19937_64& rng, JumpType type) {
    PlatformPair pair;
    switch (type) {
        case JumpType::Simple: {
            const double ls = uniform(rng, 1.0, 10.0);
            const double gap = uniform(rng, 0.3, 12.0);
            pair.start = platform("s", 0.0, 0.0, ls);
            pair.target = platform("t", ls + gap, uniform(rng, -6.0, 4.0), uniform(rng, 0.5, 8.0));
            break;
        }
        case JumpType::Falling: {
            const double ls = uniform(rng, 2.0, 12.0);
            const double lt = uniform(rng, 0.3, ls);
            pair.start = platform("s", 0.0, uniform(rng, 0.5, 8.0), ls);
            pair.target = platform("t", uniform(rng, 0.0, ls - lt), 0.0, lt);
            break;
        }
        case JumpType::Reentrant: {
            const double ls = uniform(rng, 0.5, 6.0);
            const double a = uniform(rng, 0.0, 3.0);
            const double b = uniform(rng, 0.0, 3.0);
            pair.start = platform("s", 0.0, 0.0, ls);
            pair.target = platform("t", -a, uniform(rng, 0.5, 5.0), ls + a + b);
            break;
        }
        case JumpType::Trivial: {
            const double ls = uniform(rng, 1.0, 8.0);
            pair.start = platform("s", 0.0, 0.0, ls);
            switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
                case 0: {  // partial overlap, any height
                    const double lt = uniform(rng, 1.0, 8.0);
                    const double overlap = uniform(rng, 0.1, std::min(ls, lt) - 0.05);
                    pair.target = platform("t", ls - overlap, uniform(rng, -4.0, 4.0), lt);
                    if (pair.target.x <= 0.0) pair.target.x = 0.05;
                    if (pair.target.right() <= ls) pair.target.length = ls - pair.target.x + 0.5;
                    break;
                }
                case 1: {  // same height
                    const double lt = uniform(rng, 0.5, 8.0);
                    pair.target = platform("t", uniform(rng, -lt + 0.1, ls - 0.1), 0.0, lt);
                    break;
                }
                case 2: {  // above, covered by the start
                    const double lt = uniform(rng, 0.3, ls);
                    pair.target = platform("t", uniform(rng, 0.0, ls - lt), uniform(rng, 0.5, 3.0), lt);
                    break;
                }
                default: {  // below, covering the start
                    const double a = uniform(rng, 0.1, 2.0);
                    pair.target = platform("t", -a, uniform(rng, -4.0, -0.5), ls + a + uniform(rng, 0.1, 2.0));
                    break;
                }
            }
            break;
        }
    }
    if (coin(rng)) mirror(pair);
    return pair;
}

const std::array<TableRow, 16> kStudyCounts{{
    {0, JumpType::Simple, 156, 136, 0.872},
    {1, JumpType::Simple, 131, 80, 0.611},
    {2, JumpType::Simple, 158, 114, 0.722},
    {3, JumpType::Simple, 159, 104, 0.654},
    {4, JumpType::Simple, 153, 33, 0.216},
    {5, JumpType::Reentrant, 150, 53, 0.353},
    {6, JumpType::Reentrant, 139, 76, 0.547},
    {7, JumpType::Reentrant, 134, 43, 0.321},
    {8, JumpType::Reentrant, 148, 32, 0.216},
    {9, JumpType::Trivial, 157, 139, 0.885},
    {10, JumpType::Falling, 151, 142, 0.940},
    {11, JumpType::Falling, 156, 143, 0.917},
    {12, JumpType::Trivial, 157, 156, 0.994},
    {13, JumpType::Falling, 140, 128, 0.914},
    {14, JumpType::Falling, 141, 93, 0.660},
    {15, JumpType::Simple, 131, 64, 0.489},
}};

std::filesystem::path data_dir() { return PLATLAB_TEST_DATA_DIR; }

}  // namespace platlab::fixtures
