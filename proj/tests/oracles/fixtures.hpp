#pragma once

// Random inputs and published reference numbers shared by the unit tests
// and the acceptance suite.

#include <array>
#include <filesystem>
#include <random>
#include <string>

#include "platlab/model.hpp"
#include "platlab/trajectory.hpp"

namespace platlab::fixtures {

/// Movement parameters drawn from wide but sane ranges. Accelerations are
/// infinite half of the time; the jump model is random.
MovementConfig random_movement(std::mt19937_64& rng);

struct PlatformPair {
    Platform start;
    Platform target;
};

/// Static pair whose classify_jump() is `type`, mirrored left/right at
/// random.
PlatformPair random_pair(std::mt19937_64& rng, JumpType type);

Platform platform(std::string id, double x, double y, double length);

/// Per-screen counts of the published human study, screen ids 0..15.
struct TableRow {
    int screen;
    JumpType type;
    int jumps;
    int successes;
    double success_rate;  // as printed, 3 decimals
};
extern const std::array<TableRow, 16> kStudyCounts;

/// Root of the bundled data directory (screen suite, trial logs, levels).
std::filesystem::path data_dir();

}  // namespace platlab::fixtures
