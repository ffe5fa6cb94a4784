#pragma once

// Level document: platforms, movement physics, character settings.
//
// Coordinates are world units with x increasing to the right and y
// increasing upward. A platform is a 1D walkable surface anchored at the
// left end of its top: [x, x + length] at height y. The character is a
// point mass located at its feet.

#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace platlab {

inline constexpr double kInfinite = std::numeric_limits<double>::infinity();

/// Absolute tolerance used for every geometric comparison.
inline constexpr double kGeomTol = 1e-9;

struct Point {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Point&) const = default;
};

enum class PlatformKind { Static, Dynamic, Fading };
enum class PlatformRole { None, Start, Exit, Checkpoint };
enum class MotionAxis { Horizontal, Vertical };
enum class JumpModel { Static, Dynamic };

struct MotionSpec {
    MotionAxis axis = MotionAxis::Horizontal;
    double amplitude = 0.0;  // extent of the swept bounding box along axis
    double speed = 1.0;

    double period() const { return 2.0 * amplitude / speed; }

    bool operator==(const MotionSpec&) const = default;
};

struct Platform {
    std::string id;
    double x = 0.0;       // left end of the walkable surface
    double y = 0.0;       // height of the walkable surface
    double length = 1.0;
    PlatformKind kind = PlatformKind::Static;
    std::optional<MotionSpec> motion;  // Dynamic only; x/y is the low end of the sweep
    bool spikes = false;
    PlatformRole role = PlatformRole::None;
    std::optional<double> fade_speed;  // Fading only

    double left() const { return x; }
    double right() const { return x + length; }
    double center() const { return x + 0.5 * length; }

    bool operator==(const Platform&) const = default;
};

struct MovementConfig {
    double walk_speed = 6.0;
    double run_speed = 10.0;
    double air_speed = 8.0;
    double ground_accel = kInfinite;
    double turn_accel = kInfinite;
    double stop_accel = kInfinite;
    double air_accel = kInfinite;
    double gravity = 30.0;
    double takeoff_speed = 12.0;
    double max_fall_speed = 20.0;
    JumpModel jump_model = JumpModel::Static;
    bool jump_enabled = true;
    bool double_jump_enabled = true;

    bool operator==(const MovementConfig&) const = default;
};

struct CharacterConfig {
    int health = 3;
    int spike_damage = 1;  // applied on each landing on a spiked platform

    bool operator==(const CharacterConfig&) const = default;
};

struct Level {
    std::string name;
    MovementConfig movement;
    CharacterConfig character;
    std::vector<Platform> platforms;

    const Platform* find(std::string_view id) const;
    const Platform* start() const;

    bool operator==(const Level&) const = default;
};

/// One violated well-formedness rule. `platform_id` is empty for
/// level-wide rules (movement, character, missing start).
struct Diagnostic {
    std::string rule;
    std::string platform_id;
    std::string message;

    bool operator==(const Diagnostic&) const = default;
};

/// Checks every level/platform invariant. Returns an empty list iff the
/// level is well formed. Rules: missing-start, multiple-start, missing-exit,
/// duplicate-id, empty-id, nonpositive-length, nonfinite-value,
/// motion-mismatch, negative-amplitude, nonpositive-motion-speed,
/// fade-speed-mismatch, static-overlap, invalid-movement, invalid-character.
std::vector<Diagnostic> validate_level(const Level& level);

std::string_view to_string(PlatformKind kind);
std::string_view to_string(PlatformRole role);
std::string_view to_string(MotionAxis axis);
std::string_view to_string(JumpModel model);

std::optional<PlatformKind> platform_kind_from_string(std::string_view s);
std::optional<PlatformRole> platform_role_from_string(std::string_view s);
std::optional<MotionAxis> motion_axis_from_string(std::string_view s);
std::optional<JumpModel> jump_model_from_string(std::string_view s);

}  // namespace platlab
