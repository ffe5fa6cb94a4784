#include "platlab/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace platlab {

const Platform* Level::find(std::string_view id) const {
    auto it = std::find_if(platforms.begin(), platforms.end(),
                           [&](const Platform& p) { return p.id == id; });
    return it == platforms.end() ? nullptr : &*it;
}

const Platform* Level::start() const {
    auto it = std::find_if(platforms.begin(), platforms.end(),
                           [](const Platform& p) { return p.role == PlatformRole::Start; });
    return it == platforms.end() ? nullptr : &*it;
}

namespace {

bool finite(double v) { return std::isfinite(v); }

// Accelerations may be +inf ("reach target speed instantly") but never NaN.
bool positive_or_infinite(double v) { return !std::isnan(v) && v > 0.0; }

void check_movement(const MovementConfig& m, std::vector<Diagnostic>& out) {
    auto bad = [&](std::string field, std::string what) {
        out.push_back({"invalid-movement", "", "movement." + field + " " + what});
    };
    const std::pair<const char*, double> speeds[] = {
        {"walk_speed", m.walk_speed},         {"run_speed", m.run_speed},
        {"air_speed", m.air_speed},           {"gravity", m.gravity},
        {"takeoff_speed", m.takeoff_speed},   {"max_fall_speed", m.max_fall_speed},
    };
    for (const auto& [name, v] : speeds) {
        if (!finite(v) || v <= 0.0) bad(name, "must be finite and > 0");
    }
    const std::pair<const char*, double> accels[] = {
        {"ground_accel", m.ground_accel}, {"turn_accel", m.turn_accel},
        {"stop_accel", m.stop_accel},     {"air_accel", m.air_accel},
    };
    for (const auto& [name, v] : accels) {
        if (!positive_or_infinite(v)) bad(name, "must be > 0 or inf");
    }
    if (finite(m.walk_speed) && finite(m.run_speed) && m.walk_speed > m.run_speed) {
        bad("walk_speed", "must not exceed run_speed");
    }
}

bool overlaps(const Platform& a, const Platform& b) {
    const double lo = std::max(a.left(), b.left());
    const double hi = std::min(a.right(), b.right());
    return hi - lo > kGeomTol;
}

}  // namespace

std::vector<Diagnostic> validate_level(const Level& level) {
    std::vector<Diagnostic> out;

    check_movement(level.movement, out);
    if (level.character.health < 1) {
        out.push_back({"invalid-character", "", "character.health must be >= 1"});
    }
    if (level.character.spike_damage < 0) {
        out.push_back({"invalid-character", "", "character.spike_damage must be >= 0"});
    }

    std::set<std::string> seen;
    int starts = 0;
    int exits = 0;
    for (const auto& p : level.platforms) {
        if (p.id.empty()) out.push_back({"empty-id", p.id, "platform id must not be empty"});
        if (!seen.insert(p.id).second) {
            out.push_back({"duplicate-id", p.id, "platform id '" + p.id + "' appears more than once"});
        }
        if (!finite(p.x) || !finite(p.y) || !finite(p.length)) {
            out.push_back({"nonfinite-value", p.id, "platform position and length must be finite"});
        } else if (p.length <= 0.0) {
            out.push_back({"nonpositive-length", p.id, "platform length must be > 0"});
        }

        const bool dynamic = p.kind == PlatformKind::Dynamic;
        if (dynamic != p.motion.has_value()) {
            out.push_back({"motion-mismatch", p.id,
                           dynamic ? "dynamic platform requires a motion spec"
                                   : "motion spec is only allowed on dynamic platforms"});
        }
        if (p.motion) {
            if (!finite(p.motion->amplitude) || p.motion->amplitude < 0.0) {
                out.push_back({"negative-amplitude", p.id, "motion.amplitude must be finite and >= 0"});
            }
            if (!finite(p.motion->speed) || p.motion->speed <= 0.0) {
                out.push_back({"nonpositive-motion-speed", p.id, "motion.speed must be finite and > 0"});
            }
        }
        if (p.fade_speed && (p.kind != PlatformKind::Fading || !finite(*p.fade_speed) || *p.fade_speed <= 0.0)) {
            out.push_back({"fade-speed-mismatch", p.id,
                           "fade_speed must be > 0 and is only allowed on fading platforms"});
        }

        if (p.role == PlatformRole::Start) ++starts;
        if (p.role == PlatformRole::Exit) ++exits;
    }

    if (starts == 0) out.push_back({"missing-start", "", "level has no start platform"});
    if (starts > 1) out.push_back({"multiple-start", "", "level has more than one start platform"});
    if (exits == 0) out.push_back({"missing-exit", "", "level has no exit platform"});

    const auto& ps = level.platforms;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (ps[i].kind == PlatformKind::Dynamic) continue;
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
            if (ps[j].kind == PlatformKind::Dynamic) continue;
            if (std::abs(ps[i].y - ps[j].y) <= kGeomTol && overlaps(ps[i], ps[j])) {
                out.push_back({"static-overlap", ps[j].id,
                               "surface overlaps platform '" + ps[i].id + "' at the same height"});
            }
        }
    }
    return out;
}

std::string_view to_string(PlatformKind kind) {
    switch (kind) {
        case PlatformKind::Static: return "static";
        case PlatformKind::Dynamic: return "dynamic";
        case PlatformKind::Fading: return "fading";
    }
    return "static";
}

std::string_view to_string(PlatformRole role) {
    switch (role) {
        case PlatformRole::None: return "none";
        case PlatformRole::Start: return "start";
        case PlatformRole::Exit: return "exit";
        case PlatformRole::Checkpoint: return "checkpoint";
    }
    return "none";
}

std::string_view to_string(MotionAxis axis) {
    return axis == MotionAxis::Horizontal ? "horizontal" : "vertical";
}

std::string_view to_string(JumpModel model) {
    return model == JumpModel::Static ? "static" : "dynamic";
}

std::optional<PlatformKind> platform_kind_from_string(std::string_view s) {
    if (s == "static") return PlatformKind::Static;
    if (s == "dynamic") return PlatformKind::Dynamic;
    if (s == "fading") return PlatformKind::Fading;
    return std::nullopt;
}

std::optional<PlatformRole> platform_role_from_string(std::string_view s) {
    if (s == "none") return PlatformRole::None;
    if (s == "start") return PlatformRole::Start;
    if (s == "exit") return PlatformRole::Exit;
    if (s == "checkpoint") return PlatformRole::Checkpoint;
    return std::nullopt;
}

std::optional<MotionAxis> motion_axis_from_string(std::string_view s) {
    if (s == "horizontal") return MotionAxis::Horizontal;
    if (s == "vertical") return MotionAxis::Vertical;
    return std::nullopt;
}

std::optional<JumpModel> jump_model_from_string(std::string_view s) {
    if (s == "static") return JumpModel::Static;
    if (s == "dynamic") return JumpModel::Dynamic;
    return std::nullopt;
}

}  // namespace platlab
