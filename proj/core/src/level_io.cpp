#include "platlab/level_io.hpp"

#include <fstream>
#include <sstream>

#include "platlab/detail/json_reader.hpp"

namespace platlab {

using detail::ObjectReader;
using nlohmann::json;

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

template <class Enum, class Fn>
Enum enum_field(ObjectReader& r, std::string_view key, Fn from_string, Enum fallback, bool required) {
    if (!required && !r.has(key)) {
        r.optional_raw(key);
        return fallback;
    }
    const std::string s = r.string(key);
    auto v = from_string(s);
    if (!v) throw SchemaError(r.child_path(key), "unknown value \"" + s + "\"");
    return *v;
}

Platform platform_from_json(const json& j, const std::string& path) {
    ObjectReader r(j, path);
    Platform p;
    p.id = r.string("id");
    p.x = r.number("x");
    p.y = r.number("y");
    p.length = r.number("length");
    p.kind = enum_field(r, "kind", platform_kind_from_string, PlatformKind::Static, false);
    p.spikes = r.boolean_or("spikes", false);
    p.role = enum_field(r, "role", platform_role_from_string, PlatformRole::None, false);
    if (const auto* m = r.optional_raw("motion")) {
        ObjectReader mr(*m, r.child_path("motion"));
        MotionSpec spec;
        spec.axis = enum_field(mr, "axis", motion_axis_from_string, MotionAxis::Horizontal, true);
        spec.amplitude = mr.number("amplitude");
        spec.speed = mr.number("speed");
        mr.finish();
        p.motion = spec;
    }
    if (const auto* f = r.optional_raw("fade_speed")) {
        p.fade_speed = ObjectReader::as_number(*f, r.child_path("fade_speed"));
    }
    r.finish();
    return p;
}

json platform_to_json(const Platform& p) {
    json j = {
        {"id", p.id},
        {"x", p.x},
        {"y", p.y},
        {"length", p.length},
        {"kind", to_string(p.kind)},
        {"spikes", p.spikes},
        {"role", to_string(p.role)},
    };
    if (p.motion) {
        j["motion"] = {{"axis", to_string(p.motion->axis)},
                       {"amplitude", p.motion->amplitude},
                       {"speed", p.motion->speed}};
    }
    if (p.fade_speed) j["fade_speed"] = *p.fade_speed;
    return j;
}

}  // namespace

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
        auto [line, col] = line_column(text, byte);
        throw ParseError("JSON syntax error at line " + std::to_string(line) + ", column " +
                             std::to_string(col) + ": " + e.what(),
                         line, col);
    }
}

MovementConfig movement_from_json(const json& j, const std::string& path) {
    ObjectReader r(j, path);
    MovementConfig m;
    m.walk_speed = r.number("walk_speed");
    m.run_speed = r.number("run_speed");
    m.air_speed = r.number("air_speed");
    m.ground_accel = r.number_or_inf("ground_accel");
    m.turn_accel = r.number_or_inf("turn_accel");
    m.stop_accel = r.number_or_inf("stop_accel");
    m.air_accel = r.number_or_inf("air_accel");
    m.gravity = r.number("gravity");
    m.takeoff_speed = r.number("takeoff_speed");
    m.max_fall_speed = r.number("max_fall_speed");
    m.jump_model = enum_field(r, "jump_model", jump_model_from_string, JumpModel::Static, true);
    m.jump_enabled = r.boolean("jump_enabled");
    m.double_jump_enabled = r.boolean("double_jump_enabled");
    r.finish();
    return m;
}

json movement_to_json(const MovementConfig& m) {
    using detail::number_or_inf_to_json;
    return {
        {"walk_speed", m.walk_speed},
        {"run_speed", m.run_speed},
        {"air_speed", m.air_speed},
        {"ground_accel", number_or_inf_to_json(m.ground_accel)},
        {"turn_accel", number_or_inf_to_json(m.turn_accel)},
        {"stop_accel", number_or_inf_to_json(m.stop_accel)},
        {"air_accel", number_or_inf_to_json(m.air_accel)},
        {"gravity", m.gravity},
        {"takeoff_speed", m.takeoff_speed},
        {"max_fall_speed", m.max_fall_speed},
        {"jump_model", to_string(m.jump_model)},
        {"jump_enabled", m.jump_enabled},
        {"double_jump_enabled", m.double_jump_enabled},
    };
}

Level level_from_json(const json& j, const std::string& path) {
    ObjectReader r(j, path);
    const auto schema = r.integer("schema");
    if (schema != kLevelSchemaVersion) {
        throw SchemaError(r.child_path("schema"), "unsupported schema version " + std::to_string(schema));
    }
    Level level;
    level.name = r.string_or("name", "");
    level.movement = movement_from_json(r.raw("movement"), r.child_path("movement"));
    if (const auto* c = r.optional_raw("character")) {
        ObjectReader cr(*c, r.child_path("character"));
        level.character.health = static_cast<int>(cr.integer("health"));
        level.character.spike_damage = static_cast<int>(cr.integer("spike_damage"));
        cr.finish();
    }
    const auto& platforms = r.raw("platforms");
    if (!platforms.is_array()) throw SchemaError(r.child_path("platforms"), "expected an array");
    for (std::size_t i = 0; i < platforms.size(); ++i) {
        level.platforms.push_back(
            platform_from_json(platforms[i], r.child_path("platforms") + "[" + std::to_string(i) + "]"));
    }
    r.finish();
    return level;
}

json level_to_json(const Level& level) {
    json platforms = json::array();
    for (const auto& p : level.platforms) platforms.push_back(platform_to_json(p));
    return {
        {"schema", kLevelSchemaVersion},
        {"name", level.name},
        {"movement", movement_to_json(level.movement)},
        {"character", {{"health", level.character.health}, {"spike_damage", level.character.spike_damage}}},
        {"platforms", std::move(platforms)},
    };
}

Level parse_level(std::string_view document) { return level_from_json(parse_json(document)); }

std::string serialize_level(const Level& level) { return level_to_json(level).dump(2) + "\n"; }

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("error reading " + path.string());
    return ss.str();
}

Level load_level(const std::filesystem::path& path) { return parse_level(read_file(path)); }

}  // namespace platlab
