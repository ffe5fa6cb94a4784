#pragma once

// Level JSON format, schema version 1:
//
//   { "schema": 1, "name": "...",
//     "movement": { walk_speed, run_speed, air_speed, ground_accel, turn_accel,
//                   stop_accel, air_accel, gravity, takeoff_speed,
//                   max_fall_speed, jump_model, jump_enabled,
//                   double_jump_enabled },
//     "character": { health, spike_damage },
//     "platforms": [ { id, x, y, length, kind, spikes, role,
//                      motion: { axis, amplitude, speed }?, fade_speed? } ] }
//
// Accelerations serialize an unbounded value as the string "inf".

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "platlab/errors.hpp"
#include "platlab/model.hpp"

namespace platlab {

inline constexpr int kLevelSchemaVersion = 1;

/// Parses a level document. Throws ParseError on malformed JSON and
/// SchemaError (with a field path) on schema violations, including
/// unknown fields. Invariant checks are left to validate_level().
Level parse_level(std::string_view document);

Level level_from_json(const nlohmann::json& j, const std::string& path = "");
nlohmann::json level_to_json(const Level& level);

nlohmann::json movement_to_json(const MovementConfig& m);
MovementConfig movement_from_json(const nlohmann::json& j, const std::string& path);

/// Two-space indented JSON.
std::string serialize_level(const Level& level);

/// Reads a whole file; throws IoError.
std::string read_file(const std::filesystem::path& path);
Level load_level(const std::filesystem::path& path);

/// Parses JSON text, converting syntax errors into ParseError with
/// line/column information.
nlohmann::json parse_json(std::string_view text);

}  // namespace platlab
