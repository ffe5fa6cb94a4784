#pragma once

// Comparison of model estimates against logged human jump trials.
//
// A screen is a two-platform level (one start, one exit). Trial logs are
// CSV with the header
//
//   screen_id,takeoff_x,takeoff_y,landing_x,landing_y,takeoff_vx,success
//
// (landing fields empty when success is false), or a JSON array of
// {screen_id, takeoff:[x,y], landing:[x,y]|null, takeoff_vx, success,
//  trajectory?:[[x,y],...]}.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "platlab/model.hpp"
#include "platlab/probability.hpp"
#include "platlab/trajectory.hpp"

namespace platlab {

struct TrialRecord {
    std::string screen_id;
    Point takeoff;
    std::optional<Point> landing;  // present only on success
    double takeoff_vx = 0.0;
    bool success = false;
    std::vector<Point> trajectory;

    bool operator==(const TrialRecord&) const = default;
};

struct TrialLog {
    std::vector<TrialRecord> records;
    std::vector<std::string> warnings;
};

/// Rows that failed to parse or violated record invariants. Row numbers
/// are 1-based data rows (the CSV header is row 0).
class TrialFormatError : public std::runtime_error {
public:
    struct Row {
        std::size_t row;
        std::string message;
    };

    explicit TrialFormatError(std::vector<Row> rows);
    const std::vector<Row>& rows() const { return rows_; }

private:
    std::vector<Row> rows_;
};

/// Screen ids in the log that are not part of the screen suite.
class UnknownScreenError : public std::runtime_error {
public:
    explicit UnknownScreenError(std::vector<std::string> ids);
    const std::vector<std::string>& ids() const { return ids_; }

private:
    std::vector<std::string> ids_;
};

inline constexpr std::string_view kTrialCsvHeader =
    "screen_id,takeoff_x,takeoff_y,landing_x,landing_y,takeoff_vx,success";

/// `known_screens`, when given, must contain every screen id in the log.
TrialLog parse_trials_csv(std::string_view text, const std::set<std::string>* known_screens = nullptr);
TrialLog parse_trials_json(std::string_view text, const std::set<std::string>* known_screens = nullptr);
/// Dispatches on content: a leading '[' is JSON, anything else CSV.
TrialLog parse_trials(std::string_view text, const std::set<std::string>* known_screens = nullptr);
TrialLog load_trials(const std::filesystem::path& path, const std::set<std::string>* known_screens = nullptr);

std::string trials_to_csv(const std::vector<TrialRecord>& records);

struct Screen {
    std::string id;
    Level level;
};

/// {"schema": 1, "screens": [{"id": "...", "level": {...}}, ...]}
struct ScreenSuite {
    std::string name;
    std::vector<Screen> screens;

    std::set<std::string> ids() const;
    const Screen* find(std::string_view id) const;
};

ScreenSuite suite_from_json(const nlohmann::json& j);
nlohmann::json suite_to_json(const ScreenSuite& suite);
ScreenSuite parse_suite(std::string_view text);
ScreenSuite load_suite(const std::filesystem::path& path);

/// Start and exit platforms of a screen; throws SchemaError if the
/// screen level does not have exactly one of each.
std::pair<const Platform*, const Platform*> screen_endpoints(const Screen& screen);
JumpType screen_jump_type(const Screen& screen);

struct ScreenSummary {
    std::string screen_id;
    JumpType trajectory_type = JumpType::Simple;
    std::size_t jumps = 0;
    std::size_t successes = 0;
    double success_rate = 0.0;
};

/// Per-screen counts in suite order; screens without trials are omitted.
std::vector<ScreenSummary> summarize(const std::vector<TrialRecord>& trials, const ScreenSuite& suite);

struct MaeResult {
    double mae = 0.0;
    double standard_error = 0.0;  // sample std-dev of |error| / sqrt(#screens)
};

/// Unweighted mean absolute error over screens. Throws std::invalid_argument
/// when the two maps do not cover the same non-empty screen set.
MaeResult mae(const std::map<std::string, double>& estimates, const std::map<std::string, double>& empirical);

/// p(e) of the start -> exit jump of a screen; 0 when unreachable.
double estimate_screen(const Screen& screen, const NoiseModel& noise, const SamplingConfig& sampling,
                       const DifficultyConfig& difficulty = {});

struct MaeCell {
    NoiseKind kind = NoiseKind::GaussianResample;
    double reaction_time = 0.0;
    double player_skill = 0.0;
    MaeResult result;
    std::map<std::string, double> estimates;
};

struct MaeGridResult {
    std::vector<double> reaction_times;
    std::vector<double> player_skills;
    std::vector<NoiseKind> kinds;
    std::vector<MaeCell> cells;   // kind-major, then Rt, then Ps
    std::size_t argmin = 0;       // overall lowest MAE (first on ties)

    const MaeCell& cell(std::size_t kind, std::size_t rt, std::size_t ps) const;
    /// Lowest-MAE cell among those of one noise kind.
    std::size_t argmin_for(NoiseKind kind) const;
};

MaeGridResult mae_grid(const ScreenSuite& suite, const std::vector<ScreenSummary>& empirical,
                       const std::vector<NoiseKind>& kinds, const std::vector<double>& reaction_times,
                       const std::vector<double>& player_skills, const SamplingConfig& sampling,
                       const DifficultyConfig& difficulty = {});

std::string grid_to_csv(const MaeGridResult& grid);
nlohmann::json grid_to_json(const MaeGridResult& grid);

/// Bernoulli trials drawn from the engine's own estimates at `noise`, for
/// closing the estimate -> trials -> grid loop.
std::vector<TrialRecord> synthesize_trials(const ScreenSuite& suite, const NoiseModel& noise,
                                           const SamplingConfig& sampling, std::size_t trials_per_screen,
                                           std::uint64_t trial_seed, const DifficultyConfig& difficulty = {});

}  // namespace platlab
