#include "platlab/validation.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <sstream>

#include "platlab/detail/json_reader.hpp"
#include "platlab/errors.hpp"
#include "platlab/level_io.hpp"
#include "platlab/navgraph.hpp"

namespace platlab {

namespace {

// Shortest text that reads back to the same double.
std::string num(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string join_rows(const std::vector<TrialFormatError::Row>& rows) {
    std::ostringstream os;
    os << "malformed trial rows:";
    for (const auto& r : rows) os << "\n  row " << r.row << ": " << r.message;
    return os.str();
}

std::string join_ids(const std::vector<std::string>& ids) {
    std::string s = "unknown screen ids:";
    for (const auto& id : ids) s += " " + id;
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t begin = 0;
    for (;;) {
        const auto comma = line.find(',', begin);
        out.push_back(line.substr(begin, comma == std::string_view::npos ? std::string_view::npos : comma - begin));
        if (comma == std::string_view::npos) break;
        begin = comma + 1;
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::optional<double> parse_double(std::string_view s) {
    double v = 0.0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end || !std::isfinite(v)) return std::nullopt;
    return v;
}

std::optional<bool> parse_bool(std::string_view s) {
    if (s == "1" || s == "true" || s == "True" || s == "TRUE") return true;
    if (s == "0" || s == "false" || s == "False" || s == "FALSE") return false;
    return std::nullopt;
}

void check_known(const std::vector<TrialRecord>& records, const std::set<std::string>* known) {
    if (!known) return;
    std::set<std::string> unknown;
    for (const auto& r : records) {
        if (!known->count(r.screen_id)) unknown.insert(r.screen_id);
    }
    if (!unknown.empty()) throw UnknownScreenError({unknown.begin(), unknown.end()});
}

bool blank(std::string_view text) {
    return std::all_of(text.begin(), text.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

Point point_from_json(const nlohmann::json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2) throw SchemaError(path, "expected [x, y]");
    return {detail::ObjectReader::as_number(j[0], path + "[0]"), detail::ObjectReader::as_number(j[1], path + "[1]")};
}

}  // namespace

TrialFormatError::TrialFormatError(std::vector<Row> rows) : std::runtime_error(join_rows(rows)), rows_(std::move(rows)) {}

UnknownScreenError::UnknownScreenError(std::vector<std::string> ids)
    : std::runtime_error(join_ids(ids)), ids_(std::move(ids)) {}

TrialLog parse_trials_csv(std::string_view text, const std::set<std::string>* known_screens) {
    TrialLog log;
    if (blank(text)) {
        log.warnings.push_back("trial log is empty");
        return log;
    }

    std::vector<std::string_view> lines;
    for (std::size_t begin = 0; begin < text.size();) {
        auto nl = text.find('\n', begin);
        if (nl == std::string_view::npos) nl = text.size();
        lines.push_back(text.substr(begin, nl - begin));
        begin = nl + 1;
    }

    std::vector<TrialFormatError::Row> errors;
    std::size_t header = 0;
    while (header < lines.size() && trim(lines[header]).empty()) ++header;
    {
        auto fields = split_fields(trim(lines[header]));
        std::string normalized;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) normalized += ',';
            normalized += trim(fields[i]);
        }
        if (normalized != kTrialCsvHeader) {
            throw TrialFormatError({{0, "expected header '" + std::string(kTrialCsvHeader) + "'"}});
        }
    }

    std::size_t row = 0;
    for (std::size_t li = header + 1; li < lines.size(); ++li) {
        const auto line = trim(lines[li]);
        if (line.empty()) continue;
        ++row;
        auto fields = split_fields(line);
        if (fields.size() != 7) {
            errors.push_back({row, "expected 7 fields, found " + std::to_string(fields.size())});
            continue;
        }
        for (auto& f : fields) f = trim(f);

        TrialRecord rec;
        rec.screen_id = std::string(fields[0]);
        std::string problem;
        if (rec.screen_id.empty()) problem = "empty screen_id";
        const auto tx = parse_double(fields[1]);
        const auto ty = parse_double(fields[2]);
        const auto vx = parse_double(fields[5]);
        const auto success = parse_bool(fields[6]);
        if (problem.empty() && (!tx || !ty)) problem = "takeoff coordinates are not numbers";
        if (problem.empty() && !vx) problem = "takeoff_vx is not a number";
        if (problem.empty() && !success) problem = "success must be true/false or 1/0";
        const bool has_lx = !fields[3].empty();
        const bool has_ly = !fields[4].empty();
        if (problem.empty() && has_lx != has_ly) problem = "landing needs both coordinates or neither";
        std::optional<Point> landing;
        if (problem.empty() && has_lx) {
            const auto lx = parse_double(fields[3]);
            const auto ly = parse_double(fields[4]);
            if (!lx || !ly) {
                problem = "landing coordinates are not numbers";
            } else {
                landing = Point{*lx, *ly};
            }
        }
        if (problem.empty() && landing && !*success) problem = "landing recorded on a failed jump";
        if (!problem.empty()) {
            errors.push_back({row, problem});
            continue;
        }
        rec.takeoff = {*tx, *ty};
        rec.landing = landing;
        rec.takeoff_vx = *vx;
        rec.success = *success;
        log.records.push_back(std::move(rec));
    }
    if (!errors.empty()) throw TrialFormatError(std::move(errors));
    if (log.records.empty()) log.warnings.push_back("trial log has no data rows");
    check_known(log.records, known_screens);
    return log;
}

TrialLog parse_trials_json(std::string_view text, const std::set<std::string>* known_screens) {
    TrialLog log;
    if (blank(text)) {
        log.warnings.push_back("trial log is empty");
        return log;
    }
    const auto doc = parse_json(text);
    if (!doc.is_array()) throw SchemaError("", "expected an array of trial records");

    std::vector<TrialFormatError::Row> errors;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const std::string path = "[" + std::to_string(i) + "]";
        try {
            detail::ObjectReader r(doc[i], path);
            TrialRecord rec;
            rec.screen_id = r.string("screen_id");
            rec.takeoff = point_from_json(r.raw("takeoff"), path + ".takeoff");
            if (const auto* l = r.optional_raw("landing")) rec.landing = point_from_json(*l, path + ".landing");
            rec.takeoff_vx = r.number("takeoff_vx");
            rec.success = r.boolean("success");
            if (const auto* t = r.optional_raw("trajectory")) {
                if (!t->is_array()) throw SchemaError(path + ".trajectory", "expected an array of points");
                for (std::size_t k = 0; k < t->size(); ++k) {
                    rec.trajectory.push_back(point_from_json((*t)[k], path + ".trajectory[" + std::to_string(k) + "]"));
                }
            }
            r.finish();
            if (rec.screen_id.empty()) throw SchemaError(path + ".screen_id", "empty screen_id");
            if (rec.landing && !rec.success) throw SchemaError(path + ".landing", "landing recorded on a failed jump");
            log.records.push_back(std::move(rec));
        } catch (const SchemaError& e) {
            errors.push_back({i + 1, e.what()});
        }
    }
    if (!errors.empty()) throw TrialFormatError(std::move(errors));
    if (log.records.empty()) log.warnings.push_back("trial log has no records");
    check_known(log.records, known_screens);
    return log;
}

TrialLog parse_trials(std::string_view text, const std::set<std::string>* known_screens) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '[') return parse_trials_json(text, known_screens);
    return parse_trials_csv(text, known_screens);
}

TrialLog load_trials(const std::filesystem::path& path, const std::set<std::string>* known_screens) {
    return parse_trials(read_file(path), known_screens);
}

std::string trials_to_csv(const std::vector<TrialRecord>& records) {
    std::ostringstream os;
    os << kTrialCsvHeader << '\n';
    for (const auto& r : records) {
        os << r.screen_id << ',' << num(r.takeoff.x) << ',' << num(r.takeoff.y) << ',';
        if (r.landing) os << num(r.landing->x) << ',' << num(r.landing->y);
        else os << ',';
        os << ',' << num(r.takeoff_vx) << ',' << (r.success ? "true" : "false") << '\n';
    }
    return os.str();
}

std::set<std::string> ScreenSuite::ids() const {
    std::set<std::string> out;
    for (const auto& s : screens) out.insert(s.id);
    return out;
}

const Screen* ScreenSuite::find(std::string_view id) const {
    for (const auto& s : screens) {
        if (s.id == id) return &s;
    }
    return nullptr;
}

ScreenSuite suite_from_json(const nlohmann::json& j) {
    detail::ObjectReader r(j, "");
    const auto schema = r.integer("schema");
    if (schema != kLevelSchemaVersion) throw SchemaError("schema", "unsupported schema version " + std::to_string(schema));
    ScreenSuite suite;
    suite.name = r.string_or("name", "");
    const auto& screens = r.raw("screens");
    if (!screens.is_array()) throw SchemaError("screens", "expected an array");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < screens.size(); ++i) {
        const std::string path = "screens[" + std::to_string(i) + "]";
        detail::ObjectReader sr(screens[i], path);
        Screen screen;
        screen.id = sr.string("id");
        if (screen.id.empty()) throw SchemaError(path + ".id", "empty screen id");
        if (!seen.insert(screen.id).second) throw SchemaError(path + ".id", "duplicate screen id " + screen.id);
        screen.level = level_from_json(sr.raw("level"), path + ".level");
        sr.finish();
        suite.screens.push_back(std::move(screen));
    }
    r.finish();
    return suite;
}

nlohmann::json suite_to_json(const ScreenSuite& suite) {
    nlohmann::json screens = nlohmann::json::array();
    for (const auto& s : suite.screens) screens.push_back({{"id", s.id}, {"level", level_to_json(s.level)}});
    nlohmann::json j = {{"schema", kLevelSchemaVersion}};
    if (!suite.name.empty()) j["name"] = suite.name;
    j["screens"] = std::move(screens);
    return j;
}

ScreenSuite parse_suite(std::string_view text) { return suite_from_json(parse_json(text)); }

ScreenSuite load_suite(const std::filesystem::path& path) { return parse_suite(read_file(path)); }

std::pair<const Platform*, const Platform*> screen_endpoints(const Screen& screen) {
    const Platform* start = nullptr;
    const Platform* exit = nullptr;
    int starts = 0;
    int exits = 0;
    for (const auto& p : screen.level.platforms) {
        if (p.role == PlatformRole::Start) {
            start = &p;
            ++starts;
        } else if (p.role == PlatformRole::Exit) {
            exit = &p;
            ++exits;
        }
    }
    if (starts != 1 || exits != 1) {
        throw SchemaError("screens." + screen.id, "a screen needs exactly one start and one exit platform");
    }
    return {start, exit};
}

JumpType screen_jump_type(const Screen& screen) {
    const auto [start, exit] = screen_endpoints(screen);
    return classify_jump(*start, *exit);
}

std::vector<ScreenSummary> summarize(const std::vector<TrialRecord>& trials, const ScreenSuite& suite) {
    std::map<std::string, std::pair<std::size_t, std::size_t>> counts;
    for (const auto& t : trials) {
        auto& c = counts[t.screen_id];
        ++c.first;
        if (t.success) ++c.second;
    }
    std::vector<ScreenSummary> out;
    for (const auto& screen : suite.screens) {
        auto it = counts.find(screen.id);
        if (it == counts.end()) continue;
        ScreenSummary s;
        s.screen_id = screen.id;
        s.trajectory_type = screen_jump_type(screen);
        s.jumps = it->second.first;
        s.successes = it->second.second;
        s.success_rate = static_cast<double>(s.successes) / static_cast<double>(s.jumps);
        out.push_back(std::move(s));
    }
    return out;
}

MaeResult mae(const std::map<std::string, double>& estimates, const std::map<std::string, double>& empirical) {
    if (estimates.empty() || empirical.empty()) throw std::invalid_argument("mae needs at least one screen");
    if (estimates.size() != empirical.size()) throw std::invalid_argument("mae: screen sets differ");
    std::vector<double> errors;
    errors.reserve(estimates.size());
    for (const auto& [id, p] : estimates) {
        auto it = empirical.find(id);
        if (it == empirical.end()) throw std::invalid_argument("mae: screen " + id + " has no empirical rate");
        errors.push_back(std::fabs(p - it->second));
    }
    // Map iteration is keyed, so the result does not depend on input order.
    const double n = static_cast<double>(errors.size());
    double sum = 0.0;
    for (double e : errors) sum += e;
    MaeResult r;
    r.mae = sum / n;
    if (errors.size() > 1) {
        double ss = 0.0;
        for (double e : errors) ss += (e - r.mae) * (e - r.mae);
        r.standard_error = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
    }
    return r;
}

double estimate_screen(const Screen& screen, const NoiseModel& noise, const SamplingConfig& sampling,
                       const DifficultyConfig& difficulty) {
    const auto [start, exit] = screen_endpoints(screen);
    GraphOptions options;
    options.threads = 1;
    const auto est = estimate_pair(*start, *exit, screen.level.movement, noise, sampling, difficulty, options);
    return est.reachable ? est.metrics.probability : 0.0;
}

const MaeCell& MaeGridResult::cell(std::size_t kind, std::size_t rt, std::size_t ps) const {
    return cells.at((kind * reaction_times.size() + rt) * player_skills.size() + ps);
}

std::size_t MaeGridResult::argmin_for(NoiseKind kind) const {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].kind != kind) continue;
        if (!best || cells[i].result.mae < cells[*best].result.mae) best = i;
    }
    if (!best) throw std::invalid_argument("noise kind not part of the grid");
    return *best;
}

MaeGridResult mae_grid(const ScreenSuite& suite, const std::vector<ScreenSummary>& empirical,
                       const std::vector<NoiseKind>& kinds, const std::vector<double>& reaction_times,
                       const std::vector<double>& player_skills, const SamplingConfig& sampling,
                       const DifficultyConfig& difficulty) {
    if (empirical.empty()) throw std::invalid_argument("mae_grid needs at least one screen summary");
    if (kinds.empty() || reaction_times.empty() || player_skills.empty()) {
        throw std::invalid_argument("mae_grid needs at least one value per axis");
    }
    std::map<std::string, double> rates;
    std::vector<const Screen*> screens;
    for (const auto& s : empirical) {
        const Screen* screen = suite.find(s.screen_id);
        if (!screen) throw UnknownScreenError({s.screen_id});
        rates[s.screen_id] = s.success_rate;
        screens.push_back(screen);
    }

    MaeGridResult grid;
    grid.kinds = kinds;
    grid.reaction_times = reaction_times;
    grid.player_skills = player_skills;
    for (auto kind : kinds) {
        for (double rt : reaction_times) {
            for (double ps : player_skills) {
                MaeCell cell;
                cell.kind = kind;
                cell.reaction_time = rt;
                cell.player_skill = ps;
                const NoiseModel noise{kind, rt, ps};
                noise.validate();
                for (const Screen* screen : screens) {
                    cell.estimates[screen->id] = estimate_screen(*screen, noise, sampling, difficulty);
                }
                cell.result = mae(cell.estimates, rates);
                grid.cells.push_back(std::move(cell));
            }
        }
    }
    for (std::size_t i = 1; i < grid.cells.size(); ++i) {
        if (grid.cells[i].result.mae < grid.cells[grid.argmin].result.mae) grid.argmin = i;
    }
    return grid;
}

std::string grid_to_csv(const MaeGridResult& grid) {
    std::ostringstream os;
    os << "noise,rt,ps,mae,standard_error\n";
    for (const auto& c : grid.cells) {
        os << to_string(c.kind) << ',' << num(c.reaction_time) << ',' << num(c.player_skill) << ','
           << num(c.result.mae) << ',' << num(c.result.standard_error) << '\n';
    }
    return os.str();
}

nlohmann::json grid_to_json(const MaeGridResult& grid) {
    auto cell_json = [](const MaeCell& c) {
        return nlohmann::json{{"noise", to_string(c.kind)},
                              {"rt", c.reaction_time},
                              {"ps", c.player_skill},
                              {"mae", c.result.mae},
                              {"standard_error", c.result.standard_error},
                              {"estimates", c.estimates}};
    };
    nlohmann::json kinds = nlohmann::json::array();
    for (auto k : grid.kinds) kinds.push_back(to_string(k));
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : grid.cells) cells.push_back(cell_json(c));
    nlohmann::json per_kind = nlohmann::json::object();
    for (auto k : grid.kinds) per_kind[std::string(to_string(k))] = cell_json(grid.cells[grid.argmin_for(k)]);
    return {{"noise_kinds", kinds},
            {"reaction_times", grid.reaction_times},
            {"player_skills", grid.player_skills},
            {"cells", cells},
            {"argmin", grid.cells.empty() ? nlohmann::json() : cell_json(grid.cells[grid.argmin])},
            {"argmin_per_noise", per_kind}};
}

std::vector<TrialRecord> synthesize_trials(const ScreenSuite& suite, const NoiseModel& noise,
                                           const SamplingConfig& sampling, std::size_t trials_per_screen,
                                           std::uint64_t trial_seed, const DifficultyConfig& difficulty) {
    std::vector<TrialRecord> out;
    for (const auto& screen : suite.screens) {
        const double p = estimate_screen(screen, noise, sampling, difficulty);
        const auto [start, exit] = screen_endpoints(screen);
        const bool rightward = exit->center() >= start->center();
        const Point takeoff{rightward ? start->right() : start->left(), start->y};
        Rng rng = make_substream(trial_seed, {"trials", screen.id});
        std::bernoulli_distribution hit(std::clamp(p, 0.0, 1.0));
        for (std::size_t i = 0; i < trials_per_screen; ++i) {
            TrialRecord r;
            r.screen_id = screen.id;
            r.takeoff = takeoff;
            r.success = hit(rng);
            if (r.success) r.landing = Point{exit->center(), exit->y};
            out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace platlab
