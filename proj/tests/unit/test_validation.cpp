#include <doctest.h>

#include <cmath>
#include <numeric>

#include "fixtures.hpp"
#include "platlab/errors.hpp"
#include "platlab/validation.hpp"

using namespace platlab;

namespace {

const std::string kHeader{kTrialCsvHeader};

const ScreenSuite& bundled_suite() {
    static const ScreenSuite suite = load_suite(fixtures::data_dir() / "screens" / "suite.json");
    return suite;
}

std::vector<TrialRecord> counted(const std::string& id, int jumps, int successes) {
    std::vector<TrialRecord> out;
    for (int i = 0; i < jumps; ++i) {
        TrialRecord r;
        r.screen_id = id;
        r.success = i < successes;
        if (r.success) r.landing = Point{1, 0};
        out.push_back(r);
    }
    return out;
}

std::map<std::string, double> study_rates() {
    std::map<std::string, double> out;
    for (const auto& row : fixtures::kStudyCounts) out[std::to_string(row.screen)] = row.success_rate;
    return out;
}

}  // namespace

TEST_SUITE("validation") {
    TEST_CASE("three well-formed rows") {
        const std::string csv = kHeader + "\n0,6,0,11.5,0,6.0,true\n0,6,0,,,6.0,false\n3,1.5,0,9,-1,-4.25,true\n";
        const auto log = parse_trials_csv(csv);
        REQUIRE(log.records.size() == 3);
        CHECK(log.warnings.empty());
        CHECK(log.records[0].landing == Point{11.5, 0});
        CHECK_FALSE(log.records[1].landing.has_value());
        CHECK(log.records[2].takeoff_vx == -4.25);
        CHECK(parse_trials_csv(trials_to_csv(log.records)).records == log.records);
    }

    TEST_CASE("landing on a failed trial is rejected") {
        const std::string csv = kHeader + "\n0,6,0,,,6.0,false\n0,6,0,11.5,0,6.0,false\n";
        try {
            parse_trials_csv(csv);
            FAIL("expected TrialFormatError");
        } catch (const TrialFormatError& e) {
            REQUIRE(e.rows().size() == 1);
            CHECK(e.rows()[0].row == 2);
        }
    }

    TEST_CASE("malformed rows are reported together") {
        const std::string csv = kHeader + "\n0,x,0,,,6.0,false\n0,6,0,,,6.0,maybe\n0,6,0\n";
        try {
            parse_trials_csv(csv);
            FAIL("expected TrialFormatError");
        } catch (const TrialFormatError& e) {
            CHECK(e.rows().size() == 3);
        }
        CHECK_THROWS_AS(parse_trials_csv("id,x\n0,1\n"), TrialFormatError);
    }

    TEST_CASE("empty input yields no records and a warning") {
        for (const char* text : {"", "\n  \n"}) {
            const auto log = parse_trials(text);
            CHECK(log.records.empty());
            CHECK(log.warnings.size() == 1);
        }
    }

    TEST_CASE("unknown screen ids are listed") {
        const std::set<std::string> known{"0", "1"};
        const std::string csv = kHeader + "\n0,6,0,,,6.0,false\n7,6,0,,,6.0,false\n9,6,0,,,6.0,false\n";
        try {
            parse_trials_csv(csv, &known);
            FAIL("expected UnknownScreenError");
        } catch (const UnknownScreenError& e) {
            CHECK(e.ids() == std::vector<std::string>{"7", "9"});
        }
    }

    TEST_CASE("json trial logs") {
        const std::string json = R"([
          {"screen_id": "0", "takeoff": [6, 0], "landing": [11.5, 0], "takeoff_vx": 6, "success": true,
           "trajectory": [[6, 0], [8, 2], [11.5, 0]]},
          {"screen_id": "0", "takeoff": [6, 0], "landing": null, "takeoff_vx": 6, "success": false}
        ])";
        const auto log = parse_trials(json);
        REQUIRE(log.records.size() == 2);
        CHECK(log.records[0].trajectory.size() == 3);
        CHECK_FALSE(log.records[1].landing.has_value());
        CHECK_THROWS_AS(parse_trials(R"([{"screen_id": "0", "takeoff": [6, 0], "landing": [1, 0],
                                          "takeoff_vx": 6, "success": false}])"),
                        TrialFormatError);
    }

    TEST_CASE("summarize examples") {
        const auto& suite = bundled_suite();
        std::vector<TrialRecord> trials = counted("0", 156, 136);
        for (auto& r : counted("12", 157, 156)) trials.push_back(r);
        for (auto& r : counted("5", 10, 0)) trials.push_back(r);
        const auto s = summarize(trials, suite);
        REQUIRE(s.size() == 3);
        CHECK(s[0].screen_id == "0");
        CHECK(std::round(s[0].success_rate * 1000) / 1000 == 0.872);
        CHECK(s[0].trajectory_type == JumpType::Simple);
        CHECK(s[1].screen_id == "5");
        CHECK(s[1].success_rate == 0.0);
        CHECK(s[1].trajectory_type == JumpType::Reentrant);
        CHECK(std::round(s[2].success_rate * 1000) / 1000 == 0.994);
        std::size_t jumps = 0;
        for (const auto& x : s) jumps += x.jumps;
        CHECK(jumps == trials.size());
    }

    TEST_CASE("bundled screens have the logged jump types") {
        const auto& suite = bundled_suite();
        REQUIRE(suite.screens.size() == 16);
        for (const auto& row : fixtures::kStudyCounts) {
            const Screen* screen = suite.find(std::to_string(row.screen));
            REQUIRE(screen != nullptr);
            CHECK(validate_level(screen->level).empty());
            CHECK(screen_jump_type(*screen) == row.type);
        }
    }

    TEST_CASE("mae examples") {
        const auto rates = study_rates();
        CHECK(mae(rates, rates).mae == 0.0);
        CHECK(mae(rates, rates).standard_error == 0.0);
        std::map<std::string, double> zero;
        for (const auto& [id, _] : rates) zero[id] = 0.0;
        CHECK(mae(zero, rates).mae == doctest::Approx(0.6444375).epsilon(1e-12));
        const auto one = mae({{"0", 0.5}}, {{"0", 0.872}});
        CHECK(one.mae == doctest::Approx(0.372).epsilon(1e-12));
        CHECK(one.standard_error == 0.0);
        CHECK_THROWS_AS(mae({{"0", 0.5}}, {{"1", 0.5}}), std::invalid_argument);
        CHECK_THROWS_AS(mae({}, {}), std::invalid_argument);
    }

    TEST_CASE("mae standard error") {
        const auto r = mae({{"a", 0.0}, {"b", 0.0}}, {{"a", 0.2}, {"b", 0.4}});
        CHECK(r.mae == doctest::Approx(0.3));
        CHECK(r.standard_error == doctest::Approx(std::sqrt(0.02) / std::sqrt(2.0)));
    }

    TEST_CASE("single-cell grid equals mae of that cell") {
        const auto& suite = bundled_suite();
        const auto log = load_trials(fixtures::data_dir() / "trials" / "study_synthetic.csv");
        const auto summary = summarize(log.records, suite);
        SamplingConfig sampling;
        sampling.samples = 200;
        const auto grid = mae_grid(suite, summary, {NoiseKind::Uniform}, {0.1}, {5.0}, sampling);
        REQUIRE(grid.cells.size() == 1);
        const NoiseModel noise{NoiseKind::Uniform, 0.1, 5.0};
        std::map<std::string, double> est, emp;
        for (const auto& s : summary) {
            est[s.screen_id] = estimate_screen(*suite.find(s.screen_id), noise, sampling);
            emp[s.screen_id] = s.success_rate;
        }
        const auto expected = mae(est, emp);
        CHECK(grid.cells[0].result.mae == expected.mae);
        CHECK(grid.cells[0].result.standard_error == expected.standard_error);
        CHECK(grid.cells[0].result.mae >= 0.0);
        CHECK(grid.cells[0].result.mae <= 1.0);
        CHECK(grid.argmin == 0);
    }

    TEST_CASE("grid layout and serialization") {
        const auto& suite = bundled_suite();
        std::vector<TrialRecord> trials = counted("0", 10, 8);
        for (auto& r : counted("9", 10, 10)) trials.push_back(r);
        const auto summary = summarize(trials, suite);
        SamplingConfig sampling;
        sampling.samples = 50;
        const auto grid = mae_grid(suite, summary, {NoiseKind::Uniform, NoiseKind::GaussianResample}, {0.05, 0.1},
                                   {1.0, 5.0, 50.0}, sampling);
        CHECK(grid.cells.size() == 12);
        const auto& c = grid.cell(1, 0, 2);
        CHECK(c.kind == NoiseKind::GaussianResample);
        CHECK(c.reaction_time == 0.05);
        CHECK(c.player_skill == 50.0);
        for (const auto& cell : grid.cells) CHECK(grid.cells[grid.argmin].result.mae <= cell.result.mae);
        const auto csv = grid_to_csv(grid);
        CHECK(csv.rfind("noise,rt,ps,mae,standard_error\n", 0) == 0);
        CHECK(std::count(csv.begin(), csv.end(), '\n') == 13);
        const auto j = grid_to_json(grid);
        CHECK(j.at("cells").size() == 12);
        CHECK(j.at("argmin_per_noise").size() == 2);
    }

    TEST_CASE("synthesized trials follow the estimates") {
        const auto& suite = bundled_suite();
        SamplingConfig sampling;
        sampling.samples = 200;
        const NoiseModel noise{NoiseKind::GaussianResample, 0.1, 1.0};
        const auto a = synthesize_trials(suite, noise, sampling, 50, 3);
        const auto b = synthesize_trials(suite, noise, sampling, 50, 3);
        CHECK(a == b);
        CHECK(a.size() == 16 * 50);
        const auto s = summarize(a, suite);
        for (const auto& x : s) {
            CHECK(x.jumps == 50);
            const double p = estimate_screen(*suite.find(x.screen_id), noise, sampling);
            if (p == 0.0) CHECK(x.successes == 0);
            if (p == 1.0) CHECK(x.successes == 50);
        }
    }

    TEST_CASE("suite round-trip") {
        const auto& suite = bundled_suite();
        const auto back = suite_from_json(suite_to_json(suite));
        REQUIRE(back.screens.size() == suite.screens.size());
        for (std::size_t i = 0; i < suite.screens.size(); ++i) {
            CHECK(back.screens[i].id == suite.screens[i].id);
            CHECK(back.screens[i].level == suite.screens[i].level);
        }
        CHECK_THROWS_AS(parse_suite(R"({"schema": 1, "screens": [{"id": "x"}]})"), SchemaError);
    }
}
