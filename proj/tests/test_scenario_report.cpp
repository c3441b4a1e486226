#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "harnack/commands.hpp"
#include "harnack/errors.hpp"
#include "harnack/report.hpp"
#include "harnack/scenario.hpp"

using namespace harnack;

namespace {

const std::string kDataDir = HARNACK_TEST_DATA_DIR;

// Rebuild a JValue from a parsed nlohmann document (field order preserved
// when parsing into an ordered_json).
JValue from_nlohmann(const nlohmann::ordered_json& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::null: return JValue::null();
        case nlohmann::json::value_t::boolean: return JValue::boolean(j.get<bool>());
        case nlohmann::json::value_t::string:
            return JValue::string_value(j.get<std::string>());
        case nlohmann::json::value_t::array: {
            JValue a = JValue::array();
            for (const auto& e : j) a.push(from_nlohmann(e));
            return a;
        }
        case nlohmann::json::value_t::object: {
            JValue o = JValue::object();
            for (auto it = j.begin(); it != j.end(); ++it)
                o.set(it.key(), from_nlohmann(it.value()));
            return o;
        }
        default: return JValue::number(j.get<double>());
    }
}

}  // namespace

TEST_CASE("the documented example scenario parses verbatim") {
    const std::string text =
        R"({"schema":1, "dimension":2, "A":{"x":[0,0],"t":1}, "B":{"x":[1,0],"t":2}, )"
        R"("measure":{"atoms":[{"y":[4.236068,0],"mass":1}]}, )"
        R"("quadrature":{"rel_tol":1e-10,"max_depth":40}, "wz_constant":1.0})";
    const Scenario sc = parse_scenario(text);
    CHECK(sc.schema == 1);
    CHECK(sc.dimension == 2);
    CHECK(sc.a.x == Vec{0.0, 0.0});
    CHECK(sc.a.t == 1.0);
    CHECK(sc.b.x == Vec{1.0, 0.0});
    CHECK(sc.b.t == 2.0);
    REQUIRE(sc.measure.has_value());
    REQUIRE(sc.measure->atoms.size() == 1);
    CHECK(sc.measure->atoms[0].location[0] == doctest::Approx(4.236068));
    CHECK(sc.measure->atoms[0].mass == 1.0);
    CHECK(sc.quadrature.rel_tol == 1e-10);
    CHECK(sc.quadrature.max_depth == 40);
    REQUIRE(sc.wz_constant.has_value());
    CHECK(*sc.wz_constant == 1.0);
}

TEST_CASE("defaults apply when optional blocks are absent") {
    const Scenario sc = parse_scenario(
        R"({"schema":1,"dimension":1,"A":{"x":[0],"t":1},"B":{"x":[1],"t":2}})");
    CHECK(sc.quadrature.rel_tol == 1e-10);
    CHECK(sc.quadrature.max_depth == 40);
    CHECK_FALSE(sc.measure.has_value());
    CHECK_FALSE(sc.wz_constant.has_value());
}

TEST_CASE("every malformed corpus file is rejected with a diagnostic") {
    namespace fs = std::filesystem;
    int count = 0;
    for (const auto& entry : fs::directory_iterator(kDataDir + "/malformed")) {
        ++count;
        CHECK_THROWS_AS(load_scenario(entry.path().string()), InvalidScenario);
        try {
            load_scenario(entry.path().string());
        } catch (const InvalidScenario& e) {
            CHECK(std::string(e.what()).size() > 0);
        }
    }
    CHECK(count >= 10);
}

TEST_CASE("time-zero scenarios carry the documented diagnostic") {
    try {
        load_scenario(kDataDir + "/scenarios/time_zero.json");
        FAIL("expected InvalidScenario");
    } catch (const InvalidScenario& e) {
        CHECK(std::string(e.what()).find("time must be positive") != std::string::npos);
    }
}

TEST_CASE("missing scenario file is an input error") {
    CHECK_THROWS_AS(load_scenario("/nonexistent/path.json"), InvalidScenario);
}

TEST_CASE("report JSON round-trips byte-for-byte") {
    const Scenario sc = load_scenario(kDataDir + "/scenarios/we1.json");
    ReportOptions opts;
    opts.format = "json";
    const CommandOutput out = cmd_bounds(sc, opts);
    REQUIRE(out.exit_code == 0);

    const auto parsed = nlohmann::ordered_json::parse(out.output);
    CHECK(parsed.at("schema") == 1);
    CHECK(parsed.at("status") == "ok");
    CHECK(parsed.at("bounds").at("kappa0") == 20.0);

    // reparse -> re-render must reproduce the exact bytes (numbers are
    // written with 17 significant digits)
    const std::string re_rendered = render_json(from_nlohmann(parsed));
    CHECK(re_rendered == out.output);
}

TEST_CASE("identical scenarios render identical reports") {
    const Scenario sc = load_scenario(kDataDir + "/scenarios/we2_atom.json");
    for (const char* fmt : {"json", "text", "csv"}) {
        ReportOptions opts;
        opts.format = fmt;
        opts.verify = true;
        const CommandOutput a = cmd_bounds(sc, opts);
        const CommandOutput b = cmd_bounds(sc, opts);
        CHECK(a.output == b.output);
        CHECK(a.exit_code == b.exit_code);
    }
}

TEST_CASE("csv flat rendering carries dotted keys") {
    const Scenario sc = load_scenario(kDataDir + "/scenarios/we1.json");
    ReportOptions opts;
    opts.format = "csv";
    const CommandOutput out = cmd_bounds(sc, opts);
    CHECK(out.output.find("key,value\n") == 0);
    CHECK(out.output.find("bounds.kappa0,20\n") != std::string::npos);
    CHECK(out.output.find("geometry.foot_center.0,2\n") != std::string::npos);
}

TEST_CASE("vertical scenario reports an unattained upper bound") {
    const Scenario sc = load_scenario(kDataDir + "/scenarios/vertical.json");
    ReportOptions opts;
    opts.format = "json";
    const CommandOutput out = cmd_bounds(sc, opts);
    const auto parsed = nlohmann::json::parse(out.output);
    CHECK(parsed.at("geometry").at("kind") == "vertical");
    CHECK(parsed.at("bounds").at("upper_attained") == false);
    CHECK(parsed.at("bounds").at("lower_attained") == true);
    CHECK(out.exit_code == 0);
}

TEST_CASE("near-vertical identity degrades gracefully") {
    const Scenario sc = load_scenario(kDataDir + "/scenarios/near_vertical.json");
    ReportOptions opts;
    opts.format = "json";
    const CommandOutput out = cmd_identity(sc, opts);
    CHECK(out.exit_code == 0);
    const auto parsed = nlohmann::json::parse(out.output);
    CHECK(parsed.at("warnings").size() == 1);
    CHECK(parsed.at("identity").at("lhs") == 2.0);
}

TEST_CASE("widder command needs a measure") {
    const Scenario sc = load_scenario(kDataDir + "/scenarios/we1.json");
    CHECK_THROWS_AS(cmd_widder(sc, {}), InvalidScenario);
}

TEST_CASE("widder command contains the documented atom scenario") {
    const Scenario sc = load_scenario(kDataDir + "/scenarios/we2_atom.json");
    ReportOptions opts;
    opts.format = "json";
    const CommandOutput out = cmd_widder(sc, opts);
    CHECK(out.exit_code == 0);
    const auto parsed = nlohmann::json::parse(out.output);
    CHECK(parsed.at("containment").at("contained") == true);
    CHECK(parsed.at("containment").at("ratio").get<double>() ==
          doctest::Approx(2.995352).epsilon(1e-5));
}

TEST_CASE("identity exit code flips on an unreachable tolerance") {
    // the generic fixture has a nonzero (few-ulp) identity gap
    const Scenario sc = load_scenario(kDataDir + "/scenarios/generic.json");
    ReportOptions opts;
    opts.format = "json";
    opts.tol = 1e-18;
    const CommandOutput out = cmd_identity(sc, opts);
    CHECK(out.exit_code == 3);
    const auto parsed = nlohmann::json::parse(out.output);
    CHECK(parsed.at("status") == "verification_failure");
}

TEST_CASE("sweep emits the pinned CSV header and monotone distances") {
    const Scenario sc = load_scenario(kDataDir + "/scenarios/we1.json");
    SweepOptions opts;
    opts.vary = "dx";
    opts.from = 0.0;
    opts.to = 5.0;
    opts.steps = 6;
    const CommandOutput out = cmd_sweep(sc, opts);
    REQUIRE(out.exit_code == 0);
    REQUIRE(out.output.rfind(
                "param,kappa0,c_star,c_upper,lower,upper,cross_ratio,d_hyp,wz_lower\n",
                0) == 0);

    // parse the d_hyp column and check monotonicity; the dx = 0 row must
    // match the vertical limits
    std::vector<std::vector<std::string>> rows;
    std::istringstream ss(out.output);
    std::string line;
    std::getline(ss, line);
    while (std::getline(ss, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        cells.resize(9);
        rows.push_back(cells);
    }
    REQUIRE(rows.size() == 6);
    CHECK(std::stod(rows[0][4]) == doctest::Approx(0.5).epsilon(1e-12));   // lower
    CHECK(std::stod(rows[0][5]) == doctest::Approx(2.0).epsilon(1e-12));   // upper
    CHECK(std::stod(rows[0][7]) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    double prev = -1.0;
    for (const auto& r : rows) {
        const double d = std::stod(r[7]);
        CHECK(d > prev);
        prev = d;
    }
    // wz column present for t2 > t1 rows
    CHECK_FALSE(rows[1][8].empty());
}

TEST_CASE("dimension sweep keeps the cross-ratio constant") {
    const Scenario sc = load_scenario(kDataDir + "/scenarios/we1.json");
    SweepOptions opts;
    opts.vary = "dim";
    opts.from = 1.0;
    opts.to = 4.0;
    const CommandOutput out = cmd_sweep(sc, opts);
    std::istringstream ss(out.output);
    std::string line;
    std::getline(ss, line);
    std::vector<double> crs, kappas;
    while (std::getline(ss, line)) {
        std::istringstream ls(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        crs.push_back(std::stod(cells[6]));
        kappas.push_back(std::stod(cells[1]));
    }
    REQUIRE(crs.size() == 4);
    for (double cr : crs) CHECK(cr == doctest::Approx(crs[0]).epsilon(1e-12));
    for (double k : kappas) CHECK(k == doctest::Approx(20.0).epsilon(1e-12));
}

TEST_CASE("sweep rejects bad ranges") {
    const Scenario sc = load_scenario(kDataDir + "/scenarios/we1.json");
    SweepOptions opts;
    opts.vary = "nope";
    CHECK_THROWS_AS(cmd_sweep(sc, opts), InvalidScenario);
    opts.vary = "t2";
    opts.from = 0.0;
    CHECK_THROWS_AS(cmd_sweep(sc, opts), InvalidScenario);
    opts.vary = "dx";
    opts.from = -1.0;
    CHECK_THROWS_AS(cmd_sweep(sc, opts), InvalidScenario);
}

TEST_CASE("liyau summary identifies the satisfying convention") {
    LiYauOptions opts;
    opts.samples = 5;
    const CommandOutput out = cmd_liyau(opts);
    REQUIRE(out.exit_code == 0);
    CHECK(out.output.rfind("convention,x,lhs,lhs_reference,threshold,gap\n", 0) == 0);
    CHECK(out.output.find(
              "# summary: convention=standard satisfies_threshold=false") !=
          std::string::npos);
    CHECK(out.output.find("# summary: convention=paper satisfies_threshold=true") !=
          std::string::npos);
}

TEST_CASE("liyau rejects bad flags") {
    LiYauOptions opts;
    opts.t = 0.0;
    CHECK_THROWS_AS(cmd_liyau(opts), InvalidScenario);
    opts.t = 1.0;
    opts.convention = "weird";
    CHECK_THROWS_AS(cmd_liyau(opts), InvalidScenario);
    opts.convention = "both";
    opts.samples = 0;
    CHECK_THROWS_AS(cmd_liyau(opts), InvalidScenario);
}

TEST_CASE("number formatting round-trips doubles") {
    for (double v : {0.1, 1.0 / 3.0, 2.6180339887498949, 1e-300, 12345.6789}) {
        const std::string s = format_number(v);
        CHECK(std::stod(s) == v);
    }
    CHECK_THROWS_AS(format_number(std::numeric_limits<double>::quiet_NaN()),
                    InvalidConfig);
}
