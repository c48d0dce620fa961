// Copyright 2026 The imsteer Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "commands.hpp"
#include "imsteer/error.hpp"
#include "imsteer/steering.hpp"
#include "report.hpp"
#include "state_io.hpp"

using namespace imsteer;
using namespace imsteer::cli;
using nlohmann::json;

namespace {

json run_json(int (*cmd)(const RunConfig &, std::ostream &), RunConfig config) {
    config.format = Format::Json;
    std::ostringstream out;
    REQUIRE(cmd(config, out) == kExitOk);
    return json::parse(out.str());
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("number formatting") {
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(std::numbers::sqrt2) == "1.41421356");
    CHECK(format_number(1e-20) == "1e-20");
    CHECK(round9(std::numbers::pi) == 3.14159265);
    CHECK(parse_format("csv") == Format::Csv);
    CHECK_THROWS_AS(parse_format("xml"), Error);
}

TEST_CASE("csv tables") {
    CsvTable table({"a", "b"});
    table.add_row({"1", "2"});
    std::ostringstream out;
    table.write(out);
    CHECK(out.str() == "a,b\n1,2\n");
}

TEST_CASE("region completion") {
    const RegionPoint centre = region_point(0.0, 0.0);
    CHECK(centre.valid);
    CHECK(centre.params.beta_zz == 0.0);
    const RegionPoint edge = region_point(1.0, 0.99);
    CHECK(edge.valid);
    CHECK(edge.params.beta_zz == doctest::Approx(-0.99));
    CHECK(region_point(-1.0, 1.0).valid);
    const RegionPoint corner = region_point(1.0, 0.5);
    CHECK(corner.valid);
    CHECK(corner.params.beta_zz == doctest::Approx(-0.5));
    for (int a = -20; a <= 20; ++a) {
        for (int b = -20; b <= 20; ++b) {
            const double xx = a / 20.0;
            const double yy = b / 20.0;
            const RegionPoint p = region_point(xx, yy);
            // |xx - yy| + |xx + yy| = 2 max(|xx|, |yy|) <= 2 on the square.
            CHECK(p.valid);
            CHECK_NOTHROW(x_state(p.params));
        }
    }
}

TEST_CASE("state resolution") {
    FamilyParams fp;
    fp.v = 0.6;
    CHECK(max_abs_diff(resolve_state("werner", fp).matrix(), werner(0.6).matrix()) < 1e-15);
    fp.c = 0.3;
    CHECK(max_abs_diff(resolve_state("mems", fp).matrix(), mems(0.3).matrix()) < 1e-15);
    CHECK(max_abs_diff(resolve_state("singlet", fp).matrix(), singlet().matrix()) < 1e-15);
    CHECK(resolve_state("maximally_mixed", fp).matrix()(0, 0).real() == 0.25);
    CHECK_THROWS_AS(resolve_state("/nonexistent/state.json", fp), Error);

    const DensityMatrix xs = state_from_json(
        json::parse(R"({"kind": "xstate", "beta": {"xx": 0.9, "yy": -0.9, "zz": 0.8}})"));
    CHECK(isi_operational(xs) == doctest::Approx(1.8));
    const DensityMatrix bl = state_from_json(json::parse(
        R"({"kind": "bloch", "m": [0,0,0], "n": [0,0,0], "T": [[-1,0,0],[0,-1,0],[0,0,-1]]})"));
    CHECK(max_abs_diff(bl.matrix(), singlet().matrix()) < 1e-12);
    const DensityMatrix mx = state_from_json(json::parse(
        R"({"kind": "matrix", "re": [[0.5,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0.5]]})"));
    CHECK(mx.matrix()(3, 3).real() == 0.5);
    CHECK_THROWS_AS(state_from_json(json::parse(R"({"kind": "ghz"})")), Error);
    CHECK_THROWS_AS(state_from_json(json::parse(R"({"kind": "werner", "v": 1.5})")), Error);
    CHECK_THROWS_AS(state_from_json(json::parse(R"({"kind": "matrix", "re": [[1]]})")), Error);
    CHECK_THROWS_AS(state_from_json(json::parse(R"([1, 2])")), Error);
    CHECK_THROWS_AS(state_from_json(json::parse(
                        R"({"kind": "xstate", "beta": {"xx": 1, "yy": 1, "zz": 1}})")),
                    Error);
}

TEST_CASE("config validation") {
    RunConfig bad;
    bad.v = 1.2;
    CHECK_THROWS_AS(validate_config(bad), Error);
    bad = RunConfig{};
    bad.resolution = 1;
    CHECK_THROWS_AS(validate_config(bad), Error);
    bad = RunConfig{};
    bad.samples = 0;
    CHECK_THROWS_AS(validate_config(bad), Error);
    bad = RunConfig{};
    bad.tolerance = 0.0;
    CHECK_THROWS_AS(validate_config(bad), Error);
    CHECK_NOTHROW(validate_config(RunConfig{}));
}

TEST_CASE("eval report") {
    RunConfig config;
    config.v = 0.8;
    const json doc = run_json(cmd_eval, config);
    CHECK(doc["i2"].get<double>() == doctest::Approx(1.6));
    CHECK(doc["i2_closed"].get<double>() == doctest::Approx(1.6));
    CHECK(doc["violated"].get<bool>());
    CHECK(doc["cffw"]["value"].get<double>() == doctest::Approx(1.6 * std::numbers::sqrt2).epsilon(1e-8));
    CHECK(doc["naqc"]["l1"]["value"].get<double>() == doctest::Approx(2.4));
    CHECK(doc["naqi"]["l1"]["value"].get<double>() == doctest::Approx(2.4));
    CHECK(doc["selected_witness"]["k"].get<int>() == 4);
    CHECK(doc["selected_witness"]["expectation"].get<double>() ==
          doctest::Approx(std::numbers::sqrt2 - 1.6).epsilon(1e-8));

    config.format = Format::Csv;
    std::ostringstream csv;
    REQUIRE(cmd_eval(config, csv) == kExitOk);
    CHECK(csv.str().rfind("key,value\n", 0) == 0);
    CHECK(csv.str().find("i2,1.6\n") != std::string::npos);
}

TEST_CASE("witness report") {
    RunConfig config;
    config.state = "mems";
    config.c = 0.9;
    const json doc = run_json(cmd_witness, config);
    CHECK(doc["k"] == 4);
    CHECK(doc["i"] == 0);
    CHECK(doc["j"] == 1);
    CHECK(doc["detects_steering"].get<bool>());
    CHECK(doc["decomposition"].size() == 8);
    CHECK(doc["matrix"]["re"].size() == 4);
    CHECK(doc["reconstruction_residual"].get<double>() < 1e-12);
}

TEST_CASE("region and thresholds reports") {
    RunConfig config;
    config.resolution = 5;
    const json region = run_json(cmd_region, config);
    REQUIRE(region["points"].size() == 25);
    for (const json &p : region["points"]) {
        if (p["valid"].get<bool>()) {
            CHECK(p["i2"].get<double>() == doctest::Approx(p["i2_closed"].get<double>()));
        }
    }
    config.format = Format::Csv;
    std::ostringstream csv;
    REQUIRE(cmd_region(config, csv) == kExitOk);
    int lines = 0;
    for (char ch : csv.str()) {
        lines += ch == '\n';
    }
    CHECK(lines == 26);
    CHECK(csv.str().find('\r') == std::string::npos);

    RunConfig th;
    th.criterion = "isi";
    const json t = run_json(cmd_thresholds, th);
    REQUIRE(t["thresholds"].size() == 2);
    CHECK(t["thresholds"][0]["threshold"].get<double>() ==
          doctest::Approx(1.0 / std::numbers::sqrt2).epsilon(1e-6));
    th.criterion = "bogus";
    std::ostringstream sink;
    CHECK_THROWS_AS(cmd_thresholds(th, sink), Error);
}

TEST_CASE("monogamy and audit reports") {
    RunConfig config;
    config.samples = 2000;
    config.include_maximizer = true;
    const json mono = run_json(cmd_monogamy, config);
    CHECK(mono["max_sum"].get<double>() == doctest::Approx(2.0 * std::numbers::sqrt2));
    CHECK(mono["within_bound"].get<bool>());

    RunConfig audit;
    audit.n = 200;
    const json a = run_json(cmd_audit, audit);
    CHECK(a["passed"].get<bool>());
    CHECK(a["suites"].size() == 5);
    audit.suite = "nope";
    std::ostringstream sink;
    CHECK_THROWS_AS(cmd_audit(audit, sink), Error);
}

} // TEST_SUITE
