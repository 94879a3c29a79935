// Copyright 2026 The pftc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <doctest.h>

#include <bit>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pftc/config.hpp"
#include "pftc/errors.hpp"
#include "pftc/output.hpp"
#include "tempdir.hpp"

using namespace pftc;
using nlohmann::json;
using pftc::testing::slurp;
using pftc::testing::TempDir;

namespace {

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) {
        out.push_back(l);
    }
    return out;
}

std::vector<std::string> data_rows(const std::string& text) {
    std::vector<std::string> out;
    for (auto& l : lines(text)) {
        if (!l.empty() && l[0] != '#') {
            out.push_back(l);
        }
    }
    return out;
}

RunConfig config(Mode m, json overrides) { return load_config(m, std::nullopt, overrides); }

} // namespace

TEST_SUITE("cli_io") {
TEST_CASE("empty evolve config resolves to the default parameters") {
    const auto c = config(Mode::evolve, json::object());
    CHECK(c.chain.J1 == -1.0);
    CHECK(c.chain.J2 == 0.25);
    CHECK(c.chain.D == 0.0);
    CHECK(c.chain.phi == 3.05);
    CHECK(c.chain.T == 1.0);
    CHECK(c.options.theta == std::numbers::pi / 16);
    CHECK(c.options.epsilon == 0.01);
    CHECK_FALSE(c.options.ac.has_value());
    CHECK(c.options.sample == SamplePoint::after_kick);
}

TEST_CASE("J2 default follows J1") {
    CHECK(config(Mode::evolve, {{"J1", -2.0}}).chain.J2 == 0.5);
    CHECK(config(Mode::evolve, {{"J1", -2.0}, {"J2", 0.1}}).chain.J2 == 0.1);
}

TEST_CASE("h override gives the pFTC benchmark configuration") {
    const auto c = config(Mode::ensemble, {{"h", 7}});
    CHECK(c.chain.h == 7.0);
    CHECK(c.chain.phi == 3.05);
    CHECK(c.realizations == 2000);
}

TEST_CASE("invalid configurations are rejected with the key named") {
    auto message = [](Mode m, json j) -> std::string {
        try {
            config(m, j);
        } catch (const ConfigError& e) {
            return e.what();
        }
        return "";
    };
    CHECK(message(Mode::evolve, {{"N", -3}}).find("'N'") != std::string::npos);
    CHECK(message(Mode::evolve, {{"N", 15}}).find("'N'") != std::string::npos);
    CHECK(message(Mode::evolve, {{"bogus", 1}}).find("'bogus'") != std::string::npos);
    CHECK(message(Mode::evolve, {{"realizations", 5}}).find("not valid for mode") != std::string::npos);
    CHECK(message(Mode::ensemble, {{"axes", json::array()}}).find("not valid for mode") != std::string::npos);
    CHECK(message(Mode::sweep, json::object()).find("'axes'") != std::string::npos);
    CHECK(message(Mode::sweep, {{"axes", {{{"name", "q"}, {"values", {1}}}}}}).find("'axes'") != std::string::npos);
    CHECK(message(Mode::ensemble, {{"T", 0}}).find("'T'") != std::string::npos);
    CHECK(message(Mode::ensemble, {{"h", -1}}).find("'h'") != std::string::npos);
    CHECK(message(Mode::ensemble, {{"h", "big"}}).find("'h'") != std::string::npos);
    CHECK(message(Mode::ensemble, {{"window", {{"t1", 90}, {"t2", 10}}}}).find("'window'") != std::string::npos);
    CHECK(message(Mode::ensemble, {{"ac", {{"omega", -1}}}}).find("ac.omega") != std::string::npos);
    CHECK(message(Mode::ensemble, {{"ac", {{"freq", 1}}}}).find("ac.freq") != std::string::npos);
    CHECK(message(Mode::ensemble, {{"sample", "middle"}}).find("'sample'") != std::string::npos);
    CHECK(message(Mode::qfi_scaling, {{"sizes", {4, 20}}}).find("'sizes'") != std::string::npos);
    CHECK(message(Mode::qfi_scaling, {{"ac", false}}).find("'ac'") != std::string::npos);
    CHECK(message(Mode::ensemble, {{"realizations", 0}}).find("'realizations'") != std::string::npos);
}

TEST_CASE("config files and overrides") {
    TempDir dir;
    const auto file = dir / "run.json";
    std::ofstream(file) << R"({"mode": "ensemble", "N": 6, "ac": {"h_ac": 0.5}, "realizations": 10})";
    const auto c = load_config(Mode::ensemble, file, {{"N", 4}, {"ac", {{"theta", 0.3}}}});
    CHECK(c.chain.N == 4);
    CHECK(c.realizations == 10);
    REQUIRE(c.options.ac);
    CHECK(c.options.ac->h_ac == 0.5);
    CHECK(c.options.ac->theta == 0.3);
    CHECK(c.options.ac->omega == std::numbers::pi);
    CHECK_THROWS_AS(load_config(Mode::sweep, file, json::object()), ConfigError);
    std::ofstream(dir / "broken.json") << "{ not json";
    CHECK_THROWS_AS(load_config(Mode::ensemble, dir / "broken.json", json::object()), ConfigError);
    CHECK_THROWS_AS(load_config(Mode::ensemble, dir / "absent.json", json::object()), ConfigError);
}

TEST_CASE("AC defaults track the drive period") {
    const auto c = config(Mode::qfi_scaling, {{"T", 2.0}});
    REQUIRE(c.options.ac);
    CHECK(c.options.ac->omega == std::numbers::pi / 2.0);
    CHECK(c.options.ac->h_ac == 0.0);
    CHECK(c.sizes == std::vector<int>{4, 6, 8});
}

TEST_CASE("worker count from the environment") {
    ::setenv(kWorkersEnv, "3", 1);
    CHECK(config(Mode::evolve, json::object()).workers == 3);
    CHECK(config(Mode::evolve, {{"workers", 2}}).workers == 2);
    ::setenv(kWorkersEnv, "lots", 1);
    CHECK_THROWS_AS(config(Mode::evolve, json::object()), ConfigError);
    ::unsetenv(kWorkersEnv);
    CHECK(config(Mode::evolve, json::object()).workers == 0);
}

TEST_CASE("canonical config ignores output location and workers") {
    auto a = config(Mode::ensemble, {{"output", "x"}, {"workers", 1}});
    auto b = config(Mode::ensemble, {{"output", "y"}, {"workers", 4}});
    CHECK(a.canonical() == b.canonical());
    CHECK(a.canonical() != config(Mode::ensemble, {{"seed", 2}}).canonical());
}

TEST_CASE("17-digit serialization round trips") {
    for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.49039264020161522, 0.0, -0.0}) {
        CHECK(std::bit_cast<std::uint64_t>(std::stod(format_double(x))) == std::bit_cast<std::uint64_t>(x));
    }
    CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
    CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("series file matches the golden preamble") {
    TempDir dir;
    auto c = config(Mode::evolve, {{"N", 4}, {"h", 7}, {"t_max", 10}, {"seed", 5}, {"output", dir.path().string()}});
    const auto out = execute(c);
    REQUIRE(out.files.size() == 1);
    CHECK(out.files[0].filename() == "evolve_series.csv");
    const auto text = slurp(out.files[0]);
    const auto golden = lines(slurp(std::filesystem::path(PFTC_GOLDEN_DIR) / "evolve_preamble.txt"));
    const auto got = lines(text);
    REQUIRE(golden.size() == 6);
    REQUIRE(got.size() >= golden.size());
    for (std::size_t i = 0; i < golden.size(); ++i) {
        CHECK(got[i] == golden[i]);
    }
    CHECK(data_rows(text).size() == 12); // header plus t = 0..10
}

TEST_CASE("map file matches the golden header and has one row per cell") {
    TempDir dir;
    json axes = json::array({{{"name", "h"}, {"values", {1, 2, 3, 4, 5, 6, 7, 8}}},
                             {{"name", "phi"}, {"values", {2.7, 2.8, 2.9, 3.0, 3.05, 3.1, 3.12, 3.14}}}});
    auto c = config(Mode::sweep, {{"N", 2}, {"t_max", 4}, {"realizations", 2}, {"axes", axes},
                                  {"output", dir.path().string()}});
    const auto out = execute(c);
    REQUIRE(out.files.size() == 1);
    CHECK(out.files[0].filename() == "sweep_map.csv");
    const auto text = slurp(out.files[0]);
    const auto golden = lines(slurp(std::filesystem::path(PFTC_GOLDEN_DIR) / "map_header.txt"));
    const auto got = lines(text);
    REQUIRE(golden.size() == 4);
    REQUIRE(got.size() > 6);
    CHECK(got[1] == golden[0]);
    CHECK(got[3] == golden[1]);
    CHECK(got[4] == golden[2]);
    const auto rows = data_rows(text);
    CHECK(rows.size() == 65);
    CHECK(rows[0] == golden[3]);
    CHECK(rows[0] == std::string(kMapHeader));
    CHECK(rows[1].rfind("1,2.7000000000000002,", 0) == 0);
    CHECK(rows[64].rfind("8,3.1400000000000001,", 0) == 0);
}

TEST_CASE("rerunning a config reproduces the files byte for byte") {
    TempDir a, b;
    for (Mode m : {Mode::ensemble, Mode::qfi_scaling}) {
        json o{{"N", 4}, {"h", 7}, {"t_max", 30}, {"realizations", 20}};
        if (m == Mode::qfi_scaling) {
            o["sizes"] = {2, 4};
        }
        o["output"] = a.path().string();
        o["workers"] = 1;
        const auto fa = execute(config(m, o)).files;
        o["output"] = b.path().string();
        o["workers"] = 3;
        const auto fb = execute(config(m, o)).files;
        REQUIRE(fa.size() == fb.size());
        for (std::size_t i = 0; i < fa.size(); ++i) {
            CHECK(fa[i].filename() == fb[i].filename());
            CHECK(slurp(fa[i]) == slurp(fb[i]));
        }
    }
    CHECK(std::filesystem::exists(a / "qfi_scaling_N2.csv"));
    CHECK(std::filesystem::exists(a / "qfi_scaling_map.csv"));
}

TEST_CASE("series without AC write nan QFI columns") {
    TempDir dir;
    const auto out = execute(config(Mode::ensemble, {{"N", 2}, {"t_max", 3}, {"realizations", 3},
                                                    {"output", dir.path().string()}}));
    const auto rows = data_rows(slurp(out.files[0]));
    CHECK(rows[1].substr(rows[1].size() - 12) == ",nan,nan,nan");
}

TEST_CASE("unwritable output directory") {
    TempDir dir;
    std::ofstream(dir / "file") << "x";
    auto c = config(Mode::evolve, {{"N", 2}, {"t_max", 2}, {"output", (dir / "file" / "sub").string()}});
    CHECK_THROWS_AS(execute(c), IoError);
}
}
