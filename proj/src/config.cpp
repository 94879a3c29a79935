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
#include "pftc/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <set>

#include "pftc/basis.hpp"
#include "pftc/errors.hpp"

namespace pftc {
namespace {

using nlohmann::json;

const std::set<std::string> kCommonKeys = {"mode", "N",     "J1",     "J2",      "D",      "h",    "phi",   "T",
                                           "theta", "ac",   "t_max",  "stride",  "epsilon", "sample", "seed",
                                           "output", "workers"};

const std::map<Mode, std::set<std::string>> kModeKeys = {
    {Mode::evolve, {"index"}},
    {Mode::ensemble, {"realizations", "window"}},
    {Mode::sweep, {"realizations", "window", "axes", "checkpoint", "lifetime_only"}},
    {Mode::qfi_scaling, {"realizations", "window", "sizes"}},
};

std::set<std::string> all_known_keys() {
    std::set<std::string> keys = kCommonKeys;
    for (const auto& [mode, extra] : kModeKeys) {
        keys.insert(extra.begin(), extra.end());
    }
    return keys;
}

[[noreturn]] void fail(const std::string& key, const std::string& why) {
    throw ConfigError("config key '" + key + "': " + why);
}

double get_real(const json& j, const std::string& key, double fallback) {
    if (!j.contains(key)) {
        return fallback;
    }
    const auto& v = j.at(key);
    if (!v.is_number()) {
        fail(key, "expected a number");
    }
    const double x = v.get<double>();
    if (!std::isfinite(x)) {
        fail(key, "must be finite");
    }
    return x;
}

std::int64_t get_int(const json& j, const std::string& key, std::int64_t fallback) {
    if (!j.contains(key)) {
        return fallback;
    }
    const auto& v = j.at(key);
    if (v.is_number_integer()) {
        return v.get<std::int64_t>();
    }
    if (v.is_number_float()) {
        const double x = v.get<double>();
        if (std::isfinite(x) && x == std::round(x) && std::abs(x) < 9.0e15) {
            return static_cast<std::int64_t>(x);
        }
    }
    fail(key, "expected an integer");
}

std::uint64_t get_uint(const json& j, const std::string& key, std::uint64_t fallback) {
    if (!j.contains(key)) {
        return fallback;
    }
    const auto& v = j.at(key);
    if (v.is_number_unsigned()) {
        return v.get<std::uint64_t>();
    }
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
        return static_cast<std::uint64_t>(v.get<std::int64_t>());
    }
    fail(key, "expected a non-negative integer");
}

bool get_bool(const json& j, const std::string& key, bool fallback) {
    if (!j.contains(key)) {
        return fallback;
    }
    if (!j.at(key).is_boolean()) {
        fail(key, "expected true or false");
    }
    return j.at(key).get<bool>();
}

std::string get_string(const json& j, const std::string& key, const std::string& fallback) {
    if (!j.contains(key)) {
        return fallback;
    }
    if (!j.at(key).is_string()) {
        fail(key, "expected a string");
    }
    return j.at(key).get<std::string>();
}

int default_workers() {
    if (const char* env = std::getenv(kWorkersEnv)) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v < 4096) {
            return static_cast<int>(v);
        }
        throw ConfigError(std::string("environment variable ") + kWorkersEnv + " must be a positive integer");
    }
    return 0;
}

std::int64_t default_realizations(Mode m) {
    switch (m) {
    case Mode::evolve:
        return 1;
    case Mode::ensemble:
        return 2000;
    case Mode::sweep:
        return 250;
    case Mode::qfi_scaling:
        return 1000;
    }
    return 1;
}

ACFieldParams parse_ac(const json& v, double T) {
    ACFieldParams ac;
    ac.omega = std::numbers::pi / T;
    if (v.is_boolean()) {
        return ac;
    }
    if (!v.is_object()) {
        fail("ac", "expected true or an object with h_ac, omega, theta");
    }
    for (const auto& [k, _] : v.items()) {
        if (k != "h_ac" && k != "omega" && k != "theta") {
            fail("ac." + k, "unknown key (expected h_ac, omega, theta)");
        }
    }
    ac.h_ac = get_real(v, "h_ac", ac.h_ac);
    ac.omega = get_real(v, "omega", ac.omega);
    ac.theta = get_real(v, "theta", ac.theta);
    if (ac.omega < 0.0) {
        fail("ac.omega", "must be >= 0");
    }
    return ac;
}

} // namespace

std::string to_string(Mode m) {
    switch (m) {
    case Mode::evolve:
        return "evolve";
    case Mode::ensemble:
        return "ensemble";
    case Mode::sweep:
        return "sweep";
    case Mode::qfi_scaling:
        return "qfi-scaling";
    }
    return "evolve";
}

Mode parse_mode(const std::string& s) {
    for (Mode m : {Mode::evolve, Mode::ensemble, Mode::sweep, Mode::qfi_scaling}) {
        if (to_string(m) == s) {
            return m;
        }
    }
    throw ConfigError("unknown mode '" + s + "' (expected evolve, ensemble, sweep or qfi-scaling)");
}

RunConfig parse_config(const json& j) {
    if (!j.is_object()) {
        throw ConfigError("configuration must be a JSON object");
    }
    if (!j.contains("mode") || !j.at("mode").is_string()) {
        throw ConfigError("configuration needs a string 'mode'");
    }
    RunConfig c;
    c.mode = parse_mode(j.at("mode").get<std::string>());

    const auto known = all_known_keys();
    const auto& allowed_extra = kModeKeys.at(c.mode);
    for (const auto& [key, _] : j.items()) {
        if (!known.contains(key)) {
            fail(key, "unknown key");
        }
        if (!kCommonKeys.contains(key) && !allowed_extra.contains(key)) {
            fail(key, "not valid for mode '" + to_string(c.mode) + "'");
        }
    }

    // Chain: defaults J1 = -1, J2 = -J1/4, D = 0, phi = 3.05, T = 1.
    auto& p = c.chain;
    const std::int64_t n_sites = get_int(j, "N", 8);
    if (n_sites < 2 || n_sites > kMaxSites) {
        fail("N", "must be in [2, " + std::to_string(kMaxSites) + "], got " + std::to_string(n_sites));
    }
    p.N = static_cast<int>(n_sites);
    p.J1 = get_real(j, "J1", -1.0);
    p.J2 = get_real(j, "J2", -p.J1 / 4.0);
    p.D = get_real(j, "D", 0.0);
    p.h = get_real(j, "h", 1.0);
    p.phi = get_real(j, "phi", 3.05);
    p.T = get_real(j, "T", 1.0);
    if (p.T <= 0.0) {
        fail("T", "drive period must be > 0");
    }
    if (p.h < 0.0) {
        fail("h", "disorder half-width must be >= 0");
    }

    auto& o = c.options;
    o.theta = get_real(j, "theta", kDefaultTheta);
    o.t_max = get_int(j, "t_max", 100000);
    if (o.t_max < 1) {
        fail("t_max", "must be >= 1");
    }
    o.stride = get_int(j, "stride", 1);
    if (o.stride < 1) {
        fail("stride", "must be >= 1");
    }
    o.epsilon = get_real(j, "epsilon", 1e-2);
    if (o.epsilon <= 0.0) {
        fail("epsilon", "must be > 0");
    }
    const auto sample = get_string(j, "sample", "after-kick");
    if (sample == "after-kick") {
        o.sample = SamplePoint::after_kick;
    } else if (sample == "before-kick") {
        o.sample = SamplePoint::before_kick;
    } else {
        fail("sample", "expected 'after-kick' or 'before-kick'");
    }
    const bool ac_off = j.contains("ac") && j.at("ac").is_boolean() && !j.at("ac").get<bool>();
    if (c.mode == Mode::qfi_scaling && ac_off) {
        fail("ac", "qfi-scaling always needs the AC field");
    }
    if (j.contains("ac") && !ac_off) {
        o.ac = parse_ac(j.at("ac"), p.T);
    } else if (c.mode == Mode::qfi_scaling) {
        o.ac = parse_ac(json(true), p.T);
    }
    o.lifetime_only = get_bool(j, "lifetime_only", false);

    c.seed = get_uint(j, "seed", 1);
    c.index = get_uint(j, "index", 0);
    c.realizations = get_int(j, "realizations", default_realizations(c.mode));
    if (c.realizations < 1) {
        fail("realizations", "must be >= 1");
    }

    if (j.contains("window")) {
        const auto& w = j.at("window");
        if (!w.is_object() || !w.contains("t1") || !w.contains("t2") || w.size() != 2) {
            fail("window", "expected {\"t1\": int, \"t2\": int}");
        }
        SaturationWindow win{get_int(w, "t1", 0), get_int(w, "t2", 0)};
        if (win.t1 < 0 || win.t1 >= win.t2 || win.t2 > o.t_max) {
            fail("window", "needs 0 <= t1 < t2 <= t_max");
        }
        c.window = win;
    }

    if (c.mode == Mode::sweep) {
        if (!j.contains("axes") || !j.at("axes").is_array()) {
            fail("axes", "sweep mode needs a list of {name, values}");
        }
        for (const auto& a : j.at("axes")) {
            if (!a.is_object() || !a.contains("name") || !a.contains("values") || a.size() != 2 ||
                !a.at("name").is_string() || !a.at("values").is_array()) {
                fail("axes", "each axis is {\"name\": str, \"values\": [numbers]}");
            }
            SweepAxis axis;
            axis.name = a.at("name").get<std::string>();
            for (const auto& v : a.at("values")) {
                if (!v.is_number()) {
                    fail("axes", "axis '" + axis.name + "' has a non-numeric value");
                }
                axis.values.push_back(v.get<double>());
            }
            c.axes.push_back(std::move(axis));
        }
        for (const auto& a : c.axes) {
            if (a.name == "N") {
                for (double v : a.values) {
                    if (v < 2) {
                        fail("axes", "axis N values must be >= 2");
                    }
                }
            }
        }
        if (j.contains("checkpoint")) {
            c.checkpoint_dir = get_string(j, "checkpoint", "");
        }
        try {
            c.sweep_grid().validate();
        } catch (const DomainError& e) {
            fail("axes", e.what());
        }
    }

    if (c.mode == Mode::qfi_scaling) {
        if (j.contains("sizes")) {
            if (!j.at("sizes").is_array() || j.at("sizes").empty()) {
                fail("sizes", "expected a non-empty list of chain lengths");
            }
            for (const auto& v : j.at("sizes")) {
                if (!v.is_number_integer() || v.get<int>() < 2 || v.get<int>() > kMaxSites) {
                    fail("sizes", "chain lengths must be integers in [2, " + std::to_string(kMaxSites) + "]");
                }
                c.sizes.push_back(v.get<int>());
            }
        } else {
            c.sizes = {4, 6, 8};
        }
    }

    c.output_dir = get_string(j, "output", "results");
    c.workers = j.contains("workers") ? static_cast<int>(get_int(j, "workers", 0)) : default_workers();
    if (c.workers < 0) {
        fail("workers", "must be >= 0 (0 uses the OpenMP default)");
    }

    try {
        c.chain.validate();
        c.options.validate();
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    return c;
}

RunConfig load_config(Mode mode, const std::optional<std::filesystem::path>& file, const json& overrides) {
    json merged = json::object();
    if (file) {
        std::ifstream in(*file);
        if (!in) {
            throw ConfigError("cannot open config file " + file->string());
        }
        try {
            merged = json::parse(in);
        } catch (const json::exception& e) {
            throw ConfigError("config file " + file->string() + " is not valid JSON: " + e.what());
        }
        if (!merged.is_object()) {
            throw ConfigError("config file " + file->string() + " must hold a JSON object");
        }
        if (merged.contains("mode") && merged.at("mode") != to_string(mode)) {
            throw ConfigError("config file is for mode '" + merged.at("mode").dump() + "', not '" +
                              to_string(mode) + "'");
        }
    }
    for (const auto& [k, v] : overrides.items()) {
        if (k == "ac" && v.is_object() && merged.contains("ac") && merged.at("ac").is_object()) {
            merged[k].update(v);
        } else {
            merged[k] = v;
        }
    }
    merged["mode"] = to_string(mode);
    return parse_config(merged);
}

json RunConfig::canonical() const {
    json j{{"mode", to_string(mode)}, {"chain", chain}, {"options", options}, {"seed", seed}};
    switch (mode) {
    case Mode::evolve:
        j["index"] = index;
        break;
    case Mode::ensemble:
        j["realizations"] = realizations;
        break;
    case Mode::sweep:
        j["grid"] = sweep_grid().to_json();
        break;
    case Mode::qfi_scaling:
        j["realizations"] = realizations;
        j["sizes"] = sizes;
        break;
    }
    if (mode != Mode::evolve) {
        const auto w = resolved_window();
        j["window"] = {{"t1", w.t1}, {"t2", w.t2}};
    }
    return j;
}

SweepGrid RunConfig::sweep_grid() const {
    SweepGrid g;
    g.axes = axes;
    g.base = chain;
    g.options = options;
    g.realizations = realizations;
    g.seed = seed;
    g.window = window;
    return g;
}

SaturationWindow RunConfig::resolved_window() const {
    return window ? *window : SaturationWindow::tail(options.t_max);
}

} // namespace pftc
