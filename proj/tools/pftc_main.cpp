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

// pftc: disorder-averaged Floquet time-crystal simulations.
//
//   pftc evolve      [flags]   one disorder realization  -> evolve_series.csv
//   pftc ensemble    [flags]   disorder average          -> ensemble_series.csv
//   pftc sweep       [flags]   one- or two-axis grid     -> sweep_map.csv
//   pftc qfi-scaling [flags]   QFI vs chain length       -> qfi_scaling_N<k>.csv, qfi_scaling_map.csv
//
// Exit status: 0 success, 2 configuration error, 3 runtime error.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pftc/config.hpp"
#include "pftc/errors.hpp"
#include "pftc/output.hpp"

namespace {

using nlohmann::json;

constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

std::vector<double> parse_values(const std::string& name, const std::string& text) {
    // Either "v1,v2,..." or "start:stop:count" (inclusive, evenly spaced).
    std::vector<double> out;
    auto number = [&](const std::string& s) {
        try {
            std::size_t used = 0;
            const double v = std::stod(s, &used);
            if (used != s.size()) {
                throw std::invalid_argument(s);
            }
            return v;
        } catch (const std::exception&) {
            throw pftc::ConfigError("--axis " + name + ": '" + s + "' is not a number");
        }
    };
    if (text.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::size_t start = 0;
        for (std::size_t pos; (pos = text.find(':', start)) != std::string::npos; start = pos + 1) {
            parts.push_back(text.substr(start, pos - start));
        }
        parts.push_back(text.substr(start));
        if (parts.size() != 3) {
            throw pftc::ConfigError("--axis " + name + ": range form is start:stop:count");
        }
        const double a = number(parts[0]);
        const double b = number(parts[1]);
        const double n = number(parts[2]);
        if (n < 1 || n != static_cast<double>(static_cast<long>(n))) {
            throw pftc::ConfigError("--axis " + name + ": count must be a positive integer");
        }
        const long count = static_cast<long>(n);
        for (long i = 0; i < count; ++i) {
            out.push_back(count == 1 ? a : a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1));
        }
        return out;
    }
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(',', start);
        out.push_back(number(text.substr(start, pos - start)));
        if (pos == std::string::npos) {
            break;
        }
        start = pos + 1;
    }
    return out;
}

json parse_axis(const std::string& spec) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw pftc::ConfigError("--axis expects name=values, got '" + spec + "'");
    }
    const auto name = spec.substr(0, eq);
    return {{"name", name}, {"values", parse_values(name, spec.substr(eq + 1))}};
}

struct Verb {
    pftc::Mode mode;
    CLI::App* app = nullptr;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Disorder-averaged Floquet time-crystal simulations"};
    app.set_version_flag("--version", std::string("pftc ") + PFTC_VERSION);
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);

    json overrides = json::object();
    json ac = json::object();
    bool ac_flag = false;
    std::vector<std::string> axis_specs;
    std::optional<std::string> config_file;
    std::optional<std::int64_t> stop_after_chunks;

    std::vector<Verb> verbs = {
        {pftc::Mode::evolve, app.add_subcommand("evolve", "Evolve one disorder realization")},
        {pftc::Mode::ensemble, app.add_subcommand("ensemble", "Disorder-averaged time series")},
        {pftc::Mode::sweep, app.add_subcommand("sweep", "Lifetime and saturation maps over a parameter grid")},
        {pftc::Mode::qfi_scaling, app.add_subcommand("qfi-scaling", "QFI time series for several chain lengths")},
    };

    for (auto& v : verbs) {
        CLI::App* s = v.app;
        auto real = [&](const std::string& flag, const std::string& key, const std::string& help) {
            s->add_option_function<double>(flag, [&overrides, key](double x) { overrides[key] = x; }, help);
        };
        auto integer = [&](const std::string& flag, const std::string& key, const std::string& help) {
            s->add_option_function<std::int64_t>(flag, [&overrides, key](std::int64_t x) { overrides[key] = x; },
                                                 help);
        };
        auto acreal = [&](const std::string& flag, const std::string& key, const std::string& help) {
            s->add_option_function<double>(flag, [&ac, key](double x) { ac[key] = x; }, help);
        };

        s->add_option("-c,--config", config_file, "JSON config file; flags override its entries")
            ->check(CLI::ExistingFile);
        integer("-N,--sites", "N", "Chain length (2-14, default 8)");
        real("--J1", "J1", "Nearest-neighbour exchange (default -1)");
        real("--J2", "J2", "Next-nearest-neighbour exchange (default -J1/4)");
        real("--D", "D", "DMI strength (default 0)");
        real("--h", "h", "Disorder half-width (default 1)");
        real("--phi", "phi", "Kick angle (default 3.05)");
        real("--T", "T", "Drive period (default 1)");
        real("--theta", "theta", "Initial polar angle of every spin (default pi/16)");
        integer("--t-max", "t_max", "Number of periods (default 100000)");
        integer("--stride", "stride", "Record every stride-th period (default 1)");
        real("--epsilon", "epsilon", "Lifetime threshold on |<Sz>| (default 0.01)");
        s->add_option_function<std::string>(
             "--sample", [&overrides](const std::string& x) { overrides["sample"] = x; },
             "Sample after-kick (default) or before-kick")
            ->check(CLI::IsMember({"after-kick", "before-kick"}));
        s->add_option_function<std::uint64_t>(
            "--seed", [&overrides](std::uint64_t x) { overrides["seed"] = x; }, "Disorder seed (default 1)");
        s->add_option_function<std::string>(
            "-o,--output", [&overrides](const std::string& x) { overrides["output"] = x; },
            "Output directory (default results)");
        integer("-j,--workers", "workers", "Worker threads (default $PFTC_WORKERS or all cores)");

        s->add_flag("--ac", ac_flag, "Enable the AC signal and QFI tracking");
        acreal("--h-ac", "h_ac", "AC amplitude (default 0)");
        acreal("--omega", "omega", "AC angular frequency (default pi/T)");
        acreal("--theta-ac", "theta", "AC phase (default 0)");

        if (v.mode == pftc::Mode::evolve) {
            s->add_option_function<std::uint64_t>(
                "--index", [&overrides](std::uint64_t x) { overrides["index"] = x; },
                "Realization index (default 0)");
        } else {
            integer("-R,--realizations", "realizations", "Disorder realizations");
            s->add_option_function<std::vector<std::int64_t>>(
                 "--window",
                 [&overrides](const std::vector<std::int64_t>& w) {
                     overrides["window"] = {{"t1", w.at(0)}, {"t2", w.at(1)}};
                 },
                 "Saturation window t1 t2 (default 0.8 t_max .. t_max)")
                ->expected(2)
                ->delimiter(',');
        }
        if (v.mode == pftc::Mode::sweep) {
            s->add_option("--axis", axis_specs,
                          "Sweep axis name=v1,v2,... or name=start:stop:count (name in h, phi, J2, D, N)")
                ->take_all();
            s->add_option_function<std::string>(
                "--checkpoint", [&overrides](const std::string& x) { overrides["checkpoint"] = x; },
                "Checkpoint directory; an interrupted sweep resumes from it");
            s->add_flag_function(
                "--lifetime-only", [&overrides](std::int64_t) { overrides["lifetime_only"] = true; },
                "Skip entanglement and coherence, stop once the magnetization has decayed");
            s->add_option("--stop-after-chunks", stop_after_chunks)->group("");
        }
        if (v.mode == pftc::Mode::qfi_scaling) {
            s->add_option_function<std::vector<int>>(
                 "--sizes", [&overrides](const std::vector<int>& n) { overrides["sizes"] = n; },
                 "Chain lengths (default 4,6,8)")
                ->delimiter(',');
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    try {
        pftc::Mode mode = pftc::Mode::evolve;
        for (const auto& v : verbs) {
            if (v.app->parsed()) {
                mode = v.mode;
            }
        }
        if (!axis_specs.empty()) {
            json axes = json::array();
            for (const auto& a : axis_specs) {
                axes.push_back(parse_axis(a));
            }
            overrides["axes"] = axes;
        }
        if (!ac.empty()) {
            overrides["ac"] = ac;
        } else if (ac_flag) {
            overrides["ac"] = true;
        }
        std::optional<std::filesystem::path> file;
        if (config_file) {
            file = *config_file;
        }
        const auto config = pftc::load_config(mode, file, overrides);
        const auto outcome = pftc::execute(config, stop_after_chunks);
        if (!outcome.complete) {
            std::cerr << "pftc: stopped early; rerun with the same checkpoint directory to resume\n";
            return kExitRuntime;
        }
        for (const auto& f : outcome.files) {
            std::cout << f.string() << '\n';
        }
    } catch (const pftc::ConfigError& e) {
        std::cerr << "pftc: configuration error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "pftc: " << e.what() << '\n';
        return kExitRuntime;
    }
    return 0;
}
