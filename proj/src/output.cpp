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
#include "pftc/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "pftc/errors.hpp"
#include "pftc/sweep.hpp"

namespace pftc {
namespace {

std::string preamble(const RunConfig& config, std::string_view schema, const std::vector<std::string>& extra) {
    std::ostringstream out;
    out << "# pftc " << PFTC_VERSION << '\n';
    out << "# schema: " << schema << '\n';
    out << "# mode: " << to_string(config.mode) << '\n';
    for (const auto& line : extra) {
        out << "# " << line << '\n';
    }
    out << "# config: " << config.canonical().dump() << '\n';
    return out.str();
}

EnsembleStatistics single_trajectory_stats(const RunConfig& config) {
    const auto disorder = make_disorder(config.chain.N, config.chain.h, config.seed, config.index);
    const auto rec = run_trajectory(config.chain, disorder, config.options);
    auto stats = EnsembleStatistics::empty(config.chain.N, config.chain.T, rec.times, config.options.ac.has_value());
    stats.add(rec);
    return stats;
}

} // namespace

std::string format_double(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string series_csv(const EnsembleStatistics& stats, const RunConfig& config) {
    std::ostringstream out;
    out << preamble(config, "series-v1", {"realizations: " + std::to_string(stats.realizations())});
    out << kSeriesHeader << '\n';
    const auto sz = stats.mean(Observable::sz);
    const auto sz_e = stats.standard_error(Observable::sz);
    const auto ent = stats.mean(Observable::entanglement);
    const auto ent_e = stats.standard_error(Observable::entanglement);
    const auto coh = stats.mean(Observable::coherence);
    const auto coh_e = stats.standard_error(Observable::coherence);
    const auto ratio = stats.qfi_ratio();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t i = 0; i < stats.times.size(); ++i) {
        out << stats.times[i] << ',' << format_double(sz[i]) << ',' << format_double(sz_e[i]) << ','
            << format_double(ent[i]) << ',' << format_double(ent_e[i]) << ',' << format_double(coh[i]) << ','
            << format_double(coh_e[i]) << ',';
        if (stats.has_qfi) {
            out << format_double(stats.qfi[i].mean()) << ',' << format_double(stats.qfi[i].standard_error()) << ','
                << format_double(ratio[i]);
        } else {
            out << format_double(nan) << ',' << format_double(nan) << ',' << format_double(nan);
        }
        out << '\n';
    }
    return out.str();
}

std::string map_csv(std::vector<MapRow> rows, const std::string& axis1, const std::string& axis2,
                    const RunConfig& config) {
    std::stable_sort(rows.begin(), rows.end(), [](const MapRow& a, const MapRow& b) {
        return a.axis1 != b.axis1 ? a.axis1 < b.axis1 : a.axis2 < b.axis2;
    });
    std::ostringstream out;
    out << preamble(config, "map-v1", {"axis1: " + axis1, "axis2: " + axis2});
    out << kMapHeader << '\n';
    for (const auto& r : rows) {
        const auto& s = r.summary;
        out << format_double(r.axis1) << ',' << format_double(r.axis2) << ',' << s.lifetime.periods << ','
            << (s.lifetime.capped ? 1 : 0) << ',' << format_double(s.ent_sat) << ',' << format_double(s.coh_sat)
            << ',' << format_double(s.max_qfi_ratio) << ',' << s.argmax_t << '\n';
    }
    return out.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::error_code ec;
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) {
            throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
        }
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    out << content;
    if (!out) {
        throw IoError("failed writing " + path.string());
    }
}

RunOutcome execute(const RunConfig& config, std::optional<std::int64_t> stop_after_chunks) {
    RunOutcome outcome;
    const auto& dir = config.output_dir;
    switch (config.mode) {
    case Mode::evolve: {
        const auto path = dir / "evolve_series.csv";
        write_text_file(path, series_csv(single_trajectory_stats(config), config));
        outcome.files.push_back(path);
        break;
    }
    case Mode::ensemble: {
        const auto stats =
            run_ensemble(config.chain, config.options, config.realizations, config.seed, config.workers);
        const auto path = dir / "ensemble_series.csv";
        write_text_file(path, series_csv(stats, config));
        outcome.files.push_back(path);
        break;
    }
    case Mode::sweep: {
        SweepControl control;
        control.workers = config.workers;
        control.checkpoint_dir = config.checkpoint_dir;
        control.stop_after_chunks = stop_after_chunks;
        const auto result = run_sweep(config.sweep_grid(), control);
        if (!result.complete) {
            outcome.complete = false;
            break;
        }
        std::vector<MapRow> rows;
        for (const auto& cell : result.cells) {
            rows.push_back({cell.coordinates.at(0), cell.coordinates.size() > 1 ? cell.coordinates[1] : 0.0,
                            cell.summary});
        }
        const auto path = dir / "sweep_map.csv";
        write_text_file(path, map_csv(std::move(rows), config.axes.at(0).name,
                                      config.axes.size() > 1 ? config.axes[1].name : "none", config));
        outcome.files.push_back(path);
        break;
    }
    case Mode::qfi_scaling: {
        std::vector<MapRow> rows;
        for (int n : config.sizes) {
            ChainParams chain = config.chain;
            chain.N = n;
            const auto stats = run_ensemble(chain, config.options, config.realizations, config.seed, config.workers);
            const auto path = dir / ("qfi_scaling_N" + std::to_string(n) + ".csv");
            write_text_file(path, series_csv(stats, config));
            outcome.files.push_back(path);
            rows.push_back({static_cast<double>(n), chain.h,
                            summarize(stats, config.options.epsilon, config.options.t_max,
                                      config.resolved_window())});
        }
        const auto path = dir / "qfi_scaling_map.csv";
        write_text_file(path, map_csv(std::move(rows), "N", "h", config));
        outcome.files.push_back(path);
        break;
    }
    }
    return outcome;
}

} // namespace pftc
