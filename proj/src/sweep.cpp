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
#include "pftc/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include "pftc/basis.hpp"
#include "pftc/checkpoint.hpp"
#include "pftc/errors.hpp"

namespace pftc {
namespace {

const std::set<std::string> kAxisNames = {"h", "phi", "J2", "D", "N"};

void set_axis(ChainParams& p, const std::string& name, double v) {
    if (name == "h") {
        p.h = v;
    } else if (name == "phi") {
        p.phi = v;
    } else if (name == "J2") {
        p.J2 = v;
    } else if (name == "D") {
        p.D = v;
    } else if (name == "N") {
        p.N = static_cast<int>(std::lround(v));
    } else {
        throw DomainError("unknown sweep axis '" + name + "'");
    }
}

std::filesystem::path cell_file(const std::filesystem::path& dir, std::size_t cell) {
    return dir / ("cell_" + std::to_string(cell) + ".bin");
}

void claim_checkpoint_dir(const std::filesystem::path& dir, const SweepGrid& grid) {
    std::filesystem::create_directories(dir);
    const auto manifest = dir / "grid.json";
    const auto hash = grid.hash();
    if (std::filesystem::exists(manifest)) {
        std::ifstream in(manifest);
        nlohmann::json existing;
        try {
            existing = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw CheckpointError("unreadable checkpoint manifest " + manifest.string() + ": " + e.what());
        }
        if (!existing.contains("hash") || existing.at("hash").get<std::uint64_t>() != hash) {
            throw CheckpointError("checkpoint directory " + dir.string() +
                                  " was written for a different grid; refusing to resume");
        }
        return;
    }
    nlohmann::json out{{"format_version", kCheckpointVersion}, {"hash", hash}, {"grid", grid.to_json()}};
    std::ofstream o(manifest);
    if (!o) {
        throw IoError("cannot write checkpoint manifest " + manifest.string());
    }
    o << out.dump(2) << '\n';
}

} // namespace

void SweepGrid::validate() const {
    if (axes.empty() || axes.size() > 2) {
        throw DomainError("a sweep needs one or two axes");
    }
    std::set<std::string> seen;
    for (const auto& a : axes) {
        if (!kAxisNames.contains(a.name)) {
            throw DomainError("unknown sweep axis '" + a.name + "' (expected h, phi, J2, D or N)");
        }
        if (!seen.insert(a.name).second) {
            throw DomainError("sweep axis '" + a.name + "' given twice");
        }
        if (a.values.empty()) {
            throw DomainError("sweep axis '" + a.name + "' has no values");
        }
        for (double v : a.values) {
            if (!std::isfinite(v)) {
                throw DomainError("sweep axis '" + a.name + "' has a non-finite value");
            }
            if (a.name == "N" && (v != std::round(v) || v < 1 || v > kMaxSites)) {
                throw DomainError("sweep axis N needs integers in [1, " + std::to_string(kMaxSites) + "]");
            }
        }
    }
    if (realizations < 1) {
        throw DomainError("sweep needs at least one realization");
    }
    options.validate();
    for (std::size_t c = 0; c < cell_count(); ++c) {
        cell_params(c).validate();
    }
    const auto w = resolved_window();
    if (w.t1 < 0 || w.t1 >= w.t2 || w.t2 > options.t_max) {
        throw DomainError("saturation window must satisfy 0 <= t1 < t2 <= t_max");
    }
}

std::size_t SweepGrid::cell_count() const {
    std::size_t n = 1;
    for (const auto& a : axes) {
        n *= a.values.size();
    }
    return n;
}

std::vector<double> SweepGrid::coordinates(std::size_t cell) const {
    std::vector<double> coords(axes.size());
    for (std::size_t i = axes.size(); i-- > 0;) {
        const auto& vals = axes[i].values;
        coords[i] = vals[cell % vals.size()];
        cell /= vals.size();
    }
    return coords;
}

ChainParams SweepGrid::cell_params(std::size_t cell) const {
    ChainParams p = base;
    const auto coords = coordinates(cell);
    for (std::size_t i = 0; i < axes.size(); ++i) {
        set_axis(p, axes[i].name, coords[i]);
    }
    return p;
}

SaturationWindow SweepGrid::resolved_window() const {
    return window ? *window : SaturationWindow::tail(options.t_max);
}

nlohmann::json SweepGrid::to_json() const {
    nlohmann::json axes_json = nlohmann::json::array();
    for (const auto& a : axes) {
        axes_json.push_back({{"name", a.name}, {"values", a.values}});
    }
    const auto w = resolved_window();
    return {{"axes", axes_json},
            {"chain", base},
            {"options", options},
            {"realizations", realizations},
            {"seed", seed},
            {"window", {{"t1", w.t1}, {"t2", w.t2}}}};
}

std::uint64_t SweepGrid::hash() const { return fnv1a64(to_json().dump()); }

SweepResult run_sweep(const SweepGrid& grid, const SweepControl& control) {
    grid.validate();
    const bool checkpointing = !control.checkpoint_dir.empty();
    const auto hash = grid.hash();
    if (checkpointing) {
        claim_checkpoint_dir(control.checkpoint_dir, grid);
    }

    SweepResult result;
    const auto times = record_times(grid.options.t_max, grid.options.stride);
    for (std::size_t c = 0; c < grid.cell_count(); ++c) {
        const ChainParams params = grid.cell_params(c);
        CellCheckpoint ck;
        ck.grid_hash = hash;
        ck.cell_index = c;
        std::optional<CellCheckpoint> saved;
        if (checkpointing) {
            saved = read_cell_checkpoint(cell_file(control.checkpoint_dir, c), hash);
        }
        if (saved) {
            if (saved->cell_index != c) {
                throw CheckpointError("checkpoint file for cell " + std::to_string(c) + " is mislabeled");
            }
            ck = std::move(*saved);
        } else {
            ck.stats = EnsembleStatistics::empty(params.N, params.T, times, grid.options.ac.has_value());
        }

        while (ck.completed < grid.realizations) {
            if (control.stop_after_chunks && result.chunks_computed >= *control.stop_after_chunks) {
                result.cells.clear();
                return result;
            }
            const std::int64_t hi = std::min(grid.realizations, ck.completed + kRealizationChunk);
            extend_ensemble(ck.stats, params, grid.options, grid.seed, ck.completed, hi, control.workers);
            ck.completed = hi;
            ++result.chunks_computed;
            if (checkpointing) {
                write_cell_checkpoint(cell_file(control.checkpoint_dir, c), ck);
            }
        }

        SweepCell cell;
        cell.index = c;
        cell.coordinates = grid.coordinates(c);
        cell.params = params;
        cell.summary = summarize(ck.stats, grid.options.epsilon, grid.options.t_max, grid.resolved_window());
        cell.stats = std::move(ck.stats);
        result.cells.push_back(std::move(cell));
    }
    result.complete = true;
    return result;
}

} // namespace pftc
