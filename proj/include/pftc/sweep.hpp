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
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pftc/chain.hpp"
#include "pftc/ensemble.hpp"
#include "pftc/trajectory.hpp"

namespace pftc {

/// One swept parameter: name is one of h, phi, J2, D, N.
struct SweepAxis {
    std::string name;
    std::vector<double> values;
};

/// A one- or two-axis grid over a fixed chain template. Every cell runs the
/// same realization indices 0..R-1 from the same seed.
struct SweepGrid {
    std::vector<SweepAxis> axes;
    ChainParams base;
    TrajectoryOptions options;
    std::int64_t realizations = 250;
    std::uint64_t seed = 0;
    std::optional<SaturationWindow> window; ///< defaults to the last 20% of t_max

    void validate() const;
    std::size_t cell_count() const;
    /// Coordinates of cell i; the first axis varies slowest.
    std::vector<double> coordinates(std::size_t cell) const;
    ChainParams cell_params(std::size_t cell) const;
    SaturationWindow resolved_window() const;

    /// Canonical description; everything that influences results and nothing else.
    nlohmann::json to_json() const;
    std::uint64_t hash() const;
};

struct SweepCell {
    std::size_t index = 0;
    std::vector<double> coordinates;
    ChainParams params;
    EnsembleStatistics stats;
    CellSummary summary;
};

struct SweepControl {
    int workers = 0;
    std::filesystem::path checkpoint_dir; ///< empty disables checkpointing
    /// Stop (leaving a resumable checkpoint) after this many realization
    /// chunks have been computed in this call.
    std::optional<std::int64_t> stop_after_chunks;
};

struct SweepResult {
    std::vector<SweepCell> cells; ///< only populated when complete
    bool complete = false;
    std::int64_t chunks_computed = 0;
};

/// Runs (or resumes) every cell. Throws CheckpointError when the checkpoint
/// directory belongs to a different grid.
SweepResult run_sweep(const SweepGrid& grid, const SweepControl& control);

} // namespace pftc
