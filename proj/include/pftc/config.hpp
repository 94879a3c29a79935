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
#include "pftc/sweep.hpp"
#include "pftc/trajectory.hpp"

namespace pftc {

enum class Mode { evolve, ensemble, sweep, qfi_scaling };

std::string to_string(Mode m);
Mode parse_mode(const std::string& s);

/// Environment variable consulted for the default worker count.
inline constexpr const char* kWorkersEnv = "PFTC_WORKERS";

/// Fully resolved run description.
///
/// Config files are flat JSON objects. Keys valid in every mode:
///   N J1 J2 D h phi T theta ac t_max stride epsilon sample seed output workers
/// plus, per mode:
///   evolve       index
///   ensemble     realizations window
///   sweep        realizations window axes checkpoint lifetime_only
///   qfi-scaling  realizations window sizes
/// `ac` is either true (defaults) or an object with any of h_ac, omega,
/// theta. qfi-scaling always propagates the derivative.
struct RunConfig {
    Mode mode = Mode::evolve;
    ChainParams chain;
    TrajectoryOptions options;
    std::int64_t realizations = 1;
    std::uint64_t seed = 1;
    std::uint64_t index = 0;
    std::vector<SweepAxis> axes;
    std::vector<int> sizes;
    std::optional<SaturationWindow> window;

    std::filesystem::path output_dir = "results";
    std::filesystem::path checkpoint_dir;
    int workers = 0;

    /// Every setting that affects data rows. Output location, checkpoint
    /// location and worker count are deliberately absent.
    nlohmann::json canonical() const;

    SweepGrid sweep_grid() const;
    SaturationWindow resolved_window() const;
};

/// Validate and resolve a merged configuration object (which must carry
/// "mode"). Throws ConfigError with a message naming the offending key.
RunConfig parse_config(const nlohmann::json& merged);

/// File contents (may be empty) overlaid with command-line overrides.
RunConfig load_config(Mode mode, const std::optional<std::filesystem::path>& file, const nlohmann::json& overrides);

} // namespace pftc
