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
#include <string_view>
#include <vector>

#include "pftc/config.hpp"
#include "pftc/ensemble.hpp"

namespace pftc {

// Result tables are CSV files preceded by '#'-comment metadata lines:
//
//   # pftc <version>
//   # schema: <series-v1 | map-v1>
//   # mode: <mode>
//   [# axis1: <name>]   map files only
//   [# axis2: <name>]
//   # config: <canonical config as one-line JSON>
//
// series-v1 columns:
//   t_over_T,Sz_mean,Sz_stderr,ent_mean,ent_stderr,coh_mean,coh_stderr,qfi_mean,qfi_stderr,qfi_ratio
// map-v1 columns:
//   axis1,axis2,lifetime,lifetime_is_capped,ent_sat,coh_sat,max_qfi_ratio,argmax_t
//
// Reals are written with 17 significant digits ("%.17g"); NaN is "nan".
// QFI columns are nan when no AC field was simulated; axis2 is 0 for
// one-axis sweeps.

inline constexpr std::string_view kSeriesHeader =
    "t_over_T,Sz_mean,Sz_stderr,ent_mean,ent_stderr,coh_mean,coh_stderr,qfi_mean,qfi_stderr,qfi_ratio";
inline constexpr std::string_view kMapHeader =
    "axis1,axis2,lifetime,lifetime_is_capped,ent_sat,coh_sat,max_qfi_ratio,argmax_t";

std::string format_double(double x);

struct MapRow {
    double axis1 = 0.0;
    double axis2 = 0.0;
    CellSummary summary;
};

std::string series_csv(const EnsembleStatistics& stats, const RunConfig& config);
/// Rows are sorted by (axis1, axis2).
std::string map_csv(std::vector<MapRow> rows, const std::string& axis1, const std::string& axis2,
                    const RunConfig& config);

/// Throws IoError when the directory cannot be created or the file written.
void write_text_file(const std::filesystem::path& path, const std::string& content);

struct RunOutcome {
    std::vector<std::filesystem::path> files;
    bool complete = true;
};

/// Run a configuration end to end and write its result files into
/// config.output_dir. `stop_after_chunks` interrupts sweeps (for resume tests).
RunOutcome execute(const RunConfig& config, std::optional<std::int64_t> stop_after_chunks = std::nullopt);

} // namespace pftc
