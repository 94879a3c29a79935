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
#include <string_view>

#include "pftc/ensemble.hpp"

namespace pftc {

// Checkpoint layout: a directory holding `grid.json` (the canonical grid
// plus its hash) and one `cell_<index>.bin` per started cell.
//
// cell_<index>.bin, all integers and doubles little-endian:
//
//   char[8]  magic "PFTCCKPT"
//   u32      format version (kCheckpointVersion)
//   u64      grid hash
//   u64      cell index
//   i64      completed realizations; realizations [0, completed) are merged
//   i32      N
//   f64      T
//   u8       has_qfi
//   u64      number of sampled times n
//   i64[n]   times
//   per observable (sz, entanglement, coherence, then qfi if present):
//     n x { i64 count, f64 mean, f64 m2 }
//   u64      number of realizations r
//   r x { i64 lifetime, u8 capped, f64 peak QFI ratio }
//   u64      FNV-1a hash of all preceding bytes
//
// Realizations complete in index order, so the completed-task set of a cell
// is the prefix [0, completed).

inline constexpr std::uint32_t kCheckpointVersion = 1;

struct CellCheckpoint {
    std::uint64_t grid_hash = 0;
    std::uint64_t cell_index = 0;
    std::int64_t completed = 0;
    EnsembleStatistics stats;
};

std::uint64_t fnv1a64(std::string_view bytes) noexcept;

/// Atomic (write-then-rename) save.
void write_cell_checkpoint(const std::filesystem::path& file, const CellCheckpoint& ckpt);

/// nullopt when the file does not exist. Throws CheckpointError on a bad
/// magic, unknown version, checksum failure or grid-hash mismatch.
std::optional<CellCheckpoint> read_cell_checkpoint(const std::filesystem::path& file, std::uint64_t expected_hash);

} // namespace pftc
