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
#include <vector>

#include "pftc/chain.hpp"
#include "pftc/observables.hpp"
#include "pftc/statistics.hpp"
#include "pftc/trajectory.hpp"

namespace pftc {

/// Realizations are computed in fixed-size chunks and merged in index
/// order, so results do not depend on the worker count.
inline constexpr std::int64_t kRealizationChunk = 16;

enum class Observable { sz, entanglement, coherence, qfi };

/// Per-time disorder statistics, accumulated one realization at a time.
///
/// Memory is proportional to the number of sampled times; the only
/// per-realization data kept are two scalars (lifetime and peak QFI ratio).
struct EnsembleStatistics {
    int N = 0;
    double T = 1.0;
    bool has_qfi = false;
    std::vector<std::int64_t> times;
    std::vector<RunningMoments> sz, entanglement, coherence, qfi;
    std::vector<Lifetime> realization_lifetimes;
    std::vector<double> realization_peak_qfi_ratio;

    static EnsembleStatistics empty(int N, double T, std::vector<std::int64_t> times, bool has_qfi);

    std::int64_t realizations() const noexcept { return static_cast<std::int64_t>(realization_lifetimes.size()); }

    /// Folds in the next realization. Throws DimensionError on a mismatched time axis.
    void add(const TrajectoryRecord& record);

    std::vector<double> mean(Observable o) const;
    std::vector<double> standard_error(Observable o) const;
    /// mean QFI / (N (2t/pi)^2), 0 at t = 0; all zeros without QFI.
    std::vector<double> qfi_ratio() const;

    const std::vector<RunningMoments>& moments(Observable o) const;
};

/// Scalars derived from ensemble-mean series. Pure post-processing.
struct CellSummary {
    Lifetime lifetime;
    double ent_sat = 0.0;
    double coh_sat = 0.0;
    double max_qfi_ratio = 0.0;     ///< NaN without QFI
    std::int64_t argmax_t = 0;      ///< stroboscopic time of max_qfi_ratio
    double median_peak_qfi_ratio = 0.0;
    double median_realization_lifetime = 0.0;
};

CellSummary summarize(const EnsembleStatistics& stats, double epsilon, std::int64_t t_max,
                      const SaturationWindow& window);

/// Realizations [begin, end) with disorder make_disorder(N, h, seed, r),
/// folded into `stats` in index order. Work is spread over `workers`
/// OpenMP threads (<= 0 means the runtime default).
void extend_ensemble(EnsembleStatistics& stats, const ChainParams& params, const TrajectoryOptions& options,
                     std::uint64_t seed, std::int64_t begin, std::int64_t end, int workers);

/// R realizations in parallel.
EnsembleStatistics run_ensemble(const ChainParams& params, const TrajectoryOptions& options, std::int64_t R,
                                std::uint64_t seed, int workers = 0);

/// Single-threaded loop over realizations; reference for the parallel path.
EnsembleStatistics run_ensemble_serial(const ChainParams& params, const TrajectoryOptions& options,
                                       std::int64_t R, std::uint64_t seed);

} // namespace pftc
