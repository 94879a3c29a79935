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
#include <numbers>
#include <optional>
#include <vector>

#include <json.hpp>

#include "pftc/chain.hpp"
#include "pftc/disorder.hpp"
#include "pftc/floquet.hpp"
#include "pftc/observables.hpp"

namespace pftc {

inline constexpr double kDefaultTheta = std::numbers::pi / 16.0;

/// How a single disordered trajectory is run and sampled.
struct TrajectoryOptions {
    std::int64_t t_max = 100000;
    std::int64_t stride = 1;
    std::optional<ACFieldParams> ac; ///< enables derivative propagation and the QFI series
    double theta = kDefaultTheta;    ///< uniform initial tilt, used when theta_profile is empty
    std::vector<double> theta_profile;
    SamplePoint sample = SamplePoint::after_kick;
    double epsilon = 1e-2;
    /// Only magnetization is sampled, and the run stops once |m| < epsilon/10
    /// for 100 consecutive periods (later samples are recorded as 0).
    bool lifetime_only = false;

    void validate() const;
};

void to_json(nlohmann::json& j, const TrajectoryOptions& o);

/// Sampled stroboscopic times: 0, stride, 2 stride, ... and always t_max.
std::vector<std::int64_t> record_times(std::int64_t t_max, std::int64_t stride);

/// Stroboscopic series of one realization.
struct TrajectoryRecord {
    ChainParams params;
    std::uint64_t seed = 0;
    std::uint64_t index = 0;
    std::int64_t t_max = 0;
    std::vector<std::int64_t> times;
    std::vector<double> sz;
    std::vector<double> entanglement; ///< NaN when lifetime_only
    std::vector<double> coherence;    ///< NaN when lifetime_only
    std::vector<double> qfi;          ///< empty without an AC field
    Lifetime lifetime;                ///< on |sz| of this realization alone
    bool stopped_early = false;
};

TrajectoryRecord run_trajectory(const FloquetPropagator& prop, const DisorderRealization& disorder,
                                const TrajectoryOptions& options);
TrajectoryRecord run_trajectory(const ChainParams& params, const DisorderRealization& disorder,
                                const TrajectoryOptions& options);

} // namespace pftc
