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
#include "pftc/trajectory.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "pftc/errors.hpp"
#include "pftc/state.hpp"

namespace pftc {

void TrajectoryOptions::validate() const {
    if (t_max < 1) {
        throw DomainError("t_max must be >= 1");
    }
    if (stride < 1) {
        throw DomainError("record stride must be >= 1");
    }
    if (!(epsilon > 0.0)) {
        throw DomainError("lifetime threshold epsilon must be > 0");
    }
    if (ac) {
        ac->validate();
    }
}

void to_json(nlohmann::json& j, const TrajectoryOptions& o) {
    j = nlohmann::json{{"t_max", o.t_max},
                       {"stride", o.stride},
                       {"theta", o.theta},
                       {"theta_profile", o.theta_profile},
                       {"sample", o.sample == SamplePoint::after_kick ? "after-kick" : "before-kick"},
                       {"epsilon", o.epsilon},
                       {"lifetime_only", o.lifetime_only}};
    j["ac"] = o.ac ? nlohmann::json(*o.ac) : nlohmann::json(nullptr);
}

std::vector<std::int64_t> record_times(std::int64_t t_max, std::int64_t stride) {
    if (t_max < 1 || stride < 1) {
        throw DomainError("record_times needs t_max >= 1 and stride >= 1");
    }
    std::vector<std::int64_t> times;
    times.reserve(static_cast<std::size_t>(t_max / stride + 2));
    for (std::int64_t t = 0; t <= t_max; t += stride) {
        times.push_back(t);
    }
    if (times.back() != t_max) {
        times.push_back(t_max);
    }
    return times;
}

TrajectoryRecord run_trajectory(const FloquetPropagator& prop, const DisorderRealization& disorder,
                                const TrajectoryOptions& options) {
    options.validate();
    const ChainParams& params = prop.params();
    const int N = params.N;

    TrajectoryRecord rec;
    rec.params = params;
    rec.seed = disorder.seed;
    rec.index = disorder.index;
    rec.t_max = options.t_max;
    rec.times = record_times(options.t_max, options.stride);
    const std::size_t samples = rec.times.size();
    rec.sz.reserve(samples);
    rec.entanglement.reserve(samples);
    rec.coherence.reserve(samples);

    StateVector initial = options.theta_profile.empty() ? prepare_initial_state(N, options.theta)
                                                        : prepare_initial_state(N, options.theta_profile);
    std::vector<cplx> psi(initial.amplitudes().begin(), initial.amplitudes().end());
    std::vector<cplx> dpsi;
    const bool with_qfi = options.ac.has_value();
    if (with_qfi) {
        dpsi.assign(psi.size(), cplx{});
        rec.qfi.reserve(samples);
    }

    const int cut = N / 2;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    auto sample = [&] {
        rec.sz.push_back(magnetization(psi, N));
        if (options.lifetime_only || N < 2) {
            rec.entanglement.push_back(options.lifetime_only ? nan : 0.0);
        } else {
            rec.entanglement.push_back(entanglement_entropy(psi, N, cut));
        }
        rec.coherence.push_back(options.lifetime_only ? nan : coherence(psi));
        if (with_qfi) {
            rec.qfi.push_back(qfi(psi, dpsi));
        }
    };

    FloquetStepper stepper(prop);
    std::size_t next = 0;
    sample();
    ++next;

    const double quiet = options.epsilon / 10.0;
    int quiet_run = 0;
    for (std::int64_t n = 0; n < options.t_max; ++n) {
        const bool record = next < samples && rec.times[next] == n + 1;
        const PeriodPhase phase = with_qfi ? ac_period_phase(*options.ac, n, params.T) : PeriodPhase{};
        if (with_qfi) {
            stepper.free_evolve_with_derivative(psi, dpsi, phase);
        } else {
            stepper.free_evolve(psi, phase);
        }
        if (record && options.sample == SamplePoint::before_kick) {
            sample();
        }
        stepper.kick(psi);
        if (with_qfi) {
            stepper.kick(dpsi);
        }
        if (record) {
            if (options.sample == SamplePoint::after_kick) {
                sample();
            }
            ++next;
        }
        if (options.lifetime_only) {
            const double m = record ? rec.sz.back() : magnetization(psi, N);
            quiet_run = std::abs(m) < quiet ? quiet_run + 1 : 0;
            if (quiet_run >= 100) {
                rec.stopped_early = true;
                break;
            }
        }
    }
    while (rec.sz.size() < samples) {
        rec.sz.push_back(0.0);
        rec.entanglement.push_back(nan);
        rec.coherence.push_back(nan);
        if (with_qfi) {
            rec.qfi.push_back(nan);
        }
    }

    rec.lifetime = lifetime(rec.sz, rec.times, options.epsilon, options.t_max);
    return rec;
}

TrajectoryRecord run_trajectory(const ChainParams& params, const DisorderRealization& disorder,
                                const TrajectoryOptions& options) {
    const FloquetPropagator prop(params, disorder);
    return run_trajectory(prop, disorder, options);
}

} // namespace pftc
