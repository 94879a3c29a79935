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

#include <span>

#include "pftc/state.hpp"

namespace pftc {

/// In-place exp(-i phi sum_i S_i^x) as N single-qubit x rotations,
/// O(N 2^N), no matrix is formed.
void apply_kick_inplace(std::span<cplx> amps, int N, double phi);

/// In-place exp(-i phase sum_i S_i^z); diagonal in the computational basis.
void apply_z_phase_inplace(std::span<cplx> amps, int N, double phase);

StateVector apply_kick(const StateVector& state, double phi);

namespace reference {

// Straightforward serial versions kept as test oracles and benchmark baselines.

void apply_kick_inplace(std::span<cplx> amps, int N, double phi);
void apply_z_phase_inplace(std::span<cplx> amps, int N, double phase);

} // namespace reference

} // namespace pftc
