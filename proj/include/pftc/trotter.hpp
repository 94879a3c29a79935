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

#include <Eigen/Dense>

#include "pftc/chain.hpp"
#include "pftc/disorder.hpp"
#include "pftc/floquet.hpp"
#include "pftc/state.hpp"

namespace pftc {

/// H0 over the full 2^N basis, assembled bond by bond without reference
/// to the sector machinery.
Eigen::MatrixXcd dense_hamiltonian(const ChainParams& params, const DisorderRealization& disorder);

/// Independent time-stepping route through n_periods drive periods.
///
/// Each step of length dt = T/steps_per_period is the Strang product
///   exp(-i H0 dt/2) exp(-i f(t_mid) dt Z) exp(-i H0 dt/2),
/// with f the AC signal sampled at the step midpoint and the H0 factors
/// taken from a full-space eigendecomposition. The kick is applied at the
/// end of every period. The error against exact propagation is O(dt^2)
/// and vanishes when h_ac = 0.
StateVector trotter_oracle(const ChainParams& params, const DisorderRealization& disorder, const ACFieldParams& ac,
                           int n_periods, int steps_per_period, const StateVector& state);

} // namespace pftc
