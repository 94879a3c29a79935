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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "pftc/basis.hpp"

namespace pftc {

using cplx = std::complex<double>;

inline constexpr double kNormTolerance = 1e-10;

/// Pure state of N spins, amplitudes indexed by BasisState.
///
/// The constructor rejects vectors whose norm differs from 1 by more than
/// kNormTolerance. In-place kernels take the amplitude span and are
/// expected to be unitary.
class StateVector {
  public:
    StateVector(int N, std::vector<cplx> amplitudes);

    static StateVector basis_state(int N, BasisState s);

    int sites() const noexcept { return n_; }
    std::size_t dimension() const noexcept { return amps_.size(); }

    std::span<cplx> amplitudes() noexcept { return amps_; }
    std::span<const cplx> amplitudes() const noexcept { return amps_; }
    cplx operator[](std::size_t i) const { return amps_[i]; }

    double norm() const noexcept;

  private:
    int n_;
    std::vector<cplx> amps_;
};

/// A state together with its (unnormalized) derivative with respect to the
/// AC amplitude.
struct DerivativePair {
    StateVector psi;
    std::vector<cplx> dpsi;

    /// dpsi = 0, as for any amplitude-independent initial state.
    static DerivativePair from_state(StateVector psi);
};

/// Product state (x)_j [cos(theta_j/2)|up> + sin(theta_j/2)|down>].
StateVector prepare_initial_state(int N, std::span<const double> theta_profile);
StateVector prepare_initial_state(int N, double theta);

cplx inner(std::span<const cplx> a, std::span<const cplx> b) noexcept;
double squared_norm(std::span<const cplx> a) noexcept;

/// Euclidean distance between amplitude vectors (phase sensitive).
double state_distance(std::span<const cplx> a, std::span<const cplx> b);

/// |<a|b>|^2, insensitive to global phase.
double fidelity(std::span<const cplx> a, std::span<const cplx> b);

} // namespace pftc
