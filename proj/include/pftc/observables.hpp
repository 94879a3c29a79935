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
#include <span>

#include "pftc/state.hpp"

namespace pftc {

/// (1/N) <psi| sum_i S_i^z |psi>, in [-1/2, 1/2].
double magnetization(std::span<const cplx> amps, int N);
double magnetization(const StateVector& state);

/// Von Neumann entropy in bits of sites [1, cut] against the rest; cut in [0, N].
///
/// Uses the eigenvalues of the smaller reduced density matrix.
double entanglement_entropy(std::span<const cplx> amps, int N, int cut);
double entanglement_entropy(const StateVector& state, int cut);
/// Equal bipartition, cut = N/2.
double entanglement_entropy(const StateVector& state);

/// Same quantity from the singular values of the reshaped amplitude matrix.
double entanglement_entropy_svd(std::span<const cplx> amps, int N, int cut);

/// Relative entropy of coherence in the S_z product basis, in bits. For a
/// pure state this is the Shannon entropy of the basis populations.
double coherence(std::span<const cplx> amps);
double coherence(const StateVector& state);

/// Binary entropy in bits.
double binary_entropy(double p);

/// F = 4 (<dpsi|dpsi> - |<psi|dpsi>|^2). Throws NumericalError when the
/// result is below -1e-10; tiny negative round-off is clamped to 0.
double qfi(std::span<const cplx> psi, std::span<const cplx> dpsi);
double qfi(const DerivativePair& pair);

/// QFI relative to N uncorrelated spins under the echo protocol,
/// F / (N (2t/pi)^2). Defined as 0 at t = 0.
double sql_ratio(double F, int N, double t);

/// First stroboscopic time at which a rectified series drops below epsilon.
struct Lifetime {
    std::int64_t periods = 0;
    bool capped = false; ///< never dropped below epsilon; periods holds the cap
};

/// `times` are the stroboscopic indices of the samples (strictly increasing).
/// Only samples with time <= cap are considered. Throws DomainError on an
/// empty series or non-positive epsilon.
Lifetime lifetime(std::span<const double> magnitude, std::span<const std::int64_t> times, double epsilon,
                  std::int64_t cap);
/// Samples taken at n = 0, 1, 2, ...
Lifetime lifetime(std::span<const double> magnitude, double epsilon, std::int64_t cap);

/// Averaging window [t1, t2] over stroboscopic times, 0 <= t1 < t2.
struct SaturationWindow {
    std::int64_t t1 = 0;
    std::int64_t t2 = 1;

    /// t1 = floor(0.8 t_max), t2 = t_max.
    static SaturationWindow tail(std::int64_t t_max);
};

/// Arithmetic mean of the samples whose time lies in [t1, t2]. Throws
/// DomainError when the window is malformed or extends past the series.
double saturation_average(std::span<const double> values, std::span<const std::int64_t> times,
                          const SaturationWindow& window);

} // namespace pftc
