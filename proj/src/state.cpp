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
#include "pftc/state.hpp"

#include <cmath>
#include <string>

#include "pftc/errors.hpp"

namespace pftc {

StateVector::StateVector(int N, std::vector<cplx> amplitudes) : n_(N), amps_(std::move(amplitudes)) {
    if (N < 1 || N > kMaxSites) {
        throw CapacityError("state with " + std::to_string(N) + " sites is not supported");
    }
    if (amps_.size() != (std::size_t{1} << N)) {
        throw DimensionError("state of " + std::to_string(N) + " sites needs " +
                             std::to_string(std::size_t{1} << N) + " amplitudes, got " +
                             std::to_string(amps_.size()));
    }
    if (std::abs(norm() - 1.0) > kNormTolerance) {
        throw NumericalError("state is not normalized (norm " + std::to_string(norm()) + ")");
    }
}

StateVector StateVector::basis_state(int N, BasisState s) {
    std::vector<cplx> amps(std::size_t{1} << N);
    amps.at(s) = 1.0;
    return StateVector(N, std::move(amps));
}

double StateVector::norm() const noexcept { return std::sqrt(squared_norm(amps_)); }

DerivativePair DerivativePair::from_state(StateVector psi) {
    std::vector<cplx> zero(psi.dimension());
    return DerivativePair{std::move(psi), std::move(zero)};
}

StateVector prepare_initial_state(int N, std::span<const double> theta_profile) {
    if (static_cast<int>(theta_profile.size()) != N) {
        throw DimensionError("initial-state profile has " + std::to_string(theta_profile.size()) +
                             " angles for " + std::to_string(N) + " sites");
    }
    if (N < 1 || N > kMaxSites) {
        throw CapacityError("state with " + std::to_string(N) + " sites is not supported");
    }
    const std::size_t dim = std::size_t{1} << N;
    std::vector<cplx> amps(dim);
    for (std::size_t s = 0; s < dim; ++s) {
        double a = 1.0;
        for (int j = 0; j < N; ++j) {
            const double half = 0.5 * theta_profile[static_cast<std::size_t>(j)];
            a *= ((s >> j) & 1U) ? std::cos(half) : std::sin(half);
        }
        amps[s] = a;
    }
    return StateVector(N, std::move(amps));
}

StateVector prepare_initial_state(int N, double theta) {
    std::vector<double> profile(static_cast<std::size_t>(N < 0 ? 0 : N), theta);
    return prepare_initial_state(N, profile);
}

cplx inner(std::span<const cplx> a, std::span<const cplx> b) noexcept {
    cplx acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

double squared_norm(std::span<const cplx> a) noexcept {
    double acc = 0.0;
    for (const cplx& x : a) {
        acc += std::norm(x);
    }
    return acc;
}

double state_distance(std::span<const cplx> a, std::span<const cplx> b) {
    if (a.size() != b.size()) {
        throw DimensionError("state_distance: size mismatch");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::norm(a[i] - b[i]);
    }
    return std::sqrt(acc);
}

double fidelity(std::span<const cplx> a, std::span<const cplx> b) {
    if (a.size() != b.size()) {
        throw DimensionError("fidelity: size mismatch");
    }
    return std::norm(inner(a, b));
}

} // namespace pftc
