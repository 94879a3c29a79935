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
#include "pftc/kernels.hpp"

#include <cmath>
#include <vector>

#include "pftc/errors.hpp"

namespace pftc {
namespace {

void check_dim(std::span<const cplx> amps, int N) {
    if (N < 0 || N > 30 || amps.size() != (std::size_t{1} << N)) {
        throw DimensionError("amplitude span does not match chain length");
    }
}

} // namespace

void apply_kick_inplace(std::span<cplx> amps, int N, double phi) {
    check_dim(amps, N);
    const double c = std::cos(0.5 * phi);
    const double s = std::sin(0.5 * phi);
    // Treat the complex array as interleaved doubles so the rotation
    //   a' = c a - i s b,  b' = c b - i s a
    // vectorizes cleanly.
    double* __restrict v = reinterpret_cast<double*>(amps.data());
    const std::size_t dim = amps.size();
    for (int q = 0; q < N; ++q) {
        const std::size_t stride = std::size_t{1} << q;
        for (std::size_t base = 0; base < dim; base += 2 * stride) {
            double* __restrict lo = v + 2 * base;
            double* __restrict hi = v + 2 * (base + stride);
#pragma omp simd
            for (std::size_t j = 0; j < stride; ++j) {
                const double ar = lo[2 * j], ai = lo[2 * j + 1];
                const double br = hi[2 * j], bi = hi[2 * j + 1];
                lo[2 * j] = c * ar + s * bi;
                lo[2 * j + 1] = c * ai - s * br;
                hi[2 * j] = c * br + s * ai;
                hi[2 * j + 1] = c * bi - s * ar;
            }
        }
    }
}

void apply_z_phase_inplace(std::span<cplx> amps, int N, double phase) {
    check_dim(amps, N);
    // exp(-i phase (k - N/2)) only depends on the up-spin count k.
    std::vector<cplx> table(static_cast<std::size_t>(N) + 1);
    for (int k = 0; k <= N; ++k) {
        table[static_cast<std::size_t>(k)] = std::polar(1.0, -phase * (k - 0.5 * N));
    }
    for (std::size_t i = 0; i < amps.size(); ++i) {
        amps[i] *= table[static_cast<std::size_t>(__builtin_popcountll(i))];
    }
}

StateVector apply_kick(const StateVector& state, double phi) {
    std::vector<cplx> amps(state.amplitudes().begin(), state.amplitudes().end());
    apply_kick_inplace(amps, state.sites(), phi);
    return StateVector(state.sites(), std::move(amps));
}

namespace reference {

void apply_kick_inplace(std::span<cplx> amps, int N, double phi) {
    check_dim(amps, N);
    const cplx u00 = std::cos(0.5 * phi);
    const cplx u01 = cplx(0.0, -std::sin(0.5 * phi));
    const cplx rot[2][2] = {{u00, u01}, {u01, u00}};
    for (int q = 0; q < N; ++q) {
        const std::size_t mask = std::size_t{1} << q;
        for (std::size_t i = 0; i < amps.size(); ++i) {
            if (i & mask) {
                continue;
            }
            const cplx a = amps[i];
            const cplx b = amps[i | mask];
            amps[i] = rot[0][0] * a + rot[0][1] * b;
            amps[i | mask] = rot[1][0] * a + rot[1][1] * b;
        }
    }
}

void apply_z_phase_inplace(std::span<cplx> amps, int N, double phase) {
    check_dim(amps, N);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        double sz = 0.0;
        for (int q = 0; q < N; ++q) {
            sz += ((i >> q) & 1U) ? 0.5 : -0.5;
        }
        amps[i] *= std::exp(cplx(0.0, -phase * sz));
    }
}

} // namespace reference

} // namespace pftc
