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
#include "pftc/trotter.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "pftc/errors.hpp"
#include "pftc/kernels.hpp"

namespace pftc {
namespace {

// Adds coupling * (S_a . S_b) + dmi * (S_a x S_b)_z to the full matrix.
void add_bond(Eigen::MatrixXcd& h, int a, int b, double coupling, double dmi) {
    const auto dim = h.rows();
    for (Eigen::Index s = 0; s < dim; ++s) {
        const int za = (s >> a) & 1;
        const int zb = (s >> b) & 1;
        h(s, s) += coupling * ((za == zb) ? 0.25 : -0.25);
        if (za != zb) {
            const Eigen::Index t = s ^ ((Eigen::Index{1} << a) | (Eigen::Index{1} << b));
            // <t| S_a^x S_b^y - S_a^y S_b^x |s>: raising a (za = 0) gives +i/2
            const double sign = za == 0 ? 1.0 : -1.0;
            h(t, s) += cplx(0.5 * coupling, 0.5 * dmi * sign);
        }
    }
}

} // namespace

Eigen::MatrixXcd dense_hamiltonian(const ChainParams& params, const DisorderRealization& disorder) {
    params.validate();
    if (static_cast<int>(disorder.fields.size()) != params.N) {
        throw DimensionError("disorder length does not match chain");
    }
    if (params.N > kMaxSites) {
        throw CapacityError("dense Hamiltonian limited to " + std::to_string(kMaxSites) + " sites");
    }
    const Eigen::Index dim = Eigen::Index{1} << params.N;
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    for (int i = 0; i + 1 < params.N; ++i) {
        add_bond(h, i, i + 1, params.J1, params.D);
    }
    for (int i = 0; i + 2 < params.N; ++i) {
        add_bond(h, i, i + 2, params.J2, 0.0);
    }
    for (Eigen::Index s = 0; s < dim; ++s) {
        for (int i = 0; i < params.N; ++i) {
            h(s, s) -= disorder.fields[static_cast<std::size_t>(i)] * (((s >> i) & 1) ? 0.5 : -0.5);
        }
    }
    return h;
}

StateVector trotter_oracle(const ChainParams& params, const DisorderRealization& disorder, const ACFieldParams& ac,
                           int n_periods, int steps_per_period, const StateVector& state) {
    if (steps_per_period < 1) {
        throw DomainError("steps_per_period must be >= 1");
    }
    if (n_periods < 0) {
        throw DomainError("n_periods must be >= 0");
    }
    if (state.sites() != params.N) {
        throw DimensionError("state does not match chain length");
    }
    const double dt = params.T / steps_per_period;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(dense_hamiltonian(params, disorder));
    Eigen::VectorXcd half(eig.eigenvalues().size());
    for (Eigen::Index i = 0; i < half.size(); ++i) {
        half(i) = std::polar(1.0, -0.5 * dt * eig.eigenvalues()(i));
    }
    const Eigen::MatrixXcd half_step = eig.eigenvectors() * half.asDiagonal() * eig.eigenvectors().adjoint();

    std::vector<cplx> amps(state.amplitudes().begin(), state.amplitudes().end());
    Eigen::Map<Eigen::VectorXcd> v(amps.data(), static_cast<Eigen::Index>(amps.size()));
    Eigen::VectorXcd tmp(v.size());
    for (int n = 0; n < n_periods; ++n) {
        for (int m = 0; m < steps_per_period; ++m) {
            const double t_mid = (n + (m + 0.5) / steps_per_period) * params.T;
            const double signal = ac.h_ac * std::sin(ac.omega * t_mid + ac.theta);
            tmp.noalias() = half_step * v;
            v = tmp;
            reference::apply_z_phase_inplace(amps, params.N, signal * dt);
            tmp.noalias() = half_step * v;
            v = tmp;
        }
        reference::apply_kick_inplace(amps, params.N, params.phi);
    }
    return StateVector(params.N, std::move(amps));
}

} // namespace pftc
