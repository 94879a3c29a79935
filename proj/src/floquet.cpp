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
#include "pftc/floquet.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pftc/errors.hpp"
#include "pftc/kernels.hpp"
#include "pftc/trotter.hpp"

namespace pftc {

void ACFieldParams::validate() const {
    if (!std::isfinite(h_ac) || !std::isfinite(omega) || !std::isfinite(theta)) {
        throw DomainError("AC field parameters must be finite");
    }
    if (omega < 0.0) {
        throw DomainError("AC angular frequency must be >= 0");
    }
}

void to_json(nlohmann::json& j, const ACFieldParams& ac) {
    j = nlohmann::json{{"h_ac", ac.h_ac}, {"omega", ac.omega}, {"theta", ac.theta}};
}

void from_json(const nlohmann::json& j, ACFieldParams& ac) {
    j.at("h_ac").get_to(ac.h_ac);
    j.at("omega").get_to(ac.omega);
    j.at("theta").get_to(ac.theta);
}

PeriodPhase ac_period_phase(const ACFieldParams& ac, std::int64_t n, double T) {
    if (n < 0) {
        throw DomainError("period index must be >= 0");
    }
    double gain;
    if (ac.omega == 0.0) {
        gain = T * std::sin(ac.theta);
    } else {
        const double t0 = static_cast<double>(n) * T;
        gain = (std::cos(ac.omega * t0 + ac.theta) - std::cos(ac.omega * (t0 + T) + ac.theta)) / ac.omega;
    }
    return {ac.h_ac * gain, gain};
}

// ---------------------------------------------------------------------------

FloquetPropagator::FloquetPropagator(const ChainParams& params, const DisorderRealization& disorder)
    : FloquetPropagator(params, shared_basis(params.N),
                        build_hamiltonian(params, disorder, *shared_basis(params.N))) {}

FloquetPropagator::FloquetPropagator(const ChainParams& params, std::shared_ptr<const BasisIndexing> basis,
                                     const std::vector<SectorMatrix>& hamiltonian)
    : params_(params), basis_(std::move(basis)) {
    params_.validate();
    if (basis_->sites() != params_.N || static_cast<int>(hamiltonian.size()) != basis_->sector_count()) {
        throw DimensionError("Hamiltonian blocks do not match the basis");
    }
    sectors_.reserve(hamiltonian.size());
    for (const auto& block : hamiltonian) {
        Sector s;
        s.k = block.k;
        s.sz = basis_->total_sz(block.k);
        const auto states = basis_->sector(block.k);
        s.states.assign(states.begin(), states.end());

        const bool real = block.matrix.imag().cwiseAbs().maxCoeff() == 0.0;
        if (real) {
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(block.matrix.real());
            if (eig.info() != Eigen::Success) {
                throw NumericalError("eigendecomposition failed in sector " + std::to_string(block.k));
            }
            s.energies = eig.eigenvalues();
            s.vectors = eig.eigenvectors().cast<cplx>();
        } else {
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(block.matrix);
            if (eig.info() != Eigen::Success) {
                throw NumericalError("eigendecomposition failed in sector " + std::to_string(block.k));
            }
            s.energies = eig.eigenvalues();
            s.vectors = eig.eigenvectors();
        }
        s.phases.resize(s.energies.size());
        for (Eigen::Index i = 0; i < s.energies.size(); ++i) {
            s.phases(i) = std::polar(1.0, -s.energies(i) * params_.T);
        }
        s.step = s.vectors * s.phases.asDiagonal() * s.vectors.adjoint();
        largest_ = std::max(largest_, s.states.size());
        sectors_.push_back(std::move(s));
    }
}

double FloquetPropagator::orthonormality_defect() const {
    double worst = 0.0;
    for (const auto& s : sectors_) {
        const auto d = s.vectors.cols();
        const Eigen::MatrixXcd gram = s.vectors.adjoint() * s.vectors - Eigen::MatrixXcd::Identity(d, d);
        worst = std::max(worst, gram.cwiseAbs().maxCoeff());
    }
    return worst;
}

double FloquetPropagator::reconstruction_defect(const std::vector<SectorMatrix>& hamiltonian) const {
    double worst = 0.0;
    for (std::size_t i = 0; i < sectors_.size(); ++i) {
        const auto& s = sectors_[i];
        const Eigen::MatrixXcd rebuilt = s.vectors * s.energies.cast<cplx>().asDiagonal() * s.vectors.adjoint();
        worst = std::max(worst, (rebuilt - hamiltonian.at(i).matrix).cwiseAbs().maxCoeff());
    }
    return worst;
}

// ---------------------------------------------------------------------------

FloquetStepper::FloquetStepper(const FloquetPropagator& prop)
    : prop_(&prop), x_(static_cast<Eigen::Index>(prop.largest_sector())),
      y_(static_cast<Eigen::Index>(prop.largest_sector())), dx_(static_cast<Eigen::Index>(prop.largest_sector())),
      dy_(static_cast<Eigen::Index>(prop.largest_sector())) {}

void FloquetStepper::free_evolve(std::span<cplx> psi, const PeriodPhase& ac) {
    if (psi.size() != prop_->dimension()) {
        throw DimensionError("state size does not match propagator");
    }
    for (const auto& s : prop_->sectors()) {
        const auto d = static_cast<Eigen::Index>(s.states.size());
        const cplx rot = std::polar(1.0, -ac.phase * s.sz);
        if (d == 1) {
            psi[s.states[0]] *= rot * s.step(0, 0);
            continue;
        }
        for (Eigen::Index i = 0; i < d; ++i) {
            x_(i) = psi[s.states[static_cast<std::size_t>(i)]];
        }
        y_.head(d).noalias() = s.step * x_.head(d);
        for (Eigen::Index i = 0; i < d; ++i) {
            psi[s.states[static_cast<std::size_t>(i)]] = rot * y_(i);
        }
    }
}

void FloquetStepper::free_evolve_with_derivative(std::span<cplx> psi, std::span<cplx> dpsi, const PeriodPhase& ac) {
    if (psi.size() != prop_->dimension() || dpsi.size() != prop_->dimension()) {
        throw DimensionError("state size does not match propagator");
    }
    // Product rule: d/dh [W e^{-i Phi Z}] psi = W e^{-i Phi Z} (dpsi - i g Z psi),
    // with Z = sz a scalar on each block.
    for (const auto& s : prop_->sectors()) {
        const auto d = static_cast<Eigen::Index>(s.states.size());
        const cplx rot = std::polar(1.0, -ac.phase * s.sz);
        const cplx source(0.0, -ac.gain * s.sz);
        for (Eigen::Index i = 0; i < d; ++i) {
            const auto idx = s.states[static_cast<std::size_t>(i)];
            x_(i) = psi[idx];
            dx_(i) = dpsi[idx] + source * psi[idx];
        }
        y_.head(d).noalias() = s.step * x_.head(d);
        dy_.head(d).noalias() = s.step * dx_.head(d);
        for (Eigen::Index i = 0; i < d; ++i) {
            const auto idx = s.states[static_cast<std::size_t>(i)];
            psi[idx] = rot * y_(i);
            dpsi[idx] = rot * dy_(i);
        }
    }
}

void FloquetStepper::kick(std::span<cplx> v) const { apply_kick_inplace(v, prop_->sites(), prop_->params().phi); }

void FloquetStepper::period(std::span<cplx> psi, const PeriodPhase& ac) {
    free_evolve(psi, ac);
    kick(psi);
}

void FloquetStepper::period_with_derivative(std::span<cplx> psi, std::span<cplx> dpsi, const PeriodPhase& ac) {
    free_evolve_with_derivative(psi, dpsi, ac);
    kick(psi);
    kick(dpsi);
}

void FloquetStepper::inverse_period(std::span<cplx> psi, const PeriodPhase& ac) {
    if (psi.size() != prop_->dimension()) {
        throw DimensionError("state size does not match propagator");
    }
    apply_kick_inplace(psi, prop_->sites(), -prop_->params().phi);
    for (const auto& s : prop_->sectors()) {
        const auto d = static_cast<Eigen::Index>(s.states.size());
        const cplx rot = std::polar(1.0, ac.phase * s.sz);
        for (Eigen::Index i = 0; i < d; ++i) {
            x_(i) = psi[s.states[static_cast<std::size_t>(i)]];
        }
        y_.head(d).noalias() = s.step.adjoint() * x_.head(d);
        for (Eigen::Index i = 0; i < d; ++i) {
            psi[s.states[static_cast<std::size_t>(i)]] = rot * y_(i);
        }
    }
}

// ---------------------------------------------------------------------------

namespace {

std::vector<cplx> copy_amplitudes(const StateVector& s) { return {s.amplitudes().begin(), s.amplitudes().end()}; }

} // namespace

StateVector evolve_period(const FloquetPropagator& prop, const ACFieldParams& ac, std::int64_t n,
                          const StateVector& state) {
    auto amps = copy_amplitudes(state);
    FloquetStepper stepper(prop);
    stepper.period(amps, ac_period_phase(ac, n, prop.params().T));
    return StateVector(state.sites(), std::move(amps));
}

DerivativePair evolve_period_with_derivative(const FloquetPropagator& prop, const ACFieldParams& ac,
                                             std::int64_t n, const DerivativePair& pair) {
    auto amps = copy_amplitudes(pair.psi);
    auto damps = pair.dpsi;
    FloquetStepper stepper(prop);
    stepper.period_with_derivative(amps, damps, ac_period_phase(ac, n, prop.params().T));
    return DerivativePair{StateVector(pair.psi.sites(), std::move(amps)), std::move(damps)};
}

StateVector evolve_period_inverse(const FloquetPropagator& prop, const ACFieldParams& ac, std::int64_t n,
                                  const StateVector& state) {
    auto amps = copy_amplitudes(state);
    FloquetStepper stepper(prop);
    stepper.inverse_period(amps, ac_period_phase(ac, n, prop.params().T));
    return StateVector(state.sites(), std::move(amps));
}

// ---------------------------------------------------------------------------

namespace reference {

DenseFloquet::DenseFloquet(const ChainParams& params, const DisorderRealization& disorder) : params_(params) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(dense_hamiltonian(params, disorder));
    Eigen::VectorXcd phases(eig.eigenvalues().size());
    for (Eigen::Index i = 0; i < phases.size(); ++i) {
        phases(i) = std::polar(1.0, -eig.eigenvalues()(i) * params.T);
    }
    free_ = eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

void DenseFloquet::period(std::span<cplx> psi, const PeriodPhase& ac) const {
    reference::apply_z_phase_inplace(psi, params_.N, ac.phase);
    Eigen::Map<Eigen::VectorXcd> v(psi.data(), static_cast<Eigen::Index>(psi.size()));
    const Eigen::VectorXcd out = free_ * v;
    v = out;
    reference::apply_kick_inplace(psi, params_.N, params_.phi);
}

} // namespace reference

} // namespace pftc
