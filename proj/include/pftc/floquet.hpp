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
#include <memory>
#include <numbers>
#include <span>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "pftc/basis.hpp"
#include "pftc/chain.hpp"
#include "pftc/disorder.hpp"
#include "pftc/hamiltonian.hpp"
#include "pftc/state.hpp"

namespace pftc {

/// AC signal h_ac sin(omega t + theta) coupled to sum_i S_i^z.
struct ACFieldParams {
    double h_ac = 0.0;
    double omega = std::numbers::pi; ///< pi/T for T = 1: AC period twice the drive period
    double theta = 0.0;

    void validate() const;
    friend bool operator==(const ACFieldParams&, const ACFieldParams&) = default;
};

void to_json(nlohmann::json& j, const ACFieldParams& ac);
void from_json(const nlohmann::json& j, ACFieldParams& ac);

/// Phase picked up by the collective Z coupling during one drive period.
struct PeriodPhase {
    double phase = 0.0; ///< h_ac * integral of sin over [nT, (n+1)T]
    double gain = 0.0;  ///< d phase / d h_ac, independent of h_ac
};

/// Closed-form integral of the AC signal over period n; omega = 0 uses the
/// constant-signal limit T sin(theta).
PeriodPhase ac_period_phase(const ACFieldParams& ac, std::int64_t n, double T);

/// Sector-blocked eigendecomposition of H0 plus the cached one-period
/// rotation V exp(-i E T) V^dagger of every block.
///
/// Immutable after construction; share freely across threads. Each thread
/// drives its own FloquetStepper.
class FloquetPropagator {
  public:
    struct Sector {
        int k = 0;
        double sz = 0.0; ///< total S_z eigenvalue on this block
        std::vector<BasisState> states;
        Eigen::VectorXd energies;
        Eigen::MatrixXcd vectors;
        Eigen::VectorXcd phases; ///< exp(-i E T)
        Eigen::MatrixXcd step;   ///< V diag(phases) V^dagger
    };

    FloquetPropagator(const ChainParams& params, const DisorderRealization& disorder);
    FloquetPropagator(const ChainParams& params, std::shared_ptr<const BasisIndexing> basis,
                      const std::vector<SectorMatrix>& hamiltonian);

    const ChainParams& params() const noexcept { return params_; }
    int sites() const noexcept { return params_.N; }
    std::size_t dimension() const noexcept { return basis_->dimension(); }
    const BasisIndexing& basis() const noexcept { return *basis_; }
    std::span<const Sector> sectors() const noexcept { return sectors_; }
    std::size_t largest_sector() const noexcept { return largest_; }

    /// Largest |V^dagger V - 1| over all sectors.
    double orthonormality_defect() const;
    /// Largest |V diag(E) V^dagger - H| over all sectors, against the given blocks.
    double reconstruction_defect(const std::vector<SectorMatrix>& hamiltonian) const;

  private:
    ChainParams params_;
    std::shared_ptr<const BasisIndexing> basis_;
    std::vector<Sector> sectors_;
    std::size_t largest_ = 0;
};

/// Where observables are sampled inside a period.
enum class SamplePoint { after_kick, before_kick };

/// Per-thread scratch for in-place stepping with a shared propagator.
///
/// One period is exp(-i Phi_n Z), then exp(-i H0 T), then the kick. Both
/// exponentials act per sector (Z is a scalar on each block), so the free
/// part is a single gather/matvec/scatter per block.
class FloquetStepper {
  public:
    explicit FloquetStepper(const FloquetPropagator& prop);

    void free_evolve(std::span<cplx> psi, const PeriodPhase& ac);
    void free_evolve_with_derivative(std::span<cplx> psi, std::span<cplx> dpsi, const PeriodPhase& ac);
    void kick(std::span<cplx> v) const;

    void period(std::span<cplx> psi, const PeriodPhase& ac);
    void period_with_derivative(std::span<cplx> psi, std::span<cplx> dpsi, const PeriodPhase& ac);
    /// Exact inverse of period().
    void inverse_period(std::span<cplx> psi, const PeriodPhase& ac);

  private:
    const FloquetPropagator* prop_;
    Eigen::VectorXcd x_, y_, dx_, dy_;
};

StateVector evolve_period(const FloquetPropagator& prop, const ACFieldParams& ac, std::int64_t n,
                          const StateVector& state);
DerivativePair evolve_period_with_derivative(const FloquetPropagator& prop, const ACFieldParams& ac,
                                             std::int64_t n, const DerivativePair& pair);
StateVector evolve_period_inverse(const FloquetPropagator& prop, const ACFieldParams& ac, std::int64_t n,
                                  const StateVector& state);

namespace reference {

/// Full-space dense propagator built without sector blocking. Serial and
/// O(4^N) per period; a baseline for tests and benchmarks.
class DenseFloquet {
  public:
    DenseFloquet(const ChainParams& params, const DisorderRealization& disorder);

    void period(std::span<cplx> psi, const PeriodPhase& ac) const;

  private:
    ChainParams params_;
    Eigen::MatrixXcd free_;
};

} // namespace reference

} // namespace pftc
