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

#include <vector>

#include <Eigen/Dense>

#include "pftc/basis.hpp"
#include "pftc/chain.hpp"
#include "pftc/disorder.hpp"

namespace pftc {

/// H0 restricted to the sector with k up spins, in the sector's basis order.
struct SectorMatrix {
    int k = 0;
    Eigen::MatrixXcd matrix;
};

/// Assemble the static Hamiltonian block by block:
///
///   H0 = J1 sum_{i<N} S_i.S_{i+1} + J2 sum_{i<N-1} S_i.S_{i+2}
///        - sum_i h_i S_i^z + D sum_{i<N} (S_i x S_{i+1})_z
///
/// with S = sigma/2 on an open chain. The DMI runs over the same N-1 bonds
/// as J1. Blocks are exactly real when D = 0.
std::vector<SectorMatrix> build_hamiltonian(const ChainParams& params, const DisorderRealization& disorder,
                                            const BasisIndexing& basis);

/// Re-embed sector blocks into the full 2^N computational basis.
Eigen::MatrixXcd embed_sectors(const std::vector<SectorMatrix>& sectors, const BasisIndexing& basis);

/// Largest |A_ij - conj(A_ji)|.
double hermiticity_defect(const Eigen::MatrixXcd& a);

} // namespace pftc
