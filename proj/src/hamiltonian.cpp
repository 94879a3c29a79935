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
#include "pftc/hamiltonian.hpp"

#include <algorithm>
#include <complex>
#include <string>

#include "pftc/errors.hpp"

namespace pftc {
namespace {

struct Bond {
    int i;
    int j;
    double exchange;
    double dmi;
};

std::vector<Bond> chain_bonds(const ChainParams& p) {
    std::vector<Bond> bonds;
    for (int i = 0; i + 1 < p.N; ++i) {
        bonds.push_back({i, i + 1, p.J1, p.D});
    }
    for (int i = 0; i + 2 < p.N; ++i) {
        bonds.push_back({i, i + 2, p.J2, 0.0});
    }
    return bonds;
}

} // namespace

std::vector<SectorMatrix> build_hamiltonian(const ChainParams& params, const DisorderRealization& disorder,
                                            const BasisIndexing& basis) {
    if (static_cast<int>(disorder.fields.size()) != params.N || basis.sites() != params.N) {
        throw DimensionError("disorder has " + std::to_string(disorder.fields.size()) + " fields, basis has " +
                             std::to_string(basis.sites()) + " sites, chain has " + std::to_string(params.N));
    }
    const auto bonds = chain_bonds(params);

    std::vector<SectorMatrix> out;
    out.reserve(static_cast<std::size_t>(basis.sector_count()));
    for (int k = 0; k < basis.sector_count(); ++k) {
        const auto states = basis.sector(k);
        const auto dim = static_cast<Eigen::Index>(states.size());
        SectorMatrix block{k, Eigen::MatrixXcd::Zero(dim, dim)};

        for (Eigen::Index col = 0; col < dim; ++col) {
            const BasisState s = states[static_cast<std::size_t>(col)];
            double diag = 0.0;
            for (int i = 0; i < params.N; ++i) {
                const double sz = ((s >> i) & 1U) ? 0.5 : -0.5;
                diag -= disorder.fields[static_cast<std::size_t>(i)] * sz;
            }
            for (const Bond& b : bonds) {
                const bool up_i = (s >> b.i) & 1U;
                const bool up_j = (s >> b.j) & 1U;
                diag += (up_i == up_j ? 0.25 : -0.25) * b.exchange;
                if (up_i == up_j) {
                    continue;
                }
                // S+S- + S-S+ flips the pair with amplitude 1/2 each way.
                // (S_i x S_j)_z = (i/2)(S_i^+ S_j^- - S_i^- S_j^+).
                const BasisState flipped = s ^ ((BasisState{1} << b.i) | (BasisState{1} << b.j));
                const auto row = static_cast<Eigen::Index>(basis.position(flipped));
                const double dmi_sign = up_i ? -1.0 : 1.0;
                block.matrix(row, col) += std::complex<double>(0.5 * b.exchange, 0.5 * b.dmi * dmi_sign);
            }
            block.matrix(col, col) += diag;
        }
        out.push_back(std::move(block));
    }
    return out;
}

Eigen::MatrixXcd embed_sectors(const std::vector<SectorMatrix>& sectors, const BasisIndexing& basis) {
    const auto dim = static_cast<Eigen::Index>(basis.dimension());
    Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& block : sectors) {
        const auto states = basis.sector(block.k);
        for (std::size_t r = 0; r < states.size(); ++r) {
            for (std::size_t c = 0; c < states.size(); ++c) {
                full(states[r], states[c]) = block.matrix(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
            }
        }
    }
    return full;
}

double hermiticity_defect(const Eigen::MatrixXcd& a) {
    if (a.size() == 0) {
        return 0.0;
    }
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

} // namespace pftc
