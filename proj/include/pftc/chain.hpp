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

#include <json.hpp>

namespace pftc {

enum class Boundary { open };

/// Static couplings and drive settings of the kicked chain.
///
/// Units: hbar = 1, energies in units of |J1|, times in units of 1/|J1|.
/// The DMI strength D is the product of the electric field and the
/// magnetoelectric coupling; only the product enters the model.
struct ChainParams {
    int N = 8;
    double J1 = -1.0;
    double J2 = 0.25;
    double D = 0.0;
    double h = 1.0;   ///< disorder half-width, fields drawn from [-h, h]
    double phi = 3.05; ///< kick angle about x
    double T = 1.0;   ///< drive period
    Boundary boundary = Boundary::open;

    /// Throws DomainError if N < 1, T <= 0, h < 0 or any value is non-finite.
    void validate() const;

    friend bool operator==(const ChainParams&, const ChainParams&) = default;
};

void to_json(nlohmann::json& j, const ChainParams& p);
void from_json(const nlohmann::json& j, ChainParams& p);

} // namespace pftc
