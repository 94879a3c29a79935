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
#include "pftc/chain.hpp"

#include <cmath>
#include <string>

#include "pftc/errors.hpp"

namespace pftc {

void ChainParams::validate() const {
    if (N < 1) {
        throw DomainError("chain length N must be >= 1, got " + std::to_string(N));
    }
    for (double v : {J1, J2, D, h, phi, T}) {
        if (!std::isfinite(v)) {
            throw DomainError("chain parameters must be finite");
        }
    }
    if (T <= 0.0) {
        throw DomainError("drive period T must be > 0");
    }
    if (h < 0.0) {
        throw DomainError("disorder half-width h must be >= 0");
    }
}

void to_json(nlohmann::json& j, const ChainParams& p) {
    j = nlohmann::json{{"N", p.N},   {"J1", p.J1},   {"J2", p.J2}, {"D", p.D},
                       {"h", p.h},   {"phi", p.phi}, {"T", p.T},   {"boundary", "open"}};
}

void from_json(const nlohmann::json& j, ChainParams& p) {
    j.at("N").get_to(p.N);
    j.at("J1").get_to(p.J1);
    j.at("J2").get_to(p.J2);
    j.at("D").get_to(p.D);
    j.at("h").get_to(p.h);
    j.at("phi").get_to(p.phi);
    j.at("T").get_to(p.T);
    if (j.contains("boundary") && j.at("boundary").get<std::string>() != "open") {
        throw DomainError("only open boundaries are supported");
    }
    p.boundary = Boundary::open;
}

} // namespace pftc
