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
#include <vector>

namespace pftc {

/// Counter-based uniform variate in [0, 1) keyed by (seed, stream, counter).
///
/// Stateless: the value depends only on the key, so draws can be produced
/// in any order and on any thread.
double keyed_uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) noexcept;

/// One draw of the random z-fields h_i^z, uniform on [-h, h].
struct DisorderRealization {
    std::vector<double> fields;
    std::uint64_t seed = 0;
    std::uint64_t index = 0;
};

/// Site i of realization `index` uses keyed_uniform(seed, index, i), so a
/// given site's unit draw is shared across chain lengths and disorder widths.
DisorderRealization make_disorder(int N, double h, std::uint64_t seed, std::uint64_t index);

/// All-zero fields, for clean-chain runs and tests.
DisorderRealization zero_disorder(int N);

} // namespace pftc
