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
#include "pftc/disorder.hpp"

#include <string>

#include "pftc/errors.hpp"

namespace pftc {
namespace {

// splitmix64 finalizer
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

double keyed_uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) noexcept {
    std::uint64_t key = mix64(seed);
    key = mix64(key ^ (stream * 0xd1b54a32d192ed03ULL));
    key = mix64(key ^ (counter * 0xaef17502108ef2d9ULL));
    return static_cast<double>(key >> 11) * 0x1.0p-53;
}

DisorderRealization make_disorder(int N, double h, std::uint64_t seed, std::uint64_t index) {
    if (N < 1) {
        throw DomainError("disorder needs N >= 1, got " + std::to_string(N));
    }
    if (!(h >= 0.0)) {
        throw DomainError("disorder half-width must be >= 0");
    }
    DisorderRealization d;
    d.seed = seed;
    d.index = index;
    d.fields.resize(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) {
        const double u = keyed_uniform(seed, index, static_cast<std::uint64_t>(i));
        // u in [0,1): field in [-h, h); h * (2u - 1) never leaves the interval
        d.fields[static_cast<std::size_t>(i)] = h * (2.0 * u - 1.0);
    }
    return d;
}

DisorderRealization zero_disorder(int N) {
    DisorderRealization d;
    d.fields.assign(static_cast<std::size_t>(N), 0.0);
    return d;
}

} // namespace pftc
