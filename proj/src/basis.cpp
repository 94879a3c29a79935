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
#include "pftc/basis.hpp"

#include <array>
#include <mutex>
#include <string>

#include "pftc/errors.hpp"

namespace pftc {

BasisIndexing::BasisIndexing(int N) : n_(N) {
    if (N < 1 || N > kMaxSites) {
        throw CapacityError("chain length " + std::to_string(N) + " outside supported range [1, " +
                            std::to_string(kMaxSites) + "]");
    }
    const std::size_t dim = dimension();
    sectors_.resize(static_cast<std::size_t>(N) + 1);
    position_.resize(dim);
    for (std::size_t s = 0; s < dim; ++s) {
        auto& sec = sectors_[static_cast<std::size_t>(sector_of(static_cast<BasisState>(s)))];
        position_[s] = static_cast<std::uint32_t>(sec.size());
        sec.push_back(static_cast<BasisState>(s));
    }
}

BasisIndexing build_basis(int N) { return BasisIndexing(N); }

std::shared_ptr<const BasisIndexing> shared_basis(int N) {
    static std::mutex mutex;
    static std::array<std::shared_ptr<const BasisIndexing>, kMaxSites + 1> cache;
    if (N < 1 || N > kMaxSites) {
        return std::make_shared<const BasisIndexing>(N); // throws CapacityError
    }
    std::lock_guard lock(mutex);
    auto& slot = cache[static_cast<std::size_t>(N)];
    if (!slot) {
        slot = std::make_shared<const BasisIndexing>(N);
    }
    return slot;
}

} // namespace pftc
