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

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace pftc {

/// Largest chain the dense per-sector machinery accepts.
inline constexpr int kMaxSites = 14;

/// Basis convention: bit i of a basis index is site i+1, bit value 1 is spin up.
using BasisState = std::uint32_t;

/// Computational basis grouped by total S_z.
///
/// Sector k holds the C(N,k) bitstrings with k up spins, in ascending order.
/// `position(s)` gives the offset of bitstring s inside its sector, whose
/// label is popcount(s).
class BasisIndexing {
  public:
    explicit BasisIndexing(int N);

    int sites() const noexcept { return n_; }
    std::size_t dimension() const noexcept { return std::size_t{1} << n_; }
    int sector_count() const noexcept { return n_ + 1; }

    std::span<const BasisState> sector(int k) const { return sectors_.at(static_cast<std::size_t>(k)); }
    std::size_t sector_size(int k) const { return sector(k).size(); }

    std::uint32_t position(BasisState s) const { return position_[s]; }
    static int sector_of(BasisState s) noexcept { return __builtin_popcount(s); }

    /// Eigenvalue of sum_i S_i^z on sector k.
    double total_sz(int k) const noexcept { return k - 0.5 * n_; }

  private:
    int n_;
    std::vector<std::vector<BasisState>> sectors_;
    std::vector<std::uint32_t> position_;
};

/// Throws CapacityError when N is outside [1, kMaxSites].
BasisIndexing build_basis(int N);

/// Process-wide cached basis for N sites; thread-safe.
std::shared_ptr<const BasisIndexing> shared_basis(int N);

} // namespace pftc
