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

/// Streaming mean and second central moment (Welford).
///
/// Feeding identical values keeps m2 exactly zero, so a disorder-free
/// ensemble reports a standard error of exactly 0.
class RunningMoments {
  public:
    void add(double x) noexcept {
        ++count_;
        const double delta = x - mean_;
        mean_ += delta / static_cast<double>(count_);
        m2_ += delta * (x - mean_);
    }

    /// Chan et al. pairwise combination. Exact only up to rounding, so
    /// callers merge in a fixed order when bitwise reproducibility matters.
    void merge(const RunningMoments& other) noexcept;

    std::int64_t count() const noexcept { return count_; }
    double mean() const noexcept { return mean_; }
    double m2() const noexcept { return m2_; }

    /// Sample standard deviation / sqrt(count); 0 when count < 2.
    double standard_error() const noexcept;

    static RunningMoments from_raw(std::int64_t count, double mean, double m2) noexcept {
        RunningMoments r;
        r.count_ = count;
        r.mean_ = mean;
        r.m2_ = m2;
        return r;
    }

  private:
    std::int64_t count_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

} // namespace pftc
