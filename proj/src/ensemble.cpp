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
#include "pftc/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>

#include <omp.h>

#include "pftc/errors.hpp"

namespace pftc {
namespace {

double median(std::vector<double> v) {
    if (v.empty()) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    std::sort(v.begin(), v.end());
    const std::size_t mid = v.size() / 2;
    return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

double peak_ratio(const TrajectoryRecord& rec) {
    double best = 0.0;
    for (std::size_t i = 0; i < rec.qfi.size(); ++i) {
        if (rec.times[i] > 0) {
            best = std::max(best, sql_ratio(rec.qfi[i], rec.params.N, rec.times[i] * rec.params.T));
        }
    }
    return best;
}

} // namespace

EnsembleStatistics EnsembleStatistics::empty(int N, double T, std::vector<std::int64_t> times, bool has_qfi) {
    EnsembleStatistics s;
    s.N = N;
    s.T = T;
    s.has_qfi = has_qfi;
    const std::size_t n = times.size();
    s.times = std::move(times);
    s.sz.resize(n);
    s.entanglement.resize(n);
    s.coherence.resize(n);
    if (has_qfi) {
        s.qfi.resize(n);
    }
    return s;
}

void EnsembleStatistics::add(const TrajectoryRecord& record) {
    if (record.times != times || record.params.N != N || (has_qfi != !record.qfi.empty())) {
        throw DimensionError("trajectory does not match the ensemble layout");
    }
    for (std::size_t i = 0; i < times.size(); ++i) {
        sz[i].add(record.sz[i]);
        entanglement[i].add(record.entanglement[i]);
        coherence[i].add(record.coherence[i]);
        if (has_qfi) {
            qfi[i].add(record.qfi[i]);
        }
    }
    realization_lifetimes.push_back(record.lifetime);
    realization_peak_qfi_ratio.push_back(has_qfi ? peak_ratio(record) : std::numeric_limits<double>::quiet_NaN());
}

const std::vector<RunningMoments>& EnsembleStatistics::moments(Observable o) const {
    switch (o) {
    case Observable::sz:
        return sz;
    case Observable::entanglement:
        return entanglement;
    case Observable::coherence:
        return coherence;
    case Observable::qfi:
        return qfi;
    }
    return sz;
}

std::vector<double> EnsembleStatistics::mean(Observable o) const {
    const auto& m = moments(o);
    std::vector<double> out(m.size());
    std::transform(m.begin(), m.end(), out.begin(), [](const RunningMoments& r) { return r.mean(); });
    return out;
}

std::vector<double> EnsembleStatistics::standard_error(Observable o) const {
    const auto& m = moments(o);
    std::vector<double> out(m.size());
    std::transform(m.begin(), m.end(), out.begin(), [](const RunningMoments& r) { return r.standard_error(); });
    return out;
}

std::vector<double> EnsembleStatistics::qfi_ratio() const {
    std::vector<double> out(times.size(), 0.0);
    if (!has_qfi) {
        return out;
    }
    for (std::size_t i = 0; i < times.size(); ++i) {
        out[i] = sql_ratio(qfi[i].mean(), N, static_cast<double>(times[i]) * T);
    }
    return out;
}

CellSummary summarize(const EnsembleStatistics& stats, double epsilon, std::int64_t t_max,
                      const SaturationWindow& window) {
    CellSummary out;
    const auto sz = stats.mean(Observable::sz);
    out.lifetime = lifetime(sz, stats.times, epsilon, t_max);
    out.ent_sat = saturation_average(stats.mean(Observable::entanglement), stats.times, window);
    out.coh_sat = saturation_average(stats.mean(Observable::coherence), stats.times, window);

    if (stats.has_qfi) {
        const auto ratio = stats.qfi_ratio();
        out.max_qfi_ratio = 0.0;
        for (std::size_t i = 0; i < ratio.size(); ++i) {
            if (stats.times[i] > 0 && ratio[i] > out.max_qfi_ratio) {
                out.max_qfi_ratio = ratio[i];
                out.argmax_t = stats.times[i];
            }
        }
        out.median_peak_qfi_ratio = median(stats.realization_peak_qfi_ratio);
    } else {
        out.max_qfi_ratio = std::numeric_limits<double>::quiet_NaN();
        out.median_peak_qfi_ratio = std::numeric_limits<double>::quiet_NaN();
    }

    std::vector<double> lifetimes;
    lifetimes.reserve(stats.realization_lifetimes.size());
    for (const auto& l : stats.realization_lifetimes) {
        lifetimes.push_back(static_cast<double>(l.periods));
    }
    out.median_realization_lifetime = median(std::move(lifetimes));
    return out;
}

void extend_ensemble(EnsembleStatistics& stats, const ChainParams& params, const TrajectoryOptions& options,
                     std::uint64_t seed, std::int64_t begin, std::int64_t end, int workers) {
    if (begin < 0 || end < begin) {
        throw DomainError("invalid realization range");
    }
    const int threads = workers > 0 ? workers : omp_get_max_threads();
    std::vector<TrajectoryRecord> chunk;
    for (std::int64_t lo = begin; lo < end; lo += kRealizationChunk) {
        const std::int64_t hi = std::min(end, lo + kRealizationChunk);
        chunk.assign(static_cast<std::size_t>(hi - lo), TrajectoryRecord{});
        std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
        for (std::int64_t r = lo; r < hi; ++r) {
            try {
                const auto disorder = make_disorder(params.N, params.h, seed, static_cast<std::uint64_t>(r));
                chunk[static_cast<std::size_t>(r - lo)] = run_trajectory(params, disorder, options);
            } catch (...) {
#pragma omp critical(pftc_ensemble_failure)
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
        if (failure) {
            std::rethrow_exception(failure);
        }
        for (const auto& rec : chunk) {
            stats.add(rec);
        }
    }
}

EnsembleStatistics run_ensemble(const ChainParams& params, const TrajectoryOptions& options, std::int64_t R,
                                std::uint64_t seed, int workers) {
    if (R < 1) {
        throw DomainError("ensemble needs R >= 1");
    }
    params.validate();
    options.validate();
    auto stats = EnsembleStatistics::empty(params.N, params.T, record_times(options.t_max, options.stride),
                                           options.ac.has_value());
    extend_ensemble(stats, params, options, seed, 0, R, workers);
    return stats;
}

EnsembleStatistics run_ensemble_serial(const ChainParams& params, const TrajectoryOptions& options,
                                       std::int64_t R, std::uint64_t seed) {
    if (R < 1) {
        throw DomainError("ensemble needs R >= 1");
    }
    auto stats = EnsembleStatistics::empty(params.N, params.T, record_times(options.t_max, options.stride),
                                           options.ac.has_value());
    for (std::int64_t r = 0; r < R; ++r) {
        stats.add(run_trajectory(params, make_disorder(params.N, params.h, seed, static_cast<std::uint64_t>(r)),
                                 options));
    }
    return stats;
}

} // namespace pftc
