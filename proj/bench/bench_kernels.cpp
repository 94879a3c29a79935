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

// Fast kernels against their serial references, and the OpenMP ensemble
// against the single-threaded loop.

#include <numbers>
#include <vector>

#include <benchmark/benchmark.h>

#include "pftc/disorder.hpp"
#include "pftc/ensemble.hpp"
#include "pftc/floquet.hpp"
#include "pftc/kernels.hpp"
#include "pftc/state.hpp"

namespace {

using namespace pftc;

ChainParams chain(int N) {
    ChainParams p;
    p.N = N;
    p.J1 = -1.0;
    p.J2 = 0.25;
    p.h = 7.0;
    p.phi = 3.05;
    return p;
}

std::vector<cplx> initial(int N) {
    const auto s = prepare_initial_state(N, std::numbers::pi / 16);
    return {s.amplitudes().begin(), s.amplitudes().end()};
}

void BM_Kick(benchmark::State& st) {
    const int N = static_cast<int>(st.range(0));
    auto v = initial(N);
    for (auto _ : st) {
        apply_kick_inplace(v, N, 3.05);
        benchmark::DoNotOptimize(v.data());
    }
}

void BM_KickReference(benchmark::State& st) {
    const int N = static_cast<int>(st.range(0));
    auto v = initial(N);
    for (auto _ : st) {
        reference::apply_kick_inplace(v, N, 3.05);
        benchmark::DoNotOptimize(v.data());
    }
}

void BM_ZPhase(benchmark::State& st) {
    const int N = static_cast<int>(st.range(0));
    auto v = initial(N);
    for (auto _ : st) {
        apply_z_phase_inplace(v, N, 0.3);
        benchmark::DoNotOptimize(v.data());
    }
}

void BM_ZPhaseReference(benchmark::State& st) {
    const int N = static_cast<int>(st.range(0));
    auto v = initial(N);
    for (auto _ : st) {
        reference::apply_z_phase_inplace(v, N, 0.3);
        benchmark::DoNotOptimize(v.data());
    }
}

void BM_SectorPeriod(benchmark::State& st) {
    const int N = static_cast<int>(st.range(0));
    const FloquetPropagator prop(chain(N), make_disorder(N, 7.0, 1, 0));
    FloquetStepper stepper(prop);
    const auto ac = ac_period_phase(ACFieldParams{0.1, std::numbers::pi, 0.0}, 0, 1.0);
    auto v = initial(N);
    for (auto _ : st) {
        stepper.period(v, ac);
        benchmark::DoNotOptimize(v.data());
    }
}

void BM_DensePeriod(benchmark::State& st) {
    const int N = static_cast<int>(st.range(0));
    const reference::DenseFloquet dense(chain(N), make_disorder(N, 7.0, 1, 0));
    const auto ac = ac_period_phase(ACFieldParams{0.1, std::numbers::pi, 0.0}, 0, 1.0);
    auto v = initial(N);
    for (auto _ : st) {
        dense.period(v, ac);
        benchmark::DoNotOptimize(v.data());
    }
}

TrajectoryOptions ensemble_options() {
    TrajectoryOptions opt;
    opt.t_max = 200;
    opt.ac = ACFieldParams{};
    return opt;
}

void BM_EnsembleParallel(benchmark::State& st) {
    const int N = static_cast<int>(st.range(0));
    for (auto _ : st) {
        benchmark::DoNotOptimize(run_ensemble(chain(N), ensemble_options(), 32, 1));
    }
}

void BM_EnsembleSerial(benchmark::State& st) {
    const int N = static_cast<int>(st.range(0));
    for (auto _ : st) {
        benchmark::DoNotOptimize(run_ensemble_serial(chain(N), ensemble_options(), 32, 1));
    }
}

BENCHMARK(BM_Kick)->DenseRange(4, 14, 2);
BENCHMARK(BM_KickReference)->DenseRange(4, 14, 2);
BENCHMARK(BM_ZPhase)->DenseRange(4, 14, 2);
BENCHMARK(BM_ZPhaseReference)->DenseRange(4, 14, 2);
BENCHMARK(BM_SectorPeriod)->DenseRange(4, 10, 2);
BENCHMARK(BM_DensePeriod)->DenseRange(4, 10, 2);
BENCHMARK(BM_EnsembleParallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EnsembleSerial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

} // namespace

BENCHMARK_MAIN();
