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
#include "pftc/observables.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pftc/errors.hpp"

namespace pftc {
namespace {

double entropy_bits(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

void check_amps(std::span<const cplx> amps, int N) {
    if (N < 1 || N > 30 || amps.size() != (std::size_t{1} << N)) {
        throw DimensionError("amplitude span does not match chain length");
    }
}

void check_cut(int N, int cut) {
    if (cut < 0 || cut > N) {
        throw DomainError("bipartition cut " + std::to_string(cut) + " outside [0, " + std::to_string(N) + "]");
    }
}

} // namespace

double magnetization(std::span<const cplx> amps, int N) {
    check_amps(amps, N);
    // Accumulate population per up-spin count, then weight once.
    double by_count[64] = {};
    for (std::size_t i = 0; i < amps.size(); ++i) {
        by_count[__builtin_popcountll(i)] += std::norm(amps[i]);
    }
    double m = 0.0;
    for (int k = 0; k <= N; ++k) {
        m += by_count[k] * (k - 0.5 * N);
    }
    return m / N;
}

double magnetization(const StateVector& state) { return magnetization(state.amplitudes(), state.sites()); }

double entanglement_entropy(std::span<const cplx> amps, int N, int cut) {
    check_amps(amps, N);
    check_cut(N, cut);
    const Eigen::Index rows = Eigen::Index{1} << cut;
    const Eigen::Index cols = Eigen::Index{1} << (N - cut);
    // Column-major map: element (a, b) sits at a + rows * b, i.e. the low
    // `cut` bits (sites 1..cut) index the row.
    const Eigen::Map<const Eigen::MatrixXcd> m(amps.data(), rows, cols);
    Eigen::MatrixXcd rho;
    if (rows <= cols) {
        rho.noalias() = m * m.adjoint();
    } else {
        rho.noalias() = m.adjoint() * m;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(rho, Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
        s += entropy_bits(eig.eigenvalues()(i));
    }
    return s;
}

double entanglement_entropy(const StateVector& state, int cut) {
    return entanglement_entropy(state.amplitudes(), state.sites(), cut);
}

double entanglement_entropy(const StateVector& state) {
    return entanglement_entropy(state, state.sites() / 2);
}

double entanglement_entropy_svd(std::span<const cplx> amps, int N, int cut) {
    check_amps(amps, N);
    check_cut(N, cut);
    const Eigen::Index rows = Eigen::Index{1} << cut;
    const Eigen::Index cols = Eigen::Index{1} << (N - cut);
    const Eigen::Map<const Eigen::MatrixXcd> m(amps.data(), rows, cols);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    double s = 0.0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
        const double sv = svd.singularValues()(i);
        s += entropy_bits(sv * sv);
    }
    return s;
}

double coherence(std::span<const cplx> amps) {
    double c = 0.0;
    for (const cplx& a : amps) {
        c += entropy_bits(std::norm(a));
    }
    return c;
}

double coherence(const StateVector& state) { return coherence(state.amplitudes()); }

double binary_entropy(double p) { return entropy_bits(p) + entropy_bits(1.0 - p); }

double qfi(std::span<const cplx> psi, std::span<const cplx> dpsi) {
    if (psi.size() != dpsi.size()) {
        throw DimensionError("qfi: state and derivative sizes differ");
    }
    const double f = 4.0 * (squared_norm(dpsi) - std::norm(inner(psi, dpsi)));
    if (f < -1e-10) {
        throw NumericalError("negative quantum Fisher information " + std::to_string(f) +
                             ": derivative state is inconsistent");
    }
    return std::max(f, 0.0);
}

double qfi(const DerivativePair& pair) { return qfi(pair.psi.amplitudes(), pair.dpsi); }

double sql_ratio(double F, int N, double t) {
    if (t == 0.0) {
        return 0.0;
    }
    const double scale = 2.0 * t / std::numbers::pi;
    return F / (N * scale * scale);
}

Lifetime lifetime(std::span<const double> magnitude, std::span<const std::int64_t> times, double epsilon,
                  std::int64_t cap) {
    if (magnitude.empty()) {
        throw DomainError("lifetime of an empty series");
    }
    if (magnitude.size() != times.size()) {
        throw DimensionError("lifetime: series and time axis lengths differ");
    }
    if (!(epsilon > 0.0)) {
        throw DomainError("lifetime threshold must be > 0");
    }
    for (std::size_t i = 0; i < magnitude.size() && times[i] <= cap; ++i) {
        if (std::abs(magnitude[i]) < epsilon) {
            return {times[i], false};
        }
    }
    return {cap, true};
}

Lifetime lifetime(std::span<const double> magnitude, double epsilon, std::int64_t cap) {
    std::vector<std::int64_t> times(magnitude.size());
    for (std::size_t i = 0; i < times.size(); ++i) {
        times[i] = static_cast<std::int64_t>(i);
    }
    return lifetime(magnitude, times, epsilon, cap);
}

SaturationWindow SaturationWindow::tail(std::int64_t t_max) {
    const auto t1 = static_cast<std::int64_t>(std::floor(0.8 * static_cast<double>(t_max)));
    return {std::min(t1, t_max - 1), t_max};
}

double saturation_average(std::span<const double> values, std::span<const std::int64_t> times,
                          const SaturationWindow& window) {
    if (values.size() != times.size()) {
        throw DimensionError("saturation_average: series and time axis lengths differ");
    }
    if (values.empty()) {
        throw DomainError("saturation_average of an empty series");
    }
    if (window.t1 < 0 || window.t1 >= window.t2) {
        throw DomainError("saturation window needs 0 <= t1 < t2");
    }
    if (window.t1 < times.front() || window.t2 > times.back()) {
        throw DomainError("saturation window [" + std::to_string(window.t1) + ", " + std::to_string(window.t2) +
                          "] outside series range [" + std::to_string(times.front()) + ", " +
                          std::to_string(times.back()) + "]");
    }
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (times[i] >= window.t1 && times[i] <= window.t2) {
            sum += values[i];
            ++count;
        }
    }
    if (count == 0) {
        throw DomainError("saturation window contains no samples");
    }
    return sum / static_cast<double>(count);
}

} // namespace pftc
