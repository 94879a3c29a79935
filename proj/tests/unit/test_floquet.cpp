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
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "pftc/disorder.hpp"
#include "pftc/errors.hpp"
#include "pftc/floquet.hpp"
#include "pftc/hamiltonian.hpp"
#include "pftc/kernels.hpp"
#include "pftc/observables.hpp"
#include "pftc/trotter.hpp"

using namespace pftc;
using namespace pftc::testing;
using std::numbers::pi;

namespace {

// Composite Simpson integral of h_ac sin(omega t + theta) over one period.
double quadrature_phase(const ACFieldParams& ac, std::int64_t n, double T) {
    const int m = 2000;
    const double a = static_cast<double>(n) * T;
    const double dx = T / m;
    double s = 0.0;
    for (int i = 0; i <= m; ++i) {
        const double w = (i == 0 || i == m) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        s += w * std::sin(ac.omega * (a + i * dx) + ac.theta);
    }
    return ac.h_ac * s * dx / 3.0;
}

ChainParams pftc_params(int N) {
    ChainParams p;
    p.N = N;
    p.J1 = -1.0;
    p.J2 = 0.25;
    p.D = 0.3;
    p.h = 7.0;
    p.phi = 3.05;
    return p;
}

ACFieldParams generic_ac() { return {0.37, 1.3, 0.4}; }

StateVector evolve(const FloquetPropagator& prop, const ACFieldParams& ac, int periods, StateVector s) {
    for (int n = 0; n < periods; ++n) {
        s = evolve_period(prop, ac, n, s);
    }
    return s;
}

} // namespace

TEST_SUITE("floquet") {
TEST_CASE("AC period phase closed forms") {
    const double T = 0.8;
    ACFieldParams resonant{0.9, pi / T, 0.0};
    for (std::int64_t n = 0; n < 7; ++n) {
        const auto ph = ac_period_phase(resonant, n, T);
        CHECK(ph.phase == doctest::Approx(0.9 * (2 * T / pi) * (n % 2 ? -1.0 : 1.0)).epsilon(1e-13));
        CHECK(ph.gain == doctest::Approx((2 * T / pi) * (n % 2 ? -1.0 : 1.0)).epsilon(1e-13));
    }
    ACFieldParams off{0.0, 1.7, 0.2};
    CHECK(ac_period_phase(off, 3, T).phase == 0.0);
    ACFieldParams full{1.0, 2 * pi / T, 0.0};
    for (std::int64_t n = 0; n < 5; ++n) {
        CHECK(std::abs(ac_period_phase(full, n, T).phase) <= 1e-14);
    }
    CHECK_THROWS_AS(ac_period_phase(off, -1, T), DomainError);
}

TEST_CASE("AC period phase matches quadrature") {
    for (const ACFieldParams ac : {ACFieldParams{0.37, 1.3, 0.4}, ACFieldParams{2.0, 0.0, 1.1},
                                   ACFieldParams{1.0, 9.0, -2.0}}) {
        for (std::int64_t n : {0, 1, 5, 100}) {
            CHECK(ac_period_phase(ac, n, 0.7).phase == doctest::Approx(quadrature_phase(ac, n, 0.7)).epsilon(1e-10));
        }
    }
}

TEST_CASE("eigendecomposition is orthonormal and reconstructs each block") {
    for (int N : {2, 5, 8}) {
        const auto p = pftc_params(N);
        const auto d = make_disorder(N, p.h, 7, 0);
        const auto basis = shared_basis(N);
        const auto blocks = build_hamiltonian(p, d, *basis);
        const FloquetPropagator prop(p, basis, blocks);
        double hnorm = 0.0;
        for (const auto& b : blocks) {
            hnorm = std::max(hnorm, b.matrix.norm());
        }
        CHECK(prop.orthonormality_defect() <= 1e-10);
        CHECK(prop.reconstruction_defect(blocks) <= 1e-9 * hnorm);
    }
}

TEST_CASE("an eigenstate of H0 only picks up its phase") {
    auto p = pftc_params(5);
    p.phi = 0.0;
    const auto d = make_disorder(5, p.h, 1, 2);
    const FloquetPropagator prop(p, d);
    const auto& sec = prop.sectors()[2];
    for (Eigen::Index c : {Eigen::Index{0}, sec.vectors.cols() - 1}) {
        std::vector<cplx> amps(prop.dimension(), 0.0);
        for (std::size_t r = 0; r < sec.states.size(); ++r) {
            amps[sec.states[r]] = sec.vectors(static_cast<Eigen::Index>(r), c);
        }
        const StateVector s(5, amps);
        const auto out = evolve_period(prop, ACFieldParams{}, 0, s);
        const cplx ph = std::polar(1.0, -sec.energies(c) * p.T);
        for (std::size_t i = 0; i < amps.size(); ++i) {
            CHECK(std::abs(out[i] - ph * amps[i]) <= 1e-12);
        }
    }
}

TEST_CASE("pure kick flips the polarized state") {
    ChainParams p;
    p.N = 4;
    p.J1 = p.J2 = p.D = p.h = 0.0;
    p.phi = pi;
    const FloquetPropagator prop(p, zero_disorder(4));
    const auto out = evolve_period(prop, ACFieldParams{}, 0, StateVector::basis_state(4, 0xF));
    CHECK(std::abs(std::abs(out[0]) - 1.0) <= 1e-12);
}

TEST_CASE("engine equals the matrix-exponential propagator") {
    std::mt19937_64 rng(8);
    for (int N : {1, 3, 5}) {
        const auto p = pftc_params(N);
        const auto fields = random_fields(N, p.h, rng);
        const FloquetPropagator prop(p, realization_from(fields));
        const reference::DenseFloquet dense(p, realization_from(fields));
        const auto ac = generic_ac();
        StateVector s = prepare_initial_state(N, pi / 16);
        Vec v = to_eigen(s.amplitudes());
        std::vector<cplx> w(s.amplitudes().begin(), s.amplitudes().end());
        for (int n = 0; n < 10; ++n) {
            s = evolve_period(prop, ac, n, s);
            v = expm_period(p, fields, quadrature_phase(ac, n, p.T)) * v;
            dense.period(w, ac_period_phase(ac, n, p.T));
        }
        CHECK(state_distance(s.amplitudes(), to_std(v)) <= 1e-9);
        CHECK(state_distance(s.amplitudes(), w) <= 1e-11);
    }
}

TEST_CASE("Trotter oracle at N=4, h=7 and M=4096") {
    const auto p = pftc_params(4);
    const auto d = make_disorder(4, 7.0, 3, 1);
    const FloquetPropagator prop(p, d);
    const auto s0 = prepare_initial_state(4, pi / 16);
    const auto exact = evolve(prop, generic_ac(), 1, s0);
    const auto trot = trotter_oracle(p, d, generic_ac(), 1, 4096, s0);
    CHECK(state_distance(exact.amplitudes(), trot.amplitudes()) <= 1e-8);
}

TEST_CASE("Trotter converges at second order") {
    const auto p = pftc_params(4);
    const auto d = make_disorder(4, 7.0, 3, 2);
    const FloquetPropagator prop(p, d);
    const auto s0 = prepare_initial_state(4, pi / 16);
    const auto ac = ACFieldParams{1.5, 2.1, 0.3};
    const auto exact = evolve(prop, ac, 3, s0);
    std::vector<double> err;
    for (int m : {512, 1024, 2048}) {
        err.push_back(state_distance(exact.amplitudes(), trotter_oracle(p, d, ac, 3, m, s0).amplitudes()));
    }
    CHECK(err[0] / err[1] == doctest::Approx(4.0).epsilon(0.05));
    CHECK(err[1] / err[2] == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("Trotter is exact without an AC signal") {
    const auto p = pftc_params(5);
    const auto d = make_disorder(5, 7.0, 4, 0);
    const FloquetPropagator prop(p, d);
    const auto s0 = prepare_initial_state(5, 0.3);
    for (int m : {1, 7, 64}) {
        const auto t = trotter_oracle(p, d, ACFieldParams{}, 4, m, s0);
        CHECK(state_distance(evolve(prop, ACFieldParams{}, 4, s0).amplitudes(), t.amplitudes()) <= 1e-12);
    }
}

TEST_CASE("two-spin singlet-triplet precession") {
    // |up,down> = (|T0> + |S>)/sqrt2; energies J/4 and -3J/4 give
    // <up,down|psi(t)> = e^{iJt/4} cos(J t / 2) with bit 0 = site 1 up.
    ChainParams p;
    p.N = 2;
    p.J1 = 0.8;
    p.J2 = p.D = p.h = 0.0;
    p.phi = 0.0;
    p.T = 0.3;
    const auto s0 = StateVector::basis_state(2, 0b01);
    const FloquetPropagator prop(p, zero_disorder(2));
    StateVector s = s0;
    for (int n = 1; n <= 12; ++n) {
        s = evolve_period(prop, ACFieldParams{}, n - 1, s);
        const double t = n * p.T;
        const cplx stay = std::polar(1.0, p.J1 * t / 4) * std::cos(p.J1 * t / 2);
        const cplx swap = std::polar(1.0, p.J1 * t / 4) * cplx(0.0, -std::sin(p.J1 * t / 2));
        CHECK(std::abs(s[0b01] - stay) <= 1e-12);
        CHECK(std::abs(s[0b10] - swap) <= 1e-12);
        const auto t4 = trotter_oracle(p, zero_disorder(2), ACFieldParams{}, n, 3, s0);
        CHECK(std::abs(t4[0b01] - stay) <= 1e-12);
    }
}

TEST_CASE("derivative matches central finite differences") {
    const int N = 4;
    const auto p = pftc_params(N);
    const auto d = make_disorder(N, 7.0, 5, 0);
    const FloquetPropagator prop(p, d);
    ACFieldParams ac{0.0, pi / p.T, 0.2};
    const double delta = 1e-5;
    auto plus = ac, minus = ac;
    plus.h_ac += delta;
    minus.h_ac -= delta;
    auto pair = DerivativePair::from_state(prepare_initial_state(N, pi / 16));
    StateVector sp = pair.psi, sm = pair.psi;
    for (int n = 0; n < 60; ++n) {
        pair = evolve_period_with_derivative(prop, ac, n, pair);
        sp = evolve_period(prop, plus, n, sp);
        sm = evolve_period(prop, minus, n, sm);
        std::vector<cplx> fd(pair.dpsi.size());
        for (std::size_t i = 0; i < fd.size(); ++i) {
            fd[i] = (sp[i] - sm[i]) / (2 * delta);
        }
        double diff = 0, ref = 0;
        for (std::size_t i = 0; i < fd.size(); ++i) {
            diff += std::norm(fd[i] - pair.dpsi[i]);
            ref += std::norm(fd[i]);
        }
        CHECK(std::sqrt(diff / ref) <= 1e-4);
        const double F = qfi(pair);
        const double Ffd = qfi(pair.psi.amplitudes(), fd);
        CHECK(std::abs(F - Ffd) <= 1e-4 * Ffd);
    }
}

TEST_CASE("derivative stays zero when the AC phase vanishes") {
    const auto p = pftc_params(4);
    const FloquetPropagator prop(p, make_disorder(4, 7.0, 6, 0));
    ACFieldParams ac{0.0, 2 * pi / p.T, 0.0};
    auto pair = DerivativePair::from_state(prepare_initial_state(4, pi / 16));
    for (int n = 0; n < 20; ++n) {
        pair = evolve_period_with_derivative(prop, ac, n, pair);
    }
    CHECK(squared_norm(pair.dpsi) <= 1e-28);
}

TEST_CASE("single-spin echo accumulates QFI (2t/pi)^2") {
    ChainParams p;
    p.N = 1;
    p.J1 = p.J2 = p.D = p.h = 0.0;
    p.phi = pi;
    const FloquetPropagator prop(p, zero_disorder(1));
    ACFieldParams ac{0.0, pi / p.T, 0.0};
    const double r = 1.0 / std::sqrt(2.0);
    auto pair = DerivativePair::from_state(StateVector(1, {r, r}));
    for (int n = 1; n <= 50; ++n) {
        pair = evolve_period_with_derivative(prop, ac, n - 1, pair);
        const double t = n * p.T;
        CHECK(qfi(pair) == doctest::Approx(std::pow(2 * t / pi, 2)).epsilon(1e-12));
    }
}

TEST_CASE("inverse period undoes 100 periods") {
    const auto p = pftc_params(6);
    const FloquetPropagator prop(p, make_disorder(6, 7.0, 2, 9));
    const auto ac = generic_ac();
    const auto s0 = prepare_initial_state(6, pi / 16);
    auto s = evolve(prop, ac, 100, s0);
    for (int n = 99; n >= 0; --n) {
        s = evolve_period_inverse(prop, ac, n, s);
    }
    CHECK(state_distance(s.amplitudes(), s0.amplitudes()) <= 1e-9);
}

TEST_CASE("kick angle is defined modulo 2 pi up to a global phase") {
    auto p = pftc_params(5);
    const auto d = make_disorder(5, 7.0, 3, 3);
    auto q = p;
    q.phi += 2 * pi;
    const FloquetPropagator a(p, d), b(q, d);
    const auto s0 = prepare_initial_state(5, pi / 16);
    const auto sa = evolve(a, generic_ac(), 17, s0);
    const auto sb = evolve(b, generic_ac(), 17, s0);
    CHECK(std::abs(fidelity(sa.amplitudes(), sb.amplitudes()) - 1.0) <= 1e-12);
}

TEST_CASE("norm is preserved for 1e5 periods") {
    const auto p = pftc_params(4);
    const FloquetPropagator prop(p, make_disorder(4, 7.0, 1, 1));
    FloquetStepper step(prop);
    const auto ac = generic_ac();
    auto s = prepare_initial_state(4, pi / 16);
    std::vector<cplx> amps(s.amplitudes().begin(), s.amplitudes().end());
    double worst = 0.0;
    for (std::int64_t n = 0; n < 100000; ++n) {
        step.period(amps, ac_period_phase(ac, n, p.T));
        if (n % 1000 == 999) {
            worst = std::max(worst, std::abs(std::sqrt(squared_norm(amps)) - 1.0));
        }
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("stepper sample points") {
    const auto p = pftc_params(4);
    const FloquetPropagator prop(p, make_disorder(4, 7.0, 1, 1));
    FloquetStepper step(prop);
    const auto s0 = prepare_initial_state(4, 0.4);
    std::vector<cplx> a(s0.amplitudes().begin(), s0.amplitudes().end());
    const auto ph = ac_period_phase(generic_ac(), 0, p.T);
    step.free_evolve(a, ph);
    step.kick(a);
    CHECK(state_distance(a, evolve_period(prop, generic_ac(), 0, s0).amplitudes()) <= 1e-14);
}
}
