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

#include <algorithm>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "pftc/basis.hpp"
#include "pftc/errors.hpp"
#include "pftc/hamiltonian.hpp"
#include "pftc/trotter.hpp"

using namespace pftc;
using namespace pftc::testing;

namespace {

ChainParams random_params(int N, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    ChainParams p;
    p.N = N;
    p.J1 = u(rng);
    p.J2 = u(rng);
    p.D = u(rng);
    p.h = std::abs(u(rng)) * 4.0;
    return p;
}

Mat assembled(const ChainParams& p, const std::vector<double>& fields) {
    const auto basis = build_basis(p.N);
    return embed_sectors(build_hamiltonian(p, realization_from(fields), basis), basis);
}

double max_abs(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

} // namespace

TEST_SUITE("hamiltonian") {
TEST_CASE("two-site Heisenberg spectrum is singlet plus triplet") {
    ChainParams p;
    p.N = 2;
    p.J1 = 1.0;
    p.J2 = 0.0;
    p.D = 0.0;
    const Mat H = assembled(p, {0.0, 0.0});
    Eigen::SelfAdjointEigenSolver<Mat> es(H);
    const auto e = es.eigenvalues();
    CHECK(e(0) == doctest::Approx(-0.75).epsilon(1e-14));
    for (int i = 1; i < 4; ++i) {
        CHECK(e(i) == doctest::Approx(0.25).epsilon(1e-14));
    }
}

TEST_CASE("Zeeman diagonal") {
    ChainParams p;
    p.N = 2;
    p.J1 = p.J2 = p.D = 0.0;
    const double h1 = 0.3, h2 = -1.7;
    const Mat H = assembled(p, {h1, h2});
    CHECK(H(3, 3).real() == doctest::Approx(-(h1 + h2) / 2));
    CHECK(H(0, 0).real() == doctest::Approx((h1 + h2) / 2));
}

TEST_CASE("three-site spectrum with DMI matches the Kronecker oracle") {
    std::mt19937_64 rng(3);
    ChainParams p;
    p.N = 3;
    p.J1 = -1.0;
    p.J2 = 0.25;
    p.D = 0.5;
    const auto fields = random_fields(3, 1.0, rng);
    const Mat A = assembled(p, fields);
    const Mat K = kron_hamiltonian(p, fields);
    CHECK(max_abs(A - K) <= 1e-12);
    Eigen::SelfAdjointEigenSolver<Mat> ea(A), ek(K);
    CHECK((ea.eigenvalues() - ek.eigenvalues()).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("sector assembly equals the Kronecker oracle for random draws") {
    std::mt19937_64 rng(11);
    for (int draw = 0; draw < 20; ++draw) {
        const int N = 2 + draw % 5;
        const auto p = random_params(N, rng);
        const auto fields = random_fields(N, p.h, rng);
        const Mat K = kron_hamiltonian(p, fields);
        const Mat A = assembled(p, fields);
        CHECK(max_abs(A - K) <= 1e-12);
        const Mat Z = total(Axis::z, N);
        CHECK(max_abs(K * Z - Z * K) <= 1e-12);
        CHECK(hermiticity_defect(A) <= 1e-12);
        // second dense construction, bitwise rather than Kronecker
        CHECK(max_abs(dense_hamiltonian(p, realization_from(fields)) - K) <= 1e-12);
    }
}

TEST_CASE("every sector block is Hermitian and D = 0 blocks are real") {
    std::mt19937_64 rng(5);
    for (int N : {2, 5, 8}) {
        auto p = random_params(N, rng);
        const auto basis = build_basis(N);
        for (const auto& b : build_hamiltonian(p, realization_from(random_fields(N, 3.0, rng)), basis)) {
            CHECK(hermiticity_defect(b.matrix) <= 1e-12);
        }
        p.D = 0.0;
        for (const auto& b : build_hamiltonian(p, realization_from(random_fields(N, 3.0, rng)), basis)) {
            CHECK(b.matrix.imag().cwiseAbs().maxCoeff() == 0.0);
        }
    }
}

TEST_CASE("dimension mismatches are reported") {
    ChainParams p;
    p.N = 4;
    const auto basis = build_basis(4);
    CHECK_THROWS_AS(build_hamiltonian(p, zero_disorder(3), basis), DimensionError);
    CHECK_THROWS_AS(build_hamiltonian(p, zero_disorder(4), build_basis(5)), DimensionError);
}
}
