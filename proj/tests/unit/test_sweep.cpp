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

#include <bit>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "pftc/checkpoint.hpp"
#include "pftc/errors.hpp"
#include "pftc/sweep.hpp"
#include "tempdir.hpp"

using namespace pftc;
using pftc::testing::TempDir;

namespace {

SweepGrid small_grid() {
    SweepGrid g;
    g.axes = {{"h", {1.0, 7.0}}, {"phi", {2.9, 3.05, 3.1}}};
    g.base.N = 4;
    g.options.t_max = 60;
    g.options.ac = ACFieldParams{};
    g.realizations = 40; // three chunks per cell
    g.seed = 77;
    return g;
}

bool same_bits(double a, double b) { return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b); }

void check_same(const SweepResult& a, const SweepResult& b) {
    REQUIRE(a.complete);
    REQUIRE(b.complete);
    REQUIRE(a.cells.size() == b.cells.size());
    for (std::size_t c = 0; c < a.cells.size(); ++c) {
        for (auto o : {Observable::sz, Observable::entanglement, Observable::coherence, Observable::qfi}) {
            const auto ma = a.cells[c].stats.mean(o);
            const auto mb = b.cells[c].stats.mean(o);
            const auto ea = a.cells[c].stats.standard_error(o);
            const auto eb = b.cells[c].stats.standard_error(o);
            for (std::size_t i = 0; i < ma.size(); ++i) {
                CHECK(same_bits(ma[i], mb[i]));
                CHECK(same_bits(ea[i], eb[i]));
            }
        }
        CHECK(a.cells[c].summary.lifetime.periods == b.cells[c].summary.lifetime.periods);
        CHECK(same_bits(a.cells[c].summary.ent_sat, b.cells[c].summary.ent_sat));
        CHECK(same_bits(a.cells[c].summary.max_qfi_ratio, b.cells[c].summary.max_qfi_ratio));
    }
}

} // namespace

TEST_SUITE("sweep") {
TEST_CASE("grid validation") {
    auto g = small_grid();
    CHECK_NOTHROW(g.validate());
    CHECK(g.cell_count() == 6);
    CHECK(g.coordinates(0) == std::vector<double>{1.0, 2.9});
    CHECK(g.coordinates(4) == std::vector<double>{7.0, 3.05});
    CHECK(g.cell_params(5).h == 7.0);
    CHECK(g.cell_params(5).phi == 3.1);

    auto bad = g;
    bad.axes.push_back({"D", {0.0}});
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = g;
    bad.axes[1].name = "h";
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = g;
    bad.axes[0].name = "omega";
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = g;
    bad.axes[0].values.clear();
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = g;
    bad.axes[0].values[0] = INFINITY;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = g;
    bad.axes[0] = {"N", {4.5}};
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = g;
    bad.axes[0] = {"h", {-1.0}};
    CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("1x1 grid equals run_ensemble") {
    SweepGrid g;
    g.axes = {{"h", {7.0}}};
    g.base.N = 4;
    g.options.t_max = 50;
    g.realizations = 20;
    g.seed = 3;
    const auto r = run_sweep(g, {});
    REQUIRE(r.cells.size() == 1);
    auto p = g.base;
    p.h = 7.0;
    const auto direct = run_ensemble(p, g.options, 20, 3);
    const auto a = r.cells[0].stats.mean(Observable::sz);
    const auto b = direct.mean(Observable::sz);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(same_bits(a[i], b[i]));
    }
}

TEST_CASE("kill and resume is bit-identical to an uninterrupted sweep") {
    const auto g = small_grid();
    const auto reference = run_sweep(g, {1, {}, {}});

    TempDir dir;
    for (std::int64_t stop : {1, 4, 7}) {
        TempDir ck;
        SweepControl interrupted{2, ck.path(), stop};
        const auto partial = run_sweep(g, interrupted);
        CHECK_FALSE(partial.complete);
        CHECK(partial.cells.empty());
        CHECK(partial.chunks_computed == stop);
        const auto resumed = run_sweep(g, {3, ck.path(), {}});
        CHECK(resumed.chunks_computed == 6 * 3 - stop);
        check_same(reference, resumed);

        // resuming a finished sweep does no work
        const auto again = run_sweep(g, {1, ck.path(), {}});
        CHECK(again.chunks_computed == 0);
        check_same(reference, again);
    }
}

TEST_CASE("a checkpoint from a different grid is refused") {
    TempDir ck;
    auto g = small_grid();
    run_sweep(g, {0, ck.path(), 2});
    g.seed += 1;
    CHECK_THROWS_AS(run_sweep(g, {0, ck.path(), {}}), CheckpointError);
    g = small_grid();
    g.options.t_max = 61;
    CHECK_THROWS_AS(run_sweep(g, {0, ck.path(), {}}), CheckpointError);
}

TEST_CASE("corrupt cell files are detected") {
    TempDir ck;
    const auto g = small_grid();
    run_sweep(g, {0, ck.path(), 2});
    const auto cell = ck / "cell_0.bin";
    REQUIRE(std::filesystem::exists(cell));
    {
        std::fstream f(cell, std::ios::in | std::ios::out | std::ios::binary);
        f.seekp(100);
        f.put('\x5a');
    }
    CHECK_THROWS_AS(run_sweep(g, {0, ck.path(), {}}), CheckpointError);

    TempDir other;
    run_sweep(g, {0, other.path(), 1});
    std::ofstream(other / "cell_0.bin", std::ios::binary | std::ios::trunc) << "not a checkpoint";
    CHECK_THROWS_AS(run_sweep(g, {0, other.path(), {}}), CheckpointError);
}

TEST_CASE("checkpoint round trip") {
    TempDir dir;
    TrajectoryOptions o;
    o.t_max = 30;
    o.ac = ACFieldParams{};
    ChainParams p;
    p.N = 4;
    CellCheckpoint ck;
    ck.grid_hash = 0x1234;
    ck.cell_index = 3;
    ck.completed = 9;
    ck.stats = run_ensemble(p, o, 9, 1);
    write_cell_checkpoint(dir / "c.bin", ck);
    const auto back = read_cell_checkpoint(dir / "c.bin", 0x1234);
    REQUIRE(back);
    CHECK(back->completed == 9);
    CHECK(back->cell_index == 3);
    const auto a = ck.stats.mean(Observable::qfi);
    const auto b = back->stats.mean(Observable::qfi);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(same_bits(a[i], b[i]));
    }
    CHECK_FALSE(read_cell_checkpoint(dir / "missing.bin", 0x1234));
    CHECK_THROWS_AS(read_cell_checkpoint(dir / "c.bin", 0x9999), CheckpointError);
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}
}
