// Copyright 2026 fermenc Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "catalog.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "search.hpp"
#include "stabilizer.hpp"

using namespace fermenc;
namespace oracle = fermenc::testing;

namespace {

Exp e2(int x, int y) {
    Exp e = exp_zero();
    e[0] = x;
    e[1] = y;
    return e;
}

FermionicSystem random_tiny_system(std::mt19937& rng) {
    FermionicSystem sys;
    sys.dims = 2;
    sys.modes = 1 + static_cast<int>(rng() % 2);
    int J = 2 + static_cast<int>(rng() % 2);
    sys.tau = PolyMat(2 * sys.modes, J, 2);
    std::uniform_int_distribution<int> rowd(0, 2 * sys.modes - 1);
    std::uniform_int_distribution<int> expd(0, 1);
    for (int j = 0; j < J; ++j) {
        PolyVec col(2 * sys.modes, 2);
        int placed = 0;
        while (placed < 2) {
            int r = rowd(rng);
            Exp e = e2(expd(rng), expd(rng));
            if (col[r].contains(e)) continue;
            col[r] = col[r] + Poly::monomial(e, 2);
            ++placed;
        }
        sys.tau.set_col(j, col);
        sys.op_names.push_back("f" + std::to_string(j));
        sys.op_phases.push_back(Phase::minus_i());
    }
    return sys;
}

HardwareCell random_tiny_cell(std::mt19937& rng) {
    int n = 1 + static_cast<int>(rng() % 2);
    std::vector<HardwareEdge> edges;
    std::vector<HardwareEdge> pool;
    if (n == 2) pool.push_back({0, 1, e2(0, 0)});
    pool.push_back({0, 0, e2(1, 0)});
    pool.push_back({0, 0, e2(0, 1)});
    pool.push_back({n - 1, n - 1, e2(1, 0)});
    pool.push_back({n - 1, 0, e2(0, 1)});
    for (const auto& e : pool)
        if (rng() % 2 == 0) edges.push_back(e);
    if (edges.empty()) edges.push_back(pool[0]);
    return HardwareCell::create(2, n, edges);
}

}  // namespace

TEST_CASE("square-lattice search finds the cost-2 optimum") {
    const FermionicSystem& sys = find_system("square1")->system;
    const HardwareCell& cell = find_cell("square2")->cell;
    SearchParams p;  // defaults: range 1, max_weight 3, max_cost 2
    SearchResult r = branch_and_bound(sys, cell, p);
    REQUIRE(r.status == SearchStatus::Found);
    CHECK(r.best->max_cost == 2);
    CHECK(r.best->max_weight == 3);
    CHECK(r.best->cost_sum == 5);
    CHECK(check_encoding(sys, r.best->enc));
    CHECK(r.stats.exhausted);
    CHECK(r.stats.cost_weight_violations == 0);
}

TEST_CASE("search is deterministic and parallel mode agrees") {
    const FermionicSystem& sys = find_system("square1")->system;
    const HardwareCell& cell = find_cell("square2")->cell;
    SearchParams p;
    SearchResult a = branch_and_bound(sys, cell, p);
    SearchResult b = branch_and_bound(sys, cell, p);
    REQUIRE(a.status == SearchStatus::Found);
    REQUIRE(b.status == SearchStatus::Found);
    CHECK(a.best->enc.sigma == b.best->enc.sigma);
    SearchParams pj = p;
    pj.jobs = 3;
    SearchResult c = branch_and_bound(sys, cell, pj);
    REQUIRE(c.status == SearchStatus::Found);
    CHECK(c.best->enc.sigma == a.best->enc.sigma);
}

TEST_CASE("unsatisfiable instance exhausts to NoSolution") {
    const FermionicSystem& sys = find_system("square1")->system;
    // One disconnected qubit per cell and zero cost budget cannot host the
    // anticommuting pairs.
    HardwareCell cell = HardwareCell::create(2, 1, {{0, 0, e2(1, 1)}});
    SearchParams p;
    p.max_cost = 0;
    p.max_weight = 1;
    SearchResult r = branch_and_bound(sys, cell, p);
    CHECK(r.status == SearchStatus::NoSolution);
    CHECK(r.stats.exhausted);
}

TEST_CASE("node limit aborts as inconclusive, never as no-solution") {
    const FermionicSystem& sys = find_system("triang1")->system;
    const HardwareCell& cell = find_cell("tilted-square2")->cell;
    SearchParams p;
    p.node_limit = 5;
    SearchResult r = branch_and_bound(sys, cell, p);
    CHECK(r.status == SearchStatus::Inconclusive);
    CHECK_FALSE(r.stats.exhausted);
}

TEST_CASE("error-detecting search on the square lattice returns the detecting optimum") {
    const FermionicSystem& sys = find_system("square1")->system;
    const HardwareCell& cell = find_cell("square2")->cell;
    SearchParams p;
    SearchResult r = search_error_detecting(sys, cell, p);
    REQUIRE(r.status == SearchStatus::Found);
    CHECK(r.best->max_cost == 2);
    for (int w : r.best->weights) CHECK(w >= 2);
    StabilizerAnalysis a = analyze_encoding(sys, r.best->enc, 3);
    CHECK(a.distance.flag != DistanceFlag::No);
}

TEST_CASE("branch and bound equals unbounded exhaustive enumeration on tiny instances") {
    std::mt19937 rng(20260810);
    int done = 0;
    for (int it = 0; done < 12 && it < 60; ++it) {
        FermionicSystem sys = random_tiny_system(rng);
        HardwareCell cell = random_tiny_cell(rng);
        SearchParams p;
        p.range = 1;
        p.max_weight = 2;
        p.max_cost = 1 + static_cast<int>(rng() % 2);
        p.clifford_dedup = false;  // the oracle enumerates without dedup
        CostOracle co(cell, p.margin);
        if (enumerate_candidates(cell, p, co).items.size() > 220) continue;  // keep the oracle affordable
        ++done;
        auto slow = oracle::exhaustive_best_cost(sys, cell, p);
        SearchResult fast = branch_and_bound(sys, cell, p);
        INFO("instance " << it);
        if (slow.has_value()) {
            REQUIRE(fast.status == SearchStatus::Found);
            CHECK(fast.best->max_cost == *slow);
        } else {
            CHECK(fast.status == SearchStatus::NoSolution);
        }
    }
    CHECK(done >= 8);
}

TEST_CASE("most-constrained column order finds the same optimum") {
    const FermionicSystem& sys = find_system("square1")->system;
    const HardwareCell& cell = find_cell("square2")->cell;
    SearchParams p;
    p.column_order = ColumnOrder::MostConstrained;
    SearchResult r = branch_and_bound(sys, cell, p);
    REQUIRE(r.status == SearchStatus::Found);
    CHECK(r.best->max_cost == 2);
    CHECK(check_encoding(sys, r.best->enc));
}

TEST_CASE("weight-ordered streaming mode reaches the same optimum") {
    const FermionicSystem& sys = find_system("square1")->system;
    const HardwareCell& cell = find_cell("square2")->cell;
    SearchParams p;
    p.cache_limit = 1;  // force the weight-major stream
    SearchResult r = branch_and_bound(sys, cell, p);
    REQUIRE(r.status == SearchStatus::Found);
    CHECK(r.best->max_cost == 2);
}
