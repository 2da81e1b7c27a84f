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
#include "hardware.hpp"
#include "oracles.hpp"

using namespace fermenc;
namespace oracle = fermenc::testing;

namespace {

Exp e2(int x, int y) {
    Exp e = exp_zero();
    e[0] = x;
    e[1] = y;
    return e;
}

Box box2(int x0, int y0, int x1, int y1) {
    Box b;
    b.dims = 2;
    b.lo = e2(x0, y0);
    b.hi = e2(x1, y1);
    return b;
}

const HardwareCell& square2() { return find_cell("square2")->cell; }

}  // namespace

TEST_CASE("edge normalization") {
    HardwareEdge raw{1, 0, e2(-1, 0)};
    HardwareCell c = HardwareCell::create(2, 2, {raw, {0, 1, e2(1, 0)}});
    CHECK(c.edges.size() == 1);  // the two orientations are the same coupler
    CHECK_THROWS_AS(HardwareCell::create(2, 2, {{0, 0, e2(0, 0)}}), std::invalid_argument);
    CHECK_THROWS_AS(HardwareCell::create(2, 1, {{0, 2, e2(0, 0)}}), std::invalid_argument);
}

TEST_CASE("tile counts vertices and edges") {
    PatchGraph g1 = tile(square2(), box2(0, 0, 0, 0));
    CHECK(g1.vertex_count == 2);
    int edges = 0;
    for (const auto& nbrs : g1.adj) edges += static_cast<int>(nbrs.size());
    CHECK(edges == 2);  // one intra-cell edge

    PatchGraph g9 = tile(square2(), box2(0, 0, 2, 2));
    CHECK(g9.vertex_count == 18);
    // Interior vertex degree matches the square lattice.
    int id = g9.vertex_id({1, e2(1, 1)});
    REQUIRE(id >= 0);
    CHECK(g9.adj[id].size() == 4);

    HardwareCell lonely = HardwareCell::create(2, 3, {{0, 1, e2(1, 0)}});
    PatchGraph g0 = tile(lonely, box2(0, 0, 0, 0));
    for (const auto& nbrs : g0.adj) CHECK(nbrs.empty());
}

TEST_CASE("steiner costs on hand instances") {
    PatchGraph g = tile(square2(), box2(0, 0, 2, 2));
    int a = g.vertex_id({0, e2(1, 1)});
    CHECK(steiner_cost(g, {a}) == 0);
    int b = g.vertex_id({1, e2(1, 1)});
    CHECK(steiner_cost(g, {a, b}) == 1);
    // An L of three vertices around a corner needs exactly two edges.
    int corner = g.vertex_id({0, e2(1, 1)});
    int up = g.vertex_id({0, e2(1, 2)});
    int right = g.vertex_id({1, e2(1, 1)});
    CHECK(steiner_cost(g, {up, corner, right}) == 2);
    CHECK_THROWS_AS(steiner_cost(g, {}), std::invalid_argument);
    CHECK_THROWS_AS(steiner_cost(g, {-1}), std::invalid_argument);
}

TEST_CASE("steiner detects disconnected terminals") {
    HardwareCell isolated = HardwareCell::create(2, 2, {{0, 0, e2(1, 0)}});
    PatchGraph g = tile(isolated, box2(0, 0, 1, 0));
    int a = g.vertex_id({0, e2(0, 0)});
    int b = g.vertex_id({1, e2(0, 0)});
    CHECK_FALSE(steiner_cost(g, {a, b}).has_value());
}

TEST_CASE("steiner agrees with edge-subset brute force") {
    std::mt19937 rng(42);
    for (int it = 0; it < 60; ++it) {
        int n = 5 + static_cast<int>(rng() % 8);  // up to 12 vertices
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 4 == 0) edges.push_back({i, j});
        if (edges.size() > 16) edges.resize(16);
        PatchGraph g;
        g.dims = 1;
        g.qubits = n;
        g.region = Box{1, exp_zero(), exp_zero()};
        g.vertex_count = n;
        g.adj.assign(n, {});
        for (auto [u, v] : edges) {
            g.adj[u].push_back(v);
            g.adj[v].push_back(u);
        }
        int t = 1 + static_cast<int>(rng() % 4);
        std::vector<int> terms;
        for (int i = 0; i < t; ++i) terms.push_back(static_cast<int>(rng() % n));
        auto fast = steiner_cost(g, terms);
        auto slow = oracle::steiner_brute(n, edges, terms);
        CHECK(fast == slow);
    }
}

TEST_CASE("pauli_cost on catalog data") {
    // Z0 Z1 on the home cell of the square lattice: adjacent, one edge.
    PolyVec v1(4, 2);
    v1[2] = Poly::one(2);
    v1[3] = Poly::one(2);
    CHECK(pauli_cost(v1, 2, square2(), 2) == 1);

    // Weight-one and identity columns are free.
    PolyVec single(4, 2);
    single[0] = Poly::one(2);
    CHECK(pauli_cost(single, 2, square2(), 2) == 0);
    CHECK(pauli_cost(PolyVec(4, 2), 2, square2(), 2) == 0);

    // The square-lattice solution columns cost (2, 2, 1).
    const GoldenEncoding* g = find_golden("square1-on-square2");
    REQUIRE(g != nullptr);
    std::vector<int> costs;
    for (const auto& col : g->sigma_cols) {
        PolyVec v(4, 2);
        for (int r = 0; r < 4; ++r) v[r] = parse_poly(col[r], 2);
        costs.push_back(*pauli_cost(v, 2, square2(), 2));
    }
    CHECK(costs == std::vector<int>{2, 2, 1});
}

TEST_CASE("pauli_cost is translation invariant") {
    std::mt19937 rng(5);
    CostOracle oracle_sq(square2(), 2);
    for (int it = 0; it < 40; ++it) {
        std::vector<CellVertex> support;
        int w = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < w; ++i)
            support.push_back({static_cast<int>(rng() % 2), e2(static_cast<int>(rng() % 3) - 1,
                                                               static_cast<int>(rng() % 3) - 1)});
        auto c0 = oracle_sq.cost(support);
        Exp k = e2(static_cast<int>(rng() % 5) - 2, static_cast<int>(rng() % 5) - 2);
        for (auto& s : support) s.cell = exp_add(s.cell, k);
        CHECK(oracle_sq.cost(support) == c0);
    }
}

TEST_CASE("cost dominates weight minus one") {
    std::mt19937 rng(11);
    for (const auto& cc : catalog_cells()) {
        CostOracle oracle_c(cc.cell, 2);
        for (int it = 0; it < 20; ++it) {
            std::vector<CellVertex> support;
            int w = 1 + static_cast<int>(rng() % 4);
            for (int i = 0; i < w; ++i)
                support.push_back({static_cast<int>(rng() % cc.cell.qubits),
                                   e2(static_cast<int>(rng() % 3) - 1, static_cast<int>(rng() % 3) - 1)});
            auto c = oracle_c.cost(support);
            if (!c.has_value()) continue;
            std::set<std::pair<int, int>> sites;
            for (const auto& s : support) sites.insert({s.qubit, s.cell[0] * 100 + s.cell[1]});
            CHECK(*c >= static_cast<int>(sites.size()) - 1);
        }
        CHECK(oracle_c.inequality_violations() == 0);
    }
}
