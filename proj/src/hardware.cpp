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

#include "hardware.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>
#include <set>

namespace fermenc {

HardwareCell HardwareCell::create(int dims, int qubits, std::vector<HardwareEdge> raw_edges) {
    if (dims < 1 || dims > kMaxDims) throw std::invalid_argument("dims must be in [1, 4]");
    if (qubits < 1) throw std::invalid_argument("cell needs at least one qubit");
    std::set<HardwareEdge> canon;
    for (HardwareEdge e : raw_edges) {
        if (e.q1 < 0 || e.q1 >= qubits || e.q2 < 0 || e.q2 >= qubits)
            throw std::invalid_argument("edge qubit index out of range");
        if (e.q1 == e.q2 && e.offset == exp_zero()) throw std::invalid_argument("self-loop edge");
        HardwareEdge flipped{e.q2, e.q1, exp_neg(e.offset)};
        canon.insert(std::min(e, flipped));
    }
    HardwareCell c;
    c.dims = dims;
    c.qubits = qubits;
    c.edges.assign(canon.begin(), canon.end());
    return c;
}

std::vector<Exp> Box::cells() const {
    std::vector<Exp> out;
    out.reserve(static_cast<size_t>(cell_count()));
    Exp cur = lo;
    while (true) {
        out.push_back(cur);
        int d = dims - 1;
        while (d >= 0) {
            if (++cur[d] <= hi[d]) break;
            cur[d] = lo[d];
            --d;
        }
        if (d < 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

int PatchGraph::vertex_id(const CellVertex& v) const {
    if (!region.contains(v.cell) || v.qubit < 0 || v.qubit >= qubits) return -1;
    long long pos = 0;
    for (int d = 0; d < dims; ++d) pos = pos * (region.hi[d] - region.lo[d] + 1) + (v.cell[d] - region.lo[d]);
    return static_cast<int>(pos * qubits + v.qubit);
}

PatchGraph tile(const HardwareCell& cell, const Box& region) {
    if (region.dims != cell.dims) throw std::invalid_argument("region dims mismatch");
    if (region.cell_count() < 1) throw std::invalid_argument("empty region");
    PatchGraph g;
    g.dims = cell.dims;
    g.qubits = cell.qubits;
    g.region = region;
    g.vertex_count = static_cast<int>(region.cell_count() * cell.qubits);
    g.adj.assign(g.vertex_count, {});
    for (const Exp& c : region.cells()) {
        for (const HardwareEdge& e : cell.edges) {
            CellVertex a{e.q1, c};
            CellVertex b{e.q2, exp_add(c, e.offset)};
            int ia = g.vertex_id(a);
            int ib = g.vertex_id(b);
            if (ia < 0 || ib < 0) continue;
            g.adj[ia].push_back(ib);
            g.adj[ib].push_back(ia);
        }
    }
    for (auto& nbrs : g.adj) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return g;
}

std::optional<int> steiner_cost(const PatchGraph& g, const std::vector<int>& terminals) {
    if (terminals.empty()) throw std::invalid_argument("steiner_cost needs at least one terminal");
    std::vector<int> ts(terminals.begin(), terminals.end());
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    for (int t : ts)
        if (t < 0 || t >= g.vertex_count) throw std::invalid_argument("terminal outside graph");
    const int t = static_cast<int>(ts.size());
    if (t == 1) return 0;

    const int V = g.vertex_count;
    const int INF = std::numeric_limits<int>::max() / 4;
    const uint32_t full = (1u << t) - 1;
    // dp[S][v]: min edges of a tree containing terminal subset S and vertex v.
    std::vector<std::vector<int>> dp(full + 1, std::vector<int>(V, INF));
    for (int i = 0; i < t; ++i) dp[1u << i][ts[i]] = 0;

    for (uint32_t S = 1; S <= full; ++S) {
        auto& cur = dp[S];
        // Merge two subtrees at a shared vertex.
        for (uint32_t T = (S - 1) & S; T > 0; T = (T - 1) & S) {
            if (T < (S ^ T)) break;  // each unordered split once
            const auto& a = dp[T];
            const auto& b = dp[S ^ T];
            for (int v = 0; v < V; ++v) {
                if (a[v] == INF || b[v] == INF) continue;
                cur[v] = std::min(cur[v], a[v] + b[v]);
            }
        }
        // Grow the tree along edges; unit weights make this a BFS relaxation.
        std::deque<int> q;
        std::vector<std::vector<int>> buckets;
        for (int v = 0; v < V; ++v)
            if (cur[v] < INF) {
                if (static_cast<size_t>(cur[v]) >= buckets.size()) buckets.resize(cur[v] + 1);
                buckets[cur[v]].push_back(v);
            }
        for (size_t level = 0; level < buckets.size(); ++level) {
            for (size_t idx = 0; idx < buckets[level].size(); ++idx) {
                int v = buckets[level][idx];
                if (cur[v] != static_cast<int>(level)) continue;
                for (int u : g.adj[v]) {
                    if (cur[u] > cur[v] + 1) {
                        cur[u] = cur[v] + 1;
                        if (static_cast<size_t>(cur[u]) >= buckets.size()) buckets.resize(cur[u] + 1);
                        buckets[cur[u]].push_back(u);
                    }
                }
            }
        }
    }
    int best = INF;
    for (int v = 0; v < V; ++v) best = std::min(best, dp[full][v]);
    if (best >= INF) return std::nullopt;
    return best;
}

CostOracle::CostOracle(HardwareCell cell, int margin) : cell_(std::move(cell)), margin_(margin) {
    if (margin < 0) throw std::invalid_argument("margin must be >= 0");
}

namespace {

// Translation-normalized memo key of a support pattern.
std::string support_key(std::vector<CellVertex> support, int dims) {
    std::sort(support.begin(), support.end());
    Exp base = support.front().cell;
    for (const CellVertex& v : support)
        for (int d = 0; d < dims; ++d) base[d] = std::min(base[d], v.cell[d]);
    std::string key;
    key.reserve(support.size() * 10);
    for (const CellVertex& v : support) {
        key += std::to_string(v.qubit);
        for (int d = 0; d < dims; ++d) {
            key += ',';
            key += std::to_string(v.cell[d] - base[d]);
        }
        key += ';';
    }
    return key;
}

}  // namespace

std::optional<int> CostOracle::compute(const std::vector<CellVertex>& support) const {
    Box box;
    box.dims = cell_.dims;
    box.lo = support.front().cell;
    box.hi = support.front().cell;
    for (const CellVertex& v : support)
        for (int d = 0; d < cell_.dims; ++d) {
            box.lo[d] = std::min(box.lo[d], v.cell[d]);
            box.hi[d] = std::max(box.hi[d], v.cell[d]);
        }
    for (int d = 0; d < cell_.dims; ++d) {
        box.lo[d] -= margin_;
        box.hi[d] += margin_;
    }
    PatchGraph g = tile(cell_, box);
    std::vector<int> terminals;
    terminals.reserve(support.size());
    for (const CellVertex& v : support) terminals.push_back(g.vertex_id(v));
    return steiner_cost(g, terminals);
}

std::optional<int> CostOracle::cost(const std::vector<CellVertex>& support) {
    if (support.empty()) return 0;
    for (const CellVertex& v : support)
        if (v.qubit < 0 || v.qubit >= cell_.qubits) throw std::invalid_argument("support qubit out of range");
    std::string key = support_key(support, cell_.dims);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) {
            ++priced_;
            return it->second;
        }
    }
    std::optional<int> c = compute(support);
    std::set<CellVertex> distinct(support.begin(), support.end());
    std::lock_guard<std::mutex> lock(mu_);
    ++priced_;
    if (c.has_value() && *c < static_cast<int>(distinct.size()) - 1) ++violations_;
    memo_.emplace(std::move(key), c);
    return c;
}

std::vector<CellVertex> pauli_support(const PolyVec& col, int qubits) {
    if (col.size() != 2 * qubits) throw std::invalid_argument("column length mismatch");
    std::set<CellVertex> sites;
    for (int q = 0; q < qubits; ++q) {
        for (const Exp& e : col[q].terms()) sites.insert({q, e});
        for (const Exp& e : col[q + qubits].terms()) sites.insert({q, e});
    }
    return {sites.begin(), sites.end()};
}

std::optional<int> pauli_cost(const PolyVec& col, int qubits, const HardwareCell& cell, int margin) {
    CostOracle oracle(cell, margin);
    return oracle.cost(pauli_support(col, qubits));
}

}  // namespace fermenc
