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

#ifndef FERMENC_HARDWARE_HPP
#define FERMENC_HARDWARE_HPP

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "poly.hpp"

namespace fermenc {

// A qubit site relative to the home cell.
struct CellVertex {
    int qubit = 0;
    Exp cell = exp_zero();

    bool operator==(const CellVertex& o) const { return qubit == o.qubit && cell == o.cell; }
    bool operator<(const CellVertex& o) const {
        if (cell != o.cell) return cell < o.cell;
        return qubit < o.qubit;
    }
};

// Coupler between qubit q1 of the home cell and qubit q2 of the cell at
// `offset`. Stored canonically: a raw edge with two offsets is shifted so
// the first is zero, and of the two equivalent orientations the
// lexicographically smaller (q1, q2, offset) is kept.
struct HardwareEdge {
    int q1 = 0;
    int q2 = 0;
    Exp offset = exp_zero();

    bool operator==(const HardwareEdge& o) const { return q1 == o.q1 && q2 == o.q2 && offset == o.offset; }
    bool operator<(const HardwareEdge& o) const {
        if (q1 != o.q1) return q1 < o.q1;
        if (q2 != o.q2) return q2 < o.q2;
        return offset < o.offset;
    }
};

// Translationally invariant connectivity: `qubits` per cell and a canonical
// edge set that tiles the lattice.
struct HardwareCell {
    int dims = 0;
    int qubits = 0;
    std::vector<HardwareEdge> edges;

    // Normalizes, deduplicates and validates raw edges. Throws on self-loops.
    static HardwareCell create(int dims, int qubits, std::vector<HardwareEdge> raw_edges);
};

// Axis-aligned box of cell offsets, inclusive bounds.
struct Box {
    int dims = 0;
    Exp lo = exp_zero();
    Exp hi = exp_zero();

    bool contains(const Exp& c) const {
        for (int d = 0; d < dims; ++d)
            if (c[d] < lo[d] || c[d] > hi[d]) return false;
        return true;
    }
    long long cell_count() const {
        long long n = 1;
        for (int d = 0; d < dims; ++d) n *= (hi[d] - lo[d] + 1);
        return n;
    }
    // Cells in lexicographic order.
    std::vector<Exp> cells() const;
};

// A hardware cell tiled over a finite region with open boundaries: edges are
// present only when both endpoints fall inside the region.
struct PatchGraph {
    int dims = 0;
    int qubits = 0;
    Box region;
    int vertex_count = 0;
    std::vector<std::vector<int>> adj;

    // Vertex id of (qubit, cell), or -1 when the cell is outside the region.
    int vertex_id(const CellVertex& v) const;
};

PatchGraph tile(const HardwareCell& cell, const Box& region);

// Exact minimum edge count of a connected subtree containing all terminals
// (Dreyfus-Wagner over terminal subsets), or nullopt when the terminals span
// disconnected components. Throws on an empty terminal set or ids outside
// the graph.
std::optional<int> steiner_cost(const PatchGraph& g, const std::vector<int>& terminals);

// Prices Pauli supports on a hardware cell: the terminals are the support
// sites, the graph is the support bounding box grown by `margin` cells in
// every direction. Costs are memoized per support pattern up to translation,
// so the many translates priced by the enumerator hit the cache. Thread safe.
class CostOracle {
  public:
    CostOracle(HardwareCell cell, int margin);

    // Empty support (identity column) costs 0 by convention.
    std::optional<int> cost(const std::vector<CellVertex>& support);

    const HardwareCell& cell() const { return cell_; }
    int margin() const { return margin_; }

    // Audit counters for the cost >= weight - 1 inequality.
    uint64_t priced_count() const { return priced_; }
    uint64_t inequality_violations() const { return violations_; }

  private:
    std::optional<int> compute(const std::vector<CellVertex>& support) const;

    HardwareCell cell_;
    int margin_;
    std::unordered_map<std::string, std::optional<int>> memo_;
    uint64_t priced_ = 0;
    uint64_t violations_ = 0;
    std::mutex mu_;
};

// Support sites of a Pauli column (rows 0..n-1 X block, n..2n-1 Z block).
std::vector<CellVertex> pauli_support(const PolyVec& col, int qubits);

// One-off convenience around CostOracle.
std::optional<int> pauli_cost(const PolyVec& col, int qubits, const HardwareCell& cell, int margin);

}  // namespace fermenc

#endif
