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

#ifndef FERMENC_ENUMERATE_HPP
#define FERMENC_ENUMERATE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hardware.hpp"
#include "poly.hpp"

namespace fermenc {

enum class ColumnOrder { Input, MostConstrained };

struct SearchParams {
    int range = 1;       // Chebyshev radius of candidate support in cells
    int max_weight = 3;
    int min_weight = 1;
    int max_cost = 2;
    int margin = 2;      // extra cells around the support box when pricing
    int region = 3;      // patch side for stabilizer extraction
    bool clifford_dedup = true;
    bool error_detection = false;
    int jobs = 1;
    ColumnOrder column_order = ColumnOrder::Input;
    uint64_t cache_limit = 5'000'000;  // above this the stream stays weight-ordered
    uint64_t node_limit = 0;           // 0 = unlimited
    uint64_t time_limit_ms = 0;        // 0 = unlimited

    void validate() const;
};

// One acted-on site of a candidate Pauli. code = 2*x + z, i.e. Z=1, X=2, Y=3.
struct CandSite {
    Exp cell = exp_zero();
    int qubit = 0;
    uint8_t code = 0;

    bool operator==(const CandSite& o) const { return cell == o.cell && qubit == o.qubit && code == o.code; }
};

struct Candidate {
    std::vector<CandSite> sites;  // sorted by (cell, qubit)
    int weight = 0;
    int cost = 0;
    bool canonical = true;  // representative under per-qubit letter relabeling
};

// The candidate stream: all Pauli columns with nonempty home-cell support,
// support within the Chebyshev range, weight and cost within bounds. Sorted
// by (cost, weight, site pattern) when small enough to pre-order, otherwise
// by (weight, site pattern) with the same filters applied.
struct CandidateList {
    int dims = 0;
    int qubits = 0;
    bool cost_sorted = true;
    std::vector<Candidate> items;
};

CandidateList enumerate_candidates(const HardwareCell& cell, const SearchParams& params, CostOracle& oracle);

// Support of the commutation polynomial between two candidates: the sorted
// offsets k at which `a` anticommutes with `b` shifted by k. Exact; candidate
// supports are finite so no windowing is involved.
std::vector<Exp> omega_support(const Candidate& a, const Candidate& b);

// Self-commutation pattern omega(c, c).
std::vector<Exp> self_omega_support(const Candidate& c);

// Candidates of the stream grouped by their commutation polynomial with the
// anchor. The group under the empty key commutes with every translate.
std::map<std::vector<Exp>, std::vector<int>> commutation_partition(const CandidateList& cands,
                                                                   const Candidate& anchor);

// Deterministic site-pattern order used as the final tie break.
bool pattern_less(const Candidate& a, const Candidate& b);

PolyVec candidate_to_column(const Candidate& c, int qubits, int dims);
std::vector<CellVertex> candidate_support(const Candidate& c);

}  // namespace fermenc

#endif
