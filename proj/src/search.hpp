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

#ifndef FERMENC_SEARCH_HPP
#define FERMENC_SEARCH_HPP

#include <functional>
#include <optional>

#include "enumerate.hpp"
#include "symplectic.hpp"

namespace fermenc {

enum class SearchStatus { Found, NoSolution, Inconclusive };

struct FoundEncoding {
    EncodingMatrix enc;
    std::vector<int> weights;
    std::vector<int> costs;
    int max_weight = 0;
    int max_cost = 0;
    long long cost_sum = 0;
};

struct SearchStats {
    uint64_t nodes = 0;
    uint64_t completions = 0;
    uint64_t rejected_by_distance = 0;
    size_t candidates = 0;
    bool exhausted = false;
    uint64_t priced = 0;
    uint64_t cost_weight_violations = 0;
    uint64_t elapsed_ms = 0;
};

struct SearchResult {
    SearchStatus status = SearchStatus::NoSolution;
    std::optional<FoundEncoding> best;
    SearchStats stats;
};

using ProgressFn = std::function<void(uint64_t nodes, int depth, int incumbent_cost)>;

// Depth-first assignment of Pauli columns in stream order, pruning branches
// whose next column cannot beat the incumbent's maximum column cost. Returns
// the minimum-max-cost encoding within the parameter class, or certifies
// that none exists by exhausting the candidate tree. Node or time limits
// abort with Inconclusive. Deterministic: with equal inputs the same
// encoding is reported, also when jobs > 1.
SearchResult branch_and_bound(const FermionicSystem& sys, const HardwareCell& cell, const SearchParams& params,
                              const ProgressFn& progress = nullptr);

// Same search restricted to weight >= 2 candidates, discarding completed
// encodings that fail the distance-2 scan. Rejections do not tighten the
// bound.
SearchResult search_error_detecting(const FermionicSystem& sys, const HardwareCell& cell,
                                    const SearchParams& params, const ProgressFn& progress = nullptr);

}  // namespace fermenc

#endif
