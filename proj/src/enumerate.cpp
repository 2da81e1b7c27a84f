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

#include "enumerate.hpp"

#include <algorithm>
#include <unordered_map>

namespace fermenc {

void SearchParams::validate() const {
    if (range < 0) throw std::invalid_argument("range must be >= 0");
    if (min_weight < 1) throw std::invalid_argument("min_weight must be >= 1");
    if (max_weight < min_weight) throw std::invalid_argument("max_weight must be >= min_weight");
    if (max_cost < 0) throw std::invalid_argument("max_cost must be >= 0");
    if (margin < 0) throw std::invalid_argument("margin must be >= 0");
    if (region < 1) throw std::invalid_argument("region must be >= 1");
    if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
}

namespace {

struct SiteDomain {
    std::vector<std::pair<Exp, int>> sites;  // (cell, qubit), lexicographic
    int home_begin = -1, home_end = -1;      // home-cell slice inside `sites`
};

SiteDomain make_domain(const HardwareCell& cell, int range) {
    Box box;
    box.dims = cell.dims;
    for (int d = 0; d < cell.dims; ++d) {
        box.lo[d] = -range;
        box.hi[d] = range;
    }
    SiteDomain dom;
    for (const Exp& c : box.cells())
        for (int q = 0; q < cell.qubits; ++q) dom.sites.push_back({c, q});
    for (size_t i = 0; i < dom.sites.size(); ++i) {
        if (dom.sites[i].first == exp_zero()) {
            if (dom.home_begin < 0) dom.home_begin = static_cast<int>(i);
            dom.home_end = static_cast<int>(i) + 1;
        }
    }
    return dom;
}

// Candidate count estimate used to decide whether the stream can be
// pre-ordered by cost: sum over weights of C(sites, w) * 3^w restricted to
// subsets touching the home cell.
double estimate_count(size_t sites, size_t home, int min_w, int max_w) {
    auto choose = [](size_t n, int k) {
        double v = 1.0;
        for (int i = 0; i < k; ++i) v = v * static_cast<double>(n - i) / (i + 1);
        return k >= 0 && static_cast<size_t>(k) <= n ? v : 0.0;
    };
    double total = 0.0, pw = 1.0;
    for (int w = 1; w <= max_w; ++w) {
        pw *= 3.0;
        if (w < min_w) continue;
        total += (choose(sites, w) - choose(sites - home, w)) * pw;
    }
    return total;
}

// Canonical representative under independent per-qubit relabelings of
// {X, Y, Z}: on each qubit the first letter met (in site order) becomes X
// and the second distinct letter becomes Z.
bool is_clifford_canonical(const Candidate& c, int qubits) {
    for (int q = 0; q < qubits; ++q) {
        uint8_t map[4] = {0, 0, 0, 0};
        int assigned = 0;
        for (const CandSite& s : c.sites) {
            if (s.qubit != q) continue;
            if (map[s.code] == 0) {
                if (assigned == 0)
                    map[s.code] = 2;  // X
                else if (assigned == 1)
                    map[s.code] = 1;  // Z
                else
                    map[s.code] = 3;  // Y
                ++assigned;
            }
            if (map[s.code] != s.code) return false;
        }
    }
    return true;
}

}  // namespace

bool pattern_less(const Candidate& a, const Candidate& b) {
    size_t i = 0, j = 0;
    while (i < a.sites.size() && j < b.sites.size()) {
        const CandSite& sa = a.sites[i];
        const CandSite& sb = b.sites[j];
        if (sa.cell == sb.cell && sa.qubit == sb.qubit) {
            if (sa.code != sb.code) return sa.code < sb.code;
            ++i;
            ++j;
            continue;
        }
        // The earlier domain position belongs to exactly one candidate; the
        // other holds identity (code 0) there and is smaller.
        bool a_earlier = sa.cell < sb.cell || (sa.cell == sb.cell && sa.qubit < sb.qubit);
        return !a_earlier;
    }
    if (i < a.sites.size()) return false;  // b is a strict prefix -> b smaller
    if (j < b.sites.size()) return true;
    return false;
}

CandidateList enumerate_candidates(const HardwareCell& cell, const SearchParams& params, CostOracle& oracle) {
    params.validate();
    SiteDomain dom = make_domain(cell, params.range);
    const int S = static_cast<int>(dom.sites.size());

    CandidateList out;
    out.dims = cell.dims;
    out.qubits = cell.qubits;
    out.cost_sorted =
        estimate_count(dom.sites.size(), cell.qubits, params.min_weight, params.max_weight) <=
        static_cast<double>(params.cache_limit);

    std::vector<int> pick;
    std::vector<CellVertex> support;
    auto emit_letterings = [&](int cost) {
        // All 3^w letter assignments over the chosen support, in code order.
        const int w = static_cast<int>(pick.size());
        std::vector<uint8_t> codes(w, 1);
        while (true) {
            Candidate c;
            c.weight = w;
            c.cost = cost;
            c.sites.reserve(w);
            for (int i = 0; i < w; ++i)
                c.sites.push_back({dom.sites[pick[i]].first, dom.sites[pick[i]].second, codes[i]});
            c.canonical = is_clifford_canonical(c, cell.qubits);
            out.items.push_back(std::move(c));
            int i = w - 1;
            while (i >= 0 && codes[i] == 3) codes[i--] = 1;
            if (i < 0) break;
            ++codes[i];
        }
    };

    // Weight-ascending subset enumeration with the home-cell constraint.
    for (int w = params.min_weight; w <= params.max_weight; ++w) {
        pick.assign(w, 0);
        auto rec = [&](auto&& self, int next, int depth, bool home) -> void {
            if (depth == w) {
                if (!home) return;
                support.clear();
                for (int i : pick) support.push_back({dom.sites[i].second, dom.sites[i].first});
                std::optional<int> cost = oracle.cost(support);
                if (!cost.has_value() || *cost > params.max_cost) return;
                emit_letterings(*cost);
                return;
            }
            for (int s = next; s < S; ++s) {
                // Without a home site yet, skip starts past the home slice.
                if (!home && s >= dom.home_end) break;
                pick[depth] = s;
                self(self, s + 1, depth + 1, home || (s >= dom.home_begin && s < dom.home_end));
            }
        };
        rec(rec, 0, 0, false);
    }

    std::stable_sort(out.items.begin(), out.items.end(), [&](const Candidate& a, const Candidate& b) {
        if (out.cost_sorted && a.cost != b.cost) return a.cost < b.cost;
        if (a.weight != b.weight) return a.weight < b.weight;
        return pattern_less(a, b);
    });
    return out;
}

std::vector<Exp> omega_support(const Candidate& a, const Candidate& b) {
    // Coefficient at offset k: parity over same-qubit site pairs of
    // x_a z_b + z_a x_b with b shifted by k.
    std::unordered_map<Exp, int, ExpHash> acc;
    for (const CandSite& sa : a.sites)
        for (const CandSite& sb : b.sites) {
            if (sa.qubit != sb.qubit) continue;
            int xa = sa.code >> 1, za = sa.code & 1;
            int xb = sb.code >> 1, zb = sb.code & 1;
            if (((xa & zb) ^ (za & xb)) == 0) continue;
            acc[exp_sub(sb.cell, sa.cell)] ^= 1;
        }
    std::vector<Exp> out;
    for (const auto& [k, parity] : acc)
        if (parity) out.push_back(k);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Exp> self_omega_support(const Candidate& c) { return omega_support(c, c); }

std::map<std::vector<Exp>, std::vector<int>> commutation_partition(const CandidateList& cands,
                                                                   const Candidate& anchor) {
    std::map<std::vector<Exp>, std::vector<int>> groups;
    for (size_t i = 0; i < cands.items.size(); ++i)
        groups[omega_support(anchor, cands.items[i])].push_back(static_cast<int>(i));
    return groups;
}

PolyVec candidate_to_column(const Candidate& c, int qubits, int dims) {
    PolyVec col(2 * qubits, dims);
    for (const CandSite& s : c.sites) {
        if (s.code & 2) col[s.qubit] = col[s.qubit] + Poly::monomial(s.cell, dims);
        if (s.code & 1) col[s.qubit + qubits] = col[s.qubit + qubits] + Poly::monomial(s.cell, dims);
    }
    return col;
}

std::vector<CellVertex> candidate_support(const Candidate& c) {
    std::vector<CellVertex> s;
    s.reserve(c.sites.size());
    for (const CandSite& site : c.sites) s.push_back({site.qubit, site.cell});
    return s;
}

}  // namespace fermenc
