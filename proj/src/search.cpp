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

#include "search.hpp"

#include <atomic>
#include <chrono>
#include <climits>
#include <mutex>
#include <numeric>
#include <thread>

#include "stabilizer.hpp"

namespace fermenc {

namespace {

using Clock = std::chrono::steady_clock;

bool passes_distance_filter(const FermionicSystem& sys, const EncodingMatrix& enc, int region_size) {
    Box region = square_region(sys.dims, region_size);
    PatchMatrix tp = instantiate(sys.tau, region);
    std::vector<BitVec> cols;
    for (int idx : tp.included) cols.push_back(tp.cols[idx].bits);
    std::vector<PatchStabilizer> gens;
    for (BitVec& b : kernel_f2(cols, tp.rows)) {
        PatchStabilizer g;
        g.combo = std::move(b);
        gens.push_back(std::move(g));
    }
    auto classes = stabilizer_classes(sys, enc, region, gens);
    return distance2_check(sys, enc, classes).flag != DistanceFlag::No;
}

struct Incumbent {
    int max_cost = INT_MAX / 2;
    std::vector<int> tuple;  // candidate stream indices in assignment order
    bool has = false;

    bool lex_accepts(int cost, const std::vector<int>& t) const {
        if (!has) return true;
        if (cost != max_cost) return cost < max_cost;
        return t < tuple;
    }
};

struct Engine {
    const FermionicSystem& sys;
    const HardwareCell& cell;
    SearchParams params;
    bool error_detecting;
    const ProgressFn& progress;

    CostOracle oracle;
    CandidateList cands;
    int J = 0;
    std::vector<int> perm;                           // assignment order -> original column
    std::vector<std::vector<std::vector<Exp>>> target;  // [depth i][depth j] commutation support

    std::atomic<int> shared_best{INT_MAX / 2};
    std::atomic<uint64_t> nodes{0};
    std::atomic<uint64_t> completions{0};
    std::atomic<uint64_t> rejected{0};
    std::atomic<bool> aborted{false};
    std::mutex progress_mu;
    Clock::time_point t0;

    Engine(const FermionicSystem& s, const HardwareCell& c, const SearchParams& p, bool ed, const ProgressFn& pr)
        : sys(s), cell(c), params(p), error_detecting(ed), progress(pr), oracle(c, p.margin) {
        params.validate();
        if (sys.dims != cell.dims) throw std::invalid_argument("system and hardware dims mismatch");
        if (error_detecting) params.min_weight = std::max(params.min_weight, 2);
        J = sys.ops();
        if (J > 63) throw std::invalid_argument("too many operators");

        PolyMat fermi = fermi_comm_matrix(sys);
        perm.resize(J);
        std::iota(perm.begin(), perm.end(), 0);
        if (params.column_order == ColumnOrder::MostConstrained) {
            std::vector<size_t> load(J, 0);
            for (int i = 0; i < J; ++i)
                for (int j = 0; j < J; ++j)
                    if (i != j) load[j] += fermi.at(i, j).term_count();
            std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return load[a] > load[b]; });
        }
        target.assign(J, std::vector<std::vector<Exp>>(J));
        for (int i = 0; i < J; ++i)
            for (int j = 0; j < J; ++j) target[i][j] = fermi.at(perm[i], perm[j]).terms();

        cands = enumerate_candidates(cell, params, oracle);
    }

    int allowed() const {
        int best = shared_best.load(std::memory_order_relaxed);
        if (params.jobs == 1 && best <= params.max_cost) return best - 1;  // strict improvement
        return std::min(params.max_cost, best);
    }

    bool over_limits() {
        uint64_t n = nodes.load(std::memory_order_relaxed);
        if (params.node_limit && n > params.node_limit) return true;
        if (params.time_limit_ms && (n & 0xfff) == 0) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
            if (static_cast<uint64_t>(ms) > params.time_limit_ms) return true;
        }
        return false;
    }

    void tick(int depth) {
        uint64_t n = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (progress && (n & 0x3fff) == 0) {
            std::lock_guard<std::mutex> lock(progress_mu);
            int best = shared_best.load(std::memory_order_relaxed);
            progress(n, depth, best > params.max_cost ? -1 : best);
        }
        if (over_limits()) aborted.store(true, std::memory_order_relaxed);
    }

    EncodingMatrix assemble(const std::vector<int>& tuple) const {
        EncodingMatrix enc;
        enc.qubits = cell.qubits;
        enc.sigma = PolyMat(2 * cell.qubits, J, sys.dims);
        for (int d = 0; d < J; ++d)
            enc.sigma.set_col(perm[d], candidate_to_column(cands.items[tuple[d]], cell.qubits, sys.dims));
        return enc;
    }

    void complete(std::vector<int>& chosen, Incumbent& best) {
        int maxc = 0;
        for (int idx : chosen) maxc = std::max(maxc, cands.items[idx].cost);
        completions.fetch_add(1, std::memory_order_relaxed);
        if (!best.lex_accepts(maxc, chosen)) return;
        EncodingMatrix enc = assemble(chosen);
        if (!check_encoding(sys, enc)) throw InternalError("completed assignment fails the encoding condition");
        if (error_detecting && !passes_distance_filter(sys, enc, params.region)) {
            rejected.fetch_add(1, std::memory_order_relaxed);
            return;  // no bound update from rejected encodings
        }
        best.max_cost = maxc;
        best.tuple = chosen;
        best.has = true;
        int prev = shared_best.load(std::memory_order_relaxed);
        while (maxc < prev && !shared_best.compare_exchange_weak(prev, maxc, std::memory_order_relaxed)) {
        }
    }

    void dfs(int depth, const std::vector<std::vector<int>>& lists, std::vector<int>& chosen, Incumbent& best) {
        const std::vector<int>& mine = lists[0];
        for (int idx : mine) {
            if (aborted.load(std::memory_order_relaxed)) return;
            const Candidate& c = cands.items[idx];
            int lim = allowed();
            if (cands.cost_sorted) {
                if (c.cost > lim) break;
            } else {
                if (c.weight - 1 > lim) break;  // weight lower-bounds cost
                if (c.cost > lim) continue;
            }
            if (depth == 0 && params.clifford_dedup && !c.canonical) continue;
            tick(depth);
            chosen.push_back(idx);
            if (depth == J - 1) {
                complete(chosen, best);
            } else {
                std::vector<std::vector<int>> child(lists.size() - 1);
                bool viable = true;
                for (size_t off = 1; off < lists.size() && viable; ++off) {
                    const auto& want = target[depth][depth + off];
                    auto& filtered = child[off - 1];
                    for (int k : lists[off])
                        if (omega_support(c, cands.items[k]) == want) filtered.push_back(k);
                    if (filtered.empty()) viable = false;
                }
                if (viable) dfs(depth + 1, child, chosen, best);
            }
            chosen.pop_back();
        }
    }

    std::vector<std::vector<int>> initial_lists() const {
        std::map<std::vector<Exp>, std::vector<int>> self_groups;
        for (size_t i = 0; i < cands.items.size(); ++i)
            self_groups[self_omega_support(cands.items[i])].push_back(static_cast<int>(i));
        std::vector<std::vector<int>> lists(J);
        for (int j = 0; j < J; ++j) {
            auto it = self_groups.find(target[j][j]);
            if (it != self_groups.end()) lists[j] = it->second;
        }
        return lists;
    }

    SearchResult run() {
        t0 = Clock::now();
        SearchResult res;
        res.stats.candidates = cands.items.size();

        std::vector<std::vector<int>> lists = initial_lists();
        bool feasible = true;
        for (const auto& l : lists) feasible = feasible && !l.empty();

        Incumbent global;
        if (feasible && J > 0) {
            if (params.jobs == 1) {
                std::vector<int> chosen;
                dfs(0, lists, chosen, global);
            } else {
                std::vector<Incumbent> bests(params.jobs);
                std::vector<std::thread> pool;
                for (int w = 0; w < params.jobs; ++w) {
                    pool.emplace_back([&, w] {
                        std::vector<std::vector<int>> mine = lists;
                        mine[0].clear();
                        for (size_t i = w; i < lists[0].size(); i += params.jobs) mine[0].push_back(lists[0][i]);
                        std::vector<int> chosen;
                        dfs(0, mine, chosen, bests[w]);
                    });
                }
                for (auto& t : pool) t.join();
                for (const Incumbent& b : bests)
                    if (b.has && global.lex_accepts(b.max_cost, b.tuple)) global = b;
            }
        }

        res.stats.nodes = nodes.load();
        res.stats.completions = completions.load();
        res.stats.rejected_by_distance = rejected.load();
        res.stats.exhausted = !aborted.load();
        res.stats.priced = oracle.priced_count();
        res.stats.cost_weight_violations = oracle.inequality_violations();
        res.stats.elapsed_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();

        if (global.has) {
            FoundEncoding fe;
            fe.enc = assemble(global.tuple);
            fe.weights.assign(J, 0);
            fe.costs.assign(J, 0);
            for (int d = 0; d < J; ++d) {
                const Candidate& c = cands.items[global.tuple[d]];
                fe.weights[perm[d]] = c.weight;
                fe.costs[perm[d]] = c.cost;
            }
            fe.max_weight = *std::max_element(fe.weights.begin(), fe.weights.end());
            fe.max_cost = *std::max_element(fe.costs.begin(), fe.costs.end());
            fe.cost_sum = std::accumulate(fe.costs.begin(), fe.costs.end(), 0ll);
            res.best = std::move(fe);
            res.status = res.stats.exhausted ? SearchStatus::Found : SearchStatus::Inconclusive;
        } else {
            res.status = res.stats.exhausted ? SearchStatus::NoSolution : SearchStatus::Inconclusive;
        }
        return res;
    }
};

}  // namespace

SearchResult branch_and_bound(const FermionicSystem& sys, const HardwareCell& cell, const SearchParams& params,
                              const ProgressFn& progress) {
    Engine e(sys, cell, params, params.error_detection, progress);
    return e.run();
}

SearchResult search_error_detecting(const FermionicSystem& sys, const HardwareCell& cell,
                                    const SearchParams& params, const ProgressFn& progress) {
    Engine e(sys, cell, params, true, progress);
    return e.run();
}

}  // namespace fermenc
