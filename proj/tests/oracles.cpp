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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fermenc::testing {

namespace {

size_t dim_of(const CMat& a) {
    size_t d = static_cast<size_t>(std::llround(std::sqrt(static_cast<double>(a.size()))));
    return d;
}

const std::complex<double> I2x2[4] = {1, 0, 0, 1};
const std::complex<double> X2x2[4] = {0, 1, 1, 0};
const std::complex<double> Y2x2[4] = {0, {0, -1}, {0, 1}, 0};
const std::complex<double> Z2x2[4] = {1, 0, 0, -1};

CMat kron(const CMat& a, const CMat& b) {
    size_t da = dim_of(a), db = dim_of(b);
    CMat r(da * db * da * db);
    for (size_t i = 0; i < da; ++i)
        for (size_t j = 0; j < da; ++j)
            for (size_t k = 0; k < db; ++k)
                for (size_t l = 0; l < db; ++l)
                    r[(i * db + k) * da * db + (j * db + l)] = a[i * da + j] * b[k * db + l];
    return r;
}

CMat two_by_two(const std::complex<double> m[4]) { return CMat(m, m + 4); }

std::complex<double> phase_value(Phase p) {
    switch (p.k) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

}  // namespace

CMat cmat_identity(size_t dim) {
    CMat r(dim * dim, 0.0);
    for (size_t i = 0; i < dim; ++i) r[i * dim + i] = 1.0;
    return r;
}

CMat cmat_mul(const CMat& a, const CMat& b) {
    size_t d = dim_of(a);
    CMat r(d * d, 0.0);
    for (size_t i = 0; i < d; ++i)
        for (size_t k = 0; k < d; ++k) {
            std::complex<double> aik = a[i * d + k];
            if (std::abs(aik) < 1e-14) continue;
            for (size_t j = 0; j < d; ++j) r[i * d + j] += aik * b[k * d + j];
        }
    return r;
}

CMat cmat_scale(const CMat& a, std::complex<double> s) {
    CMat r = a;
    for (auto& v : r) v *= s;
    return r;
}

bool cmat_equal(const CMat& a, const CMat& b, double eps) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > eps) return false;
    return true;
}

bool cmat_is_identity(const CMat& a, double eps) { return cmat_equal(a, cmat_identity(dim_of(a)), eps); }

CMat pauli_matrix(const BitVec& x, const BitVec& z, Phase phase, int qubits) {
    CMat acc = {phase_value(phase)};
    for (int q = 0; q < qubits; ++q) {
        CMat factor = two_by_two(I2x2);
        if (x.get(q) && z.get(q)) {
            // X then Z on the same qubit: XZ = -iY.
            factor = cmat_mul(two_by_two(X2x2), two_by_two(Z2x2));
        } else if (x.get(q)) {
            factor = two_by_two(X2x2);
        } else if (z.get(q)) {
            factor = two_by_two(Z2x2);
        }
        acc = kron(acc, factor);
    }
    return acc;
}

CMat majorana_matrix(int slot, int slots) {
    int qubits = (slots + 1) / 2;
    CMat acc = {1.0};
    int q = slot / 2;
    for (int i = 0; i < qubits; ++i) {
        if (i < q)
            acc = kron(acc, two_by_two(Z2x2));
        else if (i == q)
            acc = kron(acc, two_by_two(slot % 2 == 0 ? X2x2 : Y2x2));
        else
            acc = kron(acc, two_by_two(I2x2));
    }
    return acc;
}

CMat majorana_monomial_matrix(const BitVec& bits, Phase phase, int slots) {
    int qubits = (slots + 1) / 2;
    CMat acc = cmat_scale(cmat_identity(static_cast<size_t>(1) << qubits), phase_value(phase));
    bits.for_each_set([&](int s) { acc = cmat_mul(acc, majorana_matrix(s, slots)); });
    return acc;
}

std::optional<int> commutator_sign(const CMat& a, const CMat& b) {
    CMat ab = cmat_mul(a, b);
    CMat ba = cmat_mul(b, a);
    if (cmat_equal(ab, ba)) return 1;
    if (cmat_equal(ab, cmat_scale(ba, -1.0))) return -1;
    return std::nullopt;
}

std::optional<int> steiner_brute(int vertices, const std::vector<std::pair<int, int>>& edges,
                                 const std::vector<int>& terminals) {
    std::vector<int> ts(terminals.begin(), terminals.end());
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    if (ts.size() <= 1) return 0;
    const int E = static_cast<int>(edges.size());

    std::vector<int> parent(vertices);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    auto connected = [&](const std::vector<int>& subset) {
        std::iota(parent.begin(), parent.end(), 0);
        for (int e : subset) parent[find(edges[e].first)] = find(edges[e].second);
        int root = find(ts[0]);
        for (int t : ts)
            if (find(t) != root) return false;
        return true;
    };

    if (connected({})) return 0;
    for (int k = 1; k <= E; ++k) {
        std::vector<int> pick(k);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            if (connected(pick)) return k;
            int i = k - 1;
            while (i >= 0 && pick[i] == E - k + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return std::nullopt;
}

std::vector<BitVec> kernel_brute(const std::vector<BitVec>& columns, int rows) {
    const int n = static_cast<int>(columns.size());
    std::vector<BitVec> out;
    for (uint64_t mask = 0; mask < (1ull << n); ++mask) {
        BitVec acc(rows);
        BitVec v(n);
        for (int c = 0; c < n; ++c)
            if ((mask >> c) & 1) {
                acc ^= columns[c];
                v.set(c, true);
            }
        if (acc.is_zero()) out.push_back(std::move(v));
    }
    return out;
}

std::optional<int> exhaustive_best_cost(const FermionicSystem& sys, const HardwareCell& cell,
                                        const SearchParams& params) {
    CostOracle oracle(cell, params.margin);
    CandidateList cands = enumerate_candidates(cell, params, oracle);
    const int J = sys.ops();
    EncodingMatrix enc;
    enc.qubits = cell.qubits;
    enc.sigma = PolyMat(2 * cell.qubits, J, sys.dims);

    std::optional<int> best;
    std::vector<int> costs(J, 0);
    auto rec = [&](auto&& self, int j) -> void {
        if (j == J) {
            int maxc = *std::max_element(costs.begin(), costs.end());
            if (!best || maxc < *best) best = maxc;
            return;
        }
        for (const Candidate& c : cands.items) {
            enc.sigma.set_col(j, candidate_to_column(c, cell.qubits, sys.dims));
            costs[j] = c.cost;
            if (partial_check(sys, enc, j)) self(self, j + 1);
        }
        enc.sigma.set_col(j, PolyVec(2 * cell.qubits, sys.dims));
    };
    rec(rec, 0);
    return best;
}

}  // namespace fermenc::testing
