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

#include "stabilizer.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fermenc {

std::string to_string(DistanceFlag f) {
    switch (f) {
        case DistanceFlag::Yes: return "yes";
        case DistanceFlag::YesStar: return "yes*";
        default: return "no";
    }
}

DistanceFlag parse_distance_flag(const std::string& s) {
    if (s == "yes") return DistanceFlag::Yes;
    if (s == "yes*") return DistanceFlag::YesStar;
    if (s == "no") return DistanceFlag::No;
    throw std::invalid_argument("bad distance flag '" + s + "' (want yes, yes* or no)");
}

Box square_region(int dims, int size) {
    if (size < 1) throw std::invalid_argument("region size must be >= 1");
    Box b;
    b.dims = dims;
    for (int d = 0; d < dims; ++d) {
        b.lo[d] = 0;
        b.hi[d] = size - 1;
    }
    return b;
}

namespace {

long long cell_position(const Box& box, const Exp& cell) {
    long long pos = 0;
    for (int d = 0; d < box.dims; ++d) pos = pos * (box.hi[d] - box.lo[d] + 1) + (cell[d] - box.lo[d]);
    return pos;
}

}  // namespace

int PatchMatrix::row_id(int row_in_cell, const Exp& cell) const {
    if (!region.contains(cell)) return -1;
    return static_cast<int>(cell_position(region, cell) * block + row_in_cell);
}

PatchMatrix instantiate(const PolyMat& M, const Box& region) {
    if (region.dims != M.dims()) throw std::invalid_argument("region dims mismatch");
    if (region.cell_count() < 1) throw std::invalid_argument("empty region");
    PatchMatrix pm;
    pm.dims = M.dims();
    pm.block = M.rows();
    pm.region = region;
    pm.rows = static_cast<int>(region.cell_count()) * M.rows();
    for (const Exp& r : region.cells()) {
        for (int j = 0; j < M.cols(); ++j) {
            PatchColumn pc;
            pc.op = j;
            pc.offset = r;
            bool fits = true;
            for (int row = 0; row < M.rows() && fits; ++row)
                for (const Exp& t : M.at(row, j).terms())
                    if (!region.contains(exp_add(t, r))) {
                        fits = false;
                        break;
                    }
            if (fits) {
                pc.bits = BitVec(pm.rows);
                for (int row = 0; row < M.rows(); ++row)
                    for (const Exp& t : M.at(row, j).terms()) pc.bits.flip(pm.row_id(row, exp_add(t, r)));
                pm.included.push_back(static_cast<int>(pm.cols.size()));
            } else {
                pc.truncated = true;
            }
            pm.cols.push_back(std::move(pc));
        }
    }
    return pm;
}

std::vector<BitVec> kernel_f2(const std::vector<BitVec>& columns, int rows) {
    const int nc = static_cast<int>(columns.size());
    if (nc == 0) return {};
    for (const BitVec& c : columns)
        if (c.size() != rows) throw std::invalid_argument("column length mismatch");
    // Row-major copy: rows of the matrix as bit vectors over column indices.
    std::vector<BitVec> m(rows, BitVec(nc));
    for (int c = 0; c < nc; ++c) columns[c].for_each_set([&](int r) { m[r].set(c, true); });

    std::vector<int> pivot_row_of_col(nc, -1);
    int rank = 0;
    for (int c = 0; c < nc && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r].get(c)) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = 0; r < rows; ++r)
            if (r != rank && m[r].get(c)) m[r] ^= m[rank];
        pivot_row_of_col[c] = rank;
        ++rank;
    }
    std::vector<BitVec> basis;
    for (int f = 0; f < nc; ++f) {
        if (pivot_row_of_col[f] >= 0) continue;
        BitVec v(nc);
        v.set(f, true);
        for (int c = 0; c < nc; ++c) {
            int pr = pivot_row_of_col[c];
            if (pr >= 0 && m[pr].get(f)) v.set(c, true);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

// Shared geometry and per-placement group elements for one (system,
// encoding, region) triple. Phases are computed on a padded box so images of
// kernel combinations never leave the patch.
struct ImageContext {
    const FermionicSystem* sys = nullptr;
    const EncodingMatrix* enc = nullptr;
    Box region;
    Box phase_box;
    PatchMatrix tau_patch;    // kernel side, on region
    PatchMatrix sigma_patch;  // kernel side, on region
    int phase_qubits = 0;
    int phase_slots = 0;
    std::vector<int> base_delta;  // baseline i-exponent of delta_sigma per op

    // Group elements per included column, in included order.
    std::vector<PhasedMajorana> tau_terms_t, tau_terms_s;  // for tau/sigma patch columns
    std::vector<PhasedPauli> sigma_terms_t, sigma_terms_s;
    // Sigma-image bits of tau-patch included columns, for intersecting kernels.
    std::vector<BitVec> sigma_bits_t;
};

void grow_for_matrix(Box& box, const PolyMat& M) {
    Exp mn = exp_zero(), mx = exp_zero();
    for (int r = 0; r < M.rows(); ++r)
        for (int c = 0; c < M.cols(); ++c)
            for (const Exp& e : M.at(r, c).terms())
                for (int d = 0; d < box.dims; ++d) {
                    mn[d] = std::min(mn[d], e[d]);
                    mx[d] = std::max(mx[d], e[d]);
                }
    for (int d = 0; d < box.dims; ++d) {
        box.lo[d] += mn[d];
        box.hi[d] += mx[d];
    }
}

int qubit_slot(const Box& box, int qubits, int q, const Exp& cell) {
    return static_cast<int>(cell_position(box, cell) * qubits + q);
}

PhasedMajorana majorana_term(const FermionicSystem& sys, int op, const Exp& r, const Box& box, int slots) {
    BitVec bits(slots);
    for (int row = 0; row < sys.tau.rows(); ++row)
        for (const Exp& t : sys.tau.at(row, op).terms()) {
            Exp cell = exp_add(t, r);
            if (!box.contains(cell)) throw InternalError("Majorana support escaped the phase box");
            bits.flip(static_cast<int>(cell_position(box, cell) * sys.tau.rows() + row));
        }
    return {std::move(bits), sys.op_phases[op]};
}

PhasedPauli pauli_term(const EncodingMatrix& enc, int op, const Exp& r, const Box& box, int qubits_total,
                       int delta_exp) {
    const int n = enc.qubits;
    BitVec x(qubits_total), z(qubits_total);
    for (int q = 0; q < n; ++q) {
        for (const Exp& t : enc.sigma.at(q, op).terms()) {
            Exp cell = exp_add(t, r);
            if (!box.contains(cell)) throw InternalError("Pauli support escaped the phase box");
            x.flip(qubit_slot(box, n, q, cell));
        }
        for (const Exp& t : enc.sigma.at(q + n, op).terms()) {
            Exp cell = exp_add(t, r);
            if (!box.contains(cell)) throw InternalError("Pauli support escaped the phase box");
            z.flip(qubit_slot(box, n, q, cell));
        }
    }
    return {std::move(x), std::move(z), Phase(delta_exp)};
}

// Baseline delta_sigma: +1 when a real sign works, +i when the squares force
// an imaginary prefactor.
int baseline_delta_exponent(const FermionicSystem& sys, const EncodingMatrix& enc, int op) {
    size_t w = 0;
    for (int r = 0; r < sys.tau.rows(); ++r) w += sys.tau.at(r, op).term_count();
    int fsq = (sys.op_phases[op].k + (w * (w - 1) / 2)) & 1;
    int xz = 0;
    for (int q = 0; q < enc.qubits; ++q) {
        const auto& xt = enc.sigma.at(q, op).terms();
        const auto& zt = enc.sigma.at(q + enc.qubits, op).terms();
        size_t common = 0;
        std::set<Exp> xs(xt.begin(), xt.end());
        for (const Exp& e : zt) common += xs.count(e);
        xz ^= static_cast<int>(common & 1);
    }
    return fsq ^ xz;
}

ImageContext build_context(const FermionicSystem& sys, const EncodingMatrix& enc, const Box& region) {
    sys.validate();
    if (sys.ops() != enc.ops()) throw std::invalid_argument("operator count mismatch");
    if (enc.sigma.rows() != 2 * enc.qubits) throw std::invalid_argument("sigma must have 2*qubits rows");

    ImageContext ctx;
    ctx.sys = &sys;
    ctx.enc = &enc;
    ctx.region = region;
    ctx.phase_box = region;
    grow_for_matrix(ctx.phase_box, sys.tau);
    grow_for_matrix(ctx.phase_box, enc.sigma);
    ctx.tau_patch = instantiate(sys.tau, region);
    ctx.sigma_patch = instantiate(enc.sigma, region);
    ctx.phase_qubits = static_cast<int>(ctx.phase_box.cell_count()) * enc.qubits;
    ctx.phase_slots = static_cast<int>(ctx.phase_box.cell_count()) * sys.tau.rows();
    ctx.base_delta.resize(sys.ops());
    for (int j = 0; j < sys.ops(); ++j) ctx.base_delta[j] = baseline_delta_exponent(sys, enc, j);

    for (int idx : ctx.tau_patch.included) {
        const PatchColumn& pc = ctx.tau_patch.cols[idx];
        ctx.tau_terms_t.push_back(majorana_term(sys, pc.op, pc.offset, ctx.phase_box, ctx.phase_slots));
        PhasedPauli sp = pauli_term(enc, pc.op, pc.offset, ctx.phase_box, ctx.phase_qubits, ctx.base_delta[pc.op]);
        BitVec xz(2 * ctx.phase_qubits);
        sp.x.for_each_set([&](int i) { xz.set(i, true); });
        sp.z.for_each_set([&](int i) { xz.set(ctx.phase_qubits + i, true); });
        ctx.sigma_bits_t.push_back(std::move(xz));
        ctx.sigma_terms_t.push_back(std::move(sp));
    }
    for (int idx : ctx.sigma_patch.included) {
        const PatchColumn& pc = ctx.sigma_patch.cols[idx];
        ctx.tau_terms_s.push_back(majorana_term(sys, pc.op, pc.offset, ctx.phase_box, ctx.phase_slots));
        ctx.sigma_terms_s.push_back(
            pauli_term(enc, pc.op, pc.offset, ctx.phase_box, ctx.phase_qubits, ctx.base_delta[pc.op]));
    }
    return ctx;
}

// Ordered product of the selected generators' images.
template <typename T>
T product_over(const BitVec& combo, const std::vector<T>& terms, T identity) {
    T acc = std::move(identity);
    combo.for_each_set([&](int i) { acc = acc * terms[i]; });
    return acc;
}

// Per-operator multiplicity parity of a combo over a patch's included list.
uint64_t op_parity_mask(const PatchMatrix& patch, const BitVec& combo) {
    uint64_t mask = 0;
    combo.for_each_set([&](int i) { mask ^= 1ull << patch.cols[patch.included[i]].op; });
    return mask;
}

int popcount64(uint64_t v) { return std::popcount(v); }

// The sign-fixed stabilizer image of a tau-kernel combo.
PhasedPauli stabilizer_element(const ImageContext& ctx, const BitVec& combo, uint64_t flip_mask) {
    PhasedMajorana mt = product_over(combo, ctx.tau_terms_t, PhasedMajorana::identity(ctx.phase_slots));
    if (!mt.is_scalar()) throw InternalError("tau kernel element has nonzero Majorana support");
    PhasedPauli ms = product_over(combo, ctx.sigma_terms_t, PhasedPauli::identity(ctx.phase_qubits));
    PhasedPauli s(ms.x, ms.z, ms.phase * mt.phase.conj());
    if (popcount64(op_parity_mask(ctx.tau_patch, combo) & flip_mask) & 1) s.phase = s.phase * Phase::minus_one();
    return s;
}

int relative_sign(const PhasedPauli& p) {
    int c = BitVec::and_parity(p.x, p.z) ? 1 : 0;
    int diff = (p.phase.k - c + 4) % 4;
    if (diff % 2 != 0) throw InternalError("stabilizer element is not hermitian");
    return diff == 0 ? 1 : -1;
}

struct SignRow {
    uint64_t a = 0;  // operator parity mask
    int rhs = 0;
    bool hard = false;
};

// Gaussian elimination over F2; returns the solution mask or nullopt.
std::optional<uint64_t> solve_f2(std::vector<SignRow> rows, int vars) {
    std::vector<std::pair<uint64_t, int>> sys;
    for (const SignRow& r : rows) sys.push_back({r.a, r.rhs});
    uint64_t solution = 0;
    std::vector<int> pivot_of_var(vars, -1);
    int rank = 0;
    for (int v = 0; v < vars; ++v) {
        int pivot = -1;
        for (size_t r = rank; r < sys.size(); ++r)
            if ((sys[r].first >> v) & 1) {
                pivot = static_cast<int>(r);
                break;
            }
        if (pivot < 0) continue;
        std::swap(sys[rank], sys[pivot]);
        for (size_t r = 0; r < sys.size(); ++r)
            if (static_cast<int>(r) != rank && ((sys[r].first >> v) & 1)) {
                sys[r].first ^= sys[rank].first;
                sys[r].second ^= sys[rank].second;
            }
        pivot_of_var[v] = rank;
        ++rank;
    }
    for (const auto& [a, rhs] : sys)
        if (a == 0 && rhs != 0) return std::nullopt;
    for (int v = 0; v < vars; ++v)
        if (pivot_of_var[v] >= 0 && sys[pivot_of_var[v]].second) solution |= 1ull << v;
    return solution;
}

std::vector<SignRow> collect_sign_rows(const ImageContext& ctx) {
    std::vector<SignRow> rows;
    std::vector<BitVec> tau_cols;
    for (int idx : ctx.tau_patch.included) tau_cols.push_back(ctx.tau_patch.cols[idx].bits);

    // Soft rows: one per kernel basis element, asking for a positive printed
    // sign on the corresponding generator.
    std::vector<BitVec> kernel = kernel_f2(tau_cols, ctx.tau_patch.rows);
    for (const BitVec& b : kernel) {
        PhasedPauli s = stabilizer_element(ctx, b, 0);
        rows.push_back({op_parity_mask(ctx.tau_patch, b), relative_sign(s) < 0 ? 1 : 0, false});
    }

    // Hard rows: a basis of the scalar subgroup, i.e. combos in the kernel of
    // the stacked tau and sigma patch columns. Products of stabilizers that
    // collapse to scalars land exactly here, so fixing these keeps -1 out of
    // the group.
    std::vector<BitVec> stacked;
    for (size_t i = 0; i < tau_cols.size(); ++i) {
        BitVec v(ctx.tau_patch.rows + ctx.sigma_bits_t[i].size());
        tau_cols[i].for_each_set([&](int r) { v.set(r, true); });
        ctx.sigma_bits_t[i].for_each_set([&](int r) { v.set(ctx.tau_patch.rows + r, true); });
        stacked.push_back(std::move(v));
    }
    if (!stacked.empty()) {
        for (const BitVec& b : kernel_f2(stacked, stacked[0].size())) {
            PhasedPauli s = stabilizer_element(ctx, b, 0);
            if (!s.is_scalar()) throw InternalError("stacked kernel produced a non-scalar element");
            if (!s.phase.is_real()) throw InternalError("scalar stabilizer with imaginary phase");
            rows.push_back({op_parity_mask(ctx.tau_patch, b), s.phase == Phase::minus_one() ? 1 : 0, true});
        }
    }
    return rows;
}

}  // namespace

SignFix fix_signs(const FermionicSystem& sys, const EncodingMatrix& enc, const Box& region) {
    ImageContext ctx = build_context(sys, enc, region);
    std::vector<SignRow> rows = collect_sign_rows(ctx);

    SignFix fix;
    fix.delta.assign(sys.ops(), 1);
    std::optional<uint64_t> sol = solve_f2(rows, sys.ops());
    if (!sol.has_value()) {
        std::vector<SignRow> hard;
        for (const SignRow& r : rows)
            if (r.hard) hard.push_back(r);
        sol = solve_f2(hard, sys.ops());
        if (!sol.has_value())
            throw InternalError("sign-fix system unsolvable: translation-invariant signs cannot remove -1");
        fix.all_positive = false;
    }
    for (int j = 0; j < sys.ops(); ++j)
        if ((*sol >> j) & 1) fix.delta[j] = -1;
    return fix;
}

namespace {

uint64_t flip_mask_of(const SignFix& fix) {
    uint64_t m = 0;
    for (size_t j = 0; j < fix.delta.size(); ++j)
        if (fix.delta[j] < 0) m |= 1ull << j;
    return m;
}

}  // namespace

std::vector<PatchStabilizer> stabilizer_generators(const FermionicSystem& sys, const EncodingMatrix& enc,
                                                   const Box& region, const SignFix& fix) {
    ImageContext ctx = build_context(sys, enc, region);
    uint64_t flips = flip_mask_of(fix);
    std::vector<BitVec> tau_cols;
    for (int idx : ctx.tau_patch.included) tau_cols.push_back(ctx.tau_patch.cols[idx].bits);
    std::vector<PatchStabilizer> out;
    for (const BitVec& b : kernel_f2(tau_cols, ctx.tau_patch.rows)) {
        PhasedPauli s = stabilizer_element(ctx, b, flips);
        if (s.is_scalar()) {
            if (s.phase != Phase::plus_one()) throw InternalError("scalar stabilizer is not +1 after sign fix");
            continue;
        }
        PatchStabilizer g;
        g.combo = b;
        g.sign = relative_sign(s);
        g.element = std::move(s);
        out.push_back(std::move(g));
    }
    return out;
}

namespace {

// Translate a polynomial column so each dimension's minimum exponent is 0.
Exp canonical_shift(const PolyVec& v) {
    Exp mn = exp_zero();
    bool any = false;
    for (int i = 0; i < v.size(); ++i)
        for (const Exp& e : v[i].terms()) {
            if (!any) {
                mn = e;
                any = true;
            } else {
                for (int d = 0; d < kMaxDims; ++d) mn[d] = std::min(mn[d], e[d]);
            }
        }
    return any ? exp_neg(mn) : exp_zero();
}

std::string column_key(const PolyVec& v) {
    std::string k;
    for (int i = 0; i < v.size(); ++i) {
        k += v[i].to_string();
        k += ';';
    }
    return k;
}

}  // namespace

std::vector<StabilizerClass> stabilizer_classes(const FermionicSystem& sys, const EncodingMatrix& enc,
                                                const Box& region, const std::vector<PatchStabilizer>& gens) {
    PatchMatrix tau_patch = instantiate(sys.tau, region);
    const int n = enc.qubits;
    std::map<std::string, StabilizerClass> classes;
    for (const PatchStabilizer& g : gens) {
        PolyVec col(2 * n, sys.dims);
        PolyVec combo(sys.ops(), sys.dims);
        g.combo.for_each_set([&](int i) {
            const PatchColumn& pc = tau_patch.cols[tau_patch.included[i]];
            for (int r = 0; r < 2 * n; ++r) col[r] = col[r] + enc.sigma.at(r, pc.op).translated(pc.offset);
            combo[pc.op] = combo[pc.op] + Poly::monomial(pc.offset, sys.dims);
        });
        Exp shift = canonical_shift(col);
        col = col.translated(shift);
        combo = combo.translated(shift);
        std::string key = column_key(col);
        auto it = classes.find(key);
        if (it == classes.end()) {
            StabilizerClass sc;
            sc.column = col;
            sc.tau_combo = combo;
            sc.sign = g.sign;
            sc.placements = 1;
            classes.emplace(std::move(key), std::move(sc));
        } else {
            it->second.placements++;
        }
    }
    std::vector<StabilizerClass> out;
    for (auto& [k, v] : classes) out.push_back(std::move(v));
    return out;
}

std::vector<SuperselectionClass> superselection_generators(const FermionicSystem& sys, const EncodingMatrix& enc,
                                                           const Box& region, const SignFix& fix) {
    ImageContext ctx = build_context(sys, enc, region);
    uint64_t flips = flip_mask_of(fix);
    std::vector<BitVec> sigma_cols;
    for (int idx : ctx.sigma_patch.included) sigma_cols.push_back(ctx.sigma_patch.cols[idx].bits);

    std::map<std::string, SuperselectionClass> classes;
    for (const BitVec& b : kernel_f2(sigma_cols, ctx.sigma_patch.rows)) {
        PhasedPauli ms = product_over(b, ctx.sigma_terms_s, PhasedPauli::identity(ctx.phase_qubits));
        if (!ms.is_scalar()) throw InternalError("sigma kernel element has nonzero Pauli support");
        PhasedMajorana mt = product_over(b, ctx.tau_terms_s, PhasedMajorana::identity(ctx.phase_slots));
        if (mt.is_scalar()) continue;  // overlap with ker tau
        Phase phase = mt.phase * ms.phase.conj();
        if (popcount64(op_parity_mask(ctx.sigma_patch, b) & flips) & 1) phase = phase * Phase::minus_one();

        PolyVec col(sys.tau.rows(), sys.dims);
        PolyVec combo(sys.ops(), sys.dims);
        b.for_each_set([&](int i) {
            const PatchColumn& pc = ctx.sigma_patch.cols[ctx.sigma_patch.included[i]];
            for (int r = 0; r < sys.tau.rows(); ++r) col[r] = col[r] + sys.tau.at(r, pc.op).translated(pc.offset);
            combo[pc.op] = combo[pc.op] + Poly::monomial(pc.offset, sys.dims);
        });
        Exp shift = canonical_shift(col);
        col = col.translated(shift);
        combo = combo.translated(shift);
        std::string key = column_key(col);
        auto it = classes.find(key);
        if (it == classes.end()) {
            SuperselectionClass sc;
            sc.column = col;
            sc.sigma_combo = combo;
            sc.phase = phase;
            sc.placements = 1;
            classes.emplace(std::move(key), std::move(sc));
        } else {
            it->second.placements++;
        }
    }
    std::vector<SuperselectionClass> out;
    for (auto& [k, v] : classes) out.push_back(std::move(v));
    return out;
}

DistanceResult distance2_check(const FermionicSystem& sys, const EncodingMatrix& enc,
                               const std::vector<StabilizerClass>& classes) {
    (void)sys;
    const int n = enc.qubits;
    DistanceResult res;
    for (int q = 0; q < n; ++q) {
        bool used = false;
        for (int c = 0; c < enc.ops() && !used; ++c)
            used = !enc.sigma.at(q, c).is_zero() || !enc.sigma.at(q + n, c).is_zero();
        if (!used) res.unused_qubits.push_back(q);
    }
    bool all_detected = true;
    bool used_detected = true;
    for (int q = 0; q < n; ++q) {
        bool unused = std::find(res.unused_qubits.begin(), res.unused_qubits.end(), q) != res.unused_qubits.end();
        for (char type : {'X', 'Y', 'Z'}) {
            bool detected = false;
            for (const StabilizerClass& sc : classes) {
                // Syndrome polynomial of the single-qubit error against the
                // generator and all of its translates.
                Poly syn(enc.sigma.dims());
                if (type == 'X')
                    syn = sc.column[q + n];
                else if (type == 'Z')
                    syn = sc.column[q];
                else
                    syn = sc.column[q] + sc.column[q + n];
                if (!syn.is_zero()) {
                    detected = true;
                    break;
                }
            }
            res.table.push_back({q, type, detected});
            all_detected = all_detected && detected;
            if (!unused) used_detected = used_detected && detected;
        }
    }
    if (all_detected)
        res.flag = DistanceFlag::Yes;
    else if (used_detected && !res.unused_qubits.empty())
        res.flag = DistanceFlag::YesStar;
    else
        res.flag = DistanceFlag::No;
    return res;
}

Box phase_box_for(const FermionicSystem& sys, const EncodingMatrix& enc, const Box& region) {
    Box box = region;
    grow_for_matrix(box, sys.tau);
    grow_for_matrix(box, enc.sigma);
    return box;
}

int phase_qubit_slot(const Box& phase_box, int qubits, int q, const Exp& cell) {
    return qubit_slot(phase_box, qubits, q, cell);
}

StabilizerAnalysis analyze_encoding(const FermionicSystem& sys, const EncodingMatrix& enc, int region_size) {
    StabilizerAnalysis a;
    a.region = square_region(sys.dims, region_size);
    a.fix = fix_signs(sys, enc, a.region);
    if (!a.fix.all_positive)
        a.warnings.push_back("some generators keep a negative printed sign; scalar constraints are satisfied");
    std::vector<PatchStabilizer> all = stabilizer_generators(sys, enc, a.region, a.fix);
    {
        // Count dropped identities by comparing against the raw kernel size.
        ImageContext ctx = build_context(sys, enc, a.region);
        std::vector<BitVec> tau_cols;
        for (int idx : ctx.tau_patch.included) tau_cols.push_back(ctx.tau_patch.cols[idx].bits);
        a.dropped_identities = static_cast<int>(kernel_f2(tau_cols, ctx.tau_patch.rows).size() - all.size());
    }
    a.patch_generators = std::move(all);
    if (a.patch_generators.empty())
        a.warnings.push_back("no stabilizer generators found on this region; consider a larger region");
    a.classes = stabilizer_classes(sys, enc, a.region, a.patch_generators);
    a.superselection = superselection_generators(sys, enc, a.region, a.fix);
    a.distance = distance2_check(sys, enc, a.classes);
    return a;
}

}  // namespace fermenc
