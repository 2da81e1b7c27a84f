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

#ifndef FERMENC_STABILIZER_HPP
#define FERMENC_STABILIZER_HPP

#include <string>
#include <vector>

#include "bits.hpp"
#include "hardware.hpp"
#include "phase.hpp"
#include "symplectic.hpp"

namespace fermenc {

struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One column of a polynomial matrix placed at a cell offset of a finite
// patch. Placements whose support leaves the patch are kept but marked
// truncated and excluded from kernel computation (open boundary, no
// wraparound).
struct PatchColumn {
    int op = 0;
    Exp offset = exp_zero();
    BitVec bits;  // empty when truncated
    bool truncated = false;
};

// A polynomial matrix tiled over a region of cells and flattened to binary
// columns. Rows run cell-major: row = cell_position * block + row_in_cell,
// cells in lexicographic order. Columns run cell-major as well; this order
// doubles as the generator ordering for phase bookkeeping.
struct PatchMatrix {
    int dims = 0;
    int block = 0;  // rows per cell (2m or 2n)
    Box region;
    int rows = 0;
    std::vector<PatchColumn> cols;
    std::vector<int> included;  // indices of non-truncated columns

    int row_id(int row_in_cell, const Exp& cell) const;
};

PatchMatrix instantiate(const PolyMat& M, const Box& region);

// Basis of { v : sum_i v_i col_i = 0 } by Gaussian elimination, in reduced
// echelon form (each basis vector owns one free column). Deterministic.
std::vector<BitVec> kernel_f2(const std::vector<BitVec>& columns, int rows);

// i^phase * prod_q X_q^{x_q} Z_q^{z_q}, qubits in canonical patch order,
// X written before Z on each qubit.
struct PhasedPauli {
    BitVec x, z;
    Phase phase;

    PhasedPauli() = default;
    PhasedPauli(BitVec x_, BitVec z_, Phase p) : x(std::move(x_)), z(std::move(z_)), phase(p) {}
    static PhasedPauli identity(int qubits) { return {BitVec(qubits), BitVec(qubits), Phase()}; }

    PhasedPauli operator*(const PhasedPauli& o) const {
        PhasedPauli r(x ^ o.x, z ^ o.z, phase * o.phase);
        if (BitVec::and_parity(z, o.x)) r.phase = r.phase * Phase::minus_one();
        return r;
    }
    bool is_scalar() const { return x.is_zero() && z.is_zero(); }
};

// i^phase * ordered product of Majorana generators over the set bits. Slots
// run cell-major with the 2m per-cell rows in matrix order (the m gamma rows
// then the m gamma-bar rows). Every generator squares to +1 and distinct
// generators anticommute.
struct PhasedMajorana {
    BitVec bits;
    Phase phase;

    PhasedMajorana() = default;
    PhasedMajorana(BitVec b, Phase p) : bits(std::move(b)), phase(p) {}
    static PhasedMajorana identity(int slots) { return {BitVec(slots), Phase()}; }

    PhasedMajorana operator*(const PhasedMajorana& o) const {
        int t = 0;
        o.bits.for_each_set([&](int p) { t ^= bits.count_above(p) & 1; });
        PhasedMajorana r(bits ^ o.bits, phase * o.phase);
        if (t & 1) r.phase = r.phase * Phase::minus_one();
        return r;
    }
    bool is_scalar() const { return bits.is_zero(); }
};

// A stabilizer generator found on the patch.
struct PatchStabilizer {
    BitVec combo;        // kernel coordinates over the tau patch's included columns
    PhasedPauli element;  // sign-fixed phased Pauli on the (padded) patch
    int sign = 1;         // relative to the hermitian representative i^(x.z mod 2) P
};

// Translation class of stabilizer generators for reporting and the
// distance check.
struct StabilizerClass {
    PolyVec column;    // sigma-image, translated so every minimum exponent is 0
    PolyVec tau_combo; // length-J coefficient polynomials over the tau columns
    int sign = 1;
    int placements = 0;
};

struct SuperselectionClass {
    PolyVec column;    // tau-image over the 2m Majorana rows, canonical translation
    PolyVec sigma_combo;  // length-J coefficients over the sigma columns
    Phase phase;
    int placements = 0;
};

enum class DistanceFlag { No, Yes, YesStar };
std::string to_string(DistanceFlag f);
DistanceFlag parse_distance_flag(const std::string& s);

struct ErrorDetection {
    int qubit = 0;
    char pauli = 'X';  // X, Y or Z on the home cell
    bool detected = false;
};

struct DistanceResult {
    DistanceFlag flag = DistanceFlag::No;
    std::vector<ErrorDetection> table;
    std::vector<int> unused_qubits;
};

struct SignFix {
    std::vector<int> delta;  // +-1 per operator
    bool all_positive = true;  // false when only the scalar constraints could be met
};

// Solves for per-operator signs such that no product of patch stabilizers is
// a negative scalar. Scalar kernel elements are hard constraints; making the
// remaining generators print with a positive sign is attempted on top.
// Throws InternalError when the hard constraints are unsolvable.
SignFix fix_signs(const FermionicSystem& sys, const EncodingMatrix& enc, const Box& region);

// Phase-correct stabilizer generators on the patch under the given signs.
// Scalar elements are dropped after asserting they equal +1.
std::vector<PatchStabilizer> stabilizer_generators(const FermionicSystem& sys, const EncodingMatrix& enc,
                                                   const Box& region, const SignFix& fix);

// Kernel of the sigma patch mapped through tau; empty output certifies a
// faithful representation on the patch.
std::vector<SuperselectionClass> superselection_generators(const FermionicSystem& sys, const EncodingMatrix& enc,
                                                           const Box& region, const SignFix& fix);

// Distance-2 scan: a single-qubit error on the home cell is detected when
// its commutation polynomial against some generator class is nonzero.
DistanceResult distance2_check(const FermionicSystem& sys, const EncodingMatrix& enc,
                               const std::vector<StabilizerClass>& classes);

// Everything the report needs from one region size.
struct StabilizerAnalysis {
    Box region;
    SignFix fix;
    std::vector<PatchStabilizer> patch_generators;
    int dropped_identities = 0;
    std::vector<StabilizerClass> classes;
    std::vector<SuperselectionClass> superselection;
    DistanceResult distance;
    std::vector<std::string> warnings;
};

StabilizerAnalysis analyze_encoding(const FermionicSystem& sys, const EncodingMatrix& enc, int region_size);

// Translation classes of a set of patch stabilizers (exposed for tests).
std::vector<StabilizerClass> stabilizer_classes(const FermionicSystem& sys, const EncodingMatrix& enc,
                                                const Box& region, const std::vector<PatchStabilizer>& gens);

Box square_region(int dims, int size);

// Patch group elements live on the kernel region padded by the support span
// of both matrices; these expose that geometry for bit-level checks.
Box phase_box_for(const FermionicSystem& sys, const EncodingMatrix& enc, const Box& region);
int phase_qubit_slot(const Box& phase_box, int qubits, int q, const Exp& cell);

}  // namespace fermenc

#endif
