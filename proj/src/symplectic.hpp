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

#ifndef FERMENC_SYMPLECTIC_HPP
#define FERMENC_SYMPLECTIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "phase.hpp"
#include "poly.hpp"

namespace fermenc {

// The fermionic side of an encoding problem: a unit cell of `modes` complex
// modes and J privileged operators given as the columns of a 2m x J
// polynomial matrix. Rows 0..m-1 address the first Majorana species of each
// mode, rows m..2m-1 the second. Each column must have an even number of set
// coefficients; odd monomials are rejected so the commutation form reduces
// to a plain inner product.
struct FermionicSystem {
    int dims = 0;
    int modes = 0;
    std::vector<std::string> op_names;
    std::vector<Phase> op_phases;  // scalar prefactor of each operator
    PolyMat tau;                   // 2m x J

    int ops() const { return tau.cols(); }
    // Throws std::invalid_argument on shape errors or odd columns.
    void validate() const;
};

// The qubit side: a 2n x J polynomial matrix whose column j is the Pauli
// assigned to operator j. Rows 0..n-1 hold X components, rows n..2n-1 hold
// Z components.
struct EncodingMatrix {
    int qubits = 0;
    PolyMat sigma;  // 2n x J

    int ops() const { return sigma.cols(); }
};

// Commutation polynomial a^dag b between two even Majorana columns of length
// 2m. The coefficient at translation k is 1 iff the operators anticommute
// when the second is shifted by k.
Poly omega_f(const PolyVec& a, const PolyVec& b);

// Commutation polynomial of two Pauli columns of length 2n:
// x(a)^dag z(b) + z(a)^dag x(b).
Poly omega_q(const PolyVec& a, const PolyVec& b, int qubits);

// Full J x J matrix of fermionic commutation polynomials tau^dag tau.
PolyMat fermi_comm_matrix(const FermionicSystem& sys);

// Full J x J matrix of qubit-side commutation polynomials.
PolyMat qubit_comm_matrix(const EncodingMatrix& enc);

// The encoding condition: both commutation matrices agree entrywise as
// Laurent polynomials, i.e. at every relative translation.
bool check_encoding(const FermionicSystem& sys, const EncodingMatrix& enc);

struct CommMismatch {
    int i = 0, j = 0;
    Exp k = exp_zero();
};
// First entrywise disagreement, scanning rows then columns then exponents.
std::optional<CommMismatch> find_encoding_mismatch(const FermionicSystem& sys, const EncodingMatrix& enc);

// Incremental validity used by the search: commutation equality restricted
// to column pairs (i, j) with i <= j for the given j. Columns below j are
// assumed validated.
bool partial_check(const FermionicSystem& sys, const EncodingMatrix& enc, int j);

// Number of (qubit, cell) sites where the column acts nontrivially.
int column_weight(const PolyVec& pauli_col, int qubits);

}  // namespace fermenc

#endif
