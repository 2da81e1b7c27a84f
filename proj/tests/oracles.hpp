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

// Independent reference implementations used only by tests. They stay on
// dense matrices and exhaustive enumeration so that the production paths
// (bit vectors, phase bookkeeping, dynamic programming, pruning) are checked
// against something that cannot share their bugs.

#ifndef FERMENC_TESTS_ORACLES_HPP
#define FERMENC_TESTS_ORACLES_HPP

#include <complex>
#include <optional>
#include <vector>

#include "bits.hpp"
#include "enumerate.hpp"
#include "phase.hpp"
#include "symplectic.hpp"

namespace fermenc::testing {

using CMat = std::vector<std::complex<double>>;  // dense row-major square matrix

CMat cmat_identity(size_t dim);
CMat cmat_mul(const CMat& a, const CMat& b);
CMat cmat_scale(const CMat& a, std::complex<double> s);
bool cmat_equal(const CMat& a, const CMat& b, double eps = 1e-9);
bool cmat_is_identity(const CMat& a, double eps = 1e-9);

// i^phase * prod_q X_q^{x_q} Z_q^{z_q} as a 2^n x 2^n matrix, X applied
// before Z on each qubit.
CMat pauli_matrix(const BitVec& x, const BitVec& z, Phase phase, int qubits);

// Jordan-Wigner matrix of one Majorana slot out of `slots` (slot 2k maps to
// Z..ZX, slot 2k+1 to Z..ZY).
CMat majorana_matrix(int slot, int slots);

// i^phase * ordered product of the slots set in `bits`.
CMat majorana_monomial_matrix(const BitVec& bits, Phase phase, int slots);

// Do the two matrices commute (+1) or anticommute (-1)? nullopt otherwise.
std::optional<int> commutator_sign(const CMat& a, const CMat& b);

// Minimum connecting edge count by edge-subset enumeration.
std::optional<int> steiner_brute(int vertices, const std::vector<std::pair<int, int>>& edges,
                                 const std::vector<int>& terminals);

// Every kernel vector of the column set, found by trying all 2^n
// combinations. Includes the zero vector.
std::vector<BitVec> kernel_brute(const std::vector<BitVec>& columns, int rows);

// Reference search: plain recursion over the same candidate stream, validity
// checked with the polynomial-level partial check, no bounding and no
// lookup tables. Returns the optimal max column cost, or nullopt when no
// assignment satisfies the commutation condition.
std::optional<int> exhaustive_best_cost(const FermionicSystem& sys, const HardwareCell& cell,
                                        const SearchParams& params);

}  // namespace fermenc::testing

#endif
