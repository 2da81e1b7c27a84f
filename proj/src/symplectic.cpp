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

#include "symplectic.hpp"

#include <algorithm>
#include <set>

namespace fermenc {

namespace {

size_t column_coeff_weight(const PolyMat& m, int c) {
    size_t w = 0;
    for (int r = 0; r < m.rows(); ++r) w += m.at(r, c).term_count();
    return w;
}

}  // namespace

void FermionicSystem::validate() const {
    if (modes < 1) throw std::invalid_argument("system needs at least one mode per cell");
    if (tau.rows() != 2 * modes) throw std::invalid_argument("tau must have 2*modes rows");
    if (tau.cols() < 1) throw std::invalid_argument("tau needs at least one column");
    if (tau.dims() != dims) throw std::invalid_argument("tau dims mismatch");
    if (op_names.size() != static_cast<size_t>(tau.cols()))
        throw std::invalid_argument("operator name count mismatch");
    if (op_phases.size() != static_cast<size_t>(tau.cols()))
        throw std::invalid_argument("operator phase count mismatch");
    for (int c = 0; c < tau.cols(); ++c) {
        if (column_coeff_weight(tau, c) % 2 != 0)
            throw std::invalid_argument("operator '" + op_names[c] +
                                        "' has odd Majorana weight; only even monomials are supported");
    }
}

Poly omega_f(const PolyVec& a, const PolyVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("omega_f length mismatch");
    Poly acc(a.dims());
    for (int r = 0; r < a.size(); ++r) acc = acc + a[r].dagger() * b[r];
    return acc;
}

Poly omega_q(const PolyVec& a, const PolyVec& b, int qubits) {
    if (a.size() != b.size() || a.size() != 2 * qubits) throw std::invalid_argument("omega_q length mismatch");
    Poly acc(a.dims());
    for (int q = 0; q < qubits; ++q) {
        acc = acc + a[q].dagger() * b[q + qubits];       // x(a)^dag z(b)
        acc = acc + a[q + qubits].dagger() * b[q];       // z(a)^dag x(b)
    }
    return acc;
}

PolyMat fermi_comm_matrix(const FermionicSystem& sys) {
    sys.validate();
    // For even columns the all-ones block of the Majorana form contributes
    // |a||b| = 0 at every translation, so the form acts as the identity.
    const int J = sys.ops();
    PolyMat m(J, J, sys.dims);
    std::vector<PolyVec> cols;
    cols.reserve(J);
    for (int c = 0; c < J; ++c) cols.push_back(sys.tau.col(c));
    for (int i = 0; i < J; ++i)
        for (int j = 0; j < J; ++j) m.at(i, j) = omega_f(cols[i], cols[j]);
    return m;
}

PolyMat qubit_comm_matrix(const EncodingMatrix& enc) {
    const int J = enc.ops();
    if (enc.sigma.rows() != 2 * enc.qubits) throw std::invalid_argument("sigma must have 2*qubits rows");
    PolyMat m(J, J, enc.sigma.dims());
    std::vector<PolyVec> cols;
    cols.reserve(J);
    for (int c = 0; c < J; ++c) cols.push_back(enc.sigma.col(c));
    for (int i = 0; i < J; ++i)
        for (int j = 0; j < J; ++j) m.at(i, j) = omega_q(cols[i], cols[j], enc.qubits);
    return m;
}

bool check_encoding(const FermionicSystem& sys, const EncodingMatrix& enc) {
    return !find_encoding_mismatch(sys, enc).has_value();
}

std::optional<CommMismatch> find_encoding_mismatch(const FermionicSystem& sys, const EncodingMatrix& enc) {
    if (sys.ops() != enc.ops()) throw std::invalid_argument("operator count mismatch between tau and sigma");
    PolyMat f = fermi_comm_matrix(sys);
    PolyMat q = qubit_comm_matrix(enc);
    for (int i = 0; i < f.rows(); ++i)
        for (int j = 0; j < f.cols(); ++j) {
            if (f.at(i, j) == q.at(i, j)) continue;
            Poly diff = f.at(i, j) + q.at(i, j);
            return CommMismatch{i, j, diff.terms().front()};
        }
    return std::nullopt;
}

bool partial_check(const FermionicSystem& sys, const EncodingMatrix& enc, int j) {
    if (j < 0 || j >= sys.ops()) throw std::invalid_argument("partial_check column out of range");
    PolyVec tj = sys.tau.col(j);
    PolyVec sj = enc.sigma.col(j);
    for (int i = 0; i <= j; ++i) {
        Poly lhs = omega_f(sys.tau.col(i), tj);
        Poly rhs = omega_q(enc.sigma.col(i), sj, enc.qubits);
        if (lhs != rhs) return false;
    }
    return true;
}

int column_weight(const PolyVec& pauli_col, int qubits) {
    if (pauli_col.size() != 2 * qubits) throw std::invalid_argument("column length mismatch");
    int w = 0;
    for (int q = 0; q < qubits; ++q) {
        std::set<Exp> cells(pauli_col[q].terms().begin(), pauli_col[q].terms().end());
        cells.insert(pauli_col[q + qubits].terms().begin(), pauli_col[q + qubits].terms().end());
        w += static_cast<int>(cells.size());
    }
    return w;
}

}  // namespace fermenc
