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

#include "catalog.hpp"

namespace fermenc {

namespace {

struct OpSpec {
    const char* name;
    const char* phase;
    std::vector<const char*> col;  // 2m polynomial entries, gamma rows then gamma-bar rows
};

FermionicSystem make_system(int dims, int modes, const std::vector<OpSpec>& ops) {
    FermionicSystem s;
    s.dims = dims;
    s.modes = modes;
    s.tau = PolyMat(2 * modes, static_cast<int>(ops.size()), dims);
    for (size_t j = 0; j < ops.size(); ++j) {
        s.op_names.push_back(ops[j].name);
        s.op_phases.push_back(Phase::parse(ops[j].phase));
        if (ops[j].col.size() != static_cast<size_t>(2 * modes))
            throw std::invalid_argument("catalog system column length");
        for (int r = 0; r < 2 * modes; ++r) s.tau.at(r, static_cast<int>(j)) = parse_poly(ops[j].col[r], dims);
    }
    s.validate();
    return s;
}

struct EdgeSpec {
    int q1, q2, dx, dy;
};

HardwareCell make_cell(int qubits, const std::vector<EdgeSpec>& edges) {
    std::vector<HardwareEdge> raw;
    for (const EdgeSpec& e : edges) {
        HardwareEdge h;
        h.q1 = e.q1;
        h.q2 = e.q2;
        h.offset = exp_zero();
        h.offset[0] = e.dx;
        h.offset[1] = e.dy;
        raw.push_back(h);
    }
    return HardwareCell::create(2, qubits, raw);
}

std::vector<CatalogSystem> build_systems() {
    std::vector<CatalogSystem> v;
    v.push_back({"square1", "spinless fermions on the square lattice, edge and vertex operators",
                 make_system(2, 1,
                             {{"Ey", "-i", {"1+y", "0"}},
                              {"Ex", "-i", {"1+x", "0"}},
                              {"V", "-i", {"1", "1"}}})});
    v.push_back({"square1-numpres", "square lattice, number-preserving hopping halves plus the vertex operator",
                 make_system(2, 1,
                             {{"HyA", "+1", {"y", "1"}},
                              {"HyB", "-1", {"1", "y"}},
                              {"HxA", "+1", {"x", "1"}},
                              {"HxB", "-1", {"1", "x"}},
                              {"V", "-i", {"1", "1"}}})});
    v.push_back({"triang1", "spinless fermions on the triangular lattice",
                 make_system(2, 1,
                             {{"Exy", "-i", {"1+x*y", "0"}},
                              {"Ey", "-i", {"1+y", "0"}},
                              {"Ex", "-i", {"1+x", "0"}},
                              {"V", "-i", {"1", "1"}}})});
    v.push_back({"spinful-sq2", "two decoupled spin sectors on the square lattice, two modes per cell",
                 make_system(2, 2,
                             {{"E2y", "-i", {"0", "1+y", "0", "0"}},
                              {"E2x", "-i", {"0", "1+x", "0", "0"}},
                              {"V2", "-i", {"0", "1", "0", "1"}},
                              {"E1y", "-i", {"1+y", "0", "0", "0"}},
                              {"E1x", "-i", {"1+x", "0", "0", "0"}},
                              {"V1", "-i", {"1", "0", "1", "0"}}})});
    v.push_back({"hex2", "spinless fermions on the honeycomb lattice, two modes per cell",
                 make_system(2, 2,
                             {{"Ey", "-i", {"y", "1", "0", "0"}},
                              {"Ex", "-i", {"x", "1", "0", "0"}},
                              {"E0", "-i", {"1", "1", "0", "0"}},
                              {"V2", "-i", {"0", "1", "0", "1"}},
                              {"V1", "-i", {"1", "0", "1", "0"}}})});
    v.push_back({"tilted-sq2", "spinless fermions on the tilted square lattice, two modes per cell",
                 make_system(2, 2,
                             {{"E1", "-i", {"1", "x^-1*y", "0", "0"}},
                              {"E2", "-i", {"x", "1", "0", "0"}},
                              {"E3", "-i", {"1", "y", "0", "0"}},
                              {"E4", "-i", {"1", "1", "0", "0"}},
                              {"V2", "-i", {"0", "1", "0", "1"}},
                              {"V1", "-i", {"1", "0", "1", "0"}}})});
    v.push_back({"kagome3", "spinless fermions on the kagome lattice, three modes per cell",
                 make_system(2, 3,
                             {{"E1", "-i", {"0", "x", "1", "0", "0", "0"}},
                              {"E2", "-i", {"0", "1", "1", "0", "0", "0"}},
                              {"E3", "-i", {"x*y", "0", "1", "0", "0", "0"}},
                              {"E4", "-i", {"1", "0", "1", "0", "0", "0"}},
                              {"E5", "-i", {"y", "1", "0", "0", "0", "0"}},
                              {"E6", "-i", {"1", "1", "0", "0", "0", "0"}},
                              {"V3", "-i", {"0", "0", "1", "0", "0", "1"}},
                              {"V2", "-i", {"0", "1", "0", "0", "1", "0"}},
                              {"V1", "-i", {"1", "0", "0", "1", "0", "0"}}})});
    v.push_back({"kagome-alt3", "kagome lattice with the alternative unit cell",
                 make_system(2, 3,
                             {{"E1", "-i", {"1", "0", "y^-1", "0", "0", "0"}},
                              {"E2", "-i", {"x", "0", "1", "0", "0", "0"}},
                              {"E3", "-i", {"0", "1", "y^-1", "0", "0", "0"}},
                              {"E4", "-i", {"0", "1", "1", "0", "0", "0"}},
                              {"E5", "-i", {"x", "1", "0", "0", "0", "0"}},
                              {"E6", "-i", {"1", "1", "0", "0", "0", "0"}},
                              {"V3", "-i", {"0", "0", "1", "0", "0", "1"}},
                              {"V2", "-i", {"0", "1", "0", "0", "1", "0"}},
                              {"V1", "-i", {"1", "0", "0", "1", "0", "0"}}})});
    v.push_back({"hubbard-sq2", "spinful Fermi-Hubbard algebra on the square lattice",
                 make_system(2, 2,
                             {{"NN", "+1", {"1", "1", "1", "1"}},
                              {"H1xA", "+1", {"x", "0", "1", "0"}},
                              {"H1xB", "-1", {"1", "0", "x", "0"}},
                              {"H1yA", "+1", {"y", "0", "1", "0"}},
                              {"H1yB", "-1", {"1", "0", "y", "0"}},
                              {"H2xA", "+1", {"0", "x", "0", "1"}},
                              {"H2xB", "-1", {"0", "1", "0", "x"}},
                              {"H2yA", "+1", {"0", "y", "0", "1"}},
                              {"H2yB", "-1", {"0", "1", "0", "y"}}})});
    return v;
}

std::vector<CatalogCell> build_cells() {
    std::vector<CatalogCell> v;
    v.push_back({"square2", "square lattice, two qubits per cell side by side",
                 make_cell(2, {{0, 1, 0, 0}, {1, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 0, 1}})});
    v.push_back({"tilted-square2", "45-degree square lattice, two qubits per cell",
                 make_cell(2, {{0, 1, 0, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, -1, 1}})});
    v.push_back({"sq-bilayer2", "two stacked square lattices joined by a rung, one qubit per layer",
                 make_cell(2, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 1, 0}, {1, 1, 0, 1}})});
    v.push_back({"hex2", "honeycomb lattice, two qubits per cell",
                 make_cell(2, {{0, 1, 0, 0}, {1, 0, 0, 1}, {1, 0, 1, 0}})});
    v.push_back({"triang2", "triangular lattice, two qubits per cell",
                 make_cell(2, {{0, 1, 0, 0}, {1, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 0, 1}, {0, 1, 0, 1}, {1, 0, 1, 1}})});
    v.push_back({"lieb3", "Lieb lattice (decorated square), three qubits per cell",
                 make_cell(3, {{1, 0, 0, 0}, {0, 1, 0, 1}, {1, 2, 0, 0}, {2, 1, 1, 0}})});
    v.push_back({"rhombile3", "rhombille tiling, three qubits per cell",
                 make_cell(3, {{0, 2, 0, 0},
                               {1, 2, 0, 0},
                               {2, 0, 0, 1},
                               {1, 2, 1, 0},
                               {0, 2, 1, -1},
                               {1, 2, 1, -1}})});
    v.push_back({"kagome3", "kagome lattice, three qubits per cell",
                 make_cell(3, {{0, 2, 0, 0}, {2, 0, 0, 1}, {2, 1, 0, 0}, {1, 2, 1, 0}, {0, 1, 0, 0}, {1, 0, 1, 1}})});
    v.push_back({"truncated-sq4", "truncated square tiling (squares and octagons), four qubits per cell",
                 make_cell(4, {{0, 2, 0, 0}, {0, 1, 0, 0}, {3, 1, 0, 0}, {3, 2, 0, 0}, {3, 0, 0, 1}, {1, 2, 1, 0}})});
    v.push_back({"hex-bilayer4", "two stacked honeycomb lattices with vertical rungs, four qubits per cell",
                 make_cell(4, {{2, 0, 0, 0},
                               {3, 1, 0, 0},
                               {0, 1, 0, 0},
                               {1, 0, 1, 0},
                               {0, 1, 0, -1},
                               {2, 3, 0, 0},
                               {3, 2, 1, 0},
                               {2, 3, 0, -1}})});
    v.push_back({"sq-bilayer4", "two stacked square lattices, two qubits per layer per cell",
                 make_cell(4, {{0, 1, 0, 0},
                               {1, 0, 1, 0},
                               {0, 0, 0, 1},
                               {1, 1, 0, 1},
                               {2, 3, 0, 0},
                               {3, 2, 1, 0},
                               {2, 2, 0, 1},
                               {3, 3, 0, 1},
                               {0, 2, 0, 0},
                               {1, 3, 0, 0}})});
    v.push_back({"snub-sq4", "snub square tiling, four qubits per cell",
                 make_cell(4, {{0, 1, 0, 0},
                               {1, 0, 1, 0},
                               {2, 3, 0, 0},
                               {3, 2, 1, 0},
                               {0, 2, 0, 0},
                               {2, 0, 0, 1},
                               {1, 3, 0, 0},
                               {3, 1, 0, 1},
                               {1, 2, 1, 0},
                               {3, 0, 0, 1}})});
    v.push_back({"heavy-hex5", "heavy-hexagon lattice, five qubits per cell",
                 make_cell(5, {{0, 1, 0, 0}, {1, 2, 0, 0}, {2, 3, 0, 0}, {3, 4, 0, 0}, {4, 1, 0, 1}, {3, 0, 1, 0}})});
    return v;
}

using Cols = std::vector<std::vector<std::string>>;

GoldenEncoding golden(const char* name, const char* system, const char* hardware, Cols cols, int max_w, int max_c,
                      long long num, long long den, const char* flag, const char* family, const char* qpm) {
    GoldenEncoding g;
    g.name = name;
    g.system = system;
    g.hardware = hardware;
    g.sigma_cols = std::move(cols);
    g.max_weight = max_w;
    g.max_cost = max_c;
    g.avg_num = num;
    g.avg_den = den;
    g.flag = flag;
    g.family = family;
    g.qubits_per_mode = qpm;
    return g;
}

std::vector<GoldenEncoding> build_goldens() {
    // GSE-style solution of square1 on a two-qubit cell.
    const Cols gse2 = {{"y", "0", "1", "1"}, {"x", "1", "1+x", "0"}, {"0", "1", "1", "1"}};
    // The same solution on qubits 0,1 of a four-qubit cell.
    const Cols gse4 = {{"y", "0", "0", "0", "1", "1", "0", "0"},
                       {"x", "1", "0", "0", "1+x", "0", "0", "0"},
                       {"0", "1", "0", "0", "1", "1", "0", "0"}};
    // hex2 solution reused on several four-qubit cells (qubit 3 idle).
    const Cols hex_on4 = {{"0", "0", "0", "0", "y", "1", "0", "0"},
                          {"x", "1", "0", "0", "0", "0", "0", "0"},
                          {"1", "1", "0", "0", "1", "1", "1", "0"},
                          {"0", "1", "1", "0", "0", "1", "0", "0"},
                          {"1", "0", "1", "0", "1", "0", "0", "0"}};

    std::vector<GoldenEncoding> v;
    v.push_back(golden("square1-on-square2", "square1", "square2", gse2, 3, 2, 5, 3, "yes", "GSE family", "2"));
    v.push_back(golden("square1-on-hex2", "square1", "hex2", gse2, 3, 2, 5, 3, "yes", "GSE family", "2"));
    v.push_back(golden("square1-on-tilted-square2", "square1", "tilted-square2",
                       {{"0", "y", "1", "1"}, {"x", "1", "0", "1+x"}, {"1", "0", "1", "1"}}, 3, 2, 5, 3, "yes",
                       "GSE family", "2"));
    v.push_back(golden("square1-on-triang2", "square1", "triang2", gse2, 3, 2, 5, 3, "yes", "GSE family", "2"));
    v.push_back(
        golden("square1-on-sq-bilayer2", "square1", "sq-bilayer2", gse2, 3, 2, 5, 3, "yes", "GSE family", "2"));
    v.push_back(golden("square1-on-rhombile3", "square1", "rhombile3",
                       {{"y", "0", "0", "1", "0", "1"},
                        {"1+x", "0", "x*y^-1", "1", "0", "0"},
                        {"0", "0", "1", "1", "0", "0"}},
                       3, 2, 5, 3, "yes*", "New here", "2*"));
    v.push_back(
        golden("square1-on-hex-bilayer4", "square1", "hex-bilayer4", gse4, 3, 2, 5, 3, "yes*", "GSE family", "2*"));
    v.push_back(
        golden("square1-on-sq-bilayer4", "square1", "sq-bilayer4", gse4, 3, 2, 5, 3, "yes*", "GSE family", "2*"));
    v.push_back(golden("square1-numpres-on-sq-bilayer2", "square1-numpres", "sq-bilayer2",
                       {{"0", "0", "1+y", "1"},
                        {"1+y", "0", "0", "y"},
                        {"x", "1+x", "x", "0"},
                        {"1", "1+x", "1", "1+x"},
                        {"1", "0", "1", "1"}},
                       3, 2, 9, 5, "yes", "GSE family", "2"));
    v.push_back(golden("triang1-on-tilted-square2", "triang1", "tilted-square2",
                       {{"x*y", "0", "1", "y"},
                        {"y", "y", "1+y", "0"},
                        {"1+x", "1", "1", "1"},
                        {"1", "0", "1", "1"}},
                       3, 2, 7, 4, "yes", "New here*", "2"));
    v.push_back(golden("triang1-on-triang2", "triang1", "triang2",
                       {{"x*y", "0", "1", "1"},
                        {"1+y", "x^-1", "1", "0"},
                        {"x", "1", "1+x", "1"},
                        {"0", "1", "1", "0"}},
                       3, 2, 7, 4, "yes", "New here", "2"));
    const Cols spinful_bilayer = {{"y", "0", "0", "0", "1", "1", "0", "0"},
                                  {"x", "1", "0", "0", "1+x", "0", "0", "0"},
                                  {"0", "1", "0", "0", "1", "1", "0", "0"},
                                  {"0", "0", "y", "0", "0", "0", "1", "1"},
                                  {"0", "0", "x", "1", "0", "0", "1+x", "0"},
                                  {"0", "0", "0", "1", "0", "0", "1", "1"}};
    v.push_back(golden("spinful-sq2-on-hex-bilayer4", "spinful-sq2", "hex-bilayer4", spinful_bilayer, 3, 2, 10, 6,
                       "yes", "GSE family", "2"));
    v.push_back(golden("spinful-sq2-on-sq-bilayer4", "spinful-sq2", "sq-bilayer4", spinful_bilayer, 3, 2, 10, 6,
                       "yes", "GSE family", "2"));
    v.push_back(golden("hex2-on-lieb3", "hex2", "lieb3",
                       {{"0", "0", "0", "1", "0", "1"},
                        {"x*y^-1", "0", "1", "0", "0", "0"},
                        {"y^-1", "0", "1", "y^-1", "1", "1"},
                        {"0", "1", "1", "0", "0", "1"},
                        {"y^-1", "1", "0", "y^-1", "0", "0"}},
                       3, 2, 8, 5, "no", "New here", "1.5"));
    v.push_back(golden("hex2-on-kagome3", "hex2", "kagome3",
                       {{"0", "0", "0", "1", "x^-1", "0"},
                        {"1", "y^-1", "0", "0", "0", "0"},
                        {"1", "x^-1*y^-1", "0", "1", "x^-1*y^-1", "1"},
                        {"1", "0", "1", "1", "0", "0"},
                        {"0", "x^-1*y^-1", "1", "0", "x^-1*y^-1", "0"}},
                       3, 2, 9, 5, "no", "New here", "1.5"));
    v.push_back(golden("hex2-on-rhombile3", "hex2", "rhombile3",
                       {{"0", "0", "0", "1", "0", "1"},
                        {"1", "0", "x*y^-1", "0", "y^-1", "0"},
                        {"1", "0", "y^-1", "1", "0", "y^-1"},
                        {"1", "y^-1", "0", "0", "0", "0"},
                        {"0", "y^-1", "y^-1", "1", "y^-1", "y^-1"}},
                       3, 2, 8, 5, "no", "New here", "1.5"));
    v.push_back(golden("hex2-on-truncated-sq4", "hex2", "truncated-sq4", hex_on4, 3, 2, 9, 5, "no", "New here",
                       "1.5*"));
    v.push_back(golden("hex2-on-hex-bilayer4", "hex2", "hex-bilayer4", hex_on4, 3, 2, 7, 5, "no", "New here",
                       "1.5*"));
    v.push_back(golden("hex2-on-sq-bilayer4", "hex2", "sq-bilayer4",
                       {{"0", "0", "0", "0", "1", "x^-1*y", "0", "0"},
                        {"1", "1", "0", "0", "0", "0", "0", "0"},
                        {"1", "x^-1", "0", "0", "1", "x^-1", "1", "0"},
                        {"1", "0", "1", "0", "1", "0", "0", "0"},
                        {"0", "x^-1", "1", "0", "0", "x^-1", "0", "0"}},
                       3, 2, 8, 5, "no", "New here", "1.5*"));
    v.push_back(golden("hex2-on-snub-sq4", "hex2", "snub-sq4",
                       {{"0", "0", "0", "0", "y", "1", "0", "1"},
                        {"x", "1", "0", "0", "0", "0", "0", "0"},
                        {"1", "1", "0", "0", "1", "1", "0", "0"},
                        {"0", "0", "0", "1", "0", "1", "0", "0"},
                        {"0", "0", "0", "y^-1", "1", "0", "0", "0"}},
                       3, 2, 6, 5, "no", "New here", "1.5*"));
    v.push_back(golden("hex2-on-heavy-hex5", "hex2", "heavy-hex5",
                       {{"0", "0", "0", "0", "0", "0", "y", "0", "1", "0"},
                        {"0", "x", "0", "1", "0", "0", "0", "0", "0", "0"},
                        {"0", "1", "0", "1", "0", "0", "1", "1", "1", "0"},
                        {"0", "0", "1", "1", "0", "0", "0", "0", "1", "0"},
                        {"0", "1", "1", "0", "0", "0", "1", "0", "0", "0"}},
                       3, 2, 8, 5, "no", "New here", "1.5*"));
    v.push_back(golden("tilted-sq2-on-lieb3", "tilted-sq2", "lieb3",
                       {{"0", "0", "0", "1", "y", "x^-1*y"},
                        {"x", "x", "0", "0", "0", "1"},
                        {"0", "y", "y", "1", "0", "0"},
                        {"1", "0", "1", "0", "1", "0"},
                        {"0", "0", "1", "0", "0", "1"},
                        {"1", "0", "0", "1", "0", "0"}},
                       3, 2, 8, 6, "no", "Compact encoding", "1.5"));
    v.push_back(golden("kagome3-on-truncated-sq4", "kagome3", "truncated-sq4",
                       {{"0", "0", "0", "0", "0", "1", "x", "0"},
                        {"0", "1", "1", "0", "1", "0", "0", "0"},
                        {"0", "1", "0", "0", "0", "1", "0", "x"},
                        {"1", "1", "0", "y^-1", "0", "0", "0", "0"},
                        {"0", "x^-1", "0", "0", "0", "0", "1", "1"},
                        {"1", "0", "1", "y^-1", "1", "0", "0", "0"},
                        {"1", "1", "0", "0", "1", "0", "0", "0"},
                        {"1", "0", "1", "0", "1", "0", "0", "y^-1"},
                        {"1", "0", "0", "y^-1", "1", "0", "1", "0"}},
                       3, 2, 16, 9, "no", "New here", "1.33"));
    v.push_back(golden("kagome-alt3-on-truncated-sq4", "kagome-alt3", "truncated-sq4",
                       {{"0", "0", "0", "0", "1", "x^-1", "0", "0"},
                        {"y", "1", "0", "0", "0", "0", "0", "1"},
                        {"1", "0", "0", "0", "1", "0", "1", "0"},
                        {"y", "0", "1", "1", "0", "0", "0", "0"},
                        {"0", "1", "1", "1", "0", "0", "0", "1"},
                        {"1", "0", "0", "0", "0", "x^-1", "1", "0"},
                        {"y", "0", "0", "1", "0", "0", "0", "1"},
                        {"1", "x^-1", "0", "0", "0", "0", "1", "0"},
                        {"1", "0", "1", "0", "0", "x^-1", "0", "0"}},
                       3, 2, 16, 9, "no", "New here", "1.33"));
    v.push_back(golden("kagome-alt3-on-heavy-hex5", "kagome-alt3", "heavy-hex5",
                       {{"0", "0", "0", "0", "0", "1", "0", "0", "0", "y^-1"},
                        {"x", "0", "0", "0", "1", "0", "0", "0", "1", "0"},
                        {"0", "0", "0", "0", "y^-1", "0", "0", "1", "0", "y^-1"},
                        {"0", "0", "1", "1", "1", "0", "0", "0", "0", "0"},
                        {"x", "0", "1", "1", "0", "0", "0", "0", "1", "0"},
                        {"1", "0", "1", "0", "0", "1", "1", "1", "0", "0"},
                        {"0", "0", "0", "1", "1", "0", "0", "0", "1", "0"},
                        {"0", "1", "1", "0", "0", "0", "0", "1", "0", "0"},
                        {"1", "1", "0", "0", "0", "1", "0", "0", "0", "0"}},
                       3, 2, 15, 9, "no", "New here", "1.67"));
    return v;
}

}  // namespace

const std::vector<CatalogSystem>& catalog_systems() {
    static const std::vector<CatalogSystem> v = build_systems();
    return v;
}

const std::vector<CatalogCell>& catalog_cells() {
    static const std::vector<CatalogCell> v = build_cells();
    return v;
}

const std::vector<GoldenEncoding>& catalog_goldens() {
    static const std::vector<GoldenEncoding> v = build_goldens();
    return v;
}

const CatalogSystem* find_system(const std::string& name) {
    for (const auto& s : catalog_systems())
        if (s.name == name) return &s;
    return nullptr;
}

const CatalogCell* find_cell(const std::string& name) {
    for (const auto& c : catalog_cells())
        if (c.name == name) return &c;
    return nullptr;
}

const GoldenEncoding* find_golden(const std::string& name) {
    for (const auto& g : catalog_goldens())
        if (g.name == name) return &g;
    return nullptr;
}

}  // namespace fermenc
