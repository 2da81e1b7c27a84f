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

#ifndef FERMENC_CATALOG_HPP
#define FERMENC_CATALOG_HPP

#include <string>
#include <vector>

#include "hardware.hpp"
#include "symplectic.hpp"

namespace fermenc {

struct CatalogSystem {
    std::string name;
    std::string note;
    FermionicSystem system;
};

struct CatalogCell {
    std::string name;
    std::string note;
    HardwareCell cell;
};

// A known-good encoding: sigma columns in system operator order together
// with the properties it must verify to.
struct GoldenEncoding {
    std::string name;
    std::string system;
    std::string hardware;
    std::vector<std::vector<std::string>> sigma_cols;  // per op, 2n polynomial strings
    int max_weight = 0;
    int max_cost = 0;
    long long avg_num = 0, avg_den = 1;
    std::string flag;  // yes | yes* | no
    std::string family;
    std::string qubits_per_mode;  // stored verbatim
};

const std::vector<CatalogSystem>& catalog_systems();
const std::vector<CatalogCell>& catalog_cells();
const std::vector<GoldenEncoding>& catalog_goldens();

const CatalogSystem* find_system(const std::string& name);
const CatalogCell* find_cell(const std::string& name);
const GoldenEncoding* find_golden(const std::string& name);

}  // namespace fermenc

#endif
