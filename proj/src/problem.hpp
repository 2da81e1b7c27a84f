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

#ifndef FERMENC_PROBLEM_HPP
#define FERMENC_PROBLEM_HPP

#include <optional>
#include <string>

#include "search.hpp"
#include "stabilizer.hpp"

namespace fermenc {

// Expectations attached to a problem; verify compares recomputed properties
// against whatever is present. family and qubits_per_mode are informational
// labels carried verbatim.
struct ExpectBlock {
    std::optional<int> max_weight;
    std::optional<int> max_cost;
    std::optional<std::pair<long long, long long>> avg_cost;  // exact fraction
    std::optional<DistanceFlag> error_detecting;
    std::string family;
    std::string qubits_per_mode;

    bool any() const { return max_weight || max_cost || avg_cost || error_detecting; }
};

// In-memory form of the "fermenc/1" problem file.
struct Problem {
    bool has_system = false;
    bool has_hardware = false;
    std::string system_name;
    std::string hardware_name;
    FermionicSystem system;
    HardwareCell cell;
    SearchParams params;
    std::optional<EncodingMatrix> encoding;
    ExpectBlock expect;
};

Problem parse_problem(const std::string& text);
std::string serialize_problem(const Problem& p);

// Problem assembled from catalog names ("" = leave section empty). For a
// golden encoding name the attached sigma and expectations come along.
Problem catalog_problem(const std::string& name);
Problem assemble_problem(const std::string& system_name, const std::string& hardware_name);

std::string catalog_listing();

// Applies a "key = value" override onto the params (or expect) blocks.
void set_problem_param(Problem& p, const std::string& key, const std::string& value);

enum class RunStatus { Found, NoSolution, Inconclusive, Verified, Mismatch };
std::string to_string(RunStatus s);

struct RunReport {
    RunStatus status = RunStatus::NoSolution;
    std::string text;  // full report, itself a parseable problem file
    int exit_code = 1;
};

RunReport run_search(const Problem& p, const ProgressFn& progress = nullptr);
RunReport run_verify(const Problem& p);
RunReport run_distance(const Problem& p);

}  // namespace fermenc

#endif
