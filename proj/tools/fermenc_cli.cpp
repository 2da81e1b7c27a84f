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

// Command line front end. Talks to the library exclusively through the C
// API in fermenc/fermenc.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fermenc/fermenc.h"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

std::string take_string(char* s) {
    std::string out = s ? s : "";
    fermenc_string_free(s);
    return out;
}

[[noreturn]] void die(int code, const std::string& msg) {
    std::cerr << "fermenc: " << msg << "\n";
    std::exit(code);
}

int exit_code_for(int status) {
    switch (status) {
        case FERMENC_OK: return 0;
        case FERMENC_NO_SOLUTION:
        case FERMENC_VERIFY_FAIL:
        case FERMENC_INCONCLUSIVE: return 1;
        case FERMENC_PARSE_ERROR:
        case FERMENC_INVALID_ARGUMENT: return kExitUsage;
        default: return kExitInternal;
    }
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) die(kExitUsage, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) die(kExitUsage, "cannot write '" + path + "'");
    out << text;
}

struct CommonOpts {
    std::string file;
    std::string system, hardware;
    std::string output;
    std::optional<int> max_weight, max_cost, range, min_weight, margin, region, jobs;
    bool require_error_detection = false;
    bool single_thread = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_search_flags) {
    cmd->add_option("file", o.file, "problem file ('-' for stdin)");
    cmd->add_option("--system", o.system, "catalog system name");
    cmd->add_option("--hardware", o.hardware, "catalog hardware cell name");
    cmd->add_option("--output", o.output, "write the report here instead of stdout");
    cmd->add_option("--max-weight", o.max_weight, "maximum Pauli weight per column");
    cmd->add_option("--max-cost", o.max_cost, "maximum Steiner cost per column");
    cmd->add_option("--range", o.range, "support radius in cells");
    cmd->add_option("--min-weight", o.min_weight, "minimum Pauli weight per column");
    cmd->add_option("--margin", o.margin, "extra cells around the support box when pricing");
    cmd->add_option("--region", o.region, "patch side for stabilizer extraction");
    if (with_search_flags) {
        cmd->add_flag("--require-error-detection", o.require_error_detection,
                      "only accept distance-2 error detecting encodings");
        cmd->add_flag("--single-thread", o.single_thread, "force one worker (exact traversal order)");
        cmd->add_option("--jobs", o.jobs, "number of parallel workers for the top search level");
    }
}

fermenc_problem* load_problem(const CommonOpts& o) {
    fermenc_problem* p = nullptr;
    char* err = nullptr;
    int rc = FERMENC_OK;
    if (!o.file.empty()) {
        std::string text = read_input(o.file);
        rc = fermenc_problem_parse(text.c_str(), &p, &err);
    } else if (!o.system.empty() || !o.hardware.empty()) {
        rc = fermenc_problem_assemble(o.system.c_str(), o.hardware.c_str(), &p, &err);
    } else {
        die(kExitUsage, "give a problem file or --system/--hardware");
    }
    if (rc != FERMENC_OK) die(exit_code_for(rc), take_string(err));

    auto set = [&](const char* key, const std::string& value) {
        char* e = nullptr;
        int r = fermenc_problem_set_param(p, key, value.c_str(), &e);
        if (r != FERMENC_OK) die(exit_code_for(r), take_string(e));
    };
    if (o.max_weight) set("max_weight", std::to_string(*o.max_weight));
    if (o.max_cost) set("max_cost", std::to_string(*o.max_cost));
    if (o.range) set("range", std::to_string(*o.range));
    if (o.min_weight) set("min_weight", std::to_string(*o.min_weight));
    if (o.margin) set("margin", std::to_string(*o.margin));
    if (o.region) set("region", std::to_string(*o.region));
    if (o.require_error_detection) set("error_detection", "on");
    if (o.single_thread) set("jobs", "1");
    if (o.jobs && !o.single_thread) set("jobs", std::to_string(*o.jobs));
    return p;
}

void progress_line(uint64_t nodes, int depth, int incumbent, void*) {
    std::fprintf(stderr, "\rsearch: nodes=%llu depth=%d incumbent=%s   ", (unsigned long long)nodes, depth,
                 incumbent < 0 ? "-" : std::to_string(incumbent).c_str());
}

int finish(const CommonOpts& o, fermenc_result* res, int rc) {
    const char* report = fermenc_result_report(res);
    write_output(o.output, report ? report : "");
    fermenc_result_free(res);
    return exit_code_for(rc);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fermenc: tailored translationally invariant fermion-to-qubit encodings"};
    app.require_subcommand(1);

    CommonOpts so, vo, dopt;
    bool show_progress = false;

    CLI::App* search = app.add_subcommand("search", "search for a minimum-cost encoding");
    add_common(search, so, true);
    search->add_flag("--progress", show_progress, "print progress to stderr");

    CLI::App* verify = app.add_subcommand("verify", "check an encoding and its stated properties");
    add_common(verify, vo, false);

    CLI::App* distance = app.add_subcommand("distance", "run the stabilizer and distance-2 analysis");
    add_common(distance, dopt, false);

    CLI::App* catalog = app.add_subcommand("catalog", "list or emit built-in systems, cells and encodings");
    std::string emit_name, catalog_output;
    CLI::App* cat_list = catalog->add_subcommand("list", "list catalog entries");
    CLI::App* cat_emit = catalog->add_subcommand("emit", "emit one entry as a problem file");
    cat_emit->add_option("name", emit_name, "catalog entry name")->required();
    cat_emit->add_option("--output", catalog_output, "write to a file instead of stdout");
    catalog->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (search->parsed()) {
            fermenc_problem* p = load_problem(so);
            fermenc_result* res = nullptr;
            char* err = nullptr;
            int rc = fermenc_search(p, show_progress ? progress_line : nullptr, nullptr, &res, &err);
            if (show_progress) std::fprintf(stderr, "\n");
            fermenc_problem_free(p);
            if (!res) die(exit_code_for(rc), take_string(err));
            return finish(so, res, rc);
        }
        if (verify->parsed()) {
            fermenc_problem* p = load_problem(vo);
            fermenc_result* res = nullptr;
            char* err = nullptr;
            int rc = fermenc_verify(p, &res, &err);
            fermenc_problem_free(p);
            if (!res) die(exit_code_for(rc), take_string(err));
            return finish(vo, res, rc);
        }
        if (distance->parsed()) {
            fermenc_problem* p = load_problem(dopt);
            fermenc_result* res = nullptr;
            char* err = nullptr;
            int rc = fermenc_distance(p, &res, &err);
            fermenc_problem_free(p);
            if (!res) die(exit_code_for(rc), take_string(err));
            return finish(dopt, res, rc);
        }
        if (cat_list->parsed()) {
            char* text = nullptr;
            char* err = nullptr;
            int rc = fermenc_catalog_list(&text, &err);
            if (rc != FERMENC_OK) die(exit_code_for(rc), take_string(err));
            std::cout << take_string(text);
            return 0;
        }
        if (cat_emit->parsed()) {
            char* text = nullptr;
            char* err = nullptr;
            int rc = fermenc_catalog_emit(emit_name.c_str(), &text, &err);
            if (rc != FERMENC_OK) die(exit_code_for(rc), take_string(err));
            write_output(catalog_output, take_string(text));
            return 0;
        }
    } catch (const std::exception& e) {
        die(kExitInternal, e.what());
    }
    return kExitUsage;
}
