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

#include "fermenc/fermenc.h"

#include <cstring>
#include <new>
#include <string>

#include "problem.hpp"

using namespace fermenc;

struct fermenc_problem {
    Problem p;
};

struct fermenc_result {
    RunReport report;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = new (std::nothrow) char[s.size() + 1];
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void store_error(char** errmsg, const std::string& msg) {
    if (errmsg) *errmsg = dup_string(msg);
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
int guarded(char** errmsg, Fn&& fn) {
    if (errmsg) *errmsg = nullptr;
    try {
        return fn();
    } catch (const ParseError& e) {
        store_error(errmsg, e.what());
        return FERMENC_PARSE_ERROR;
    } catch (const InternalError& e) {
        store_error(errmsg, e.what());
        return FERMENC_INTERNAL_ERROR;
    } catch (const std::invalid_argument& e) {
        store_error(errmsg, e.what());
        return FERMENC_INVALID_ARGUMENT;
    } catch (const std::runtime_error& e) {
        // Positioned file errors come through here.
        store_error(errmsg, e.what());
        return FERMENC_PARSE_ERROR;
    } catch (const std::exception& e) {
        store_error(errmsg, e.what());
        return FERMENC_INTERNAL_ERROR;
    }
}

int status_of(const RunReport& r) {
    switch (r.status) {
        case RunStatus::Found:
        case RunStatus::Verified: return FERMENC_OK;
        case RunStatus::NoSolution: return FERMENC_NO_SOLUTION;
        case RunStatus::Inconclusive: return FERMENC_INCONCLUSIVE;
        default: return FERMENC_VERIFY_FAIL;
    }
}

}  // namespace

extern "C" {

const char* fermenc_version(void) { return "fermenc 1.0.0 (format fermenc/1)"; }

int fermenc_problem_parse(const char* text, fermenc_problem** out, char** errmsg) {
    if (!text || !out) {
        store_error(errmsg, "null argument");
        return FERMENC_INVALID_ARGUMENT;
    }
    return guarded(errmsg, [&] {
        auto* h = new fermenc_problem{parse_problem(text)};
        *out = h;
        return FERMENC_OK;
    });
}

int fermenc_problem_from_catalog(const char* name, fermenc_problem** out, char** errmsg) {
    if (!name || !out) {
        store_error(errmsg, "null argument");
        return FERMENC_INVALID_ARGUMENT;
    }
    return guarded(errmsg, [&] {
        auto* h = new fermenc_problem{catalog_problem(name)};
        *out = h;
        return FERMENC_OK;
    });
}

int fermenc_problem_assemble(const char* system, const char* hardware, fermenc_problem** out, char** errmsg) {
    if (!out) {
        store_error(errmsg, "null argument");
        return FERMENC_INVALID_ARGUMENT;
    }
    return guarded(errmsg, [&] {
        auto* h = new fermenc_problem{assemble_problem(system ? system : "", hardware ? hardware : "")};
        *out = h;
        return FERMENC_OK;
    });
}

int fermenc_problem_set_param(fermenc_problem* p, const char* key, const char* value, char** errmsg) {
    if (!p || !key || !value) {
        store_error(errmsg, "null argument");
        return FERMENC_INVALID_ARGUMENT;
    }
    return guarded(errmsg, [&] {
        set_problem_param(p->p, key, value);
        return FERMENC_OK;
    });
}

int fermenc_problem_text(const fermenc_problem* p, char** text, char** errmsg) {
    if (!p || !text) {
        store_error(errmsg, "null argument");
        return FERMENC_INVALID_ARGUMENT;
    }
    return guarded(errmsg, [&] {
        *text = dup_string(serialize_problem(p->p));
        return FERMENC_OK;
    });
}

void fermenc_problem_free(fermenc_problem* p) { delete p; }

int fermenc_search(const fermenc_problem* p, fermenc_progress_fn progress, void* user, fermenc_result** out,
                   char** errmsg) {
    if (!p || !out) {
        store_error(errmsg, "null argument");
        return FERMENC_INVALID_ARGUMENT;
    }
    return guarded(errmsg, [&] {
        ProgressFn hook;
        if (progress)
            hook = [progress, user](uint64_t nodes, int depth, int best) { progress(nodes, depth, best, user); };
        auto* r = new fermenc_result{run_search(p->p, hook)};
        *out = r;
        return status_of(r->report);
    });
}

int fermenc_verify(const fermenc_problem* p, fermenc_result** out, char** errmsg) {
    if (!p || !out) {
        store_error(errmsg, "null argument");
        return FERMENC_INVALID_ARGUMENT;
    }
    return guarded(errmsg, [&] {
        auto* r = new fermenc_result{run_verify(p->p)};
        *out = r;
        return status_of(r->report);
    });
}

int fermenc_distance(const fermenc_problem* p, fermenc_result** out, char** errmsg) {
    if (!p || !out) {
        store_error(errmsg, "null argument");
        return FERMENC_INVALID_ARGUMENT;
    }
    return guarded(errmsg, [&] {
        auto* r = new fermenc_result{run_distance(p->p)};
        *out = r;
        return r->report.exit_code == 0 ? FERMENC_OK : FERMENC_NO_SOLUTION;
    });
}

const char* fermenc_result_report(const fermenc_result* r) { return r ? r->report.text.c_str() : nullptr; }

int fermenc_result_status(const fermenc_result* r) {
    return r ? status_of(r->report) : FERMENC_INVALID_ARGUMENT;
}

void fermenc_result_free(fermenc_result* r) { delete r; }

int fermenc_catalog_list(char** text, char** errmsg) {
    if (!text) {
        store_error(errmsg, "null argument");
        return FERMENC_INVALID_ARGUMENT;
    }
    return guarded(errmsg, [&] {
        *text = dup_string(catalog_listing());
        return FERMENC_OK;
    });
}

int fermenc_catalog_emit(const char* name, char** text, char** errmsg) {
    if (!name || !text) {
        store_error(errmsg, "null argument");
        return FERMENC_INVALID_ARGUMENT;
    }
    return guarded(errmsg, [&] {
        *text = dup_string(serialize_problem(catalog_problem(name)));
        return FERMENC_OK;
    });
}

void fermenc_string_free(char* s) { delete[] s; }

}  // extern "C"
