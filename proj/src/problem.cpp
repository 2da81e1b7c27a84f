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

#include "problem.hpp"

#include <algorithm>
#include <sstream>

#include "catalog.hpp"

namespace fermenc {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

struct LineError : std::runtime_error {
    LineError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg) {}
};

int to_int(const std::string& s, int line) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw LineError(line, "expected integer, got '" + s + "'");
    }
}

uint64_t to_u64(const std::string& s, int line) {
    try {
        size_t pos = 0;
        unsigned long long v = std::stoull(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw LineError(line, "expected integer, got '" + s + "'");
    }
}

bool to_bool(const std::string& s, int line) {
    if (s == "on" || s == "true" || s == "1" || s == "yes") return true;
    if (s == "off" || s == "false" || s == "0" || s == "no") return false;
    throw LineError(line, "expected on/off, got '" + s + "'");
}

Exp parse_offset(const std::string& s, int dims, int line) {
    std::vector<std::string> parts = split(s, ',');
    if (static_cast<int>(parts.size()) != dims)
        throw LineError(line, "offset needs " + std::to_string(dims) + " coordinates");
    Exp e = exp_zero();
    for (int d = 0; d < dims; ++d) e[d] = to_int(parts[d], line);
    return e;
}

std::string offset_string(const Exp& e, int dims) {
    std::string s;
    for (int d = 0; d < dims; ++d) {
        if (d) s += ',';
        s += std::to_string(e[d]);
    }
    return s;
}

std::pair<long long, long long> parse_fraction(const std::string& s, int line) {
    auto parts = split(s, '/');
    if (parts.size() == 1) return {to_int(parts[0], line), 1};
    if (parts.size() == 2) {
        long long num = to_int(parts[0], line);
        long long den = to_int(parts[1], line);
        if (den <= 0) throw LineError(line, "fraction denominator must be positive");
        return {num, den};
    }
    throw LineError(line, "expected N or N/D fraction");
}

struct RawOp {
    std::string name, phase;
    std::vector<std::string> entries;
    int line;
};
struct RawEdge {
    int q1, q2;
    std::string offset;
    int line;
};
struct RawCol {
    std::string name;
    std::vector<std::string> entries;
    int line;
};

}  // namespace

Problem parse_problem(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::string section;
    bool saw_header = false;

    Problem p;
    int sys_dims = -1, hw_dims = -1, modes = -1, qubits = -1;
    std::vector<RawOp> ops;
    std::vector<RawEdge> edges;
    std::vector<RawCol> cols;

    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (!saw_header) {
            if (t != "fermenc/1") throw LineError(lineno, "expected header 'fermenc/1'");
            saw_header = true;
            continue;
        }
        if (t.front() == '[') {
            if (t.back() != ']') throw LineError(lineno, "malformed section header");
            section = t.substr(1, t.size() - 2);
            if (section == "system") p.has_system = true;
            if (section == "hardware") p.has_hardware = true;
            continue;
        }
        size_t eq = t.find('=');
        if (eq == std::string::npos) throw LineError(lineno, "expected 'key = value'");
        std::string key = trim(t.substr(0, eq));
        std::string val = trim(t.substr(eq + 1));

        if (section == "system") {
            if (key == "name")
                p.system_name = val;
            else if (key == "dims")
                sys_dims = to_int(val, lineno);
            else if (key == "modes")
                modes = to_int(val, lineno);
            else if (key == "op") {
                auto parts = split(val, ':');
                if (parts.size() != 3) throw LineError(lineno, "op wants 'name : phase : entries'");
                ops.push_back({parts[0], parts[1], split(parts[2], ';'), lineno});
            } else
                throw LineError(lineno, "unknown system key '" + key + "'");
        } else if (section == "hardware") {
            if (key == "name")
                p.hardware_name = val;
            else if (key == "dims")
                hw_dims = to_int(val, lineno);
            else if (key == "qubits")
                qubits = to_int(val, lineno);
            else if (key == "edge") {
                auto parts = split(val, ':');
                if (parts.size() != 2) throw LineError(lineno, "edge wants 'q1 q2 : dx,dy'");
                std::istringstream qs(parts[0]);
                int q1, q2;
                if (!(qs >> q1 >> q2)) throw LineError(lineno, "edge wants two qubit indices");
                edges.push_back({q1, q2, parts[1], lineno});
            } else
                throw LineError(lineno, "unknown hardware key '" + key + "'");
        } else if (section == "params") {
            if (key == "range")
                p.params.range = to_int(val, lineno);
            else if (key == "max_weight")
                p.params.max_weight = to_int(val, lineno);
            else if (key == "min_weight")
                p.params.min_weight = to_int(val, lineno);
            else if (key == "max_cost")
                p.params.max_cost = to_int(val, lineno);
            else if (key == "margin")
                p.params.margin = to_int(val, lineno);
            else if (key == "region")
                p.params.region = to_int(val, lineno);
            else if (key == "error_detection")
                p.params.error_detection = to_bool(val, lineno);
            else if (key == "clifford_dedup")
                p.params.clifford_dedup = to_bool(val, lineno);
            else if (key == "jobs")
                p.params.jobs = to_int(val, lineno);
            else if (key == "column_order") {
                if (val == "input")
                    p.params.column_order = ColumnOrder::Input;
                else if (val == "constrained")
                    p.params.column_order = ColumnOrder::MostConstrained;
                else
                    throw LineError(lineno, "column_order wants input or constrained");
            } else if (key == "cache_limit")
                p.params.cache_limit = to_u64(val, lineno);
            else if (key == "node_limit")
                p.params.node_limit = to_u64(val, lineno);
            else if (key == "time_limit_ms")
                p.params.time_limit_ms = to_u64(val, lineno);
            else
                throw LineError(lineno, "unknown params key '" + key + "'");
        } else if (section == "encoding") {
            if (key == "col") {
                auto parts = split(val, ':');
                if (parts.size() != 2) throw LineError(lineno, "col wants 'name : entries'");
                cols.push_back({parts[0], split(parts[1], ';'), lineno});
            } else
                throw LineError(lineno, "unknown encoding key '" + key + "'");
        } else if (section == "expect") {
            if (key == "max_weight")
                p.expect.max_weight = to_int(val, lineno);
            else if (key == "max_cost")
                p.expect.max_cost = to_int(val, lineno);
            else if (key == "avg_cost")
                p.expect.avg_cost = parse_fraction(val, lineno);
            else if (key == "error_detecting")
                p.expect.error_detecting = parse_distance_flag(val);
            else if (key == "family")
                p.expect.family = val;
            else if (key == "qubits_per_mode")
                p.expect.qubits_per_mode = val;
            else
                throw LineError(lineno, "unknown expect key '" + key + "'");
        } else if (section == "result" || section == "stabilizers" || section == "superselection" ||
                   section == "distance") {
            // Report sections: ignored on re-parse.
        } else {
            throw LineError(lineno, section.empty() ? "content before any section" : "unknown section '" + section + "'");
        }
    }
    if (!saw_header) throw LineError(lineno, "missing 'fermenc/1' header");

    if (p.has_system) {
        if (sys_dims < 0) throw LineError(lineno, "[system] needs dims");
        if (modes < 0) throw LineError(lineno, "[system] needs modes");
        if (ops.empty()) throw LineError(lineno, "[system] needs at least one op");
        p.system.dims = sys_dims;
        p.system.modes = modes;
        p.system.tau = PolyMat(2 * modes, static_cast<int>(ops.size()), sys_dims);
        for (size_t j = 0; j < ops.size(); ++j) {
            const RawOp& op = ops[j];
            p.system.op_names.push_back(op.name);
            try {
                p.system.op_phases.push_back(Phase::parse(op.phase));
            } catch (const std::exception& e) {
                throw LineError(op.line, e.what());
            }
            if (op.entries.size() != static_cast<size_t>(2 * modes))
                throw LineError(op.line, "op '" + op.name + "' wants " + std::to_string(2 * modes) + " entries");
            for (int r = 0; r < 2 * modes; ++r) {
                try {
                    p.system.tau.at(r, static_cast<int>(j)) = parse_poly(op.entries[r], sys_dims);
                } catch (const ParseError& e) {
                    throw LineError(op.line, std::string("in op '") + op.name + "': " + e.what());
                }
            }
        }
        try {
            p.system.validate();
        } catch (const std::exception& e) {
            throw LineError(lineno, e.what());
        }
    }

    if (p.has_hardware) {
        int dims = hw_dims >= 0 ? hw_dims : sys_dims;
        if (dims < 0) throw LineError(lineno, "[hardware] needs dims (or a preceding [system])");
        if (p.has_system && hw_dims >= 0 && hw_dims != sys_dims)
            throw LineError(lineno, "hardware dims disagree with system dims");
        if (qubits < 0) throw LineError(lineno, "[hardware] needs qubits");
        std::vector<HardwareEdge> raw;
        for (const RawEdge& e : edges) {
            HardwareEdge h;
            h.q1 = e.q1;
            h.q2 = e.q2;
            h.offset = parse_offset(e.offset, dims, e.line);
            raw.push_back(h);
        }
        try {
            p.cell = HardwareCell::create(dims, qubits, raw);
        } catch (const std::exception& e) {
            throw LineError(lineno, e.what());
        }
    }

    if (!cols.empty()) {
        if (!p.has_system || !p.has_hardware)
            throw LineError(cols[0].line, "[encoding] needs both [system] and [hardware]");
        EncodingMatrix enc;
        enc.qubits = p.cell.qubits;
        enc.sigma = PolyMat(2 * p.cell.qubits, p.system.ops(), p.system.dims);
        std::vector<bool> seen(p.system.ops(), false);
        for (const RawCol& rc : cols) {
            auto it = std::find(p.system.op_names.begin(), p.system.op_names.end(), rc.name);
            if (it == p.system.op_names.end()) throw LineError(rc.line, "unknown operator '" + rc.name + "'");
            int j = static_cast<int>(it - p.system.op_names.begin());
            if (seen[j]) throw LineError(rc.line, "duplicate column for '" + rc.name + "'");
            seen[j] = true;
            if (rc.entries.size() != static_cast<size_t>(2 * p.cell.qubits))
                throw LineError(rc.line,
                                "col '" + rc.name + "' wants " + std::to_string(2 * p.cell.qubits) + " entries");
            for (int r = 0; r < 2 * p.cell.qubits; ++r) {
                try {
                    enc.sigma.at(r, j) = parse_poly(rc.entries[r], p.system.dims);
                } catch (const ParseError& e) {
                    throw LineError(rc.line, std::string("in col '") + rc.name + "': " + e.what());
                }
            }
        }
        for (int j = 0; j < p.system.ops(); ++j)
            if (!seen[j]) throw LineError(lineno, "missing encoding column for '" + p.system.op_names[j] + "'");
        p.encoding = std::move(enc);
    }
    return p;
}

namespace {

std::string col_entries(const PolyMat& m, int c) {
    std::string s;
    for (int r = 0; r < m.rows(); ++r) {
        if (r) s += " ; ";
        s += m.at(r, c).to_string();
    }
    return s;
}

void write_system(std::ostringstream& out, const Problem& p) {
    out << "[system]\n";
    if (!p.system_name.empty()) out << "name = " << p.system_name << "\n";
    out << "dims = " << p.system.dims << "\n";
    out << "modes = " << p.system.modes << "\n";
    for (int j = 0; j < p.system.ops(); ++j)
        out << "op = " << p.system.op_names[j] << " : " << p.system.op_phases[j].to_string() << " : "
            << col_entries(p.system.tau, j) << "\n";
}

void write_hardware(std::ostringstream& out, const Problem& p) {
    out << "[hardware]\n";
    if (!p.hardware_name.empty()) out << "name = " << p.hardware_name << "\n";
    out << "dims = " << p.cell.dims << "\n";
    out << "qubits = " << p.cell.qubits << "\n";
    for (const HardwareEdge& e : p.cell.edges)
        out << "edge = " << e.q1 << " " << e.q2 << " : " << offset_string(e.offset, p.cell.dims) << "\n";
}

void write_params(std::ostringstream& out, const SearchParams& s) {
    out << "[params]\n";
    out << "range = " << s.range << "\n";
    out << "max_weight = " << s.max_weight << "\n";
    out << "min_weight = " << s.min_weight << "\n";
    out << "max_cost = " << s.max_cost << "\n";
    out << "margin = " << s.margin << "\n";
    out << "region = " << s.region << "\n";
    out << "error_detection = " << (s.error_detection ? "on" : "off") << "\n";
    out << "clifford_dedup = " << (s.clifford_dedup ? "on" : "off") << "\n";
    out << "jobs = " << s.jobs << "\n";
    out << "column_order = " << (s.column_order == ColumnOrder::Input ? "input" : "constrained") << "\n";
    if (s.cache_limit != SearchParams().cache_limit) out << "cache_limit = " << s.cache_limit << "\n";
    if (s.node_limit) out << "node_limit = " << s.node_limit << "\n";
    if (s.time_limit_ms) out << "time_limit_ms = " << s.time_limit_ms << "\n";
}

void write_encoding(std::ostringstream& out, const Problem& p, const EncodingMatrix& enc) {
    out << "[encoding]\n";
    for (int j = 0; j < p.system.ops(); ++j)
        out << "col = " << p.system.op_names[j] << " : " << col_entries(enc.sigma, j) << "\n";
}

void write_expect(std::ostringstream& out, const ExpectBlock& e) {
    out << "[expect]\n";
    if (e.max_weight) out << "max_weight = " << *e.max_weight << "\n";
    if (e.max_cost) out << "max_cost = " << *e.max_cost << "\n";
    if (e.avg_cost) out << "avg_cost = " << e.avg_cost->first << "/" << e.avg_cost->second << "\n";
    if (e.error_detecting) out << "error_detecting = " << to_string(*e.error_detecting) << "\n";
    if (!e.family.empty()) out << "family = " << e.family << "\n";
    if (!e.qubits_per_mode.empty()) out << "qubits_per_mode = " << e.qubits_per_mode << "\n";
}

}  // namespace

std::string serialize_problem(const Problem& p) {
    std::ostringstream out;
    out << "fermenc/1\n";
    if (p.has_system) {
        out << "\n";
        write_system(out, p);
    }
    if (p.has_hardware) {
        out << "\n";
        write_hardware(out, p);
    }
    out << "\n";
    write_params(out, p.params);
    if (p.encoding) {
        out << "\n";
        write_encoding(out, p, *p.encoding);
    }
    if (p.expect.any() || !p.expect.family.empty() || !p.expect.qubits_per_mode.empty()) {
        out << "\n";
        write_expect(out, p.expect);
    }
    return out.str();
}

Problem assemble_problem(const std::string& system_name, const std::string& hardware_name) {
    Problem p;
    if (!system_name.empty()) {
        const CatalogSystem* s = find_system(system_name);
        if (!s) throw std::invalid_argument("unknown catalog system '" + system_name + "'");
        p.has_system = true;
        p.system_name = s->name;
        p.system = s->system;
    }
    if (!hardware_name.empty()) {
        const CatalogCell* c = find_cell(hardware_name);
        if (!c) throw std::invalid_argument("unknown catalog hardware '" + hardware_name + "'");
        p.has_hardware = true;
        p.hardware_name = c->name;
        p.cell = c->cell;
    }
    return p;
}

Problem catalog_problem(const std::string& name) {
    if (const GoldenEncoding* g = find_golden(name)) {
        Problem p = assemble_problem(g->system, g->hardware);
        EncodingMatrix enc;
        enc.qubits = p.cell.qubits;
        enc.sigma = PolyMat(2 * p.cell.qubits, p.system.ops(), p.system.dims);
        if (g->sigma_cols.size() != static_cast<size_t>(p.system.ops()))
            throw InternalError("golden '" + name + "' column count mismatch");
        for (int j = 0; j < p.system.ops(); ++j) {
            if (g->sigma_cols[j].size() != static_cast<size_t>(2 * p.cell.qubits))
                throw InternalError("golden '" + name + "' column length mismatch");
            for (int r = 0; r < 2 * p.cell.qubits; ++r)
                enc.sigma.at(r, j) = parse_poly(g->sigma_cols[j][r], p.system.dims);
        }
        p.encoding = std::move(enc);
        p.expect.max_weight = g->max_weight;
        p.expect.max_cost = g->max_cost;
        p.expect.avg_cost = {g->avg_num, g->avg_den};
        p.expect.error_detecting = parse_distance_flag(g->flag);
        p.expect.family = g->family;
        p.expect.qubits_per_mode = g->qubits_per_mode;
        return p;
    }
    if (find_system(name)) return assemble_problem(name, "");
    if (find_cell(name)) return assemble_problem("", name);
    throw std::invalid_argument("unknown catalog entry '" + name + "'");
}

std::string catalog_listing() {
    std::ostringstream out;
    out << "systems (" << catalog_systems().size() << "):\n";
    for (const auto& s : catalog_systems())
        out << "  " << s.name << "  [modes=" << s.system.modes << " ops=" << s.system.ops() << "]  " << s.note
            << "\n";
    out << "hardware cells (" << catalog_cells().size() << "):\n";
    for (const auto& c : catalog_cells())
        out << "  " << c.name << "  [qubits=" << c.cell.qubits << " edges=" << c.cell.edges.size() << "]  "
            << c.note << "\n";
    out << "golden encodings (" << catalog_goldens().size() << "):\n";
    for (const auto& g : catalog_goldens())
        out << "  " << g.name << "  [max_weight=" << g.max_weight << " max_cost=" << g.max_cost
            << " error_detecting=" << g.flag << "]\n";
    return out.str();
}

void set_problem_param(Problem& p, const std::string& key, const std::string& value) {
    std::string text = "fermenc/1\n[params]\n" + key + " = " + value + "\n";
    Problem tmp = parse_problem(text);  // reuse the parser's validation
    Problem defaults;
    if (key == "range")
        p.params.range = tmp.params.range;
    else if (key == "max_weight")
        p.params.max_weight = tmp.params.max_weight;
    else if (key == "min_weight")
        p.params.min_weight = tmp.params.min_weight;
    else if (key == "max_cost")
        p.params.max_cost = tmp.params.max_cost;
    else if (key == "margin")
        p.params.margin = tmp.params.margin;
    else if (key == "region")
        p.params.region = tmp.params.region;
    else if (key == "error_detection")
        p.params.error_detection = tmp.params.error_detection;
    else if (key == "clifford_dedup")
        p.params.clifford_dedup = tmp.params.clifford_dedup;
    else if (key == "jobs")
        p.params.jobs = tmp.params.jobs;
    else if (key == "column_order")
        p.params.column_order = tmp.params.column_order;
    else if (key == "cache_limit")
        p.params.cache_limit = tmp.params.cache_limit;
    else if (key == "node_limit")
        p.params.node_limit = tmp.params.node_limit;
    else if (key == "time_limit_ms")
        p.params.time_limit_ms = tmp.params.time_limit_ms;
    else
        throw std::invalid_argument("unknown parameter '" + key + "'");
}

std::string to_string(RunStatus s) {
    switch (s) {
        case RunStatus::Found: return "found";
        case RunStatus::NoSolution: return "no_solution";
        case RunStatus::Inconclusive: return "inconclusive";
        case RunStatus::Verified: return "verified";
        default: return "mismatch";
    }
}

namespace {

struct ColumnProps {
    std::vector<int> weights;
    std::vector<int> costs;
    int max_weight = 0;
    int max_cost = 0;
    long long cost_sum = 0;
    std::vector<int> identity_cols;
    bool unreachable = false;
    int unreachable_col = -1;
};

ColumnProps column_properties(const Problem& p, const EncodingMatrix& enc) {
    ColumnProps cp;
    CostOracle oracle(p.cell, p.params.margin);
    for (int j = 0; j < p.system.ops(); ++j) {
        PolyVec col = enc.sigma.col(j);
        int w = column_weight(col, enc.qubits);
        if (w == 0) cp.identity_cols.push_back(j);
        std::optional<int> c = oracle.cost(pauli_support(col, enc.qubits));
        if (!c.has_value()) {
            cp.unreachable = true;
            if (cp.unreachable_col < 0) cp.unreachable_col = j;
            c = 0;
        }
        cp.weights.push_back(w);
        cp.costs.push_back(*c);
        cp.max_weight = std::max(cp.max_weight, w);
        cp.max_cost = std::max(cp.max_cost, *c);
        cp.cost_sum += *c;
    }
    return cp;
}

std::string fraction_decimal(long long num, long long den) {
    char buf[32];
    snprintf(buf, sizeof buf, "%.2f", static_cast<double>(num) / static_cast<double>(den));
    return buf;
}

void write_column_props(std::ostringstream& out, const Problem& p, const ColumnProps& cp) {
    for (int j = 0; j < p.system.ops(); ++j)
        out << "colinfo = " << p.system.op_names[j] << " : weight=" << cp.weights[j] << " cost=" << cp.costs[j]
            << "\n";
    out << "max_weight = " << cp.max_weight << "\n";
    out << "max_cost = " << cp.max_cost << "\n";
    out << "avg_cost = " << cp.cost_sum << "/" << p.system.ops() << "\n";
    out << "avg_cost_decimal = " << fraction_decimal(cp.cost_sum, p.system.ops()) << "\n";
}

void write_analysis(std::ostringstream& out, const Problem& p, const StabilizerAnalysis& a) {
    out << "\n[stabilizers]\n";
    out << "region = " << p.params.region << "\n";
    out << "delta =";
    for (size_t j = 0; j < a.fix.delta.size(); ++j)
        out << " " << p.system.op_names[j] << ":" << (a.fix.delta[j] > 0 ? "+1" : "-1");
    out << "\n";
    out << "count = " << a.classes.size() << "\n";
    out << "patch_generators = " << a.patch_generators.size() << "\n";
    if (a.dropped_identities) out << "dropped_identities = " << a.dropped_identities << "\n";
    for (const StabilizerClass& sc : a.classes) {
        out << "gen = " << (sc.sign > 0 ? "+" : "-") << " :";
        for (int r = 0; r < sc.column.size(); ++r) out << (r ? " ; " : " ") << sc.column[r].to_string();
        out << "\n";
        out << "# placements=" << sc.placements << " combo:";
        for (int j = 0; j < sc.tau_combo.size(); ++j)
            if (!sc.tau_combo[j].is_zero())
                out << " " << p.system.op_names[j] << "*(" << sc.tau_combo[j].to_string() << ")";
        out << "\n";
    }
    for (const std::string& w : a.warnings) out << "warning = " << w << "\n";

    out << "\n[superselection]\n";
    out << "count = " << a.superselection.size() << "\n";
    for (const SuperselectionClass& sc : a.superselection) {
        out << "gen = " << sc.phase.to_string() << " :";
        for (int r = 0; r < sc.column.size(); ++r) out << (r ? " ; " : " ") << sc.column[r].to_string();
        out << "\n";
    }
    if (a.superselection.empty()) out << "# trivial: the representation is faithful on this patch\n";

    out << "\n[distance]\n";
    out << "flag = " << to_string(a.distance.flag) << "\n";
    if (!a.distance.unused_qubits.empty()) {
        out << "unused_qubits =";
        for (int q : a.distance.unused_qubits) out << " " << q;
        out << "\n";
    }
    std::string undetected;
    for (const ErrorDetection& e : a.distance.table)
        if (!e.detected) undetected += " " + std::string(1, e.pauli) + std::to_string(e.qubit);
    if (!undetected.empty()) out << "undetected =" << undetected << "\n";
}

std::string problem_echo(const Problem& p, const std::optional<EncodingMatrix>& enc) {
    Problem copy = p;
    copy.encoding = enc;
    return serialize_problem(copy);
}

}  // namespace

RunReport run_search(const Problem& p, const ProgressFn& progress) {
    if (!p.has_system || !p.has_hardware)
        throw std::invalid_argument("search needs both a system and a hardware cell");
    SearchResult sr = branch_and_bound(p.system, p.cell, p.params, progress);

    RunReport rep;
    std::ostringstream out;
    if (sr.status == SearchStatus::Found) {
        out << problem_echo(p, sr.best->enc);
        out << "\n[result]\n";
        out << "status = found\n";
        ColumnProps cp = column_properties(p, sr.best->enc);
        write_column_props(out, p, cp);
        out << "optimality = minimum max-cost within range=" << p.params.range
            << " max_weight=" << p.params.max_weight << " min_weight=" << p.params.min_weight
            << " max_cost=" << p.params.max_cost << " cell=" << (p.hardware_name.empty() ? "-" : p.hardware_name)
            << "\n";
        out << "nodes = " << sr.stats.nodes << "\n";
        out << "completions = " << sr.stats.completions << "\n";
        if (p.params.error_detection) out << "rejected_by_distance = " << sr.stats.rejected_by_distance << "\n";
        out << "candidates = " << sr.stats.candidates << "\n";
        StabilizerAnalysis a = analyze_encoding(p.system, sr.best->enc, p.params.region);
        write_analysis(out, p, a);
        rep.status = RunStatus::Found;
        rep.exit_code = 0;
    } else {
        out << problem_echo(p, std::nullopt);
        out << "\n[result]\n";
        if (sr.status == SearchStatus::NoSolution) {
            out << "status = no_solution\n";
            out << "certificate = exhausted the candidate tree; no encoding exists within the class\n";
            rep.status = RunStatus::NoSolution;
        } else {
            out << "status = inconclusive\n";
            out << "certificate = aborted by node or time limit before exhausting the class\n";
            rep.status = RunStatus::Inconclusive;
        }
        out << "nodes = " << sr.stats.nodes << "\n";
        out << "completions = " << sr.stats.completions << "\n";
        out << "candidates = " << sr.stats.candidates << "\n";
        rep.exit_code = 1;
    }
    rep.text = out.str();
    return rep;
}

RunReport run_verify(const Problem& p) {
    if (!p.has_system || !p.has_hardware || !p.encoding)
        throw std::invalid_argument("verify needs a system, a hardware cell and an encoding");

    RunReport rep;
    std::ostringstream out;
    out << problem_echo(p, p.encoding);
    out << "\n[result]\n";

    std::vector<std::string> mismatches;
    std::optional<CommMismatch> bad = find_encoding_mismatch(p.system, *p.encoding);
    if (bad) {
        std::ostringstream m;
        m << "commutation violated between '" << p.system.op_names[bad->i] << "' and '"
          << p.system.op_names[bad->j] << "' at offset (" << offset_string(bad->k, p.system.dims) << ")";
        mismatches.push_back(m.str());
        out << "status = mismatch\n";
        out << "violation = " << m.str() << "\n";
        rep.status = RunStatus::Mismatch;
        rep.exit_code = 1;
        rep.text = out.str();
        return rep;
    }

    ColumnProps cp = column_properties(p, *p.encoding);
    if (cp.unreachable)
        mismatches.push_back("column '" + p.system.op_names[cp.unreachable_col] +
                             "' has disconnected support on this hardware");
    StabilizerAnalysis a = analyze_encoding(p.system, *p.encoding, p.params.region);

    if (p.expect.max_weight && *p.expect.max_weight != cp.max_weight)
        mismatches.push_back("max_weight: expected " + std::to_string(*p.expect.max_weight) + ", got " +
                             std::to_string(cp.max_weight));
    if (p.expect.max_cost && *p.expect.max_cost != cp.max_cost)
        mismatches.push_back("max_cost: expected " + std::to_string(*p.expect.max_cost) + ", got " +
                             std::to_string(cp.max_cost));
    if (p.expect.avg_cost) {
        auto [num, den] = *p.expect.avg_cost;
        if (cp.cost_sum * den != num * p.system.ops())
            mismatches.push_back("avg_cost: expected " + std::to_string(num) + "/" + std::to_string(den) +
                                 ", got " + std::to_string(cp.cost_sum) + "/" + std::to_string(p.system.ops()));
    }
    if (p.expect.error_detecting && *p.expect.error_detecting != a.distance.flag)
        mismatches.push_back("error_detecting: expected " + to_string(*p.expect.error_detecting) + ", got " +
                             to_string(a.distance.flag));

    out << "status = " << (mismatches.empty() ? "verified" : "mismatch") << "\n";
    write_column_props(out, p, cp);
    for (int j : cp.identity_cols)
        out << "warning = column '" << p.system.op_names[j] << "' is the identity\n";
    for (const std::string& m : mismatches) out << "mismatch = " << m << "\n";
    write_analysis(out, p, a);

    rep.status = mismatches.empty() ? RunStatus::Verified : RunStatus::Mismatch;
    rep.exit_code = mismatches.empty() ? 0 : 1;
    rep.text = out.str();
    return rep;
}

RunReport run_distance(const Problem& p) {
    if (!p.has_system || !p.has_hardware || !p.encoding)
        throw std::invalid_argument("distance needs a system, a hardware cell and an encoding");
    RunReport rep;
    std::ostringstream out;
    out << problem_echo(p, p.encoding);
    out << "\n[result]\n";
    std::optional<CommMismatch> bad = find_encoding_mismatch(p.system, *p.encoding);
    if (bad) {
        out << "status = mismatch\n";
        out << "violation = commutation violated between '" << p.system.op_names[bad->i] << "' and '"
            << p.system.op_names[bad->j] << "' at offset (" << offset_string(bad->k, p.system.dims) << ")\n";
        rep.status = RunStatus::Mismatch;
        rep.exit_code = 1;
        rep.text = out.str();
        return rep;
    }
    StabilizerAnalysis a = analyze_encoding(p.system, *p.encoding, p.params.region);
    out << "status = verified\n";
    write_analysis(out, p, a);
    rep.status = RunStatus::Verified;
    rep.exit_code = a.distance.flag == DistanceFlag::No ? 1 : 0;
    rep.text = out.str();
    return rep;
}

}  // namespace fermenc
