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

#include "poly.hpp"

#include <algorithm>
#include <cctype>

namespace fermenc {

Poly Poly::monomial(const Exp& e, int dims) {
    Poly p(dims);
    for (int i = dims; i < kMaxDims; ++i) {
        if (e[i] != 0) throw std::invalid_argument("monomial exponent outside dims");
    }
    p.terms_.push_back(e);
    return p;
}

Poly Poly::from_terms(std::vector<Exp> terms, int dims) {
    Poly p(dims);
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
}

bool Poly::contains(const Exp& e) const {
    return std::binary_search(terms_.begin(), terms_.end(), e);
}

void Poly::canonicalize() {
    std::sort(terms_.begin(), terms_.end());
    // Equal exponent vectors cancel pairwise mod 2.
    std::vector<Exp> out;
    out.reserve(terms_.size());
    for (size_t i = 0; i < terms_.size();) {
        size_t j = i;
        while (j < terms_.size() && terms_[j] == terms_[i]) ++j;
        if ((j - i) % 2 == 1) out.push_back(terms_[i]);
        i = j;
    }
    terms_ = std::move(out);
}

Poly Poly::operator+(const Poly& other) const {
    if (dims_ != other.dims_) throw std::invalid_argument("Poly dims mismatch in +");
    Poly r(dims_);
    // Merge of two sorted unique sequences, keeping the symmetric difference.
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < other.terms_.size()) {
        if (j == other.terms_.size() || (i < terms_.size() && terms_[i] < other.terms_[j])) {
            r.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() || other.terms_[j] < terms_[i]) {
            r.terms_.push_back(other.terms_[j++]);
        } else {
            ++i;
            ++j;
        }
    }
    return r;
}

Poly Poly::operator*(const Poly& other) const {
    if (dims_ != other.dims_) throw std::invalid_argument("Poly dims mismatch in *");
    Poly r(dims_);
    r.terms_.reserve(terms_.size() * other.terms_.size());
    for (const Exp& a : terms_)
        for (const Exp& b : other.terms_) r.terms_.push_back(exp_add(a, b));
    r.canonicalize();
    return r;
}

Poly Poly::dagger() const {
    Poly r(dims_);
    r.terms_.reserve(terms_.size());
    for (const Exp& a : terms_) r.terms_.push_back(exp_neg(a));
    std::sort(r.terms_.begin(), r.terms_.end());
    return r;
}

Poly Poly::translated(const Exp& k) const {
    Poly r(dims_);
    r.terms_.reserve(terms_.size());
    for (const Exp& a : terms_) r.terms_.push_back(exp_add(a, k));
    std::sort(r.terms_.begin(), r.terms_.end());
    return r;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first_term = true;
    for (const Exp& e : terms_) {
        if (!first_term) out += "+";
        first_term = false;
        if (e == exp_zero()) {
            out += "1";
            continue;
        }
        bool first_factor = true;
        for (int d = 0; d < dims_; ++d) {
            if (e[d] == 0) continue;
            if (!first_factor) out += "*";
            first_factor = false;
            out += kVarNames[d];
            if (e[d] != 1) {
                out += "^";
                out += std::to_string(e[d]);
            }
        }
    }
    return out;
}

namespace {

struct Scanner {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char take() {
        skip_ws();
        return s[pos++];
    }
};

int parse_int(Scanner& sc) {
    sc.skip_ws();
    size_t start = sc.pos;
    bool neg = false;
    if (sc.pos < sc.s.size() && (sc.s[sc.pos] == '-' || sc.s[sc.pos] == '+')) {
        neg = sc.s[sc.pos] == '-';
        ++sc.pos;
    }
    if (sc.pos >= sc.s.size() || !std::isdigit(static_cast<unsigned char>(sc.s[sc.pos])))
        throw ParseError("expected integer exponent", start);
    long v = 0;
    while (sc.pos < sc.s.size() && std::isdigit(static_cast<unsigned char>(sc.s[sc.pos]))) {
        v = v * 10 + (sc.s[sc.pos] - '0');
        if (v > 1'000'000) throw ParseError("exponent too large", start);
        ++sc.pos;
    }
    return static_cast<int>(neg ? -v : v);
}

int var_index(char c, int dims, size_t pos) {
    for (int d = 0; d < kMaxDims; ++d) {
        if (kVarNames[d] == c) {
            if (d >= dims) throw ParseError(std::string("variable '") + c + "' outside dims", pos);
            return d;
        }
    }
    throw ParseError(std::string("unknown variable '") + c + "'", pos);
}

// term := '0' | '1' | factor ('*'? factor)*
// Returns the parity-1 monomials of the term (empty for the '0' literal).
std::vector<Exp> parse_term(Scanner& sc, int dims) {
    char c = sc.peek();
    if (c == '0') {
        sc.take();
        return {};
    }
    if (c == '1') {
        sc.take();
        return {exp_zero()};
    }
    Exp e = exp_zero();
    bool any = false;
    while (true) {
        c = sc.peek();
        if (c == '*') {
            if (!any) throw ParseError("unexpected '*'", sc.pos);
            sc.take();
            c = sc.peek();
        }
        bool is_var = false;
        for (int d = 0; d < kMaxDims; ++d) is_var = is_var || (kVarNames[d] == c);
        if (!is_var) break;
        size_t at = sc.pos;
        sc.take();
        int d = var_index(c, dims, at);
        int k = 1;
        if (sc.peek() == '^') {
            sc.take();
            k = parse_int(sc);
        }
        e[d] += k;
        any = true;
    }
    if (!any) throw ParseError("expected term", sc.pos);
    return {e};
}

}  // namespace

Poly parse_poly(const std::string& text, int dims) {
    if (dims < 1 || dims > kMaxDims) throw std::invalid_argument("dims must be in [1, 4]");
    Scanner sc{text};
    std::vector<Exp> acc;
    if (sc.done()) throw ParseError("empty polynomial", 0);
    while (true) {
        auto t = parse_term(sc, dims);
        acc.insert(acc.end(), t.begin(), t.end());
        if (sc.done()) break;
        char c = sc.take();
        if (c != '+') throw ParseError(std::string("expected '+' but found '") + c + "'", sc.pos - 1);
        if (sc.done()) throw ParseError("trailing '+'", sc.pos);
    }
    return Poly::from_terms(std::move(acc), dims);
}

PolyVec::PolyVec(std::vector<Poly> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("empty PolyVec");
    dims_ = entries_[0].dims();
    for (const Poly& p : entries_)
        if (p.dims() != dims_) throw std::invalid_argument("PolyVec dims mismatch");
}

bool PolyVec::is_zero() const {
    for (const Poly& p : entries_)
        if (!p.is_zero()) return false;
    return true;
}

PolyVec PolyVec::operator+(const PolyVec& other) const {
    if (size() != other.size()) throw std::invalid_argument("PolyVec size mismatch");
    PolyVec r = *this;
    for (int i = 0; i < size(); ++i) r.entries_[i] = entries_[i] + other.entries_[i];
    return r;
}

PolyVec PolyVec::translated(const Exp& k) const {
    PolyVec r = *this;
    for (Poly& p : r.entries_) p = p.translated(k);
    return r;
}

PolyMat PolyMat::identity(int n, int dims) {
    PolyMat m(n, n, dims);
    for (int i = 0; i < n; ++i) m.at(i, i) = Poly::one(dims);
    return m;
}

PolyVec PolyMat::col(int c) const {
    PolyVec v(rows_, dims_);
    for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

void PolyMat::set_col(int c, const PolyVec& v) {
    if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
    for (int r = 0; r < rows_; ++r) at(r, c) = v[r];
}

PolyMat PolyMat::operator*(const PolyMat& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("PolyMat shape mismatch in *");
    PolyMat r(rows_, other.cols_, dims_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Poly& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < other.cols_; ++j) {
                const Poly& b = other.at(k, j);
                if (b.is_zero()) continue;
                r.at(i, j) = r.at(i, j) + a * b;
            }
        }
    return r;
}

PolyMat PolyMat::operator+(const PolyMat& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("PolyMat shape mismatch in +");
    PolyMat r(rows_, cols_, dims_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) + other.at(i, j);
    return r;
}

bool PolyMat::operator==(const PolyMat& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

PolyMat PolyMat::dagger() const {
    PolyMat r(cols_, rows_, dims_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).dagger();
    return r;
}

}  // namespace fermenc
