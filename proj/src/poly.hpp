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

#ifndef FERMENC_POLY_HPP
#define FERMENC_POLY_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fermenc {

// Up to four lattice dimensions, named x, y, z, w.
inline constexpr int kMaxDims = 4;
inline constexpr char kVarNames[kMaxDims] = {'x', 'y', 'z', 'w'};

// Exponent vector of a monomial. Entries beyond the active dimension count
// are always zero, so comparison and hashing may run over the full array.
using Exp = std::array<int, kMaxDims>;

inline Exp exp_zero() { return Exp{0, 0, 0, 0}; }

inline Exp exp_add(const Exp& a, const Exp& b) {
    Exp r;
    for (int i = 0; i < kMaxDims; ++i) r[i] = a[i] + b[i];
    return r;
}

inline Exp exp_sub(const Exp& a, const Exp& b) {
    Exp r;
    for (int i = 0; i < kMaxDims; ++i) r[i] = a[i] - b[i];
    return r;
}

inline Exp exp_neg(const Exp& a) {
    Exp r;
    for (int i = 0; i < kMaxDims; ++i) r[i] = -a[i];
    return r;
}

struct ExpHash {
    size_t operator()(const Exp& e) const {
        uint64_t h = 1469598103934665603ull;
        for (int v : e) {
            h ^= static_cast<uint64_t>(static_cast<uint32_t>(v));
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

// Multivariate Laurent polynomial over F2. A polynomial is the set of
// exponent vectors carrying coefficient 1; addition is symmetric difference
// (characteristic 2). Terms are kept sorted, so equal values compare equal.
class Poly {
  public:
    Poly() = default;
    explicit Poly(int dims) : dims_(check_dims(dims)) {}

    static Poly zero(int dims) { return Poly(dims); }
    static Poly one(int dims) { return monomial(exp_zero(), dims); }
    static Poly monomial(const Exp& e, int dims);
    // Convenience for building terms from an initializer-style list.
    static Poly from_terms(std::vector<Exp> terms, int dims);

    int dims() const { return dims_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_[0] == exp_zero(); }
    size_t term_count() const { return terms_.size(); }
    const std::vector<Exp>& terms() const { return terms_; }
    bool contains(const Exp& e) const;

    Poly operator+(const Poly& other) const;
    Poly operator*(const Poly& other) const;
    bool operator==(const Poly& other) const { return dims_ == other.dims_ && terms_ == other.terms_; }
    bool operator!=(const Poly& other) const { return !(*this == other); }
    bool operator<(const Poly& other) const { return terms_ < other.terms_; }

    // Entrywise exponent negation: sum_k a_k T_k  ->  sum_k a_k T_{-k}.
    Poly dagger() const;
    // Multiplication by the translation monomial T_k.
    Poly translated(const Exp& k) const;

    std::string to_string() const;

  private:
    static int check_dims(int dims) {
        if (dims < 1 || dims > kMaxDims) throw std::invalid_argument("dims must be in [1, 4]");
        return dims;
    }
    void canonicalize();  // sort + cancel duplicate pairs

    int dims_ = 0;
    std::vector<Exp> terms_;
};

// Parses the grammar
//   poly   := term ('+' term)*
//   term   := '0' | '1' | factor ('*'? factor)*
//   factor := var ('^' int)?       var in {x,y,z,w}, truncated to dims
// Whitespace is ignored. Errors report the byte offset.
Poly parse_poly(const std::string& text, int dims);

// Column vector of polynomials.
class PolyVec {
  public:
    PolyVec() = default;
    PolyVec(int length, int dims) : dims_(dims), entries_(length, Poly(dims)) {}
    explicit PolyVec(std::vector<Poly> entries);

    int size() const { return static_cast<int>(entries_.size()); }
    int dims() const { return dims_; }
    Poly& operator[](int i) { return entries_.at(i); }
    const Poly& operator[](int i) const { return entries_.at(i); }
    bool is_zero() const;
    bool operator==(const PolyVec& other) const { return entries_ == other.entries_; }

    PolyVec operator+(const PolyVec& other) const;
    PolyVec translated(const Exp& k) const;

  private:
    int dims_ = 0;
    std::vector<Poly> entries_;
};

// Dense matrix of polynomials, row major.
class PolyMat {
  public:
    PolyMat() = default;
    PolyMat(int rows, int cols, int dims)
        : rows_(rows), cols_(cols), dims_(dims), data_(static_cast<size_t>(rows) * cols, Poly(dims)) {}

    static PolyMat identity(int n, int dims);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int dims() const { return dims_; }
    Poly& at(int r, int c) { return data_.at(index(r, c)); }
    const Poly& at(int r, int c) const { return data_.at(index(r, c)); }

    PolyVec col(int c) const;
    void set_col(int c, const PolyVec& v);

    PolyMat operator*(const PolyMat& other) const;
    PolyMat operator+(const PolyMat& other) const;
    bool operator==(const PolyMat& other) const;

    // Transpose with entrywise dagger.
    PolyMat dagger() const;

  private:
    size_t index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("PolyMat index");
        return static_cast<size_t>(r) * cols_ + c;
    }

    int rows_ = 0, cols_ = 0, dims_ = 0;
    std::vector<Poly> data_;
};

}  // namespace fermenc

#endif
