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

#ifndef FERMENC_BITS_HPP
#define FERMENC_BITS_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace fermenc {

// Fixed-length bit vector over F2.
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(int n) : size_(n), words_((n + 63) / 64, 0) {
        if (n < 0) throw std::invalid_argument("negative BitVec size");
    }

    int size() const { return size_; }

    bool get(int i) const {
        check(i);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void set(int i, bool v) {
        check(i);
        uint64_t m = 1ull << (i & 63);
        if (v)
            words_[i >> 6] |= m;
        else
            words_[i >> 6] &= ~m;
    }
    void flip(int i) {
        check(i);
        words_[i >> 6] ^= 1ull << (i & 63);
    }

    BitVec& operator^=(const BitVec& o) {
        if (size_ != o.size_) throw std::invalid_argument("BitVec size mismatch");
        for (size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }
    BitVec operator^(const BitVec& o) const {
        BitVec r = *this;
        r ^= o;
        return r;
    }
    bool operator==(const BitVec& o) const { return size_ == o.size_ && words_ == o.words_; }

    bool is_zero() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    int popcount() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    // Number of set bits at indices strictly greater than i.
    int count_above(int i) const {
        check(i);
        int word = i >> 6;
        int c = std::popcount(words_[word] & ~((2ull << (i & 63)) - 1));
        for (size_t w = word + 1; w < words_.size(); ++w) c += std::popcount(words_[w]);
        return c;
    }

    static bool and_parity(const BitVec& a, const BitVec& b) {
        if (a.size_ != b.size_) throw std::invalid_argument("BitVec size mismatch");
        uint64_t acc = 0;
        for (size_t w = 0; w < a.words_.size(); ++w) acc ^= a.words_[w] & b.words_[w];
        return std::popcount(acc) & 1;
    }

    template <typename Fn>
    void for_each_set(Fn&& fn) const {
        for (size_t w = 0; w < words_.size(); ++w) {
            uint64_t bits = words_[w];
            while (bits) {
                int b = std::countr_zero(bits);
                fn(static_cast<int>(w * 64 + b));
                bits &= bits - 1;
            }
        }
    }

  private:
    void check(int i) const {
        if (i < 0 || i >= size_) throw std::out_of_range("BitVec index");
    }

    int size_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace fermenc

#endif
