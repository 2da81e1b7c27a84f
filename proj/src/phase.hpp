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

#ifndef FERMENC_PHASE_HPP
#define FERMENC_PHASE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fermenc {

// Element of {+1, +i, -1, -i} stored as the exponent k of i^k.
struct Phase {
    uint8_t k = 0;

    constexpr Phase() = default;
    constexpr explicit Phase(int exponent) : k(static_cast<uint8_t>(((exponent % 4) + 4) % 4)) {}

    static constexpr Phase plus_one() { return Phase(0); }
    static constexpr Phase plus_i() { return Phase(1); }
    static constexpr Phase minus_one() { return Phase(2); }
    static constexpr Phase minus_i() { return Phase(3); }

    Phase operator*(Phase o) const { return Phase(k + o.k); }
    Phase conj() const { return Phase(4 - k); }
    bool operator==(Phase o) const { return k == o.k; }
    bool operator!=(Phase o) const { return k != o.k; }
    bool is_real() const { return k % 2 == 0; }

    std::string to_string() const {
        switch (k) {
            case 0: return "+1";
            case 1: return "+i";
            case 2: return "-1";
            default: return "-i";
        }
    }

    static Phase parse(const std::string& s) {
        if (s == "+1" || s == "1") return plus_one();
        if (s == "-1") return minus_one();
        if (s == "+i" || s == "i") return plus_i();
        if (s == "-i") return minus_i();
        throw std::invalid_argument("bad phase '" + s + "' (want +1, -1, +i or -i)");
    }
};

}  // namespace fermenc

#endif
