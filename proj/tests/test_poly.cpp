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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "poly.hpp"

using namespace fermenc;

namespace {

Exp e2(int x, int y) {
    Exp e = exp_zero();
    e[0] = x;
    e[1] = y;
    return e;
}

Poly random_poly(std::mt19937& rng, int dims, int max_terms = 4, int max_exp = 2) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expd(-max_exp, max_exp);
    std::vector<Exp> terms;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Exp e = exp_zero();
        for (int d = 0; d < dims; ++d) e[d] = expd(rng);
        terms.push_back(e);
    }
    return Poly::from_terms(terms, dims);
}

}  // namespace

TEST_CASE("parse basics") {
    Poly p = parse_poly("1+x", 2);
    CHECK(p.term_count() == 2);
    CHECK(p.contains(e2(0, 0)));
    CHECK(p.contains(e2(1, 0)));

    CHECK(parse_poly("0", 2).is_zero());
    CHECK(parse_poly("x+x", 1).is_zero());
    CHECK(parse_poly("1+x*y^-1", 2) == Poly::from_terms({e2(0, 0), e2(1, -1)}, 2));
    CHECK(parse_poly(" 1 + x * y ^ -1 ", 2) == parse_poly("1+x*y^-1", 2));
    CHECK(parse_poly("xy^-1", 2) == parse_poly("x*y^-1", 2));
    CHECK(parse_poly("x^2", 1) == Poly::monomial(Exp{2, 0, 0, 0}, 1));
    CHECK(parse_poly("x*x", 1) == parse_poly("x^2", 1));
    CHECK(parse_poly("0+x", 2) == parse_poly("x", 2));
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(parse_poly("1+q", 2), ParseError);
    try {
        parse_poly("1+q", 2);
    } catch (const ParseError& e) {
        CHECK(e.position == 2);
    }
    // y is a valid variable name but outside dims.
    CHECK_THROWS_AS(parse_poly("1+y", 1), ParseError);
    CHECK_THROWS_AS(parse_poly("", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("x+", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("x^", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("*x", 2), ParseError);
}

TEST_CASE("add is symmetric difference") {
    Poly one = Poly::one(2);
    CHECK((one + one).is_zero());
    Poly a = Poly::from_terms({e2(0, 0), e2(1, 0)}, 2);
    Poly b = Poly::from_terms({e2(1, 0), e2(0, 1)}, 2);
    CHECK(a + b == Poly::from_terms({e2(0, 0), e2(0, 1)}, 2));
    CHECK(parse_poly("1+x", 2) + parse_poly("1+y", 2) == parse_poly("x+y", 2));
    CHECK_THROWS_AS(Poly::one(1) + Poly::one(2), std::invalid_argument);
}

TEST_CASE("mul convolves exponents mod 2") {
    Poly p = parse_poly("1+x", 2);
    CHECK(p * p == parse_poly("1+x^2", 2));
    std::mt19937 rng(7);
    Poly q = random_poly(rng, 2);
    CHECK(Poly::one(2) * q == q);
    CHECK(parse_poly("1+x", 2) * parse_poly("1+y", 2) == parse_poly("1+x+y+x*y", 2));
}

TEST_CASE("dagger negates exponents") {
    CHECK(parse_poly("1+x", 2).dagger() == parse_poly("1+x^-1", 2));
    CHECK(Poly::one(2).dagger() == Poly::one(2));
    CHECK(parse_poly("x*y^-1", 2).dagger() == parse_poly("x^-1*y", 2));
}

TEST_CASE("translate shifts exponents") {
    CHECK(Poly::one(2).translated(e2(1, 0)) == parse_poly("x", 2));
    CHECK(parse_poly("1+y", 2).translated(e2(0, -1)) == parse_poly("y^-1+1", 2));
    Poly p = parse_poly("1+x*y", 2);
    CHECK(p.translated(e2(2, -1)).translated(e2(-2, 1)) == p);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(1234);
    for (int it = 0; it < 200; ++it) {
        int dims = 1 + (it % 3);
        Poly a = random_poly(rng, dims), b = random_poly(rng, dims), c = random_poly(rng, dims);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a + a).is_zero());
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        // Frobenius: squaring doubles every exponent.
        Poly sq = a * a;
        Poly doubled(dims);
        {
            std::vector<Exp> terms;
            for (const Exp& e : a.terms()) terms.push_back(exp_add(e, e));
            doubled = Poly::from_terms(terms, dims);
        }
        CHECK(sq == doubled);
        // dagger is a ring automorphism and an involution.
        CHECK((a * b).dagger() == a.dagger() * b.dagger());
        CHECK((a + b).dagger() == a.dagger() + b.dagger());
        CHECK(a.dagger().dagger() == a);
        // translation is multiplication by the translation monomial.
        Exp k = e2(it % 3 - 1, (it / 3) % 3 - 1);
        if (dims == 1) k[1] = 0;
        CHECK(a.translated(k) == a * Poly::monomial(k, dims));
    }
}

TEST_CASE("print and reparse round trip") {
    std::mt19937 rng(99);
    for (int it = 0; it < 100; ++it) {
        int dims = 1 + (it % 4);
        Poly a = random_poly(rng, dims, 5, 3);
        CHECK(parse_poly(a.to_string(), dims) == a);
    }
    CHECK(Poly(2).to_string() == "0");
    CHECK(Poly::one(3).to_string() == "1");
}

TEST_CASE("matrix product and dagger") {
    PolyMat id = PolyMat::identity(3, 2);
    PolyMat a(3, 2, 2);
    a.at(0, 0) = parse_poly("1+x", 2);
    a.at(1, 1) = parse_poly("y^-1", 2);
    a.at(2, 0) = parse_poly("x*y", 2);
    CHECK(id * a == a);
    CHECK(a.dagger().dagger() == a);
    PolyMat b(2, 2, 2);
    b.at(0, 0) = parse_poly("y", 2);
    b.at(1, 0) = parse_poly("1", 2);
    b.at(0, 1) = parse_poly("x^-1", 2);
    PolyMat ab = a * b;
    CHECK(ab.at(0, 0) == parse_poly("y+x*y", 2));
    CHECK(ab.at(1, 0) == parse_poly("y^-1", 2));
    CHECK(ab.at(0, 1) == parse_poly("x^-1+1", 2));
    // (AB)^dag = B^dag A^dag
    CHECK(ab.dagger() == b.dagger() * a.dagger());
}
