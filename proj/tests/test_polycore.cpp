/*
   Copyright 2026 the pcfgeom authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pcf/intpoly.hpp"

using namespace pcf;

TEST_CASE("orbit polynomials match hand expansion") {
    CHECK(orbit_polynomial(1) == IntPoly{0, 1});           // c
    CHECK(orbit_polynomial(2) == IntPoly{0, 1, 1});        // c^2 + c
    CHECK(orbit_polynomial(3) == IntPoly{0, 1, 1, 2, 1});  // c^4 + 2c^3 + c^2 + c
}

TEST_CASE("orbit polynomials are monic of degree 2^(k-1)") {
    for (int k = 1; k <= 8; ++k) {
        IntPoly p = orbit_polynomial(k);
        CHECK(p.degree() == (1 << (k - 1)));
        CHECK(p.leading() == 1);
    }
}

TEST_CASE("orbit recurrence p_{k+1} = p_k^2 + c holds coefficientwise") {
    IntPoly c{0, 1};
    for (int k = 1; k < 8; ++k)
        CHECK(orbit_polynomial(k + 1) == orbit_polynomial(k).square() + c);
}

TEST_CASE("degree budget is enforced") {
    CHECK_THROWS_AS(orbit_polynomial(9, 8), ResourceError);
    CHECK_NOTHROW(orbit_polynomial(9, 9));
    CHECK_THROWS_AS(orbit_polynomial(0), ContractError);
}

TEST_CASE("critical relation polynomials") {
    CHECK(critical_relation_polynomial({0, 2}) == IntPoly{0, 1, 1});
    CHECK(critical_relation_polynomial({2, 1}) == IntPoly{0, 0, 0, 2, 1});  // c^4 + 2c^3
    // G_{1,2} = c^4 + 2c^3 + c^2 = c^2 (c+1)^2
    CHECK(critical_relation_polynomial({1, 2}) == IntPoly{0, 0, 1, 2, 1});
    CHECK_THROWS_AS(critical_relation_polynomial({7, 9}), ResourceError);
}

TEST_CASE("exact division") {
    IntPoly c{0, 1};
    CHECK(exact_divide(IntPoly{0, 1, 1}, c) == IntPoly{1, 1});
    // period-3 factor: (c^4+2c^3+c^2+c)/c = c^3+2c^2+c+1, verified by re-multiplying
    IntPoly q = exact_divide(orbit_polynomial(3), c);
    CHECK(q == IntPoly{1, 1, 2, 1});
    CHECK(q * c == orbit_polynomial(3));
    CHECK_THROWS_AS(exact_divide(IntPoly{0, 1, 1}, IntPoly{2, 1}), ArithmeticError);
}

TEST_CASE("exact_divide round trip on random products") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coeff(-9, 9), deg(0, 5);
    for (int it = 0; it < 200; ++it) {
        std::vector<Int> av(static_cast<size_t>(deg(rng)) + 1), bv(static_cast<size_t>(deg(rng)) + 1);
        for (auto& x : av) x = coeff(rng);
        for (auto& x : bv) x = coeff(rng);
        IntPoly a{av}, b{bv};
        if (b.is_zero()) continue;
        CHECK(exact_divide(a * b, b) == a);
    }
}

TEST_CASE("squarefree part") {
    CHECK(squarefree_part(IntPoly{0, 0, 0, 2, 1}) == IntPoly{0, 2, 1});  // c^3(c+2) -> c(c+2)
    CHECK(squarefree_part(IntPoly{0, 1, 1}) == IntPoly{0, 1, 1});
    CHECK(squarefree_part(IntPoly{5}) == IntPoly{5});
    CHECK_THROWS_AS(squarefree_part(IntPoly::zero()), ContractError);
}

TEST_CASE("squarefree decomposition recovers multiplicities") {
    // c^2 (c+1)^2 from G_{1,2}
    auto dec = squarefree_decomposition(critical_relation_polynomial({1, 2}));
    REQUIRE(dec.size() == 1);
    CHECK(dec[0].second == 2);
    CHECK(dec[0].first == IntPoly{0, 1, 1});
    // c^3 (c+2) from G_{2,1}
    dec = squarefree_decomposition(critical_relation_polynomial({2, 1}));
    REQUIRE(dec.size() == 2);
    CHECK(dec[0].first == IntPoly{2, 1});
    CHECK(dec[0].second == 1);
    CHECK(dec[1].first == IntPoly{0, 1});
    CHECK(dec[1].second == 3);
}

TEST_CASE("gcd basics") {
    IntPoly a{0, 1};                      // c
    IntPoly b{0, 0, 1};                   // c^2
    CHECK(gcd(a, b) == a);
    CHECK(gcd(IntPoly{1, 1}, IntPoly{2, 1}) == IntPoly{1});
    CHECK(gcd(orbit_polynomial(6), orbit_polynomial(6).derivative()) == IntPoly{1});
}

TEST_CASE("gaussian evaluation") {
    // p_2 at i: i^2 + i = -1 + i
    auto [re, im] = orbit_polynomial(2).eval_gaussian(Int(0), Int(1));
    CHECK(re == -1);
    CHECK(im == 1);
    // G_{2,2}(i) = 0: orbit of 0 under z^2+i is eventually 2-periodic with preperiod 2
    auto [gr, gi] = critical_relation_polynomial({2, 2}).eval_gaussian(Int(0), Int(1));
    CHECK(gr == 0);
    CHECK(gi == 0);
}
