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

#include <algorithm>
#include <cmath>

#include "pcf/ball.hpp"
#include "pcf/intpoly.hpp"
#include "pcf/rootcert.hpp"

using namespace pcf;

namespace {
bool ball_near(const Ball& b, double re, double im, double tol) {
    return std::abs(b.mid_re_d() - re) < tol && std::abs(b.mid_im_d() - im) < tol;
}
}  // namespace

TEST_CASE("ball arithmetic encloses exact results") {
    Ball a = Ball::from_rat(Rat(1, 3), Rat(0), 64);
    Ball b = Ball::from_rat(Rat(2, 3), Rat(0), 64);
    Ball s = a + b;  // contains 1 exactly
    Ball one = Ball::exact_int(1, 0, 64);
    CHECK((s - one).contains_zero());
    CHECK(s.rad_d() > 0);
    Ball p = a * b;  // contains 2/9
    CHECK((p - Ball::from_rat(Rat(2, 9), Rat(0), 128)).contains_zero());
    Ball q = a / b;  // contains 1/2
    CHECK((q - Ball::from_rat(Rat(1, 2), Rat(0), 128)).contains_zero());
}

TEST_CASE("ball inversion rejects disks through zero") {
    Ball z = Ball::from_double(0.0, 0.0, 0.5, 64);
    CHECK_THROWS_AS(z.inv(), ContractError);
}

TEST_CASE("decimal round trip is the identity") {
    Ball a = Ball::from_rat(Rat(-22, 7), Rat(355, 113), 192).inflated(1e-30);
    Ball b = Ball::from_decimal(a.mid_re_str(), a.mid_im_str(), a.rad_str(), 192);
    CHECK(mpfr_equal_p(a.mid_re(), b.mid_re()));
    CHECK(mpfr_equal_p(a.mid_im(), b.mid_im()));
    CHECK(mpfr_equal_p(a.rad(), b.rad()));
}

TEST_CASE("isolate_roots on c^2+c") {
    RootSet rs = isolate_roots(IntPoly{0, 1, 1}, 1e-30);
    REQUIRE(rs.roots.size() == 2);
    std::vector<double> res;
    for (const auto& r : rs.roots) {
        CHECK(r.multiplicity == 1);
        CHECK(r.ball.rad_d() <= 1e-30);
        res.push_back(r.ball.mid_re_d());
    }
    std::sort(res.begin(), res.end());
    CHECK(res[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(res[1] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("isolate_roots on the period-3 factor") {
    RootSet rs = isolate_roots(IntPoly{1, 1, 2, 1}, 1e-20);
    REQUIRE(rs.roots.size() == 3);
    int real_found = 0, pair_found = 0;
    for (const auto& r : rs.roots) {
        if (ball_near(r.ball, -1.7548776662466927, 0.0, 1e-10)) ++real_found;
        if (ball_near(r.ball, -0.12256116687665362, 0.7448617666197442, 1e-10)) ++pair_found;
        if (ball_near(r.ball, -0.12256116687665362, -0.7448617666197442, 1e-10)) ++pair_found;
    }
    CHECK(real_found == 1);
    CHECK(pair_found == 2);
}

TEST_CASE("isolate_roots recovers multiplicities on c^4+2c^3") {
    RootSet rs = isolate_roots(IntPoly{0, 0, 0, 2, 1}, 1e-20);
    REQUIRE(rs.roots.size() == 2);
    for (const auto& r : rs.roots) {
        if (ball_near(r.ball, 0.0, 0.0, 1e-15)) CHECK(r.multiplicity == 3);
        if (ball_near(r.ball, -2.0, 0.0, 1e-15)) CHECK(r.multiplicity == 1);
    }
}

TEST_CASE("refine shrinks without leaving the ball") {
    IntPoly p{1, 1, 2, 1};
    RootSet rs = isolate_roots(p, 1e-10);
    const Ball* real_root = nullptr;
    for (const auto& r : rs.roots)
        if (std::abs(r.ball.mid_im_d()) < 1e-8) real_root = &r.ball;
    REQUIRE(real_root != nullptr);
    Ball fine = refine(*real_root, p, 1e-40);
    CHECK(fine.rad_d() <= 1e-40);
    CHECK(real_root->contains_ball(fine));
    // -1.75487766624669276... is the real root
    CHECK(fine.mid_re_d() == doctest::Approx(-1.7548776662466927).epsilon(1e-14));

    Ball far = Ball::from_double(5.0, 5.0, 1e-10, 64);
    CHECK_THROWS_AS(refine(far, p, 1e-20), ContractError);
}

TEST_CASE("contains_root tri-state") {
    Ball near0 = Ball::from_double(0.0, 0.0, 1e-5, 64);
    CHECK(contains_root(IntPoly{0, 1}, near0) == Containment::Yes);
    CHECK(contains_root(IntPoly{1, 1}, near0) == Containment::No);
    // wide ball around -0.5 covering both roots of c^2+c: must not say Yes
    Ball wide = Ball::from_double(-0.5, 0.0, 0.6, 64);
    CHECK(contains_root(IntPoly{0, 1, 1}, wide) != Containment::Yes);
}

TEST_CASE("product reconstruction oracle at test points") {
    // For monic p_n, sum of mult*log|z - r_i| must equal log|p_n(z)|.
    for (int n = 2; n <= 6; ++n) {
        IntPoly p = orbit_polynomial(n);
        RootSet rs = isolate_roots(p, 1e-25);
        for (auto [zr, zi] : {std::pair{2, 0}, std::pair{3, 1}}) {
            Ball z = Ball::exact_int(zr, zi, 256);
            double sum_lo = 0, sum_hi = 0;
            for (const auto& r : rs.roots) {
                auto [lo, hi] = log_abs_interval(z - r.ball.rounded_to(256));
                sum_lo += r.multiplicity * lo;
                sum_hi += r.multiplicity * hi;
            }
            auto [plo, phi] = log_abs_interval(eval(p, z));
            CHECK(sum_lo <= phi + 1e-6);
            CHECK(sum_hi >= plo - 1e-6);
            CHECK(std::abs(0.5 * (sum_lo + sum_hi) - 0.5 * (plo + phi)) < 1e-6);
        }
    }
}

TEST_CASE("conjugation closure of root sets") {
    IntPoly p = critical_relation_polynomial({2, 2});
    RootSet rs = isolate_roots(p, 1e-25);
    for (const auto& r : rs.roots) {
        Ball cj = r.ball.conj();
        bool found = false;
        for (const auto& s : rs.roots)
            if (!cj.disjoint_from(s.ball)) found = true;
        CHECK(found);
    }
}

TEST_CASE("determinism: identical runs give identical balls") {
    IntPoly p{1, 1, 2, 1};
    RootSet a = isolate_roots(p, 1e-30);
    RootSet b = isolate_roots(p, 1e-30);
    REQUIRE(a.roots.size() == b.roots.size());
    for (size_t i = 0; i < a.roots.size(); ++i) {
        CHECK(a.roots[i].ball.mid_re_str() == b.roots[i].ball.mid_re_str());
        CHECK(a.roots[i].ball.mid_im_str() == b.roots[i].ball.mid_im_str());
        CHECK(a.roots[i].ball.rad_str() == b.roots[i].ball.rad_str());
    }
}
