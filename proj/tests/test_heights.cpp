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

#include <cmath>

#include "pcf/catalog.hpp"
#include "pcf/heights.hpp"

using namespace pcf;

// Frozen oracles: plain double iteration of z <- z^2 + c until |z| > 1e150,
// then log|z| / 2^k.  Independent of the ball arithmetic under test.
namespace {
constexpr double kLam1 = 0.20367726136974001;
constexpr double kLam2 = 0.4547848050611178;
constexpr double kLam10 = 1.175223358830179;
constexpr double kLamHalf = 0.036691867651292384;
constexpr double kLog2Half = 0.34657359027997264;
}  // namespace

TEST_CASE("escape rate at cataloged and escaping parameters") {
    GreenValue z = escape_rate_arch(Rat(0));
    CHECK(!z.escaped);
    CHECK(z.value == 0);
    CHECK(z.error <= 1e-12);

    GreenValue g1 = escape_rate_arch(Rat(1));
    REQUIRE(g1.escaped);
    CHECK(std::abs(g1.value - kLam1) <= 1e-4 + g1.error);
    CHECK(g1.error < 1e-10);

    GreenValue g2 = escape_rate_arch(Rat(2));
    REQUIRE(g2.escaped);
    CHECK(std::abs(g2.value - kLam2) <= 1e-4 + g2.error);
}

TEST_CASE("Green's function normalization") {
    CHECK(green_mandelbrot(Rat(0)).value == 0);

    GreenValue g2 = green_mandelbrot(Rat(2));
    CHECK(std::abs(g2.value - 2 * kLam2) <= 2e-4 + g2.error);

    // G_M(c) = log|c| + o(1): at c=10 the value is within 0.06 of log 10
    GreenValue g10 = green_mandelbrot(Rat(10));
    CHECK(std::abs(g10.value - 2 * kLam10) <= 1e-4 + g10.error);
    CHECK(std::abs(g10.value - std::log(10.0)) < 0.06);
}

TEST_CASE("non-archimedean local heights") {
    CHECK(local_height_nonarch(Rat(1), Int(2)) == 0);
    CHECK(local_height_nonarch(Rat(1, 2), Int(2)) == doctest::Approx(kLog2Half).epsilon(1e-12));
    CHECK(local_height_nonarch(Rat(3, 4), Int(3)) == 0);
    CHECK(local_height_nonarch(Rat(1, 12), Int(2)) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(local_height_nonarch(Rat(1), Int(4)), ContractError);
}

TEST_CASE("rational PCF detection is exact") {
    CHECK(is_pcf_rational(Rat(0)));
    CHECK(is_pcf_rational(Rat(-1)));
    CHECK(is_pcf_rational(Rat(-2)));
    CHECK(!is_pcf_rational(Rat(1)));
    CHECK(!is_pcf_rational(Rat(-3)));
    CHECK(!is_pcf_rational(Rat(1, 2)));
    CHECK(!is_pcf_rational(Rat(-1, 4)));
}

TEST_CASE("canonical height over Q") {
    HeightValue pcf = canonical_height(Rat(-1));
    CHECK(pcf.value == 0);
    CHECK(pcf.error == 0);

    HeightValue h1 = canonical_height(Rat(1));
    CHECK(std::abs(h1.value - kLam1) <= 1e-4 + h1.error);
    REQUIRE(h1.place_breakdown.size() == 1);
    CHECK(h1.place_breakdown[0].first == "inf");

    HeightValue hh = canonical_height(Rat(1, 2));
    CHECK(std::abs(hh.value - (kLamHalf + kLog2Half)) <= 1e-4 + hh.error);
    REQUIRE(hh.place_breakdown.size() == 2);
    CHECK(hh.place_breakdown[1].first == "2");
    CHECK(hh.place_breakdown[1].second == doctest::Approx(kLog2Half).epsilon(1e-12));

    // breakdown sums to the value
    double sum = 0;
    for (const auto& [place, v] : hh.place_breakdown) sum += v;
    CHECK(std::abs(hh.value - sum) <= hh.error + 1e-15);
}

TEST_CASE("h_crit on tuples") {
    HeightValue special = h_crit({Rat(0), Rat(-1), Rat(-2)});
    CHECK(special.value == 0);
    CHECK(special.error == 0);

    HeightValue a = h_crit({Rat(1), Rat(0)});
    CHECK(std::abs(a.value - kLam1) <= 1e-4 + a.error);

    HeightValue b = h_crit({Rat(1, 2), Rat(1)});
    CHECK(std::abs(b.value - (kLamHalf + kLog2Half + kLam1)) <= 1e-4 + b.error);

    // permutation invariance
    HeightValue c = h_crit({Rat(1), Rat(1, 2)});
    CHECK(b.value == doctest::Approx(c.value).epsilon(1e-14));

    CHECK_THROWS_AS(h_crit({}), ContractError);
}

TEST_CASE("doubling along an escaping orbit") {
    for (Rat c : {Rat(1), Rat(2), Rat(3), Rat(1, 2), Rat(-5, 2)}) {
        GreenValue base = escape_rate_arch(c);
        GreenValue shifted = escape_rate_arch(c, 1);
        REQUIRE(base.escaped);
        REQUIRE(shifted.escaped);
        CHECK(std::abs(shifted.value - 2 * base.value) <= shifted.error + 2 * base.error + 1e-12);
    }
}

TEST_CASE("nonnegativity of reported intervals") {
    for (Rat c : {Rat(0), Rat(1), Rat(-2), Rat(1, 4), Rat(-7, 4), Rat(5)}) {
        GreenValue g = escape_rate_arch(c);
        CHECK(g.value >= 0);
        CHECK(g.error >= 0);
        CHECK(g.value - g.error <= g.value);  // interval well formed
        HeightValue h = canonical_height(c);
        CHECK(h.value >= 0);
    }
}

TEST_CASE("Green's function vanishes on the catalog") {
    Catalog cat = build_catalog(4);
    for (const auto& p : cat.params) {
        GreenValue g = green_mandelbrot(p.ball);
        CHECK(!g.escaped);
        CHECK(g.value == 0);
        CHECK(g.error <= 1e-12);
    }
}

TEST_CASE("bounded non-PCF rational gets a zero archimedean part") {
    // c = 1/4 is in the Mandelbrot set but not PCF; the height is purely 2-adic
    GreenValue g = escape_rate_arch(Rat(1, 4));
    CHECK(!g.escaped);
    CHECK(g.error <= 1e-12);
    HeightValue h = canonical_height(Rat(1, 4));
    CHECK(std::abs(h.value - std::log(2.0)) <= 1e-10);
}
