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
#include <cstdio>
#include <fstream>

#include "pcf/errors.hpp"
#include "pcf/realgeom.hpp"

using namespace pcf;

namespace {

const Catalog& cat4() {
    static Catalog cat = build_catalog(4);
    return cat;
}

std::string id_near(const Catalog& cat, double re, double im) {
    for (const auto& p : cat.params)
        if (std::abs(p.ball.mid_re_d() - re) < 1e-9 && std::abs(p.ball.mid_im_d() - im) < 1e-9)
            return p.id;
    throw std::runtime_error("no such parameter in test catalog");
}

RealLine exact_real_line(long a, long b, long r) {
    RealLine l;
    l.ea = Rat(a);
    l.eb = Rat(b);
    l.er = Rat(r);
    l.a = Ball::from_rat(*l.ea, Rat(0), 64);
    l.b = Ball::from_rat(*l.eb, Rat(0), 64);
    l.r = Ball::from_rat(*l.er, Rat(0), 64);
    return l;
}

bool ids_equal(std::vector<std::string> got, std::vector<std::string> want) {
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    return got == want;
}

const RealLineHit* hit_with_support(const std::vector<RealLineHit>& hits,
                                    std::vector<std::string> want) {
    std::sort(want.begin(), want.end());
    for (const auto& h : hits)
        if (h.support == want) return &h;
    return nullptr;
}

}  // namespace

TEST_CASE("real_line_to_complex on the axes and a generic line") {
    // Real axis -> the diagonal x = y.
    Line2 diag = normalize_line(real_line_to_complex(exact_real_line(0, 1, 0)));
    REQUIRE(diag.is_exact());
    CHECK(*diag.ea == GaussianRational::integer(1));
    CHECK(*diag.eb == GaussianRational::integer(-1));
    CHECK(diag.er->is_zero());

    // Imaginary axis -> x + y = 0.
    Line2 anti = normalize_line(real_line_to_complex(exact_real_line(1, 0, 0)));
    REQUIRE(anti.is_exact());
    CHECK(*anti.ea == GaussianRational::integer(1));
    CHECK(*anti.eb == GaussianRational::integer(1));
    CHECK(anti.er->is_zero());

    // (1,1,1) -> ((1-i)/2) x + ((1+i)/2) y = 1, unnormalized.
    Line2 g = real_line_to_complex(exact_real_line(1, 1, 1));
    REQUIRE(g.is_exact());
    CHECK(*g.ea == GaussianRational(Rat(1, 2), Rat(-1, 2)));
    CHECK(*g.eb == GaussianRational(Rat(1, 2), Rat(1, 2)));
    CHECK(*g.er == GaussianRational::integer(1));
}

TEST_CASE("real_curve_to_complex on the axes and the unit circle") {
    // P = y -> u - v up to scale.
    PlaneCurve axis = normalize_curve(real_curve_to_complex(
        real_curve_from_terms({{0, 1, Rat(1)}})));
    REQUIRE(axis.is_exact());
    CHECK(axis.exact[0].is_zero());
    CHECK(axis.exact[1] == GaussianRational::integer(1));
    CHECK(axis.exact[2] == GaussianRational::integer(-1));

    // P = x -> u + v up to scale.
    PlaneCurve imag = normalize_curve(real_curve_to_complex(
        real_curve_from_terms({{1, 0, Rat(1)}})));
    REQUIRE(imag.is_exact());
    CHECK(imag.exact[1] == GaussianRational::integer(1));
    CHECK(imag.exact[2] == GaussianRational::integer(1));

    // P = x^2 + y^2 - 1 -> uv - 1 up to scale.
    PlaneCurve circle = normalize_curve(real_curve_to_complex(real_curve_from_terms(
        {{2, 0, Rat(1)}, {0, 2, Rat(1)}, {0, 0, Rat(-1)}})));
    REQUIRE(circle.is_exact());
    CHECK(circle.d == 2);
    // uv - 1 up to scale: the constant and uv slots are opposite, rest zero.
    CHECK(circle.exact[0] == -circle.exact[4]);
    CHECK_FALSE(circle.exact[4].is_zero());
    for (size_t k : {1, 2, 3, 5}) CHECK(circle.exact[k].is_zero());
}

TEST_CASE("real_curve_to_complex preserves degree") {
    PlaneCurve c = real_curve_to_complex(real_curve_from_terms(
        {{2, 0, Rat(1)}, {1, 1, Rat(3)}, {0, 1, Rat(-1)}, {0, 0, Rat(7)}}));
    CHECK(c.d == 2);
    bool top_nonzero = false;
    for (size_t k = 3; k < 6; ++k)
        if (!c.exact[k].is_zero()) top_nonzero = true;
    CHECK(top_nonzero);
}

TEST_CASE("composition: degree-1 real curves agree with real_line_to_complex") {
    Line2 from_line = normalize_line(real_line_to_complex(exact_real_line(1, 1, 1)));
    // a x + b y = r as the polynomial a x + b y - r.
    PlaneCurve from_curve = normalize_curve(real_curve_to_complex(
        real_curve_from_terms({{1, 0, Rat(1)}, {0, 1, Rat(1)}, {0, 0, Rat(-1)}})));
    REQUIRE(from_curve.is_exact());
    REQUIRE(from_line.is_exact());
    // Same line up to scale: all coefficient cross products vanish.
    GaussianRational a2 = from_curve.exact[1], b2 = from_curve.exact[2];
    GaussianRational r2 = -from_curve.exact[0];
    CHECK((*from_line.ea * b2 - *from_line.eb * a2).is_zero());
    CHECK((*from_line.ea * r2 - *from_line.er * a2).is_zero());
    CHECK((*from_line.eb * r2 - *from_line.er * b2).is_zero());
}

TEST_CASE("pcf_on_real_curve: imaginary axis, real axis, unit circle at bound 4") {
    const Catalog& cat = cat4();
    std::string z = id_near(cat, 0, 0), m1 = id_near(cat, -1, 0);
    std::string pi = id_near(cat, 0, 1), mi = id_near(cat, 0, -1);

    auto on_imag = pcf_on_real_curve(real_curve_from_terms({{1, 0, Rat(1)}}), cat);
    CHECK(ids_equal(on_imag, {z, pi, mi}));

    auto on_real = pcf_on_real_curve(real_curve_from_terms({{0, 1, Rat(1)}}), cat);
    std::vector<std::string> want_real;
    for (const auto& p : cat.params)
        if (cat.conjugate_id(p.id) == p.id) want_real.push_back(p.id);
    CHECK(ids_equal(on_real, want_real));
    CHECK(std::find(on_real.begin(), on_real.end(), id_near(cat, -1.7548776662466927, 0)) !=
          on_real.end());
    CHECK(std::find(on_real.begin(), on_real.end(), id_near(cat, -2, 0)) != on_real.end());

    auto on_circle = pcf_on_real_curve(
        real_curve_from_terms({{2, 0, Rat(1)}, {0, 2, Rat(1)}, {0, 0, Rat(-1)}}), cat);
    CHECK(ids_equal(on_circle, {m1, pi, mi}));
}

TEST_CASE("pcf_on_real_curve: the vertical line Re c = 1 is empty at bound 8") {
    static Catalog cat8 = build_catalog(8);
    auto on = pcf_on_real_curve(real_curve_from_terms({{1, 0, Rat(1)}, {0, 0, Rat(-1)}}), cat8);
    CHECK(on.empty());
}

TEST_CASE("real_line_search at bound 4 finds exactly the two axes") {
    const Catalog& cat = cat4();
    std::string z = id_near(cat, 0, 0);
    std::string pi = id_near(cat, 0, 1), mi = id_near(cat, 0, -1);

    auto hits = real_line_search(cat, 3);
    std::vector<std::string> reals;
    for (const auto& p : cat.params)
        if (cat.conjugate_id(p.id) == p.id) reals.push_back(p.id);

    const RealLineHit* imag_axis = hit_with_support(hits, {z, pi, mi});
    REQUIRE(imag_axis);
    CHECK_FALSE(imag_axis->special_diagonal);
    REQUIRE(imag_axis->line.is_exact());
    CHECK(*imag_axis->line.ea == 1);
    CHECK(*imag_axis->line.eb == 0);
    CHECK(*imag_axis->line.er == 0);

    const RealLineHit* real_axis = hit_with_support(hits, reals);
    REQUIRE(real_axis);
    CHECK(real_axis->special_diagonal);
    REQUIRE(real_axis->line.is_exact());
    CHECK(*real_axis->line.ea == 0);
    CHECK(*real_axis->line.eb == 1);
    CHECK(*real_axis->line.er == 0);

    CHECK(hits.size() == 2);

    // Conjugation closure of every support.
    for (const auto& h : hits)
        for (const auto& id : h.support)
            CHECK(std::find(h.support.begin(), h.support.end(), cat.conjugate_id(id)) !=
                  h.support.end());

    CHECK(real_line_search(cat, static_cast<int>(cat.params.size()) + 1).empty());
    CHECK_THROWS_AS(real_line_search(cat, 2), ContractError);
}

TEST_CASE("real curve json i/o round trip") {
    RealCurve p = real_curve_from_terms({{1, 0, Rat(1)}, {0, 1, Rat(-1, 2)}, {0, 0, Rat(3)}});
    std::string path = "test_real_curve.json";
    save_real_curve_json(p, path);
    RealCurve back = load_real_curve_json(path);
    std::remove(path.c_str());
    CHECK(back.d == p.d);
    REQUIRE(back.coeffs.size() == p.coeffs.size());
    for (size_t k = 0; k < p.coeffs.size(); ++k) CHECK(back.coeffs[k] == p.coeffs[k]);

    // Handwritten monomial list.
    std::ofstream out(path);
    out << "[[1, 0, \"1\"], [0, 1, \"-0.5\"]]\n";
    out.close();
    RealCurve hand = load_real_curve_json(path);
    std::remove(path.c_str());
    CHECK(hand.d == 1);
    CHECK(hand.coeffs[1] == Rat(1));
    CHECK(hand.coeffs[2] == Rat(-1, 2));

    // A third-denominator coefficient cannot be stored as a finite decimal.
    RealCurve bad = real_curve_from_terms({{1, 0, Rat(1, 3)}, {0, 1, Rat(1)}});
    CHECK_THROWS_AS(save_real_curve_json(bad, path), ContractError);
}
