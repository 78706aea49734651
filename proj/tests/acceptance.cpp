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

// End-to-end acceptance checks. Each criterion prints one pass/fail line;
// the process exits nonzero if any criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pcf/catalog.hpp"
#include "pcf/curvefit.hpp"
#include "pcf/equidist.hpp"
#include "pcf/errors.hpp"
#include "pcf/heights.hpp"
#include "pcf/incidence.hpp"
#include "pcf/realgeom.hpp"

using namespace pcf;

namespace {

int g_failures = 0;

void report(int num, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << "criterion " << num << " (" << name << "): " << (ok ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++g_failures;
}

template <typename F>
void guarded(int num, const std::string& name, F&& body) {
    try {
        body();
    } catch (const std::exception& e) {
        report(num, name, false, std::string("exception: ") + e.what());
    }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Catalog id of the parameter whose isolating ball sits at (re, im), up to
// double rounding; empty when absent.
std::string find_id(const Catalog& cat, double re, double im) {
    for (const auto& p : cat.params)
        if (std::fabs(p.ball.mid_re_d() - re) < 1e-9 && std::fabs(p.ball.mid_im_d() - im) < 1e-9)
            return p.id;
    return {};
}

bool support_contains(const std::vector<SpecialPoint>& support,
                      const std::vector<SpecialPoint>& want) {
    for (const auto& w : want) {
        bool found = false;
        for (const auto& s : support)
            if (s.first == w.first && s.second == w.second) found = true;
        if (!found) return false;
    }
    return true;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main() {
    Catalog cat8, cat6, cat5, cat4, cat3;

    // 1. Catalog correctness.
    guarded(1, "catalog correctness", [&] {
        auto t0 = std::chrono::steady_clock::now();
        cat8 = build_catalog(8);
        double secs = seconds_since(t0);
        std::ostringstream detail;
        detail << cat8.params.size() << " params in " << static_cast<long>(secs) << "s";
        bool ok = secs < 600;

        const long want[8] = {1, 1, 3, 6, 15, 27, 63, 120};
        for (int n = 1; n <= 8; ++n) {
            long got = 0;
            for (const auto& p : cat8.params)
                if (p.type.m == 0 && p.type.n == n) ++got;
            if (got != want[n - 1]) {
                ok = false;
                detail << "; period " << n << " count " << got << " != " << want[n - 1];
            }
        }
        for (const auto& p : cat8.params)
            if (p.type.m == 1) {
                ok = false;
                detail << "; exact preperiod 1 at " << p.id;
            }
        for (const auto& p : cat8.params) {
            const std::string& cj = cat8.conjugate_id(p.id);
            const PcfParam& q = cat8.at(cj);
            if (cat8.conjugate_id(cj) != p.id ||
                std::fabs(p.ball.mid_re_d() - q.ball.mid_re_d()) > 1e-12 ||
                std::fabs(p.ball.mid_im_d() + q.ball.mid_im_d()) > 1e-12) {
                ok = false;
                detail << "; conjugate pairing broken at " << p.id;
            }
        }
        bool all_disjoint = true;
        for (size_t i = 0; i < cat8.params.size() && all_disjoint; ++i)
            for (size_t j = i + 1; j < cat8.params.size(); ++j)
                if (!cat8.params[i].ball.disjoint_from(cat8.params[j].ball)) {
                    all_disjoint = false;
                    detail << "; overlap " << cat8.params[i].id << "/" << cat8.params[j].id;
                    break;
                }
        ok = ok && all_disjoint;
        report(1, "catalog correctness", ok, detail.str());
    });

    // 2. The three non-special lines of the bound-4 search, and special flags.
    guarded(2, "paper lines recovered", [&] {
        cat4 = build_catalog(4);
        std::string zero = find_id(cat4, 0, 0);
        std::string pi = find_id(cat4, 0, 1);
        std::string mi = find_id(cat4, 0, -1);
        std::string mone = find_id(cat4, -1, 0);
        bool ok = !zero.empty() && !pi.empty() && !mi.empty() && !mone.empty();
        std::ostringstream detail;
        if (!ok) detail << "anchor parameters missing from catalog";

        std::vector<LineHit> hits = find_lines_with_k_points(cat4, 3);
        std::vector<std::vector<SpecialPoint>> wanted = {
            {{zero, zero}, {pi, mi}, {mi, pi}},
            {{zero, zero}, {mone, mi}, {pi, mone}},
            {{zero, zero}, {mone, pi}, {mi, mone}},
        };
        for (const auto& triple : wanted) {
            if (collinear3(triple[0], triple[1], triple[2], cat4) !=
                IncidenceVerdict::Kind::CollinearCertified) {
                ok = false;
                detail << "; a wanted triple is not certified collinear";
            }
            bool found = false;
            for (const auto& h : hits)
                if (h.cls == LineClass::NonSpecial && support_contains(h.support, triple))
                    found = true;
            if (!found) {
                ok = false;
                detail << "; a wanted line is missing or not NonSpecial";
            }
        }

        // Flagging: exact-coefficient hits of special shape must carry the
        // matching class, and each special class actually occurs.
        bool saw_v = false, saw_h = false, saw_d = false;
        for (const auto& h : hits) {
            saw_v |= h.cls == LineClass::SpecialVertical;
            saw_h |= h.cls == LineClass::SpecialHorizontal;
            saw_d |= h.cls == LineClass::SpecialDiagonal;
            if (!h.line.is_exact()) continue;
            if (h.line.eb->is_zero() && h.cls != LineClass::SpecialVertical) ok = false;
            if (h.line.ea->is_zero() && h.cls != LineClass::SpecialHorizontal) ok = false;
            if (*h.line.eb == -(*h.line.ea) && h.line.er->is_zero() &&
                h.cls != LineClass::SpecialDiagonal)
                ok = false;
        }
        if (!(saw_v && saw_h && saw_d)) {
            ok = false;
            detail << "; some special class never flagged";
        }
        report(2, "paper lines recovered", ok, detail.str());
    });

    // 3. Symmetric conic through (0,-1), (-1,-2), (-2,0).
    guarded(3, "symmetric conic", [&] {
        cat3 = build_catalog(3);
        SymmetricConic sc = symmetric_conic(
            exact_point(GaussianRational::integer(0), GaussianRational::integer(-1)),
            exact_point(GaussianRational::integer(-1), GaussianRational::integer(-2)),
            exact_point(GaussianRational::integer(-2), GaussianRational::integer(0)));
        bool ok = sc.eA && *sc.eA == GaussianRational::integer(1) &&
                  *sc.eB == GaussianRational::integer(3) && *sc.eC == GaussianRational::integer(2);
        ok = ok && sc.A.rad_d() < 1e-30 && sc.B.rad_d() < 1e-30 && sc.C.rad_d() < 1e-30;
        CurveCount cc = count_special_on_curve(sc.curve(), cat3);
        std::ostringstream detail;
        detail << "count " << cc.count << (cc.complete ? "" : " (incomplete)");
        ok = ok && cc.complete && cc.count == 6;
        report(3, "symmetric conic", ok, detail.str());
    });

    // 4. Canonical heights.
    guarded(4, "canonical heights", [&] {
        bool ok = true;
        std::ostringstream detail;

        HeightValue hm1 = canonical_height(Rat(-1));
        if (hm1.value != 0 || hm1.error != 0) {
            ok = false;
            detail << "h(-1) not exactly 0; ";
        }
        HeightValue h1 = canonical_height(Rat(1));
        if (std::fabs(h1.value - 0.2037) > 1e-3 + h1.error) {
            ok = false;
            detail << "h(1)=" << h1.value << "; ";
        }
        HeightValue hh = canonical_height(Rat(1, 2));
        if (std::fabs(hh.value - 0.3833) > 1e-3 + hh.error) {
            ok = false;
            detail << "h(1/2)=" << hh.value << "; ";
        }
        bool lambda2 = false;
        for (const auto& [place, v] : hh.place_breakdown)
            if (place == "2" && std::fabs(v - 0.5 * std::log(2.0)) < 1e-15) lambda2 = true;
        if (!lambda2) {
            ok = false;
            detail << "lambda_2 != (1/2)log 2; ";
        }
        HeightValue hc = h_crit({Rat(0), Rat(-1), Rat(-2)});
        if (hc.value != 0) {
            ok = false;
            detail << "h_crit(0,-1,-2)=" << hc.value << "; ";
        }

        std::mt19937_64 rng(20260823);
        int doubling_ok = 0;
        for (int k = 0; k < 100; ++k) {
            long den = 1 + static_cast<long>(rng() % 64);
            long num = static_cast<long>(rng() % (4 * den + 1)) - 2 * den;
            Rat c(num, den);
            GreenValue base = escape_rate_arch(c);
            GreenValue shifted = escape_rate_arch(c, 1);
            if (std::fabs(shifted.value - 2 * base.value) <=
                shifted.error + 2 * base.error + 1e-12)
                ++doubling_ok;
        }
        detail << "doubling " << doubling_ok << "/100";
        ok = ok && doubling_ok == 100;
        report(4, "canonical heights", ok, detail.str());
    });

    // 5. Green's function values and vanishing on the catalog.
    guarded(5, "Green's function", [&] {
        bool ok = true;
        std::ostringstream detail;
        GreenValue g2 = green_mandelbrot(Rat(2));
        GreenValue g10 = green_mandelbrot(Rat(10));
        detail << "G(2)=" << g2.value << " G(10)=" << g10.value;
        if (!g2.escaped || std::fabs(g2.value - 0.9096) > 1e-3 + g2.error) ok = false;
        if (!g10.escaped || std::fabs(g10.value - 2.3514) > 1e-3 + g10.error) ok = false;
        long escaped = 0;
        for (const auto& p : cat8.params)
            if (green_mandelbrot(p.ball).escaped) ++escaped;
        if (escaped > 0) {
            ok = false;
            detail << "; " << escaped << " cataloged balls escaped";
        }
        report(5, "Green's function", ok, detail.str());
    });

    // 6. Root-isolation oracle and equidistribution convergence.
    guarded(6, "equidistribution", [&] {
        bool ok = true;
        std::ostringstream detail;
        auto at2 = convergence_table(GaussianRational::integer(2), 1, 10);
        auto at3i = convergence_table({Rat(3), Rat(1)}, 1, 10);
        double worst = 0;
        for (const auto& r : at2) worst = std::max(worst, r.root_residual);
        for (const auto& r : at3i) worst = std::max(worst, r.root_residual);
        detail << "max residual " << worst;
        if (worst >= 1e-6) ok = false;
        // at2[i] holds n = i + 1; discrepancies strictly decreasing on n=2..8.
        for (int n = 3; n <= 8; ++n)
            if (!(at2[n - 1].discrepancy < at2[n - 2].discrepancy)) {
                ok = false;
                detail << "; discrepancy not decreasing at n=" << n;
            }
        detail << "; disc(8)=" << at2[7].discrepancy;
        if (!(at2[7].discrepancy < 1e-2)) ok = false;
        report(6, "equidistribution", ok, detail.str());
    });

    // 7. Real geometry.
    guarded(7, "real geometry", [&] {
        bool ok = true;
        std::ostringstream detail;

        RealCurve x_axis_coord = real_curve_from_terms({{1, 0, Rat(1)}});
        std::vector<std::string> on_x = pcf_on_real_curve(x_axis_coord, cat4);
        std::vector<std::string> want = {find_id(cat4, 0, 0), find_id(cat4, 0, 1),
                                         find_id(cat4, 0, -1)};
        std::sort(on_x.begin(), on_x.end());
        std::sort(want.begin(), want.end());
        if (on_x != want) {
            ok = false;
            detail << "pcf_on_real_curve(x) gave " << on_x.size() << " ids; ";
        }

        // Real axis y = 0 pulls back to the diagonal u = v.
        PlaneCurve diag = real_curve_to_complex(real_curve_from_terms({{0, 1, Rat(1)}}));
        if (!(diag.d == 1 && diag.is_exact() && diag.exact[0].is_zero() &&
              diag.exact[1] == -diag.exact[2] && !diag.exact[1].is_zero())) {
            ok = false;
            detail << "real axis does not map to the diagonal; ";
        }

        cat6 = build_catalog(6);
        auto t0 = std::chrono::steady_clock::now();
        std::vector<RealLineHit> hits = real_line_search(cat6, 3);
        double secs = seconds_since(t0);
        detail << hits.size() << " real lines in " << static_cast<long>(secs) << "s";
        if (secs >= 300) ok = false;
        if (hits.size() != 2) {
            ok = false;
        } else {
            // One hit per axis: x = 0 exactly, and y = 0 flagged as the
            // special diagonal.
            bool imag_axis = false, real_axis = false;
            for (const auto& h : hits) {
                if (!h.line.is_exact()) continue;
                if (*h.line.ea == 1 && *h.line.eb == 0 && *h.line.er == 0 &&
                    !h.special_diagonal)
                    imag_axis = true;
                if (*h.line.ea == 0 && *h.line.eb == 1 && *h.line.er == 0 &&
                    h.special_diagonal)
                    real_axis = true;
            }
            if (!(imag_axis && real_axis)) {
                ok = false;
                detail << "; axes not recovered exactly";
            }
        }
        report(7, "real geometry", ok, detail.str());
    });

    // 8. Sharpness probe on the bound-5 catalog.
    guarded(8, "sharpness probe", [&] {
        cat5 = build_catalog(5);
        SharpnessReport rep = sharpness_probe(cat5, 1, 1000, 20260823);
        bool ok = rep.fitted >= 1000;
        std::ostringstream detail;
        detail << rep.exact_count << "/" << rep.fitted << " exact, "
               << rep.exceptions.size() << " exceptions, " << rep.undecided << " undecided";
        if (rep.undecided != 0) ok = false;
        if (rep.exact_count < static_cast<long>(0.99 * static_cast<double>(rep.fitted)))
            ok = false;
        for (const auto& e : rep.exceptions) {
            // diagonal is the special line x = y; sum / origin / cross are the
            // exceptional line families. Anything else is a genuine violation.
            if (e.tag != "diagonal" && e.tag != "sum" && e.tag != "origin" &&
                e.tag != "cross") {
                ok = false;
                detail << "; unexplained exception (" << e.sample[0].first << ","
                       << e.sample[0].second << ")-(" << e.sample[1].first << ","
                       << e.sample[1].second << ") count " << e.count;
            }
        }
        report(8, "sharpness probe", ok, detail.str());
    });

    // 9. CLI determinism: identical configs give byte-identical artifacts.
    guarded(9, "CLI determinism", [&] {
        auto run = [](const std::string& args) {
            std::string cmd = std::string(PCF_CLI_PATH) + " " + args + " >/dev/null 2>&1";
            int rc = std::system(cmd.c_str());
            return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
        };
        bool ok = true;
        std::ostringstream detail;
        const std::vector<std::pair<std::string, std::string>> runs = {
            {"catalog --bound 3 -o acc_cat.json", "acc_cat.json"},
            {"equidist --z 2 --nmin 2 --nmax 5 -o acc_eq.csv", "acc_eq.csv"},
            {"heights --c -1 --c 0.5 --c 0.3 -o acc_h.json", "acc_h.json"},
        };
        for (const auto& [args, path] : runs) {
            if (run(args) != 0) {
                ok = false;
                detail << "command failed: " << args << "; ";
                continue;
            }
            std::string first = slurp(path);
            if (run(args) != 0 || first.empty() || first != slurp(path)) {
                ok = false;
                detail << "not byte-identical: " << path << "; ";
            }
            std::remove(path.c_str());
        }
        report(9, "CLI determinism", ok, detail.str());
    });

    if (g_failures) {
        std::cout << g_failures << " criteria failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
