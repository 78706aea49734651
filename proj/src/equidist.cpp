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

#include "pcf/equidist.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "pcf/errors.hpp"
#include "pcf/rootcert.hpp"

namespace pcf {

namespace {

// |G_M(z) - 2^{-(n-1)} log|z_n|| via the telescoping identity
// G - E_n = sum_{j>=n} 2^{-j} log|1 + z/z_j^2|  (z_{j+1} = z_j^2 + z).
// The terms decay doubly exponentially, so the difference is recovered far
// below where the two rounded-to-double potentials could resolve it.
double discrepancy_telescoped(int n, const GaussianRational& z) {
    const long prec = 512;
    Ball c = z.ball(prec);
    Ball zk = c;  // z_1
    for (int j = 1; j < n; ++j) zk = zk * zk + c;
    Ball one = Ball::exact_int(1, 0, prec);
    double lo = 0, hi = 0;
    for (int j = n; j <= n + 300; ++j) {
        Ball u = c / (zk * zk);
        double term_bound = std::ldexp(std::exp2(u.log2_abs_ubound() + 1.0), -j);
        if (u.log2_abs_ubound() < -1.0 && (term_bound < 1e-200 ||
                                           term_bound < 1e-25 * std::fabs(lo + hi))) {
            // Remaining terms at least halve each step (2^{-j} alone does).
            lo -= 2 * term_bound;
            hi += 2 * term_bound;
            return std::fabs(0.5 * (lo + hi));
        }
        auto [tl, th] = log_abs_interval(one + u);
        lo += std::ldexp(tl, -j);
        hi += std::ldexp(th, -j);
        zk = zk * zk + c;
    }
    throw ResourceError("discrepancy tail did not converge");
}

}  // namespace

PotentialReport empirical_potential(int n, const GaussianRational& z, double root_radius) {
    if (n < 1 || n > kMaxOrbitDepth)
        throw ContractError("empirical_potential: orbit depth out of budget");
    const long prec = 128;
    Ball zb = z.ball(prec);
    GreenValue ref = green_mandelbrot(zb);
    if (!ref.escaped)
        throw ContractError("empirical_potential: test point not certified escaped");

    IntPoly pn = orbit_polynomial(n, kMaxOrbitDepth);
    RootSet rs = isolate_roots(pn, root_radius);

    // Unscaled sum of mult * log|z - r| as a certified interval.
    double lo = 0, hi = 0;
    for (const auto& r : rs.roots) {
        auto [l, h] = log_abs_interval(zb - r.ball);
        lo += r.multiplicity * l;
        hi += r.multiplicity * h;
    }

    // log|p_n(z)| from the exact evaluation (p_n is monic, so the sums agree
    // up to enclosure width).
    auto [vr, vi] = pn.eval_gaussian(z.re, z.im);
    auto [pl, ph] = log_abs_interval(Ball::from_rat(vr, vi, 2 * prec));

    PotentialReport rep;
    rep.n = n;
    rep.test_point = z;
    double scale = std::ldexp(1.0, -(n - 1));
    rep.empirical = scale * 0.5 * (lo + hi);
    rep.empirical_error = scale * 0.5 * (hi - lo);
    rep.reference = ref.value;
    rep.reference_error = ref.error;
    rep.discrepancy = discrepancy_telescoped(n, z);
    rep.root_residual = std::fabs(0.5 * (lo + hi) - 0.5 * (pl + ph));
    return rep;
}

std::vector<PotentialReport> convergence_table(const GaussianRational& z, int n_lo,
                                               int n_hi, double root_radius) {
    if (n_lo < 1 || n_hi < n_lo) throw ContractError("convergence_table: bad depth range");
    std::vector<PotentialReport> out;
    for (int n = n_lo; n <= n_hi; ++n) out.push_back(empirical_potential(n, z, root_radius));
    return out;
}

void save_potential_csv(const std::vector<PotentialReport>& reports, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << "n,z,empirical,reference,discrepancy,root_residual\n";
    out.precision(17);
    for (const auto& r : reports) {
        out << r.n << ',' << r.test_point.to_string() << ',' << r.empirical << ','
            << r.reference << ',' << r.discrepancy << ',' << r.root_residual << '\n';
    }
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace pcf
