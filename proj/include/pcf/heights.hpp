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

#ifndef PCF_HEIGHTS_HPP
#define PCF_HEIGHTS_HPP

#include <string>
#include <vector>

#include "pcf/ball.hpp"
#include "pcf/intpoly.hpp"

namespace pcf {

/// Archimedean escape rate / Mandelbrot Green's function value.
/// When escaped is false the true value lies in [0, error] and iterations
/// records how far the orbit was followed without escaping.
struct GreenValue {
    double value = 0;
    double error = 0;
    bool escaped = false;
    long iterations = 0;
};

/// Canonical height with its decomposition into local contributions.
/// Place labels are "inf" or the decimal prime.
struct HeightValue {
    double value = 0;
    double error = 0;
    std::vector<std::pair<std::string, double>> place_breakdown;
};

/// lambda_inf = lim 2^{-k} log+ |f_c^k(0)|, with a rigorous tail bound once
/// the orbit escapes past max(|c|, 4).  orbit_shift starts the limit at
/// f_c^shift(0) instead of 0, which multiplies the value by 2^shift.
GreenValue escape_rate_arch(const Ball& c, int orbit_shift = 0,
                            double tol = 1e-12, long iter_cap = 10000);
GreenValue escape_rate_arch(const Rat& c, int orbit_shift = 0,
                            double tol = 1e-12, long iter_cap = 10000);

/// G_M = 2 * lambda_inf, normalized so G_M(c) = log|c| + o(1) at infinity.
GreenValue green_mandelbrot(const Ball& c);
GreenValue green_mandelbrot(const Rat& c);

/// Local height at a finite place: 0 for |c|_p <= 1, else (1/2) log |c|_p.
double local_height_nonarch(const Rat& c, const Int& p);

/// Exact preperiodicity test for the critical orbit of a rational c.
bool is_pcf_rational(const Rat& c);

/// h-hat_{f_c}(0) over Q: archimedean escape rate plus the closed-form
/// contributions of the primes dividing the denominator.  Cataloged PCF
/// rationals report an exact zero.
HeightValue canonical_height(const Rat& c);

/// Sum of coordinatewise canonical heights; zero iff every entry is PCF.
HeightValue h_crit(const std::vector<Rat>& tuple);

}  // namespace pcf

#endif
