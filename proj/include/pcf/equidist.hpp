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

#ifndef PCF_EQUIDIST_HPP
#define PCF_EQUIDIST_HPP

#include <string>
#include <vector>

#include "pcf/gaussian.hpp"
#include "pcf/heights.hpp"

namespace pcf {

/// Empirical potential of the degree-n orbit-polynomial root measure at an
/// escaped test point, against the Mandelbrot Green's function reference.
struct PotentialReport {
    int n = 0;
    GaussianRational test_point;
    double empirical = 0;   // (1/2^{n-1}) sum of mult * log|z - r_i|
    double reference = 0;   // G_M(z)
    /// |empirical - reference|, computed from the exact telescoping identity
    /// for the Green approximants rather than from the two rounded fields, so
    /// it stays meaningful below double rounding (the true gap decays doubly
    /// exponentially in n).
    double discrepancy = 0;
    /// |sum mult * log|z - r_i| - log|p_n(z)||; near zero because p_n is
    /// monic, so it doubles as a root-isolation oracle.
    double root_residual = 0;
    double empirical_error = 0;  // half-width of the certified enclosure
    double reference_error = 0;
};

/// Isolates all roots of p_n and evaluates the empirical potential at z.
/// ContractError unless 1 <= n <= kMaxOrbitDepth and z is certified escaped
/// (G_M(z) > 0); root-isolation resource errors propagate.
PotentialReport empirical_potential(int n, const GaussianRational& z,
                                    double root_radius = 1e-12);

/// Reports for n in [n_lo, n_hi].
std::vector<PotentialReport> convergence_table(const GaussianRational& z, int n_lo,
                                               int n_hi, double root_radius = 1e-12);

/// CSV: n, z, empirical, reference, discrepancy, root_residual.
void save_potential_csv(const std::vector<PotentialReport>& reports,
                        const std::string& path);

}  // namespace pcf

#endif
