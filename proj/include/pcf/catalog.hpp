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

#ifndef PCF_CATALOG_HPP
#define PCF_CATALOG_HPP

#include <map>
#include <string>
#include <vector>

#include "pcf/algebraic.hpp"
#include "pcf/ball.hpp"
#include "pcf/intpoly.hpp"

namespace pcf {

/// A postcritically finite parameter: the critical orbit of z^2+c satisfies
/// f^{m+n}(0) = f^m(0) with exact (minimal) preperiod m and period n.
struct PcfParam {
    OrbitIndex type;
    Ball ball;
    int degree_bound = 1;  // degree of the exact-type factor it was isolated from
    std::string id;        // "m_n_k", k = index after midpoint-lexicographic sort
};

/// A point of C^2 whose coordinates are cataloged parameters.
struct SpecialPoint {
    std::string first;
    std::string second;
};

/// Monic squarefree polynomial whose roots are exactly the parameters of exact
/// type t: the squarefree part of G_t divided by its gcd with every sub-type
/// relation (m' <= m, n' | n).  Degree 0 when the type contributes nothing
/// (all preperiod-1 types).
IntPoly exact_type_factor(const OrbitIndex& t);

/// Complete database of PCF parameters with m+n <= bound.
class Catalog {
public:
    int bound = 0;
    double precision = 0.0;  // target ball radius
    std::vector<PcfParam> params;

    const PcfParam* find(const std::string& id) const;  // null when absent
    const PcfParam& at(const std::string& id) const;    // ContractError when absent
    /// Id of the complex-conjugate parameter (possibly the same id).
    const std::string& conjugate_id(const std::string& id) const;

    const IntPoly& type_poly(const OrbitIndex& t) const;
    /// log2 upper bound on |root| over all roots of type_poly(t).
    double type_log2_modulus(const OrbitIndex& t) const;

    /// Bridge to the zero-certification machinery.  Degree-1 factors and the
    /// factor c^2+1 yield exact values; everything else carries its defining
    /// polynomial.  Pointers remain valid while this catalog is alive.
    AlgebraicCoord coord(const std::string& id) const;

    /// Called by build/load; recomputes type polynomials, conjugate pairing,
    /// and modulus bounds, and checks all catalog invariants.
    void finalize();

private:
    std::map<std::pair<int, int>, IntPoly> type_polys_;
    std::map<std::pair<int, int>, double> type_log2_modulus_;
    std::map<std::string, size_t> index_;
    std::map<std::string, std::string> conj_;
};

/// Enumerates, classifies, and deduplicates every PCF parameter with
/// m+n <= bound; each isolating ball has radius <= precision.
Catalog build_catalog(int bound, double precision = kDefaultCatalogRadius);

/// Minimal (m0, n0) with m0 <= t.m, n0 | t.n whose relation polynomial has a
/// certified root in the ball.  ResourceError if refinement cannot settle it.
OrbitIndex classify_exact_type(const Ball& ball, const OrbitIndex& t);

/// Number of exact-period-n parameters (hyperbolic component centers):
/// h with sum over d | n of h(d) = 2^{n-1}.
long period_center_count(int n);

void save_catalog(const Catalog& cat, const std::string& path);
Catalog load_catalog(const std::string& path);

}  // namespace pcf

#endif
