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

#ifndef PCF_CURVEFIT_HPP
#define PCF_CURVEFIT_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pcf/algebraic.hpp"
#include "pcf/catalog.hpp"

namespace pcf {

/// d(d+3)/2, the number of points a degree-d plane curve can be fitted
/// through in general position.  ContractError for d < 1.
int n_d(int d);

/// The (d+1)(d+2)/2 monomial exponent pairs (i, j) of x^i y^j with i+j <= d,
/// in the fixed order used by PlaneCurve::coeffs: total degree ascending,
/// x-exponent descending within a degree (1; x, y; x^2, xy, y^2; ...).
std::vector<std::pair<int, int>> curve_monomials(int d);

/// Affine plane curve sum coeffs[k] * x^i y^j = 0 over the monomial order
/// above.  Exact coefficients are carried in parallel when known; without
/// them only non-membership can be certified.
struct PlaneCurve {
    int d = 0;
    std::vector<Ball> coeffs;               // (d+1)(d+2)/2 slots
    std::vector<GaussianRational> exact;    // empty, or parallel to coeffs
    bool normalized = false;

    bool is_exact() const { return !exact.empty(); }
    Ball eval(const Ball& x, const Ball& y) const;
    /// ContractError on wrong slot count or all-certified-zero coefficients.
    void validate() const;
};

PlaneCurve curve_from_exact(int d, std::vector<GaussianRational> coeffs,
                            long prec = kStartPrec);

/// Scales so the largest-midpoint-magnitude coefficient becomes exactly 1
/// (first such slot in monomial order).  Fixed point: normalizing twice is
/// the identity.  ContractError when every coefficient might be zero.
PlaneCurve normalize_curve(const PlaneCurve& c);

/// A point of C^2 with certified coordinates, exact or cataloged.
struct CurvePoint {
    AlgebraicCoord x, y;
};

CurvePoint exact_point(const GaussianRational& x, const GaussianRational& y);
CurvePoint catalog_point(const SpecialPoint& p, const Catalog& cat);

/// Certified membership verdict for a point on a curve.  Zero needs exact
/// coefficients (gap bound); NonZero also falls out of ball exclusion.
Sign point_on_curve(const PlaneCurve& c, const AlgebraicCoord& x, const AlgebraicCoord& y);

/// Positive-dimensional space of degree-d curves through the input points.
struct SolutionFamily {
    int d = 0;
    int dimension = 0;
    std::vector<PlaneCurve> basis;  // dimension + 1 independent curves
};

using FitResult = std::variant<PlaneCurve, SolutionFamily>;

/// Solves the linear evaluation system for a degree-d curve through the
/// points (at most n_d(d) of them).  Exact points are eliminated in exact
/// arithmetic; otherwise ball elimination with full pivoting, where every
/// rank decision is a certified-nonzero pivot, escalating precision and
/// throwing ResourceError if the rank stays undecided.  A one-dimensional
/// solution space comes back as the (unique up to scale) PlaneCurve, larger
/// spaces as a SolutionFamily.
FitResult fit_curve(const std::vector<CurvePoint>& points, int d);

/// Symmetric conic x^2 + y^2 + A xy + B (x + y) + C = 0 through three points
/// (and automatically through their coordinate swaps).  DegeneracyError when
/// the three constraints are dependent, naming the dependency.
struct SymmetricConic {
    Ball A, B, C;
    std::optional<GaussianRational> eA, eB, eC;

    PlaneCurve curve() const;
};

SymmetricConic symmetric_conic(const CurvePoint& p1, const CurvePoint& p2,
                               const CurvePoint& p3);

/// Exact-within-catalog census of special points on a curve.  complete is
/// false when any membership verdict stayed Undecided (such pairs are not
/// counted).
struct CurveCount {
    long count = 0;
    std::vector<SpecialPoint> support;  // sorted by ids
    bool complete = true;
};

CurveCount count_special_on_curve(const PlaneCurve& c, const Catalog& cat);

/// Randomized sharpness experiment: fit a degree-d curve through n_d(d)
/// random catalog special points and census it.  Counts above n_d(d) are
/// recorded as tagged exceptions, never asserted away; samples that fail to
/// give a certified full-rank fit are skipped and resampled.
struct SharpnessException {
    std::vector<SpecialPoint> sample;
    long count = 0;
    std::string tag;
};

struct SharpnessReport {
    int d = 0;
    unsigned long long seed = 0;
    long requested = 0;
    long fitted = 0;       // successful full-rank fits censused
    long skipped = 0;      // degenerate or rank-undecided samples
    long exact_count = 0;  // census == n_d(d)
    long undecided = 0;    // census incomplete
    std::vector<SharpnessException> exceptions;
};

SharpnessReport sharpness_probe(const Catalog& cat, int d, long samples,
                                unsigned long long seed);

/// JSON {"d": int, "coeffs": [[i, j, re, im, rad], ...]} with exact decimal
/// strings; save/load round-trips bit for bit.
void save_curve_json(const PlaneCurve& c, const std::string& path);
PlaneCurve load_curve_json(const std::string& path);

}  // namespace pcf

#endif
