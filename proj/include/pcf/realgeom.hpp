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

#ifndef PCF_REALGEOM_HPP
#define PCF_REALGEOM_HPP

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "pcf/catalog.hpp"
#include "pcf/curvefit.hpp"
#include "pcf/incidence.hpp"

namespace pcf {

/// Real line a*x + b*y = r in R^2 identified with C (x = Re c, y = Im c).
struct RealLine {
    Ball a, b, r;  // real balls (zero imaginary part)
    std::optional<Rat> ea, eb, er;

    bool is_exact() const { return ea && eb && er; }
    /// ContractError unless (a, b) != (0, 0) is certified.
    void validate() const;
};

/// Same convention as normalize_line: the larger-midpoint coefficient among
/// a, b becomes exactly 1 (ties toward a); fixed point under repetition.
RealLine normalize_real_line(const RealLine& raw);

/// The complex line in (c, cbar) coordinates cut out by the real line:
/// (1/2)(a - ib) x + (1/2)(a + ib) y = r.  Not normalized.
Line2 real_line_to_complex(const RealLine& line);

/// Real polynomial in x, y with exact rational coefficients, stored in the
/// curve_monomials(d) slot order.
struct RealCurve {
    int d = 1;
    std::vector<Rat> coeffs;

    void validate() const;  // ContractError: d >= 1, slot count, not all zero
};

RealCurve real_curve_from_terms(const std::vector<std::tuple<int, int, Rat>>& terms);

/// Substitutes x = (u + v)/2, y = (u - v)/(2i) and returns the resulting
/// curve in (u, v) = (c, cbar); the degree is preserved because the
/// substitution is an invertible linear change of coordinates.
PlaneCurve real_curve_to_complex(const RealCurve& p);

/// Catalog ids of all c with (c, cbar) certified on real_curve_to_complex(p),
/// i.e. the cataloged PCF parameters on the real curve.  ResourceError if a
/// membership verdict stays undecided.
std::vector<std::string> pcf_on_real_curve(const RealCurve& p, const Catalog& cat);

struct RealLineHit {
    RealLine line;
    std::vector<std::string> support;  // catalog ids, sorted
    /// The real axis corresponds to the special diagonal x = y in C^2; it is
    /// reported but flagged so non-special reports can exclude it.
    bool special_diagonal = false;
};

/// All real lines through at least k >= 3 cataloged parameters, viewed in
/// R^2.  Collinearity is decided by the certified complex incidence
/// determinant on the conjugate-paired points (c, cbar).
std::vector<RealLineHit> real_line_search(const Catalog& cat, int k);

/// JSON monomial list [[i, j, coeff-decimal-string], ...].
RealCurve load_real_curve_json(const std::string& path);
void save_real_curve_json(const RealCurve& p, const std::string& path);

}  // namespace pcf

#endif
