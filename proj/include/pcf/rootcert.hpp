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

#ifndef PCF_ROOTCERT_HPP
#define PCF_ROOTCERT_HPP

#include <vector>

#include "pcf/ball.hpp"
#include "pcf/intpoly.hpp"

namespace pcf {

enum class Containment { Yes, No, Undecided };

/// All complex roots of an integer polynomial, certified: balls are pairwise
/// disjoint, each contains exactly one distinct root, multiplicities sum to
/// the degree.
struct RootSet {
    struct Root {
        Ball ball;
        int multiplicity = 1;
    };
    IntPoly poly;
    std::vector<Root> roots;
    long precision = 0;  // working bit count that achieved certification

    /// Certified upper bound on max |root|, clamped to >= 1 (gap-bound use).
    double modulus_ubound() const;
};

/// Unconditional isolation of all roots of a nonconstant p; every radius
/// <= target_radius.  Simultaneous (Aberth-Ehrlich) iteration followed by an
/// a-posteriori interval-Newton certificate; multiplicities recovered from the
/// squarefree decomposition.  ResourceError if the precision ceiling is hit,
/// reporting the radius achieved.
RootSet isolate_roots(const IntPoly& p, double target_radius,
                      long prec_ceiling = kRootPrecCeiling);

/// Shrinks a ball that isolates a simple root of p down to target_radius.
/// The result is contained in b.  ContractError if b does not certify a
/// unique root of squarefree_part(p).
Ball refine(const Ball& b, const IntPoly& p, double target_radius,
            long prec_ceiling = kRootPrecCeiling);

/// Like refine, but with the target on a log2 scale so radii far below the
/// smallest double are expressible (zero-certification needs them).
Ball refine_bits(const Ball& b, const IntPoly& p, double target_log2_rad,
                 long prec_ceiling = kRootPrecCeiling);

/// Sound tri-state root-membership test on the closed disk b.
/// Yes requires an interval-Newton certificate inside b; No requires |p|
/// certified nonzero on all of b.
Containment contains_root(const IntPoly& p, const Ball& b);

/// One interval-Newton contraction attempt for a squarefree s on ball b at
/// the given precision; returns the contracted ball through *out and true on
/// success.  Exposed for reuse by the algebraic-number equality test.
bool newton_contract(const IntPoly& s, const IntPoly& ds, const Ball& b,
                     long prec, Ball* out);

}  // namespace pcf

#endif
