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

#ifndef PCF_CONFIG_HPP
#define PCF_CONFIG_HPP

#include <cstdlib>

namespace pcf {

// Orbit-polynomial degree budget: m+n <= kOrbitBudget, deg <= 2^(kOrbitBudget-1).
inline constexpr int kDefaultOrbitBudget = 8;
// Hard cap used when callers (equidist) legitimately need deeper orbits.
inline constexpr int kMaxOrbitDepth = 16;

// Precision-escalation schedule for root isolation: start, doubling, ceiling (bits).
inline constexpr long kStartPrec = 64;
inline constexpr long kRootPrecCeiling = 4096;

// Zero-certification (Liouville gap) ceiling; gaps can legitimately need far
// more bits than root isolation ever does.
inline long zero_cert_prec_ceiling() {
    if (const char* s = std::getenv("PCF_PREC_CEILING")) {
        long v = std::atol(s);
        if (v > 0) return v;
    }
    return 1L << 19;
}

// Radius of the low-precision upper-bound arithmetic used for ball radii.
inline constexpr long kRadPrec = 32;

inline constexpr double kDefaultCatalogRadius = 1e-40;
inline constexpr int kDefaultCatalogBound = 8;

inline constexpr const char* kVersion = "0.1.0";

}  // namespace pcf

#endif
