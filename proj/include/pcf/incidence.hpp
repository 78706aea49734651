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

#ifndef PCF_INCIDENCE_HPP
#define PCF_INCIDENCE_HPP

#include <climits>
#include <optional>
#include <string>
#include <vector>

#include "pcf/algebraic.hpp"
#include "pcf/catalog.hpp"

namespace pcf {

/// Line a*x + b*y = r in C^2, normalized so the larger-magnitude coefficient
/// among a, b equals 1 exactly (ties broken toward a).  Exact coefficients are
/// carried when known; provenance names the two special points that generated
/// the line, which lets later certification re-derive the coefficients as
/// algebraic numbers.
struct Line2 {
    Ball a, b, r;
    std::optional<GaussianRational> ea, eb, er;
    std::optional<std::pair<SpecialPoint, SpecialPoint>> provenance;

    bool is_exact() const { return ea && eb && er; }
};

/// Line through two distinct special points; DegeneracyError when the points
/// are certified equal (or cannot be separated).
Line2 line_through(const SpecialPoint& p, const SpecialPoint& q, const Catalog& cat);

/// Re-normalizes; the normalization is a fixed point (applying it twice is
/// the identity).  ContractError when both a and b might be zero.
Line2 normalize_line(const Line2& raw);

struct IncidenceVerdict {
    enum class Kind { CollinearCertified, NotCollinear, Undecided };
    Kind kind = Kind::Undecided;
    long precision = 0;  // bits reached when Undecided
    bool operator==(Kind k) const { return kind == k; }
};

/// Certified collinearity of three special points via the 3x3 incidence
/// determinant: exact arithmetic when all coordinates are exact, structural
/// vanishing over the coordinate ids, otherwise ball exclusion against a
/// Liouville-type gap bound.
IncidenceVerdict collinear3(const SpecialPoint& p, const SpecialPoint& q,
                            const SpecialPoint& s, const Catalog& cat);

enum class LineClass { SpecialVertical, SpecialHorizontal, SpecialDiagonal, NonSpecial, Unknown };

std::string to_string(LineClass c);

/// Special lines are verticals/horizontals with a PCF intercept and the
/// diagonal x=y.  NonSpecial requires a certificate (wrong shape, or an
/// intercept of certified positive height); Unknown covers intercepts that
/// are off-catalog but possibly PCF beyond the bound.
LineClass classify_line(const Line2& line, const Catalog& cat);

/// Yes iff every coordinate is certified equal to a cataloged parameter; No
/// iff some coordinate certifiably escapes (positive Green value or rational
/// non-PCF); Undecided otherwise.
Containment is_special_point(const std::vector<AlgebraicCoord>& point, const Catalog& cat);

/// Z = { x_i = c_i for i in S0 } intersect { x_u = x_v within each free block }.
struct SpecialSubvariety {
    int n = 0;
    std::vector<int> constant_indices;        // S0, 1-based coordinate indices
    std::vector<std::string> constant_ids;    // parallel catalog ids
    std::vector<std::vector<int>> free_blocks;  // S1..Sr, each nonempty

    int dimension() const { return static_cast<int>(free_blocks.size()); }
    /// ContractError unless the blocks partition {1..n}.
    void validate() const;
};

Containment subvariety_contains(const SpecialSubvariety& z,
                                const std::vector<AlgebraicCoord>& point,
                                const Catalog& cat);

struct LineFilters {
    int max_type_sum = INT_MAX;      // keep params with m+n <= this
    int max_coord_degree = INT_MAX;  // keep params with degree_bound <= this
    long pair_budget = 50'000'000;   // anchor*point iterations before bailing
};

struct LineHit {
    Line2 line;
    std::vector<SpecialPoint> support;  // every certified point, sorted by ids
    LineClass cls = LineClass::Unknown;
};

/// Exhaustive search for lines through at least k special points of the
/// filtered catalog square.  Special lines are flagged, never suppressed.
/// ResourceError when the filtered point set exceeds the pair budget.
std::vector<LineHit> find_lines_with_k_points(const Catalog& cat, int k,
                                              const LineFilters& filters = {});

/// Lines joining P to every other special point, deduplicated by certified
/// line equality.
std::vector<LineHit> pencil_two_point_lines(const SpecialPoint& p, const Catalog& cat);

/// The lines x + y = lambda holding at least one special pair: unordered
/// catalog pairs grouped by certified-equal sum.
struct SumLine {
    Ball lambda;
    std::vector<SpecialPoint> support;
};

std::vector<SumLine> sum_spectrum(const Catalog& cat);

/// A synthetic entry for the horizontal-pair machinery: a value and its
/// complex conjugate (for catalog parameters the conjugate is cataloged too).
struct ImEntry {
    std::string id;
    AlgebraicCoord coord;
    AlgebraicCoord conj;
};

struct HorizontalPair {
    std::string c1, c2;
    Line2 line;  // x + y = c1 + conj(c2)
};

/// Distinct pairs with certified-equal nonzero imaginary part.
std::vector<HorizontalPair> horizontal_pairs_core(const std::vector<ImEntry>& entries);
std::vector<HorizontalPair> horizontal_pair_search(const Catalog& cat);

/// One record per line: normalized coefficients as decimal strings,
/// classification, support ids.
void save_lines_csv(const std::vector<LineHit>& hits, const std::string& path);
void save_lines_json(const std::vector<LineHit>& hits, const std::string& path);

}  // namespace pcf

#endif
