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

#ifndef PCF_ALGEBRAIC_HPP
#define PCF_ALGEBRAIC_HPP

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pcf/ball.hpp"
#include "pcf/gaussian.hpp"
#include "pcf/intpoly.hpp"
#include "pcf/rootcert.hpp"

namespace pcf {

enum class Sign { Zero, NonZero, Undecided };

/// One coordinate of an algebraic expression: an exact Gaussian rational, or
/// a certified root of a monic squarefree integer polynomial.  Equal ids name
/// the same algebraic number; distinct ids may still be roots of the same
/// polynomial (conjugates).
struct AlgebraicCoord {
    std::string id;
    std::optional<GaussianRational> exact;
    const IntPoly* poly = nullptr;  // required when exact is absent
    Ball ball;
    /// log2 upper bound for |root| over all roots of poly (for exact values,
    /// the modulus itself).
    double log2_conj_modulus = 0.0;

    static AlgebraicCoord from_exact(GaussianRational v, long prec = kStartPrec);

    bool is_exact() const { return exact.has_value(); }
    /// Enclosure with radius at most 2^-bits.
    Ball at(long bits) const;
    /// Degree bound of the number over Q: 1 for rationals, 2 for nonreal
    /// Gaussian rationals, deg(poly) otherwise.
    double degree_bound() const;
};

/// Liouville-type gap certification for an algebraic-integer expression.
/// eval_at(bits) must return an enclosure whose radius shrinks like 2^-bits;
/// degree_product bounds [Q(operands):Q]; every Galois conjugate of the
/// expression has modulus at most 2^log2_conj_bound.  If the exact value is
/// nonzero it therefore has modulus at least 2^-(degree_product-1)*max(log2B,0),
/// so the enclosure must eventually leave zero or sink below the gap.
Sign certify_zero(const std::function<Ball(long)>& eval_at, double degree_product,
                  double log2_conj_bound, long prec_ceiling = 0 /* 0 = config */);

/// Accumulates the gap-bound degree product over the distinct operands of an
/// expression.
struct GapDegree {
    double product = 1.0;
    bool gaussian = false;
    std::set<std::string> seen;
    void add(const AlgebraicCoord& c);
    double value() const { return product * (gaussian ? 2.0 : 1.0); }
};

/// Certified equality of two algebraic numbers, decided without gap bounds:
/// distinct numbers separate under refinement, equal ones are trapped in a
/// common interval-Newton uniqueness region of gcd(P, Q).
Containment equal_algebraic(const AlgebraicCoord& a, const AlgebraicCoord& b,
                            long prec_ceiling = kRootPrecCeiling);

/// Formal multivariate polynomial over the operand ids with exact Gaussian
/// rational coefficients.  Detects expressions that vanish identically (e.g.
/// determinants with repeated rows) without any numeric work.
class SymExpr {
public:
    static SymExpr constant(const GaussianRational& v);
    static SymExpr var(const std::string& id);
    /// The coordinate as a formal expression: exact values become constants.
    static SymExpr coord(const AlgebraicCoord& c);

    SymExpr operator+(const SymExpr& o) const;
    SymExpr operator-(const SymExpr& o) const;
    SymExpr operator*(const SymExpr& o) const;
    SymExpr operator-() const;

    bool is_identically_zero() const { return terms_.empty(); }
    /// The exact value when no variable survives; empty otherwise.
    std::optional<GaussianRational> as_constant() const;

private:
    // monomial (sorted ids with repetition) -> nonzero coefficient
    std::map<std::vector<std::string>, GaussianRational> terms_;
};

/// max over operands of max(log2_conj_modulus, 0).
double conj_bound_log2(const std::vector<const AlgebraicCoord*>& ops);

/// Certified sign of an algebraic expression over the given operands: sym
/// settles structural vanishing and the all-exact case, otherwise the
/// Liouville gap applies with conjugates bounded by 2^log2_bound.  expr_deg
/// bounds the monomial degree so rational operands can be cleared to
/// algebraic integers.
Sign sign_of(const std::vector<const AlgebraicCoord*>& ops, const SymExpr& sym,
             const std::function<Ball(long)>& eval_at, double log2_bound, int expr_deg);

}  // namespace pcf

#endif
