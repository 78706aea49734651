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

#ifndef PCF_INTPOLY_HPP
#define PCF_INTPOLY_HPP

#include <boost/multiprecision/gmp.hpp>
#include <initializer_list>
#include <utility>
#include <vector>

#include "pcf/config.hpp"
#include "pcf/errors.hpp"

namespace pcf {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

/// Dense univariate polynomial over Z, coefficient i belongs to c^i.
/// The zero polynomial has an empty coefficient vector; otherwise the
/// leading coefficient is nonzero.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<Int> ascending) : c_(ascending) { normalize(); }
    explicit IntPoly(std::vector<Int> ascending) : c_(std::move(ascending)) { normalize(); }

    static IntPoly zero() { return IntPoly{}; }
    static IntPoly constant(const Int& a);
    static IntPoly monomial(const Int& a, int deg);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Int& leading() const;
    const Int& operator[](int i) const;  // 0 beyond degree
    const std::vector<Int>& coeffs() const { return c_; }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly square() const { return *this * *this; }

    IntPoly derivative() const;

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;
    /// Evaluation at the Gaussian integer re + im*i, exactly.
    std::pair<Int, Int> eval_gaussian(const Int& re, const Int& im) const;
    /// Evaluation at the Gaussian rational re + im*i, exactly.
    std::pair<Rat, Rat> eval_gaussian(const Rat& re, const Rat& im) const;

    /// Composition with -c: returns p(-c).  Roots are negated.
    IntPoly compose_neg() const;

    Int content() const;  // nonnegative; 0 for the zero polynomial
    IntPoly primitive_part() const;
    /// Largest coefficient magnitude in bits (0 for the zero polynomial).
    long coeff_bits() const;

    std::string to_string() const;  // human-readable, for error messages

private:
    void normalize();
    std::vector<Int> c_;
};

/// Quotient a/b when b divides a exactly over Z; ArithmeticError otherwise,
/// carrying the remainder degree in its message.
IntPoly exact_divide(const IntPoly& a, const IntPoly& b);

/// Primitive gcd with positive leading coefficient (1 for coprime inputs).
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Same roots, all simple; positive leading coefficient.  Constants map to
/// themselves (a unit has no roots to preserve).
IntPoly squarefree_part(const IntPoly& a);

/// Yun decomposition: pairwise-coprime squarefree factors with their
/// multiplicities, product over (f, m) of f^m = a / (sign * content adjustments).
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& a);

/// Preperiod/period pair indexing the critical-orbit relation f^{m+n}(0)=f^m(0).
struct OrbitIndex {
    int m = 0;  // preperiod, >= 0
    int n = 1;  // period, >= 1
    OrbitIndex() = default;
    OrbitIndex(int m_, int n_);
    bool operator==(const OrbitIndex&) const = default;
};

/// p_k with p_k(c) = f_c^k(0), deg 2^{k-1}, monic.
IntPoly orbit_polynomial(int k, int degree_budget = kDefaultOrbitBudget);

/// G_{m,n} = p_{m+n} - p_m (p_0 = 0, so G_{0,n} = p_n).
IntPoly critical_relation_polynomial(const OrbitIndex& t,
                                     int degree_budget = kDefaultOrbitBudget);

}  // namespace pcf

#endif
