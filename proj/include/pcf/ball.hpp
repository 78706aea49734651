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

#ifndef PCF_BALL_HPP
#define PCF_BALL_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "pcf/config.hpp"
#include "pcf/intpoly.hpp"

namespace pcf {

/// Complex disk: arbitrary-precision midpoint, low-precision upward-rounded
/// radius.  Every operation is outward-rounded, so the result ball contains
/// every exact result of operands drawn from the input balls.
class Ball {
public:
    Ball();  // exact 0 at kStartPrec
    explicit Ball(long prec);
    Ball(const Ball& o);
    Ball(Ball&& o) noexcept;
    Ball& operator=(const Ball& o);
    Ball& operator=(Ball&& o) noexcept;
    ~Ball();

    static Ball exact_int(const Int& re, const Int& im, long prec);
    static Ball exact_int(long re, long im, long prec) {
        return exact_int(Int(re), Int(im), prec);
    }
    static Ball from_rat(const Rat& re, const Rat& im, long prec);
    static Ball from_double(double re, double im, double rad, long prec);
    /// Parses full-precision decimal strings as written by the *_str accessors.
    static Ball from_decimal(const std::string& re, const std::string& im,
                             const std::string& rad, long prec);
    /// Point ball at the given midpoint (rounded to prec, radius covers it).
    static Ball from_mpfr(mpfr_srcptr re, mpfr_srcptr im, long prec);

    long prec() const { return prec_; }
    bool is_exact() const;  // rad == 0

    mpfr_srcptr mid_re() const { return re_; }
    mpfr_srcptr mid_im() const { return im_; }
    mpfr_srcptr rad() const { return rad_; }

    double mid_re_d() const { return mpfr_get_d(re_, MPFR_RNDN); }
    double mid_im_d() const { return mpfr_get_d(im_, MPFR_RNDN); }
    double rad_d() const { return mpfr_get_d(rad_, MPFR_RNDU); }

    /// The midpoint components are dyadic rationals; these are exact.
    Rat mid_re_rat() const;
    Rat mid_im_rat() const;

    /// Decimal with enough digits that re-parsing at the same precision is the
    /// identity.
    std::string mid_re_str() const;
    std::string mid_im_str() const;
    std::string rad_str() const;

    /// Exact decimal representation of the dyadic components (possibly long);
    /// parsing with from_exact_decimal reproduces the ball bit for bit.
    std::string mid_re_exact() const;
    std::string mid_im_exact() const;
    std::string rad_exact() const;
    /// Inverse of the *_exact accessors; also accepts non-dyadic decimals, in
    /// which case midpoint rounding is absorbed into the radius.
    static Ball from_exact_decimal(const std::string& re, const std::string& im,
                                   const std::string& rad);

    Ball operator-() const;
    Ball conj() const;
    Ball operator+(const Ball& o) const;
    Ball operator-(const Ball& o) const;
    Ball operator*(const Ball& o) const;
    Ball operator/(const Ball& o) const;  // ContractError if o contains 0
    Ball inv() const;
    Ball mul_int(const Int& k) const;

    bool contains_zero() const;
    /// Certified |z| bounds over the whole disk.
    double abs_ubound_d() const;
    double abs_lbound_d() const;  // 0 when the disk meets 0
    /// log2 of the magnitude upper bound; -inf for a certified-zero ball.
    double log2_abs_ubound() const;
    double log2_rad() const;  // -inf for exact balls

    std::pair<double, double> real_interval() const;  // certified enclosure
    std::pair<double, double> imag_interval() const;

    bool disjoint_from(const Ball& o) const;  // certified
    bool contains_ball(const Ball& o) const;  // certified: o subset of this
    /// Certified strict containment of this in the interior of outer.
    bool strictly_inside(const Ball& outer) const;
    Ball hull(const Ball& o) const;

    /// Same midpoint, zero radius.
    Ball midpoint() const;
    /// Same midpoint, radius max(rad, r).
    Ball inflated(double r) const;
    /// Midpoint re-rounded at the given precision, radius grown accordingly.
    Ball rounded_to(long prec) const;

    /// Adds k midpoint-ulps to the radius (internal rounding bookkeeping;
    /// public because evaluation routines outside the class need it).
    void add_ulp_error(int k);
    void set_rad(double r);

private:
    void init(long prec);
    mpfr_t re_, im_;
    mpfr_t rad_;
    long prec_;
};

/// Horner evaluation of p over the disk z, outward-rounded.
Ball eval(const IntPoly& p, const Ball& z);

/// Like eval, but Taylor-expands p at the midpoint first.  Plain interval
/// Horner multiplies the radius by the largest intermediate Horner value,
/// which for high-degree polynomials can dwarf the true sensitivity; the
/// centered form pays the radius only against the actual Taylor coefficients.
Ball eval_centered(const IntPoly& p, const Ball& z);

/// Certified interval for log|z| over the disk; ContractError if z meets 0.
std::pair<double, double> log_abs_interval(const Ball& z);

}  // namespace pcf

#endif
