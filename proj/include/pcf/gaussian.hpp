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

#ifndef PCF_GAUSSIAN_HPP
#define PCF_GAUSSIAN_HPP

#include <string>

#include "pcf/ball.hpp"
#include "pcf/intpoly.hpp"

namespace pcf {

/// Exact complex rational re + im*i.
struct GaussianRational {
    Rat re = 0;
    Rat im = 0;

    GaussianRational() = default;
    GaussianRational(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    static GaussianRational integer(long r, long i = 0) {
        return {Rat(r), Rat(i)};
    }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    bool operator==(const GaussianRational&) const = default;

    GaussianRational conj() const { return {re, -im}; }
    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator+(const GaussianRational& o) const {
        return {re + o.re, im + o.im};
    }
    GaussianRational operator-(const GaussianRational& o) const {
        return {re - o.re, im - o.im};
    }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational operator/(const GaussianRational& o) const;  // ContractError on 0

    /// Least common multiple of the two denominators.
    Int denominator() const;

    Ball ball(long prec) const { return Ball::from_rat(re, im, prec); }
    std::string to_string() const;
};

/// Exact rational from a decimal string like "-1.25" or "3e-2".
/// ParseError on malformed input.
Rat rat_from_decimal(const std::string& s);

}  // namespace pcf

#endif
