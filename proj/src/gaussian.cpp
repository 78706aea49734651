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

#include "pcf/gaussian.hpp"

#include <boost/multiprecision/gmp.hpp>
#include <cctype>

#include "pcf/errors.hpp"

namespace pcf {

GaussianRational GaussianRational::operator/(const GaussianRational& o) const {
    if (o.is_zero()) throw ContractError("gaussian rational division by zero");
    Rat n = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
}

Int GaussianRational::denominator() const {
    Int a = boost::multiprecision::denominator(re);
    Int b = boost::multiprecision::denominator(im);
    return boost::multiprecision::lcm(a, b);
}

std::string GaussianRational::to_string() const {
    std::string s = re.str();
    if (im != 0) {
        s += (im > 0 ? "+" : "-");
        Rat a = boost::multiprecision::abs(im);
        if (a != 1) s += a.str() + "*";
        s += "i";
    }
    return s;
}

Rat rat_from_decimal(const std::string& s) {
    if (s.empty()) throw ParseError("empty decimal string");
    size_t pos = 0;
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') {
        neg = s[pos] == '-';
        ++pos;
    }
    Int mantissa = 0;
    long frac_digits = 0;
    bool seen_digit = false, seen_dot = false;
    for (; pos < s.size(); ++pos) {
        char ch = s[pos];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            mantissa = mantissa * 10 + (ch - '0');
            if (seen_dot) ++frac_digits;
            seen_digit = true;
        } else if (ch == '.' && !seen_dot) {
            seen_dot = true;
        } else if (ch == 'e' || ch == 'E') {
            break;
        } else {
            throw ParseError("malformed decimal: " + s);
        }
    }
    if (!seen_digit) throw ParseError("malformed decimal: " + s);
    long exp10 = 0;
    if (pos < s.size()) {
        std::string tail = s.substr(pos + 1);
        if (tail.empty()) throw ParseError("malformed exponent: " + s);
        size_t used = 0;
        try {
            exp10 = std::stol(tail, &used);
        } catch (const std::exception&) {
            throw ParseError("malformed exponent: " + s);
        }
        if (used != tail.size()) throw ParseError("malformed exponent: " + s);
    }
    exp10 -= frac_digits;
    Rat r(mantissa);
    Int ten(10);
    if (exp10 >= 0) {
        r *= Rat(boost::multiprecision::pow(ten, static_cast<unsigned>(exp10)));
    } else {
        r /= Rat(boost::multiprecision::pow(ten, static_cast<unsigned>(-exp10)));
    }
    return neg ? -r : r;
}

}  // namespace pcf
