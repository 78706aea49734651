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

#include "pcf/heights.hpp"

#include <gmp.h>
#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "pcf/errors.hpp"

namespace pcf {

namespace {

// Natural-log bounds for |z| over the disk; lo is -inf when the disk meets 0.
// Unlike log_abs_interval this never throws, and it stays in mpfr so the
// magnitude may be far outside double range.
std::pair<double, double> log_abs_bounds(const Ball& z) {
    mpfr_t t;
    mpfr_init2(t, 64);
    mpfr_hypot(t, z.mid_re(), z.mid_im(), MPFR_RNDU);
    mpfr_add(t, t, z.rad(), MPFR_RNDU);
    double hi;
    if (mpfr_zero_p(t)) {
        hi = -HUGE_VAL;
    } else {
        mpfr_log(t, t, MPFR_RNDU);
        hi = mpfr_get_d(t, MPFR_RNDU);
    }
    mpfr_hypot(t, z.mid_re(), z.mid_im(), MPFR_RNDD);
    mpfr_sub(t, t, z.rad(), MPFR_RNDD);
    double lo;
    if (mpfr_sgn(t) <= 0) {
        lo = -HUGE_VAL;
    } else {
        mpfr_log(t, t, MPFR_RNDD);
        lo = mpfr_get_d(t, MPFR_RNDD);
    }
    mpfr_clear(t);
    return {lo, hi};
}

// 2^{-k} x as an upper bound, safe for k beyond the double exponent range.
double scale_down(double x, long k) {
    return std::ldexp(x, -static_cast<int>(std::min(k, 1000L)));
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.backend().data(), 32) != 0;
}

Int pollard_brent(const Int& n) {
    if (n % 2 == 0) return 2;
    for (Int c = 1; ; ++c) {
        Int x = 2, y = 2, d = 1;
        Int ys = y, q = 1;
        long r = 1;
        while (d == 1) {
            x = y;
            for (long i = 0; i < r; ++i) y = (y * y + c) % n;
            for (long j = 0; j < r && d == 1; j += 128) {
                ys = y;
                long lim = std::min(128L, r - j);
                for (long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                d = gcd(q, n);
            }
            r *= 2;
        }
        if (d == n) {
            // backtrack one step at a time
            d = 1;
            while (d == 1) {
                ys = (ys * ys + c) % n;
                d = gcd(abs(x - ys), n);
            }
        }
        if (d != n) return d;
    }
}

void factor_into(Int n, std::map<Int, int>& out) {
    for (Int p : {Int(2), Int(3), Int(5), Int(7), Int(11), Int(13)}) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    std::vector<Int> stack{n};
    while (!stack.empty()) {
        Int m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (is_prime(m)) {
            ++out[m];
            continue;
        }
        Int d = pollard_brent(m);
        stack.push_back(d);
        stack.push_back(m / d);
    }
}

}  // namespace

GreenValue escape_rate_arch(const Ball& c, int orbit_shift, double tol, long iter_cap) {
    if (orbit_shift < 0) throw ContractError("orbit shift must be nonnegative");
    if (!(tol > 0) || iter_cap < 1) throw ContractError("bad escape-rate parameters");
    long prec = std::max(c.prec(), 192L);
    Ball cc = c.rounded_to(prec);
    Ball z(prec);  // f^0(0) = 0
    for (int i = 0; i < orbit_shift; ++i) z = z * z + cc;

    const double ln2 = std::log(2.0);
    double cub = cc.abs_ubound_d();
    double log_thresh = std::log(std::max(cub, 4.0));
    // b solves b^2 = b + |c|, so v_k = max(|z_k|, b) has v_{k+1} <= 2 v_k^2
    // unconditionally, giving the non-escape bound below.
    double logb = std::log(std::max((1.0 + std::sqrt(1.0 + 4.0 * cub)) / 2.0, 1.0));

    GreenValue g;
    double best_bound = HUGE_VAL;
    long k = 0;
    for (;;) {
        auto [lo, hi] = log_abs_bounds(z);
        if (lo > log_thresh) {
            // Escaped.  A few more squarings shrink the tail weight 2^{-k};
            // stop before the mpfr exponent gets uncomfortable.
            g.escaped = true;
            g.iterations = k;
            long kk = k;
            while (kk - k < 40 && hi < 1e15) {
                Ball nz = z * z + cc;
                auto [l, h] = log_abs_bounds(nz);
                if (l <= log_thresh) break;  // radius blew up; keep what we have
                z = nz;
                lo = l;
                hi = h;
                ++kk;
            }
            // Sum_{j>=kk} 2^{-(j+1)} |log|1 + c/z_j^2|| <= 2^{-kk} 2|c| / |z_kk|^2
            // since |z| at least doubles per step past the threshold.
            double tail = scale_down(2.0 * cub, kk) * std::exp(-2.0 * std::min(lo, 700.0));
            double llo = scale_down(lo, kk);
            double lhi = scale_down(hi, kk) + tail;
            g.value = std::max(0.5 * (llo + lhi), 0.0);
            g.error = 0.5 * (lhi - llo) * (1 + 1e-12) + tail + 1e-300;
            return g;
        }
        double bound = scale_down(std::max(hi, logb) + ln2, k);
        best_bound = std::min(best_bound, bound);
        g.iterations = k;
        if (best_bound <= tol) break;
        if (k >= iter_cap) break;
        if (hi > 1e15) break;  // radius blowup; the bound has plateaued
        z = z * z + cc;
        ++k;
    }
    g.value = 0;
    g.error = best_bound;
    g.escaped = false;
    return g;
}

GreenValue escape_rate_arch(const Rat& c, int orbit_shift, double tol, long iter_cap) {
    return escape_rate_arch(Ball::from_rat(c, Rat(0), 256), orbit_shift, tol, iter_cap);
}

GreenValue green_mandelbrot(const Ball& c) {
    GreenValue g = escape_rate_arch(c, 0, 0.5e-12);
    g.value *= 2;
    g.error *= 2;
    return g;
}

GreenValue green_mandelbrot(const Rat& c) {
    return green_mandelbrot(Ball::from_rat(c, Rat(0), 256));
}

double local_height_nonarch(const Rat& c, const Int& p) {
    if (!is_prime(p)) throw ContractError("local place must be prime");
    Int den = denominator(c);
    int v = 0;
    while (den % p == 0) {
        ++v;
        den /= p;
    }
    if (v == 0) return 0.0;  // |c|_p <= 1
    return 0.5 * v * std::log(p.convert_to<double>());
}

bool is_pcf_rational(const Rat& c) {
    // A denominator prime has strictly decreasing valuation along the orbit
    // (v(z_{k+1}) = 2 v(z_k) once negative), so the orbit can only repeat for
    // integers.
    if (denominator(c) != 1) return false;
    Int cc = numerator(c);
    Int bound = std::max(Int(abs(cc) + 1), Int(2));
    Int z = 0;
    std::set<Int> seen;
    while (seen.insert(z).second) {
        z = z * z + cc;
        if (abs(z) > bound) return false;  // |z|(|z|-1) >= |c| forces escape
    }
    return true;
}

HeightValue canonical_height(const Rat& c) {
    HeightValue h;
    if (is_pcf_rational(c)) {
        h.place_breakdown.emplace_back("inf", 0.0);
        return h;
    }
    GreenValue g = escape_rate_arch(c);
    h.value = g.value;
    h.error = g.error;
    h.place_breakdown.emplace_back("inf", g.value);
    std::map<Int, int> primes;
    Int den = denominator(c);
    if (den > 1) factor_into(den, primes);
    for (const auto& [p, v] : primes) {
        double local = 0.5 * v * std::log(p.convert_to<double>());
        h.place_breakdown.emplace_back(p.str(), local);
        h.value += local;
    }
    return h;
}

HeightValue h_crit(const std::vector<Rat>& tuple) {
    if (tuple.empty()) throw ContractError("h_crit needs a nonempty tuple");
    HeightValue total;
    double inf_part = 0;
    std::map<Int, double> finite;
    for (const Rat& c : tuple) {
        HeightValue h = canonical_height(c);
        total.value += h.value;
        total.error += h.error;
        for (const auto& [place, v] : h.place_breakdown) {
            if (place == "inf")
                inf_part += v;
            else
                finite[Int(place)] += v;
        }
    }
    total.place_breakdown.emplace_back("inf", inf_part);
    for (const auto& [p, v] : finite) total.place_breakdown.emplace_back(p.str(), v);
    return total;
}

}  // namespace pcf
