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

#include "pcf/ball.hpp"

#include <gmp.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>

#include "pcf/gaussian.hpp"

#include "pcf/errors.hpp"

namespace pcf {

namespace {

// Adds k * 2^(exp(x) - prec) to rad (an upper bound on k rounding errors of a
// precision-prec RNDN result x).  No-op for exact results (ternary 0).
void add_rounding(mpfr_t rad, mpfr_srcptr x, long prec, int ternary, int k = 1) {
    if (ternary == 0 || mpfr_zero_p(x)) return;
    mpfr_t e;
    mpfr_init2(e, kRadPrec);
    mpfr_set_ui_2exp(e, static_cast<unsigned long>(k), mpfr_get_exp(x) - prec, MPFR_RNDU);
    mpfr_add(rad, rad, e, MPFR_RNDU);
    mpfr_clear(e);
}

struct Scratch {
    mpfr_t v;
    explicit Scratch(long prec) { mpfr_init2(v, prec); }
    ~Scratch() { mpfr_clear(v); }
};

}  // namespace

void Ball::init(long prec) {
    prec_ = prec;
    mpfr_init2(re_, prec);
    mpfr_init2(im_, prec);
    mpfr_init2(rad_, kRadPrec);
    mpfr_set_zero(re_, 1);
    mpfr_set_zero(im_, 1);
    mpfr_set_zero(rad_, 1);
}

Ball::Ball() { init(kStartPrec); }
Ball::Ball(long prec) { init(prec); }

Ball::Ball(const Ball& o) {
    init(o.prec_);
    mpfr_set(re_, o.re_, MPFR_RNDN);
    mpfr_set(im_, o.im_, MPFR_RNDN);
    mpfr_set(rad_, o.rad_, MPFR_RNDU);
}

Ball::Ball(Ball&& o) noexcept {
    prec_ = o.prec_;
    std::memcpy(&re_, &o.re_, sizeof re_);
    std::memcpy(&im_, &o.im_, sizeof im_);
    std::memcpy(&rad_, &o.rad_, sizeof rad_);
    o.init(kStartPrec);  // leave o valid
}

Ball& Ball::operator=(const Ball& o) {
    if (this == &o) return *this;
    if (prec_ != o.prec_) {
        mpfr_set_prec(re_, o.prec_);
        mpfr_set_prec(im_, o.prec_);
        prec_ = o.prec_;
    }
    mpfr_set(re_, o.re_, MPFR_RNDN);
    mpfr_set(im_, o.im_, MPFR_RNDN);
    mpfr_set(rad_, o.rad_, MPFR_RNDU);
    return *this;
}

Ball& Ball::operator=(Ball&& o) noexcept {
    if (this == &o) return *this;
    mpfr_swap(re_, o.re_);
    mpfr_swap(im_, o.im_);
    mpfr_swap(rad_, o.rad_);
    std::swap(prec_, o.prec_);
    return *this;
}

Ball::~Ball() {
    mpfr_clear(re_);
    mpfr_clear(im_);
    mpfr_clear(rad_);
}

void Ball::add_ulp_error(int k) {
    add_rounding(rad_, re_, prec_, 1, k);
    add_rounding(rad_, im_, prec_, 1, k);
}

void Ball::set_rad(double r) {
    mpfr_set_d(rad_, r, MPFR_RNDU);
}

bool Ball::is_exact() const { return mpfr_zero_p(rad_); }

Ball Ball::exact_int(const Int& re, const Int& im, long prec) {
    Ball b(prec);
    int t1 = mpfr_set_z(b.re_, re.backend().data(), MPFR_RNDN);
    int t2 = mpfr_set_z(b.im_, im.backend().data(), MPFR_RNDN);
    add_rounding(b.rad_, b.re_, prec, t1);
    add_rounding(b.rad_, b.im_, prec, t2);
    return b;
}

Ball Ball::from_rat(const Rat& re, const Rat& im, long prec) {
    Ball b(prec);
    int t1 = mpfr_set_q(b.re_, re.backend().data(), MPFR_RNDN);
    int t2 = mpfr_set_q(b.im_, im.backend().data(), MPFR_RNDN);
    add_rounding(b.rad_, b.re_, prec, t1);
    add_rounding(b.rad_, b.im_, prec, t2);
    return b;
}

Ball Ball::from_double(double re, double im, double rad, long prec) {
    Ball b(prec);
    mpfr_set_d(b.re_, re, MPFR_RNDN);
    mpfr_set_d(b.im_, im, MPFR_RNDN);
    mpfr_set_d(b.rad_, rad, MPFR_RNDU);
    return b;
}

Ball Ball::from_decimal(const std::string& re, const std::string& im,
                        const std::string& rad, long prec) {
    Ball b(prec);
    if (mpfr_set_str(b.re_, re.c_str(), 10, MPFR_RNDN) != 0 ||
        mpfr_set_str(b.im_, im.c_str(), 10, MPFR_RNDN) != 0 ||
        mpfr_set_str(b.rad_, rad.c_str(), 10, MPFR_RNDU) != 0)
        throw ParseError("malformed decimal ball component");
    if (mpfr_sgn(b.rad_) < 0) throw ParseError("negative ball radius");
    return b;
}

Ball Ball::from_mpfr(mpfr_srcptr re, mpfr_srcptr im, long prec) {
    Ball b(prec);
    int t1 = mpfr_set(b.re_, re, MPFR_RNDN);
    int t2 = mpfr_set(b.im_, im, MPFR_RNDN);
    add_rounding(b.rad_, b.re_, prec, t1);
    add_rounding(b.rad_, b.im_, prec, t2);
    return b;
}

namespace {
std::string format_mpfr(mpfr_srcptr x, long prec) {
    if (mpfr_zero_p(x)) return "0";
    size_t digits = static_cast<size_t>(prec * 0.30103) + 3;
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, digits, x, MPFR_RNDN);
    std::string d(s);
    mpfr_free_str(s);
    std::string sign;
    if (!d.empty() && d[0] == '-') {
        sign = "-";
        d.erase(0, 1);
    }
    return sign + "0." + d + "e" + std::to_string(static_cast<long>(e));
}
}  // namespace

std::string Ball::mid_re_str() const { return format_mpfr(re_, prec_); }
std::string Ball::mid_im_str() const { return format_mpfr(im_, prec_); }
std::string Ball::rad_str() const { return format_mpfr(rad_, kRadPrec); }

namespace {
// Exact decimal of the dyadic value x = z * 2^e (finite decimal expansion).
std::string format_exact(mpfr_srcptr x) {
    if (mpfr_zero_p(x)) return "0";
    mpz_t z;
    mpz_init(z);
    mpfr_exp_t e = mpfr_get_z_2exp(z, x);
    unsigned long tz = mpz_scan1(z, 0);
    if (tz > 0) {
        mpz_fdiv_q_2exp(z, z, tz);
        e += static_cast<mpfr_exp_t>(tz);
    }
    bool neg = mpz_sgn(z) < 0;
    if (neg) mpz_neg(z, z);
    std::string out;
    if (e >= 0) {
        mpz_mul_2exp(z, z, static_cast<unsigned long>(e));
        char* s = mpz_get_str(nullptr, 10, z);
        out = s;
        std::free(s);
    } else {
        unsigned long f = static_cast<unsigned long>(-e);
        mpz_t five;
        mpz_init(five);
        mpz_ui_pow_ui(five, 5, f);
        mpz_mul(z, z, five);
        mpz_clear(five);
        char* s = mpz_get_str(nullptr, 10, z);
        std::string d = s;
        std::free(s);
        if (d.size() <= f) d.insert(0, f - d.size() + 1, '0');
        d.insert(d.size() - f, ".");
        out = d;
    }
    mpz_clear(z);
    return neg ? "-" + out : out;
}

long rat_num_bits(const Rat& q) {
    return static_cast<long>(
        mpz_sizeinbase(boost::multiprecision::numerator(q).backend().data(), 2));
}
}  // namespace

namespace {
Rat mpfr_to_rat(mpfr_srcptr x) {
    if (mpfr_zero_p(x)) return Rat(0);
    mpz_t z;
    mpz_init(z);
    mpfr_exp_t e = mpfr_get_z_2exp(z, x);
    Int m;
    mpz_set(m.backend().data(), z);
    mpz_clear(z);
    Rat q{m};
    if (e >= 0) {
        q *= Rat(boost::multiprecision::pow(Int(2), static_cast<unsigned>(e)));
    } else {
        q /= Rat(boost::multiprecision::pow(Int(2), static_cast<unsigned>(-e)));
    }
    return q;
}
}  // namespace

Rat Ball::mid_re_rat() const { return mpfr_to_rat(re_); }
Rat Ball::mid_im_rat() const { return mpfr_to_rat(im_); }

std::string Ball::mid_re_exact() const { return format_exact(re_); }
std::string Ball::mid_im_exact() const { return format_exact(im_); }
std::string Ball::rad_exact() const { return format_exact(rad_); }

Ball Ball::from_exact_decimal(const std::string& re, const std::string& im,
                              const std::string& rad) {
    Rat qre = rat_from_decimal(re);
    Rat qim = rat_from_decimal(im);
    Rat qrad = rat_from_decimal(rad);
    if (qrad < 0) throw ParseError("negative ball radius");
    long prec = std::max({static_cast<long>(kStartPrec), rat_num_bits(qre), rat_num_bits(qim)});
    Ball b(prec);
    int t1 = mpfr_set_q(b.re_, qre.backend().data(), MPFR_RNDN);
    int t2 = mpfr_set_q(b.im_, qim.backend().data(), MPFR_RNDN);
    mpfr_set_q(b.rad_, qrad.backend().data(), MPFR_RNDU);
    add_rounding(b.rad_, b.re_, prec, t1);
    add_rounding(b.rad_, b.im_, prec, t2);
    return b;
}

Ball Ball::operator-() const {
    Ball b = *this;
    mpfr_neg(b.re_, b.re_, MPFR_RNDN);  // exact
    mpfr_neg(b.im_, b.im_, MPFR_RNDN);
    return b;
}

Ball Ball::conj() const {
    Ball b = *this;
    mpfr_neg(b.im_, b.im_, MPFR_RNDN);  // exact
    return b;
}

Ball Ball::operator+(const Ball& o) const {
    Ball r(std::max(prec_, o.prec_));
    int t1 = mpfr_add(r.re_, re_, o.re_, MPFR_RNDN);
    int t2 = mpfr_add(r.im_, im_, o.im_, MPFR_RNDN);
    mpfr_add(r.rad_, rad_, o.rad_, MPFR_RNDU);
    add_rounding(r.rad_, r.re_, r.prec_, t1);
    add_rounding(r.rad_, r.im_, r.prec_, t2);
    return r;
}

Ball Ball::operator-(const Ball& o) const {
    Ball r(std::max(prec_, o.prec_));
    int t1 = mpfr_sub(r.re_, re_, o.re_, MPFR_RNDN);
    int t2 = mpfr_sub(r.im_, im_, o.im_, MPFR_RNDN);
    mpfr_add(r.rad_, rad_, o.rad_, MPFR_RNDU);
    add_rounding(r.rad_, r.re_, r.prec_, t1);
    add_rounding(r.rad_, r.im_, r.prec_, t2);
    return r;
}

Ball Ball::operator*(const Ball& o) const {
    Ball r(std::max(prec_, o.prec_));
    int t1 = mpfr_fmms(r.re_, re_, o.re_, im_, o.im_, MPFR_RNDN);
    int t2 = mpfr_fmma(r.im_, re_, o.im_, im_, o.re_, MPFR_RNDN);
    // |a||b.rad| + |b||a.rad| + a.rad*b.rad
    mpfr_t ma, mb, t;
    mpfr_init2(ma, kRadPrec);
    mpfr_init2(mb, kRadPrec);
    mpfr_init2(t, kRadPrec);
    mpfr_hypot(ma, re_, im_, MPFR_RNDU);
    mpfr_hypot(mb, o.re_, o.im_, MPFR_RNDU);
    mpfr_mul(t, ma, o.rad_, MPFR_RNDU);
    mpfr_add(r.rad_, r.rad_, t, MPFR_RNDU);
    mpfr_mul(t, mb, rad_, MPFR_RNDU);
    mpfr_add(r.rad_, r.rad_, t, MPFR_RNDU);
    mpfr_mul(t, rad_, o.rad_, MPFR_RNDU);
    mpfr_add(r.rad_, r.rad_, t, MPFR_RNDU);
    add_rounding(r.rad_, r.re_, r.prec_, t1);
    add_rounding(r.rad_, r.im_, r.prec_, t2);
    mpfr_clear(ma);
    mpfr_clear(mb);
    mpfr_clear(t);
    return r;
}

Ball Ball::mul_int(const Int& k) const {
    Ball r(prec_);
    mpfr_t kk;
    mpfr_init2(kk, std::max<long>(prec_, static_cast<long>(mpz_sizeinbase(k.backend().data(), 2))));
    mpfr_set_z(kk, k.backend().data(), MPFR_RNDN);  // exact at that precision
    int t1 = mpfr_mul(r.re_, re_, kk, MPFR_RNDN);
    int t2 = mpfr_mul(r.im_, im_, kk, MPFR_RNDN);
    mpfr_t ak;
    mpfr_init2(ak, kRadPrec);
    mpfr_abs(ak, kk, MPFR_RNDU);
    mpfr_mul(r.rad_, rad_, ak, MPFR_RNDU);
    add_rounding(r.rad_, r.re_, prec_, t1);
    add_rounding(r.rad_, r.im_, prec_, t2);
    mpfr_clear(kk);
    mpfr_clear(ak);
    return r;
}

Ball Ball::inv() const {
    // Lower bound on |mid| and on |mid| - rad.
    mpfr_t mlo, gap;
    mpfr_init2(mlo, kRadPrec);
    mpfr_init2(gap, kRadPrec);
    mpfr_hypot(mlo, re_, im_, MPFR_RNDD);
    mpfr_sub(gap, mlo, rad_, MPFR_RNDD);
    if (mpfr_sgn(gap) <= 0) {
        mpfr_clear(mlo);
        mpfr_clear(gap);
        throw ContractError("inversion of a ball containing zero");
    }
    Ball r(prec_);
    {
        Scratch d(prec_);
        mpfr_fmma(d.v, re_, re_, im_, im_, MPFR_RNDN);
        mpfr_div(r.re_, re_, d.v, MPFR_RNDN);
        mpfr_div(r.im_, im_, d.v, MPFR_RNDN);
        mpfr_neg(r.im_, r.im_, MPFR_RNDN);
    }
    // Propagated radius: rad / (|mid| * (|mid| - rad)), plus midpoint rounding.
    mpfr_t den;
    mpfr_init2(den, kRadPrec);
    mpfr_mul(den, mlo, gap, MPFR_RNDD);
    mpfr_div(r.rad_, rad_, den, MPFR_RNDU);
    add_rounding(r.rad_, r.re_, prec_, 1, 4);
    add_rounding(r.rad_, r.im_, prec_, 1, 4);
    mpfr_clear(mlo);
    mpfr_clear(gap);
    mpfr_clear(den);
    return r;
}

Ball Ball::operator/(const Ball& o) const { return *this * o.inv(); }

bool Ball::contains_zero() const {
    mpfr_t mlo;
    mpfr_init2(mlo, kRadPrec);
    mpfr_hypot(mlo, re_, im_, MPFR_RNDD);
    bool excl = mpfr_cmp(mlo, rad_) > 0;
    mpfr_clear(mlo);
    return !excl;
}

double Ball::abs_ubound_d() const {
    mpfr_t m;
    mpfr_init2(m, kRadPrec);
    mpfr_hypot(m, re_, im_, MPFR_RNDU);
    mpfr_add(m, m, rad_, MPFR_RNDU);
    double v = mpfr_get_d(m, MPFR_RNDU);
    mpfr_clear(m);
    return v;
}

double Ball::abs_lbound_d() const {
    mpfr_t m;
    mpfr_init2(m, kRadPrec);
    mpfr_hypot(m, re_, im_, MPFR_RNDD);
    mpfr_sub(m, m, rad_, MPFR_RNDD);
    double v = mpfr_get_d(m, MPFR_RNDD);
    mpfr_clear(m);
    return v < 0 ? 0.0 : v;
}

double Ball::log2_abs_ubound() const {
    mpfr_t m;
    mpfr_init2(m, kRadPrec);
    mpfr_hypot(m, re_, im_, MPFR_RNDU);
    mpfr_add(m, m, rad_, MPFR_RNDU);
    double v;
    if (mpfr_zero_p(m)) {
        v = -std::numeric_limits<double>::infinity();
    } else {
        mpfr_log2(m, m, MPFR_RNDU);
        v = mpfr_get_d(m, MPFR_RNDU);
    }
    mpfr_clear(m);
    return v;
}

double Ball::log2_rad() const {
    if (mpfr_zero_p(rad_)) return -std::numeric_limits<double>::infinity();
    mpfr_t m;
    mpfr_init2(m, kRadPrec);
    mpfr_log2(m, rad_, MPFR_RNDU);
    double v = mpfr_get_d(m, MPFR_RNDU);
    mpfr_clear(m);
    return v;
}

std::pair<double, double> Ball::real_interval() const {
    mpfr_t t;
    mpfr_init2(t, kRadPrec);
    mpfr_sub(t, re_, rad_, MPFR_RNDD);
    double lo = mpfr_get_d(t, MPFR_RNDD);
    mpfr_add(t, re_, rad_, MPFR_RNDU);
    double hi = mpfr_get_d(t, MPFR_RNDU);
    mpfr_clear(t);
    return {lo, hi};
}

std::pair<double, double> Ball::imag_interval() const {
    mpfr_t t;
    mpfr_init2(t, kRadPrec);
    mpfr_sub(t, im_, rad_, MPFR_RNDD);
    double lo = mpfr_get_d(t, MPFR_RNDD);
    mpfr_add(t, im_, rad_, MPFR_RNDU);
    double hi = mpfr_get_d(t, MPFR_RNDU);
    mpfr_clear(t);
    return {lo, hi};
}

bool Ball::disjoint_from(const Ball& o) const {
    return !(*this - o).contains_zero();
}

bool Ball::contains_ball(const Ball& o) const {
    Ball d = midpoint() - o.midpoint();
    mpfr_t lhs;
    mpfr_init2(lhs, kRadPrec);
    mpfr_hypot(lhs, d.re_, d.im_, MPFR_RNDU);
    mpfr_add(lhs, lhs, d.rad_, MPFR_RNDU);  // midpoint rounding slack
    mpfr_add(lhs, lhs, o.rad_, MPFR_RNDU);
    bool ok = mpfr_cmp(lhs, rad_) <= 0;
    mpfr_clear(lhs);
    return ok;
}

bool Ball::strictly_inside(const Ball& outer) const {
    Ball d = midpoint() - outer.midpoint();
    mpfr_t lhs;
    mpfr_init2(lhs, kRadPrec);
    mpfr_hypot(lhs, d.re_, d.im_, MPFR_RNDU);
    mpfr_add(lhs, lhs, d.rad_, MPFR_RNDU);
    mpfr_add(lhs, lhs, rad_, MPFR_RNDU);
    bool ok = mpfr_cmp(lhs, outer.rad_) < 0;
    mpfr_clear(lhs);
    return ok;
}

Ball Ball::hull(const Ball& o) const {
    long prec = std::max(prec_, o.prec_);
    Ball r(prec);
    int t1 = mpfr_add(r.re_, re_, o.re_, MPFR_RNDN);
    t1 |= mpfr_div_2ui(r.re_, r.re_, 1, MPFR_RNDN);
    int t2 = mpfr_add(r.im_, im_, o.im_, MPFR_RNDN);
    t2 |= mpfr_div_2ui(r.im_, r.im_, 1, MPFR_RNDN);
    add_rounding(r.rad_, r.re_, prec, t1, 2);
    add_rounding(r.rad_, r.im_, prec, t2, 2);
    // Radius covering both disks from the midpoint.
    auto cover = [&](const Ball& b) {
        Ball d = r.midpoint() - b.midpoint();
        mpfr_t t;
        mpfr_init2(t, kRadPrec);
        mpfr_hypot(t, d.re_, d.im_, MPFR_RNDU);
        mpfr_add(t, t, d.rad_, MPFR_RNDU);
        mpfr_add(t, t, b.rad_, MPFR_RNDU);
        if (mpfr_cmp(t, r.rad_) > 0) mpfr_set(r.rad_, t, MPFR_RNDU);
        mpfr_clear(t);
    };
    mpfr_t keep;
    mpfr_init2(keep, kRadPrec);
    mpfr_set(keep, r.rad_, MPFR_RNDU);
    cover(*this);
    cover(o);
    mpfr_add(r.rad_, r.rad_, keep, MPFR_RNDU);
    mpfr_clear(keep);
    return r;
}

Ball Ball::midpoint() const {
    Ball b = *this;
    mpfr_set_zero(b.rad_, 1);
    return b;
}

Ball Ball::inflated(double r) const {
    Ball b = *this;
    mpfr_t t;
    mpfr_init2(t, kRadPrec);
    mpfr_set_d(t, r, MPFR_RNDU);
    if (mpfr_cmp(t, b.rad_) > 0) mpfr_set(b.rad_, t, MPFR_RNDU);
    mpfr_clear(t);
    return b;
}

Ball Ball::rounded_to(long prec) const {
    Ball b(prec);
    int t1 = mpfr_set(b.re_, re_, MPFR_RNDN);
    int t2 = mpfr_set(b.im_, im_, MPFR_RNDN);
    mpfr_set(b.rad_, rad_, MPFR_RNDU);
    add_rounding(b.rad_, b.re_, prec, t1);
    add_rounding(b.rad_, b.im_, prec, t2);
    return b;
}

Ball eval(const IntPoly& p, const Ball& z) {
    long prec = z.prec();
    if (p.is_zero()) return Ball(prec);
    Ball v = Ball::exact_int(p.leading(), Int(0), prec);
    for (int i = p.degree() - 1; i >= 0; --i) {
        v = v * z;
        if (p[i] != 0) v = v + Ball::exact_int(p[i], Int(0), prec);
    }
    return v;
}

Ball eval_centered(const IntPoly& p, const Ball& z) {
    if (z.is_exact() || p.degree() < 8) return eval(p, z);
    long prec = z.prec();
    Ball m = z.midpoint();
    Ball d = z - m;  // same dyadic midpoints, so this is the 0-centered disk
    int n = p.degree();

    std::vector<Ball> cur;
    cur.reserve(n + 1);
    for (int i = 0; i <= n; ++i) cur.push_back(Ball::exact_int(p[i], Int(0), prec));

    // Repeated synthetic division by (x - m) peels off Taylor coefficients.
    Ball acc(prec);
    Ball dpow = Ball::exact_int(1, 0, prec);
    int K = std::min(n - 1, 12);
    for (int i = 0; i <= K; ++i) {
        Ball r = cur.back();
        for (int j = static_cast<int>(cur.size()) - 2; j >= 0; --j) {
            r = r * m + cur[j];
            cur[j] = r;
        }
        acc = acc + cur[0] * dpow;
        dpow = dpow * d;
        cur.erase(cur.begin());
    }
    // Remaining quotient contributes through d^(K+1); the crude Horner bound
    // here is harmless because the power crushes it.
    Ball q = cur.back();
    for (int j = static_cast<int>(cur.size()) - 2; j >= 0; --j) q = q * z + cur[j];
    return acc + q * dpow;
}

std::pair<double, double> log_abs_interval(const Ball& z) {
    // Stays in mpfr throughout: |z| can be far outside double range while
    // log|z| still fits comfortably.
    mpfr_t t;
    mpfr_init2(t, 64);
    mpfr_hypot(t, z.mid_re(), z.mid_im(), MPFR_RNDD);
    mpfr_sub(t, t, z.rad(), MPFR_RNDD);
    if (mpfr_sgn(t) <= 0) {
        mpfr_clear(t);
        throw ContractError("log of a ball meeting zero");
    }
    mpfr_log(t, t, MPFR_RNDD);
    double lo = mpfr_get_d(t, MPFR_RNDD);
    mpfr_hypot(t, z.mid_re(), z.mid_im(), MPFR_RNDU);
    mpfr_add(t, t, z.rad(), MPFR_RNDU);
    mpfr_log(t, t, MPFR_RNDU);
    double hi = mpfr_get_d(t, MPFR_RNDU);
    mpfr_clear(t);
    return {lo, hi};
}

}  // namespace pcf
