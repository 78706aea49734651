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

#include "pcf/rootcert.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "pcf/errors.hpp"

namespace pcf {

namespace {

// Plain complex floating point at a fixed precision; approximation workhorse
// for the Aberth sweeps (no radius bookkeeping, RNDN throughout).
struct Cx {
    mpfr_t re, im;
    explicit Cx(long prec) {
        mpfr_init2(re, prec);
        mpfr_init2(im, prec);
        mpfr_set_zero(re, 1);
        mpfr_set_zero(im, 1);
    }
    Cx(const Cx& o) {
        mpfr_init2(re, mpfr_get_prec(o.re));
        mpfr_init2(im, mpfr_get_prec(o.im));
        mpfr_set(re, o.re, MPFR_RNDN);
        mpfr_set(im, o.im, MPFR_RNDN);
    }
    Cx& operator=(const Cx& o) {
        if (this != &o) {
            mpfr_set_prec(re, mpfr_get_prec(o.re));
            mpfr_set_prec(im, mpfr_get_prec(o.im));
            mpfr_set(re, o.re, MPFR_RNDN);
            mpfr_set(im, o.im, MPFR_RNDN);
        }
        return *this;
    }
    ~Cx() {
        mpfr_clear(re);
        mpfr_clear(im);
    }
};

struct CxOps {
    long prec;
    mpfr_t t1, t2, t3;
    explicit CxOps(long p) : prec(p) {
        mpfr_init2(t1, p);
        mpfr_init2(t2, p);
        mpfr_init2(t3, p);
    }
    ~CxOps() {
        mpfr_clear(t1);
        mpfr_clear(t2);
        mpfr_clear(t3);
    }
    void add(Cx& r, const Cx& a, const Cx& b) {
        mpfr_add(r.re, a.re, b.re, MPFR_RNDN);
        mpfr_add(r.im, a.im, b.im, MPFR_RNDN);
    }
    void sub(Cx& r, const Cx& a, const Cx& b) {
        mpfr_sub(r.re, a.re, b.re, MPFR_RNDN);
        mpfr_sub(r.im, a.im, b.im, MPFR_RNDN);
    }
    // r = a*b; r must not alias a or b.
    void mul(Cx& r, const Cx& a, const Cx& b) {
        mpfr_fmms(r.re, a.re, b.re, a.im, b.im, MPFR_RNDN);
        mpfr_fmma(r.im, a.re, b.im, a.im, b.re, MPFR_RNDN);
    }
    // r = a/b; r must not alias a or b.  Returns false when b ~ 0.
    bool div(Cx& r, const Cx& a, const Cx& b) {
        mpfr_fmma(t1, b.re, b.re, b.im, b.im, MPFR_RNDN);
        if (mpfr_zero_p(t1)) return false;
        mpfr_fmma(t2, a.re, b.re, a.im, b.im, MPFR_RNDN);
        mpfr_fmms(t3, a.im, b.re, a.re, b.im, MPFR_RNDN);
        mpfr_div(r.re, t2, t1, MPFR_RNDN);
        mpfr_div(r.im, t3, t1, MPFR_RNDN);
        return true;
    }
    double abs_d(const Cx& a) {
        mpfr_hypot(t1, a.re, a.im, MPFR_RNDN);
        return mpfr_get_d(t1, MPFR_RNDN);
    }
};

// Fujiwara-style root radius bound from coefficient bit lengths.
double root_radius_bound(const IntPoly& p) {
    int d = p.degree();
    auto bits = [](const Int& x) {
        return static_cast<double>(mpz_sizeinbase(x.backend().data(), 2));
    };
    double ld = bits(p.leading());
    double m = 0.0;
    for (int i = 0; i < d; ++i) {
        if (p[i] == 0) continue;
        double e = (bits(p[i]) - ld) / static_cast<double>(d - i);
        m = std::max(m, e);
    }
    return std::max(1.0, std::ldexp(1.0, static_cast<int>(m) + 2));
}

// Horner at z for p and its derivative, all in RNDN arithmetic.
void eval_pair(const IntPoly& p, const IntPoly& dp, const Cx& z, CxOps& ops,
               Cx& pv, Cx& dpv, Cx& tmp) {
    auto horner = [&](const IntPoly& q, Cx& out) {
        mpfr_set_zero(out.re, 1);
        mpfr_set_zero(out.im, 1);
        for (int i = q.degree(); i >= 0; --i) {
            ops.mul(tmp, out, z);
            mpfr_set(out.re, tmp.re, MPFR_RNDN);
            mpfr_set(out.im, tmp.im, MPFR_RNDN);
            if (q[i] != 0) mpfr_add_z(out.re, out.re, q[i].backend().data(), MPFR_RNDN);
        }
    };
    horner(p, pv);
    horner(dp, dpv);
}

std::optional<Ball> try_certify(const IntPoly& s, const IntPoly& ds, const Cx& z,
                                double radius, long prec) {
    Ball B = Ball::from_mpfr(z.re, z.im, prec).inflated(radius);
    Ball out(prec);
    if (newton_contract(s, ds, B, prec, &out)) return out;
    return std::nullopt;
}

}  // namespace

bool newton_contract(const IntPoly& s, const IntPoly& ds, const Ball& b,
                     long prec, Ball* out) {
    Ball B = b.rounded_to(prec);
    Ball dv = eval_centered(ds, B);
    if (dv.contains_zero()) return false;
    Ball mid = B.midpoint();
    Ball N = mid - eval(s, mid) / dv;
    if (!N.strictly_inside(b)) return false;
    *out = N;
    return true;
}

double RootSet::modulus_ubound() const {
    double m = 1.0;
    for (const auto& r : roots) m = std::max(m, r.ball.abs_ubound_d());
    return m;
}

namespace {

// Isolates all roots of a squarefree primitive s; throws ResourceError at the
// ceiling.
std::vector<Ball> isolate_squarefree(const IntPoly& s, double target_radius,
                                     long prec_ceiling) {
    int d = s.degree();
    std::vector<Ball> out;
    if (d <= 0) return out;
    if (d == 1) {
        Rat r(-s[0], s[1]);
        long prec = kStartPrec;
        Ball b = Ball::from_rat(r, Rat(0), prec);
        while (b.rad_d() > target_radius) {
            prec *= 2;
            if (prec > prec_ceiling)
                throw ResourceError("precision ceiling isolating a linear root");
            b = Ball::from_rat(r, Rat(0), prec);
        }
        out.push_back(b);
        return out;
    }

    IntPoly ds = s.derivative();
    double R = root_radius_bound(s);
    long prec = kStartPrec;
    std::vector<Cx> zs;  // carried across escalations as warm start
    bool seeded = false;

    while (true) {
        CxOps ops(prec);
        if (!seeded) {
            zs.assign(static_cast<size_t>(d), Cx(prec));
            mpfr_t ang, c, sn;
            mpfr_init2(ang, prec);
            mpfr_init2(c, prec);
            mpfr_init2(sn, prec);
            for (int j = 0; j < d; ++j) {
                mpfr_const_pi(ang, MPFR_RNDN);
                mpfr_mul_d(ang, ang, 2.0 * (j + 0.2640831) / d, MPFR_RNDN);
                mpfr_sin_cos(sn, c, ang, MPFR_RNDN);
                mpfr_mul_d(zs[static_cast<size_t>(j)].re, c, 0.5 * R, MPFR_RNDN);
                mpfr_mul_d(zs[static_cast<size_t>(j)].im, sn, 0.5 * R, MPFR_RNDN);
            }
            mpfr_clear(ang);
            mpfr_clear(c);
            mpfr_clear(sn);
            seeded = true;
        } else {
            for (auto& z : zs) {
                Cx nz(prec);
                mpfr_set(nz.re, z.re, MPFR_RNDN);
                mpfr_set(nz.im, z.im, MPFR_RNDN);
                z = nz;
            }
        }

        // Aberth-Ehrlich sweeps.
        Cx pv(prec), dpv(prec), tmp(prec), w(prec), ssum(prec), diff(prec), corr(prec), den(prec);
        // The global phase can shave only a few percent off the corrections per
        // sweep before quadratic convergence kicks in, so both the sweep budget
        // and the stagnation window have to scale with the degree.
        int max_sweeps = 100 + 6 * d;
        double best = 1e300;
        int last_improvement = 0;
        std::vector<double> last_corr(static_cast<size_t>(d), 1e300);
        int thr_bits = static_cast<int>(std::min<long>(prec / 2, 900));
        double settled = std::ldexp(R, -thr_bits);
        for (int sweep = 0; sweep < max_sweeps; ++sweep) {
            double worst = 0.0;
            for (int j = 0; j < d; ++j) {
                // Settled roots stay put; they still repel the others below.
                if (last_corr[static_cast<size_t>(j)] < settled) continue;
                Cx& z = zs[static_cast<size_t>(j)];
                eval_pair(s, ds, z, ops, pv, dpv, tmp);
                if (!ops.div(w, pv, dpv)) continue;  // p'(z)=0: skip, repulsion moves it
                mpfr_set_zero(ssum.re, 1);
                mpfr_set_zero(ssum.im, 1);
                for (int k = 0; k < d; ++k) {
                    if (k == j) continue;
                    ops.sub(diff, z, zs[static_cast<size_t>(k)]);
                    Cx one(prec);
                    mpfr_set_ui(one.re, 1, MPFR_RNDN);
                    if (!ops.div(tmp, one, diff)) continue;
                    ops.add(ssum, ssum, tmp);
                }
                ops.mul(tmp, w, ssum);
                Cx one(prec);
                mpfr_set_ui(one.re, 1, MPFR_RNDN);
                ops.sub(den, one, tmp);
                if (!ops.div(corr, w, den)) {
                    mpfr_set(corr.re, w.re, MPFR_RNDN);
                    mpfr_set(corr.im, w.im, MPFR_RNDN);
                }
                mpfr_sub(z.re, z.re, corr.re, MPFR_RNDN);
                mpfr_sub(z.im, z.im, corr.im, MPFR_RNDN);
                double cd = ops.abs_d(corr);
                last_corr[static_cast<size_t>(j)] = cd;
                worst = std::max(worst, cd);
            }
            if (worst < settled) break;
            if (worst < best * 0.98) {
                best = worst;
                last_improvement = sweep;
            } else if (sweep - last_improvement > 40) {
                break;  // noise floor at this precision
            }
        }

        // Certification pass.
        std::vector<Ball> balls;
        balls.reserve(static_cast<size_t>(d));
        bool all_ok = true;
        for (int j = 0; j < d && all_ok; ++j) {
            double r0 = std::max(last_corr[static_cast<size_t>(j)] * 8.0, 1e-300);
            std::optional<Ball> cert;
            for (double r = r0; r < 4.0 * R && !cert; r *= 16.0)
                cert = try_certify(s, ds, zs[static_cast<size_t>(j)], r, prec);
            if (!cert) {
                all_ok = false;
                break;
            }
            balls.push_back(std::move(*cert));
        }

        if (all_ok) {
            // Shrink to target and enforce pairwise disjointness.
            bool ok = true;
            for (auto& b : balls) {
                long p2 = prec;
                while (b.rad_d() > target_radius) {
                    Ball nb(p2);
                    if (newton_contract(s, ds, b, p2, &nb) && nb.rad_d() < b.rad_d() * 0.5) {
                        b = nb;
                    } else {
                        p2 *= 2;
                        if (p2 > prec_ceiling) {
                            ok = false;
                            break;
                        }
                    }
                }
                if (!ok) break;
            }
            if (ok) {
                for (size_t a = 0; a < balls.size() && ok; ++a)
                    for (size_t b2 = a + 1; b2 < balls.size() && ok; ++b2)
                        if (!balls[a].disjoint_from(balls[b2])) ok = false;
            }
            if (ok) return balls;
        }

        prec *= 2;
        if (prec > prec_ceiling) {
            double achieved = 1e300;
            for (const auto& b : balls) achieved = std::min(achieved, b.rad_d());
            throw ResourceError("root isolation hit precision ceiling " +
                                std::to_string(prec_ceiling) + " bits (achieved radius " +
                                std::to_string(achieved) + ")");
        }
    }
}

}  // namespace

RootSet isolate_roots(const IntPoly& p, double target_radius, long prec_ceiling) {
    if (p.degree() < 1) throw ContractError("isolate_roots requires a nonconstant polynomial");
    if (target_radius <= 0) throw ContractError("target_radius must be positive");
    RootSet rs;
    rs.poly = p;
    for (const auto& [f, mult] : squarefree_decomposition(p)) {
        for (auto& b : isolate_squarefree(f, target_radius, prec_ceiling)) {
            rs.roots.push_back({std::move(b), mult});
            rs.precision = std::max(rs.precision, rs.roots.back().ball.prec());
        }
    }
    // Cross-factor disjointness (factors are coprime, so roots are distinct).
    bool again = true;
    long prec = rs.precision;
    while (again) {
        again = false;
        for (size_t a = 0; a < rs.roots.size(); ++a) {
            for (size_t b = a + 1; b < rs.roots.size(); ++b) {
                if (rs.roots[a].ball.disjoint_from(rs.roots[b].ball)) continue;
                prec *= 2;
                if (prec > prec_ceiling)
                    throw ResourceError("root disjointness hit precision ceiling");
                rs.roots[a].ball = refine(rs.roots[a].ball, rs.poly, rs.roots[a].ball.rad_d() / 16.0,
                                          prec_ceiling);
                rs.roots[b].ball = refine(rs.roots[b].ball, rs.poly, rs.roots[b].ball.rad_d() / 16.0,
                                          prec_ceiling);
                again = true;
            }
        }
    }
    int total = 0;
    for (const auto& r : rs.roots) total += r.multiplicity;
    if (total != p.degree())
        throw IntegrityError("root multiplicities sum to " + std::to_string(total) +
                             ", expected " + std::to_string(p.degree()));
    return rs;
}

Ball refine(const Ball& b, const IntPoly& p, double target_radius, long prec_ceiling) {
    return refine_bits(b, p, std::log2(target_radius), prec_ceiling);
}

Ball refine_bits(const Ball& b, const IntPoly& p, double target_log2_rad,
                 long prec_ceiling) {
    if (b.log2_rad() <= target_log2_rad) return b;
    IntPoly s = squarefree_part(p);
    IntPoly ds = s.derivative();
    long prec = std::max<long>(b.prec(), kStartPrec);
    Ball cur(prec);
    if (!newton_contract(s, ds, b, prec, &cur)) {
        // One escalation attempt before declaring the contract broken.
        bool ok = false;
        for (long p2 = prec * 2; p2 <= prec_ceiling && !ok; p2 *= 2)
            ok = newton_contract(s, ds, b, p2, &cur);
        if (!ok) throw ContractError("ball does not certify a unique simple root");
    }
    while (cur.log2_rad() > target_log2_rad) {
        Ball nb(prec);
        if (newton_contract(s, ds, cur, prec, &nb) && nb.log2_rad() < cur.log2_rad() - 1.0) {
            cur = nb;
        } else {
            prec *= 2;
            if (prec > prec_ceiling)
                throw ResourceError("refine hit precision ceiling (achieved log2 radius " +
                                    std::to_string(cur.log2_rad()) + ")");
        }
    }
    return cur;
}

Containment contains_root(const IntPoly& p, const Ball& b) {
    if (p.is_zero()) return Containment::Yes;
    if (p.degree() == 0) return Containment::No;
    if (b.is_exact()) {
        // The midpoint is a dyadic Gaussian rational; decide exactly.
        auto [vr, vi] = p.eval_gaussian(b.mid_re_rat(), b.mid_im_rat());
        return (vr == 0 && vi == 0) ? Containment::Yes : Containment::No;
    }
    IntPoly s = squarefree_part(p);
    Ball v = eval_centered(s, b);
    if (!v.contains_zero()) return Containment::No;
    IntPoly ds = s.derivative();
    // The certificate may need working precision well above the ball's own,
    // e.g. when p has large coefficients; escalate before giving up.
    long cap = std::max<long>(4 * std::max<long>(b.prec(), kStartPrec), 4096);
    for (long prec = std::max<long>(b.prec(), kStartPrec); prec <= cap; prec *= 2) {
        Ball out(prec);
        if (newton_contract(s, ds, b, prec, &out)) return Containment::Yes;
    }
    return Containment::Undecided;
}

}  // namespace pcf
