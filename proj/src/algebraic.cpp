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

#include "pcf/algebraic.hpp"

#include <algorithm>
#include <cmath>

#include "pcf/errors.hpp"

namespace pcf {

AlgebraicCoord AlgebraicCoord::from_exact(GaussianRational v, long prec) {
    AlgebraicCoord c;
    c.ball = v.ball(prec);
    c.log2_conj_modulus = c.ball.log2_abs_ubound();
    c.id = "q:" + v.to_string();
    c.exact = std::move(v);
    return c;
}

Ball AlgebraicCoord::at(long bits) const {
    if (exact) return exact->ball(bits + 64);
    if (!poly) throw ContractError("algebraic coordinate without defining polynomial");
    if (ball.log2_rad() <= static_cast<double>(-bits)) return ball;
    long ceiling = std::max<long>(kRootPrecCeiling, 8 * bits);
    return refine_bits(ball, *poly, static_cast<double>(-bits), ceiling);
}

double AlgebraicCoord::degree_bound() const {
    if (exact) return exact->is_real() ? 1.0 : 2.0;
    return static_cast<double>(poly->degree());
}

Sign certify_zero(const std::function<Ball(long)>& eval_at, double degree_product,
                  double log2_conj_bound, long prec_ceiling) {
    if (prec_ceiling <= 0) prec_ceiling = zero_cert_prec_ceiling();
    double gap_log2 = -(degree_product - 1.0) * std::max(log2_conj_bound, 0.0);
    for (long bits = 128; bits <= prec_ceiling; bits *= 2) {
        Ball v = eval_at(bits);
        if (!v.contains_zero()) return Sign::NonZero;
        if (v.log2_abs_ubound() < gap_log2) return Sign::Zero;
    }
    return Sign::Undecided;
}

void GapDegree::add(const AlgebraicCoord& c) {
    if (c.exact) {
        if (!c.exact->is_real()) gaussian = true;
        return;
    }
    if (seen.insert(c.id).second) product *= static_cast<double>(c.poly->degree());
}

Containment equal_algebraic(const AlgebraicCoord& a, const AlgebraicCoord& b,
                            long prec_ceiling) {
    if (a.is_exact() && b.is_exact())
        return *a.exact == *b.exact ? Containment::Yes : Containment::No;
    if (b.is_exact()) return equal_algebraic(b, a, prec_ceiling);

    if (a.is_exact()) {
        auto [vr, vi] = b.poly->eval_gaussian(a.exact->re, a.exact->im);
        if (vr != 0 || vi != 0) return Containment::No;
        IntPoly dp = b.poly->derivative();
        for (long bits = 64; bits <= prec_ceiling; bits *= 2) {
            Ball va = a.exact->ball(bits);
            Ball vb = b.at(bits);
            if (va.disjoint_from(vb)) return Containment::No;
            Ball out(bits);
            if (newton_contract(*b.poly, dp, va.hull(vb), bits, &out))
                return Containment::Yes;
        }
        return Containment::Undecided;
    }

    if (!a.id.empty() && a.id == b.id) return Containment::Yes;
    IntPoly g = gcd(*a.poly, *b.poly);
    if (g.degree() <= 0) return Containment::No;
    IntPoly dg = g.derivative();
    for (long bits = 64; bits <= prec_ceiling; bits *= 2) {
        Ball va = a.at(bits);
        Ball vb = b.at(bits);
        if (va.disjoint_from(vb)) return Containment::No;
        Containment ca = contains_root(g, va);
        Containment cb = contains_root(g, vb);
        if (ca == Containment::No || cb == Containment::No) return Containment::No;
        Ball out(bits);
        if (ca == Containment::Yes && cb == Containment::Yes &&
            newton_contract(g, dg, va.hull(vb), bits, &out))
            return Containment::Yes;
    }
    return Containment::Undecided;
}

SymExpr SymExpr::constant(const GaussianRational& v) {
    SymExpr e;
    if (!v.is_zero()) e.terms_[{}] = v;
    return e;
}

SymExpr SymExpr::var(const std::string& id) {
    SymExpr e;
    e.terms_[{id}] = GaussianRational::integer(1);
    return e;
}

SymExpr SymExpr::coord(const AlgebraicCoord& c) {
    if (c.exact) return constant(*c.exact);
    if (c.id.empty()) throw ContractError("symbolic coordinate needs an id");
    return var(c.id);
}

SymExpr SymExpr::operator+(const SymExpr& o) const {
    SymExpr e = *this;
    for (const auto& [mono, coef] : o.terms_) {
        auto it = e.terms_.find(mono);
        if (it == e.terms_.end()) {
            e.terms_.emplace(mono, coef);
        } else {
            it->second = it->second + coef;
            if (it->second.is_zero()) e.terms_.erase(it);
        }
    }
    return e;
}

SymExpr SymExpr::operator-() const {
    SymExpr e = *this;
    for (auto& [mono, coef] : e.terms_) coef = -coef;
    return e;
}

SymExpr SymExpr::operator-(const SymExpr& o) const { return *this + (-o); }

SymExpr SymExpr::operator*(const SymExpr& o) const {
    SymExpr e;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            std::vector<std::string> mono = ma;
            mono.insert(mono.end(), mb.begin(), mb.end());
            std::sort(mono.begin(), mono.end());
            GaussianRational c = ca * cb;
            auto it = e.terms_.find(mono);
            if (it == e.terms_.end()) {
                if (!c.is_zero()) e.terms_.emplace(std::move(mono), c);
            } else {
                it->second = it->second + c;
                if (it->second.is_zero()) e.terms_.erase(it);
            }
        }
    }
    return e;
}

double conj_bound_log2(const std::vector<const AlgebraicCoord*>& ops) {
    double big = 0;
    for (const auto* c : ops) big = std::max(big, std::max(c->log2_conj_modulus, 0.0));
    return big;
}

Sign sign_of(const std::vector<const AlgebraicCoord*>& ops, const SymExpr& sym,
             const std::function<Ball(long)>& eval_at, double log2_bound, int expr_deg) {
    if (auto c = sym.as_constant()) return c->is_zero() ? Sign::Zero : Sign::NonZero;
    GapDegree gd;
    Int den = 1;
    for (const auto* c : ops) {
        gd.add(*c);
        if (c->is_exact()) den = lcm(den, c->exact->denominator());
    }
    if (den == 1) return certify_zero(eval_at, gd.value(), log2_bound);
    Int scale = 1;
    for (int i = 0; i < expr_deg; ++i) scale *= den;
    double extra = static_cast<double>(msb(scale)) + 1;
    auto scaled = [&](long bits) { return eval_at(bits).mul_int(scale); };
    return certify_zero(scaled, gd.value(), log2_bound + extra);
}

std::optional<GaussianRational> SymExpr::as_constant() const {
    if (terms_.empty()) return GaussianRational{};
    if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
    return std::nullopt;
}

}  // namespace pcf
