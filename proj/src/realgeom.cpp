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

#include "pcf/realgeom.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>

#include "pcf/errors.hpp"

namespace pcf {

namespace {

// Real and imaginary parts of a complex ball as real balls.  The midpoint
// components are exact dyadics, so only the radius carries over.
Ball real_part(const Ball& z) {
    return Ball::from_rat(z.mid_re_rat(), Rat(0), z.prec()).inflated(z.rad_d());
}

Ball imag_part(const Ball& z) {
    return Ball::from_rat(z.mid_im_rat(), Rat(0), z.prec()).inflated(z.rad_d());
}

Int binom(int n, int k) {
    Int r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - t + 1) / t;
    return r;
}

GaussianRational gpow(const GaussianRational& base, int e) {
    GaussianRational r = GaussianRational::integer(1);
    for (int t = 0; t < e; ++t) r = r * base;
    return r;
}

// Exact decimal string; ContractError when the denominator has a prime
// factor other than 2 or 5 (the schema stores finite decimals only).
std::string rat_to_decimal(const Rat& q) {
    Int num = boost::multiprecision::numerator(q);
    Int den = boost::multiprecision::denominator(q);
    Int rest = den;
    int twos = 0, fives = 0;
    while (rest % 2 == 0) {
        rest /= 2;
        ++twos;
    }
    while (rest % 5 == 0) {
        rest /= 5;
        ++fives;
    }
    if (rest != 1)
        throw ContractError("real curve coefficient is not a finite decimal: " + q.str());
    int digits = std::max(twos, fives);
    Int pow10 = 1;
    for (int t = 0; t < digits; ++t) pow10 *= 10;
    Int scaled = num * pow10 / den;  // exact by construction
    bool neg = scaled < 0;
    std::string s = Int(boost::multiprecision::abs(scaled)).str();
    if (digits > 0) {
        while (s.size() <= static_cast<size_t>(digits)) s.insert(s.begin(), '0');
        s.insert(s.size() - digits, ".");
    }
    return (neg ? "-" : "") + s;
}

}  // namespace

void RealLine::validate() const {
    if (a.contains_zero() && b.contains_zero())
        throw ContractError("real line needs (a, b) certified nonzero");
}

RealLine normalize_real_line(const RealLine& raw) {
    raw.validate();
    bool use_a = !raw.a.contains_zero() &&
                 (raw.b.contains_zero() ||
                  std::fabs(raw.a.mid_re_d()) >= std::fabs(raw.b.mid_re_d()));
    const Ball& p = use_a ? raw.a : raw.b;
    bool pivot_is_one = p.is_exact() && p.mid_re_rat() == 1 && p.mid_im_rat() == 0;
    if (pivot_is_one) return raw;

    RealLine out;
    Ball one = Ball::exact_int(1, 0, p.prec());
    out.a = use_a ? one : raw.a / p;
    out.b = use_a ? raw.b / p : one;
    out.r = raw.r / p;
    if (raw.is_exact()) {
        Rat ep = use_a ? *raw.ea : *raw.eb;
        out.ea = *raw.ea / ep;
        out.eb = *raw.eb / ep;
        out.er = *raw.er / ep;
        out.a = Ball::from_rat(*out.ea, Rat(0), p.prec());
        out.b = Ball::from_rat(*out.eb, Rat(0), p.prec());
        out.r = Ball::from_rat(*out.er, Rat(0), p.prec());
    }
    return out;
}

Line2 real_line_to_complex(const RealLine& line) {
    line.validate();
    long prec = std::max({line.a.prec(), line.b.prec(), line.r.prec()});
    Ball half = Ball::from_rat(Rat(1, 2), Rat(0), prec);
    Ball ib = line.b * Ball::exact_int(0, 1, prec);
    Line2 out;
    out.a = (line.a - ib) * half;
    out.b = (line.a + ib) * half;
    out.r = line.r;
    if (line.is_exact()) {
        out.ea = GaussianRational(*line.ea / 2, -*line.eb / 2);
        out.eb = GaussianRational(*line.ea / 2, *line.eb / 2);
        out.er = GaussianRational(*line.er, Rat(0));
    }
    return out;
}

void RealCurve::validate() const {
    size_t slots = static_cast<size_t>((d + 1) * (d + 2) / 2);
    if (d < 1 || coeffs.size() != slots)
        throw ContractError("real curve has wrong coefficient slot count");
    if (std::all_of(coeffs.begin(), coeffs.end(), [](const Rat& q) { return q == 0; }))
        throw ContractError("real curve with all coefficients zero");
}

RealCurve real_curve_from_terms(const std::vector<std::tuple<int, int, Rat>>& terms) {
    int d = 1;
    for (const auto& [i, j, q] : terms)
        if (q != 0) d = std::max(d, i + j);
    RealCurve p;
    p.d = d;
    auto mono = curve_monomials(d);
    std::map<std::pair<int, int>, size_t> slot;
    for (size_t k = 0; k < mono.size(); ++k) slot[mono[k]] = k;
    p.coeffs.assign(mono.size(), Rat(0));
    for (const auto& [i, j, q] : terms) {
        auto it = slot.find({i, j});
        if (it == slot.end()) throw ContractError("real curve term exponent out of range");
        p.coeffs[it->second] += q;
    }
    p.validate();
    return p;
}

PlaneCurve real_curve_to_complex(const RealCurve& p) {
    p.validate();
    auto mono = curve_monomials(p.d);
    std::map<std::pair<int, int>, size_t> slot;
    for (size_t k = 0; k < mono.size(); ++k) slot[mono[k]] = k;
    std::vector<GaussianRational> out(mono.size());

    GaussianRational half(Rat(1, 2), Rat(0));
    GaussianRational mihalf(Rat(0), Rat(-1, 2));  // 1/(2i)
    for (size_t k = 0; k < mono.size(); ++k) {
        if (p.coeffs[k] == 0) continue;
        auto [i, j] = mono[k];
        GaussianRational factor =
            GaussianRational(p.coeffs[k], Rat(0)) * gpow(half, i) * gpow(mihalf, j);
        // x^i y^j = factor' * (u+v)^i (u-v)^j expanded binomially.
        for (int ki = 0; ki <= i; ++ki) {
            for (int kj = 0; kj <= j; ++kj) {
                Int sign = (j - kj) % 2 == 0 ? 1 : -1;
                Rat c = Rat(binom(i, ki) * binom(j, kj) * sign);
                GaussianRational term = factor * GaussianRational(c, Rat(0));
                size_t s = slot.at({ki + kj, (i - ki) + (j - kj)});
                out[s] = out[s] + term;
            }
        }
    }
    return curve_from_exact(p.d, std::move(out));
}

std::vector<std::string> pcf_on_real_curve(const RealCurve& p, const Catalog& cat) {
    PlaneCurve c = real_curve_to_complex(p);
    std::vector<std::string> out;
    for (const auto& param : cat.params) {
        const std::string& cid = cat.conjugate_id(param.id);
        // Cheap exclusion with the stored isolating balls first.
        if (!c.eval(param.ball, cat.at(cid).ball).contains_zero()) continue;
        Sign s = point_on_curve(c, cat.coord(param.id), cat.coord(cid));
        if (s == Sign::Undecided)
            throw ResourceError("pcf_on_real_curve: membership undecided for " + param.id);
        if (s == Sign::Zero) out.push_back(param.id);
    }
    return out;
}

std::vector<RealLineHit> real_line_search(const Catalog& cat, int k) {
    if (k < 3) throw ContractError("real_line_search needs k >= 3");
    size_t n = cat.params.size();
    std::vector<double> xs(n), ys(n);
    for (size_t i = 0; i < n; ++i) {
        xs[i] = cat.params[i].ball.mid_re_d();
        ys[i] = cat.params[i].ball.mid_im_d();
    }
    auto conj_of = [&](size_t i) -> const std::string& {
        return cat.conjugate_id(cat.params[i].id);
    };

    std::set<std::pair<size_t, size_t>> covered;
    std::vector<RealLineHit> hits;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            if (covered.count({i, j})) continue;
            std::vector<size_t> support = {i, j};
            for (size_t t = 0; t < n; ++t) {
                if (t == i || t == j) continue;
                // Certified exclusion in doubles: ball radii and rounding are
                // far below this threshold, so a large cross product already
                // rules the triple out.
                double cross = (xs[j] - xs[i]) * (ys[t] - ys[i]) -
                               (ys[j] - ys[i]) * (xs[t] - xs[i]);
                if (std::fabs(cross) > 1e-6) continue;
                IncidenceVerdict v = collinear3({cat.params[i].id, conj_of(i)},
                                                {cat.params[j].id, conj_of(j)},
                                                {cat.params[t].id, conj_of(t)}, cat);
                if (v == IncidenceVerdict::Kind::CollinearCertified) support.push_back(t);
            }
            if (static_cast<int>(support.size()) < k) continue;
            for (size_t u = 0; u < support.size(); ++u)
                for (size_t v = u + 1; v < support.size(); ++v)
                    covered.insert({std::min(support[u], support[v]),
                                    std::max(support[u], support[v])});

            RealLineHit hit;
            const Ball& pz = cat.params[i].ball;
            const Ball& qz = cat.params[j].ball;
            Ball x1 = real_part(pz), y1 = imag_part(pz);
            Ball x2 = real_part(qz), y2 = imag_part(qz);
            RealLine raw;
            raw.a = y1 - y2;
            raw.b = x2 - x1;
            raw.r = x2 * y1 - x1 * y2;
            AlgebraicCoord ci = cat.coord(cat.params[i].id);
            AlgebraicCoord cj = cat.coord(cat.params[j].id);
            if (ci.is_exact() && cj.is_exact()) {
                raw.ea = ci.exact->im - cj.exact->im;
                raw.eb = cj.exact->re - ci.exact->re;
                raw.er = cj.exact->re * ci.exact->im - ci.exact->re * cj.exact->im;
            }
            hit.line = normalize_real_line(raw);
            for (size_t s : support) hit.support.push_back(cat.params[s].id);
            std::sort(hit.support.begin(), hit.support.end());
            hit.special_diagonal = std::all_of(
                support.begin(), support.end(),
                [&](size_t s) { return conj_of(s) == cat.params[s].id; });
            hits.push_back(std::move(hit));
        }
    }
    std::sort(hits.begin(), hits.end(), [](const RealLineHit& a, const RealLineHit& b) {
        if (a.support.size() != b.support.size()) return a.support.size() > b.support.size();
        return a.support < b.support;
    });
    return hits;
}

RealCurve load_real_curve_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad real curve json: ") + e.what());
    }
    if (!j.is_array()) throw ParseError("real curve json must be a monomial list");
    std::vector<std::tuple<int, int, Rat>> terms;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 3) throw ParseError("bad real curve monomial entry");
        terms.emplace_back(e[0].get<int>(), e[1].get<int>(),
                           rat_from_decimal(e[2].get<std::string>()));
    }
    return real_curve_from_terms(terms);
}

void save_real_curve_json(const RealCurve& p, const std::string& path) {
    p.validate();
    auto mono = curve_monomials(p.d);
    nlohmann::json arr = nlohmann::json::array();
    for (size_t k = 0; k < mono.size(); ++k) {
        if (p.coeffs[k] == 0) continue;
        arr.push_back({mono[k].first, mono[k].second, rat_to_decimal(p.coeffs[k])});
    }
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << arr.dump(1) << "\n";
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace pcf
