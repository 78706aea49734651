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

#include "pcf/incidence.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "pcf/errors.hpp"
#include "pcf/heights.hpp"

namespace pcf {

namespace {

double mid_hypot(const Ball& z) { return std::hypot(z.mid_re_d(), z.mid_im_d()); }

SpecialPoint make_point(const std::string& a, const std::string& b) { return {a, b}; }

bool point_less(const SpecialPoint& a, const SpecialPoint& b) {
    return std::tie(a.first, a.second) < std::tie(b.first, b.second);
}

std::string support_key(const std::vector<SpecialPoint>& support) {
    std::string key;
    for (const auto& s : support) {
        key += s.first;
        key += ':';
        key += s.second;
        key += ';';
    }
    return key;
}

std::string quantized_line_key(const Line2& l) {
    const double g = 1e-9;
    std::ostringstream ss;
    for (const Ball* c : {&l.a, &l.b, &l.r})
        ss << static_cast<long long>(std::floor(c->mid_re_d() / g)) << ','
           << static_cast<long long>(std::floor(c->mid_im_d() / g)) << ';';
    return ss.str();
}

// Certified-equality of two lines by cross products of their coefficients,
// using provenance coordinates when the coefficients are not exact.
bool lines_equal_certified(const Line2& u, const Line2& v, const Catalog& cat) {
    if (u.is_exact() && v.is_exact()) {
        return (*u.ea * *v.eb - *v.ea * *u.eb).is_zero() &&
               (*u.ea * *v.er - *v.ea * *u.er).is_zero() &&
               (*u.eb * *v.er - *v.eb * *u.er).is_zero();
    }
    if (!u.provenance || !v.provenance) return false;
    auto coeffs = [&cat](const Line2& l) {
        std::array<AlgebraicCoord, 4> c = {cat.coord(l.provenance->first.first),
                                           cat.coord(l.provenance->first.second),
                                           cat.coord(l.provenance->second.first),
                                           cat.coord(l.provenance->second.second)};
        return c;
    };
    auto cu = coeffs(u), cv = coeffs(v);
    std::vector<const AlgebraicCoord*> ops;
    for (const auto& c : cu) ops.push_back(&c);
    for (const auto& c : cv) ops.push_back(&c);
    double big = conj_bound_log2(ops);
    // line coefficients are degree <= 2 in the coordinates
    double log2b = 4 * (big + 1) + 4;

    auto line_sym = [](const std::array<AlgebraicCoord, 4>& c) {
        SymExpr x1 = SymExpr::coord(c[0]), y1 = SymExpr::coord(c[1]);
        SymExpr x2 = SymExpr::coord(c[2]), y2 = SymExpr::coord(c[3]);
        return std::array<SymExpr, 3>{y2 - y1, x1 - x2, x1 * y2 - x2 * y1};
    };
    auto line_ball = [](const std::array<AlgebraicCoord, 4>& c, long bits) {
        Ball x1 = c[0].at(bits), y1 = c[1].at(bits);
        Ball x2 = c[2].at(bits), y2 = c[3].at(bits);
        return std::array<Ball, 3>{y2 - y1, x1 - x2, x1 * y2 - x2 * y1};
    };
    auto su = line_sym(cu), sv = line_sym(cv);
    for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
        SymExpr cross = su[i] * sv[j] - sv[i] * su[j];
        auto eval = [&, i = i, j = j](long bits) {
            auto bu = line_ball(cu, bits), bv = line_ball(cv, bits);
            return bu[i] * bv[j] - bv[i] * bu[j];
        };
        if (sign_of(ops, cross, eval, log2b, 4) != Sign::Zero) return false;
    }
    return true;
}

}  // namespace

Line2 normalize_line(const Line2& raw) {
    Line2 l = raw;
    if (l.is_exact()) {
        auto norm = [](const GaussianRational& g) { return g.re * g.re + g.im * g.im; };
        const GaussianRational* pivot = nullptr;
        if (!l.ea->is_zero() && norm(*l.ea) >= norm(*l.eb))
            pivot = &*l.ea;
        else if (!l.eb->is_zero())
            pivot = &*l.eb;
        else if (!l.ea->is_zero())
            pivot = &*l.ea;
        else
            throw ContractError("line with both leading coefficients zero");
        GaussianRational p = *pivot;
        l.ea = *l.ea / p;
        l.eb = *l.eb / p;
        l.er = *l.er / p;
        long prec = std::max(l.a.prec(), kStartPrec);
        l.a = l.ea->ball(prec);
        l.b = l.eb->ball(prec);
        l.r = l.er->ball(prec);
        return l;
    }
    bool use_a = mid_hypot(l.a) >= mid_hypot(l.b);
    if (use_a && l.a.contains_zero()) use_a = false;
    if (!use_a && l.b.contains_zero()) {
        use_a = true;
        if (l.a.contains_zero()) throw ContractError("line normalization pivot may vanish");
    }
    Ball p = use_a ? l.a : l.b;
    l.a = l.a / p;
    l.b = l.b / p;
    l.r = l.r / p;
    // pin the pivot slot to an exact 1 so normalizing again is the identity
    (use_a ? l.a : l.b) = Ball::exact_int(1, 0, p.prec());
    return l;
}

Line2 line_through(const SpecialPoint& p, const SpecialPoint& q, const Catalog& cat) {
    AlgebraicCoord x1 = cat.coord(p.first), y1 = cat.coord(p.second);
    AlgebraicCoord x2 = cat.coord(q.first), y2 = cat.coord(q.second);
    Line2 l;
    l.provenance = std::make_pair(p, q);
    if (x1.is_exact() && y1.is_exact() && x2.is_exact() && y2.is_exact()) {
        l.ea = *y2.exact - *y1.exact;
        l.eb = *x1.exact - *x2.exact;
        l.er = *x1.exact * *y2.exact - *x2.exact * *y1.exact;
        if (l.ea->is_zero() && l.eb->is_zero())
            throw DegeneracyError("line through a repeated special point");
        l.a = l.ea->ball(kStartPrec);
        l.b = l.eb->ball(kStartPrec);
        l.r = l.er->ball(kStartPrec);
        return normalize_line(l);
    }
    for (long bits = 128; bits <= kRootPrecCeiling; bits *= 2) {
        Ball bx1 = x1.at(bits), by1 = y1.at(bits);
        Ball bx2 = x2.at(bits), by2 = y2.at(bits);
        l.a = by2 - by1;
        l.b = bx1 - bx2;
        l.r = bx1 * by2 - bx2 * by1;
        if (!l.a.contains_zero() || !l.b.contains_zero()) return normalize_line(l);
    }
    throw DegeneracyError("cannot separate the two special points");
}

IncidenceVerdict collinear3(const SpecialPoint& p, const SpecialPoint& q,
                            const SpecialPoint& s, const Catalog& cat) {
    std::array<AlgebraicCoord, 6> c = {cat.coord(p.first),  cat.coord(p.second),
                                       cat.coord(q.first),  cat.coord(q.second),
                                       cat.coord(s.first),  cat.coord(s.second)};
    std::vector<const AlgebraicCoord*> ops;
    for (const auto& cc : c) ops.push_back(&cc);

    SymExpr x1 = SymExpr::coord(c[0]), y1 = SymExpr::coord(c[1]);
    SymExpr x2 = SymExpr::coord(c[2]), y2 = SymExpr::coord(c[3]);
    SymExpr x3 = SymExpr::coord(c[4]), y3 = SymExpr::coord(c[5]);
    SymExpr det = (x2 - x1) * (y3 - y1) - (x3 - x1) * (y2 - y1);

    auto eval = [&c](long bits) {
        Ball bx1 = c[0].at(bits), by1 = c[1].at(bits);
        Ball bx2 = c[2].at(bits), by2 = c[3].at(bits);
        Ball bx3 = c[4].at(bits), by3 = c[5].at(bits);
        return (bx2 - bx1) * (by3 - by1) - (bx3 - bx1) * (by2 - by1);
    };
    double big = conj_bound_log2(ops);
    Sign sg = sign_of(ops, det, eval, 2 * (big + 1) + 1, 2);
    IncidenceVerdict v;
    switch (sg) {
        case Sign::Zero: v.kind = IncidenceVerdict::Kind::CollinearCertified; break;
        case Sign::NonZero: v.kind = IncidenceVerdict::Kind::NotCollinear; break;
        case Sign::Undecided:
            v.kind = IncidenceVerdict::Kind::Undecided;
            v.precision = zero_cert_prec_ceiling();
            break;
    }
    return v;
}

std::string to_string(LineClass c) {
    switch (c) {
        case LineClass::SpecialVertical: return "special-vertical";
        case LineClass::SpecialHorizontal: return "special-horizontal";
        case LineClass::SpecialDiagonal: return "special-diagonal";
        case LineClass::NonSpecial: return "non-special";
        case LineClass::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

// Vertical/horizontal lines are special exactly when the intercept is PCF.
LineClass intercept_class(const AlgebraicCoord& ic, const Catalog& cat, bool vertical) {
    LineClass special = vertical ? LineClass::SpecialVertical : LineClass::SpecialHorizontal;
    bool undecided = false;
    for (const auto& p : cat.params) {
        Containment e = equal_algebraic(ic, cat.coord(p.id));
        if (e == Containment::Yes) return special;
        if (e == Containment::Undecided) undecided = true;
    }
    if (undecided) return LineClass::Unknown;
    if (ic.is_exact() && ic.exact->is_real())
        return is_pcf_rational(ic.exact->re) ? special : LineClass::NonSpecial;
    GreenValue g = escape_rate_arch(ic.at(160));
    if (g.escaped) return LineClass::NonSpecial;
    return LineClass::Unknown;  // off catalog, possibly PCF beyond the bound
}

Sign exact_sign(const GaussianRational& v) { return v.is_zero() ? Sign::Zero : Sign::NonZero; }

}  // namespace

LineClass classify_line(const Line2& line, const Catalog& cat) {
    Sign sa, sb, sr, sab;
    std::optional<AlgebraicCoord> vert, horiz;
    if (line.is_exact()) {
        sa = exact_sign(*line.ea);
        sb = exact_sign(*line.eb);
        sr = exact_sign(*line.er);
        sab = exact_sign(*line.ea + *line.eb);
        if (sb == Sign::Zero && sa == Sign::NonZero)
            vert = AlgebraicCoord::from_exact(*line.er / *line.ea);
        if (sa == Sign::Zero && sb == Sign::NonZero)
            horiz = AlgebraicCoord::from_exact(*line.er / *line.eb);
    } else if (line.provenance) {
        std::array<AlgebraicCoord, 4> c = {cat.coord(line.provenance->first.first),
                                           cat.coord(line.provenance->first.second),
                                           cat.coord(line.provenance->second.first),
                                           cat.coord(line.provenance->second.second)};
        std::vector<const AlgebraicCoord*> ops{&c[0], &c[1], &c[2], &c[3]};
        double big = conj_bound_log2(ops);
        SymExpr x1 = SymExpr::coord(c[0]), y1 = SymExpr::coord(c[1]);
        SymExpr x2 = SymExpr::coord(c[2]), y2 = SymExpr::coord(c[3]);
        auto balls = [&c](long bits) {
            return std::array<Ball, 4>{c[0].at(bits), c[1].at(bits), c[2].at(bits),
                                       c[3].at(bits)};
        };
        sa = sign_of(ops, y2 - y1,
                     [&](long bits) { auto b = balls(bits); return b[3] - b[1]; },
                     big + 2, 1);
        sb = sign_of(ops, x1 - x2,
                     [&](long bits) { auto b = balls(bits); return b[0] - b[2]; },
                     big + 2, 1);
        sr = sign_of(ops, x1 * y2 - x2 * y1,
                     [&](long bits) { auto b = balls(bits); return b[0] * b[3] - b[2] * b[1]; },
                     2 * (big + 1) + 1, 2);
        sab = sign_of(ops, (y2 - y1) + (x1 - x2),
                      [&](long bits) { auto b = balls(bits); return b[3] - b[1] + b[0] - b[2]; },
                      big + 3, 1);
        if (sb == Sign::Zero) vert = c[0];
        if (sa == Sign::Zero) horiz = c[1];
    } else {
        auto ball_sign = [](const Ball& b) {
            return b.contains_zero() ? Sign::Undecided : Sign::NonZero;
        };
        sa = ball_sign(line.a);
        sb = ball_sign(line.b);
        sr = ball_sign(line.r);
        sab = ball_sign(line.a + line.b);
    }
    if (sb == Sign::Zero) return vert ? intercept_class(*vert, cat, true) : LineClass::Unknown;
    if (sa == Sign::Zero) return horiz ? intercept_class(*horiz, cat, false) : LineClass::Unknown;
    if (sab == Sign::Zero && sr == Sign::Zero) return LineClass::SpecialDiagonal;
    if (sa == Sign::NonZero && sb == Sign::NonZero &&
        (sab == Sign::NonZero || sr == Sign::NonZero))
        return LineClass::NonSpecial;
    return LineClass::Unknown;
}

Containment is_special_point(const std::vector<AlgebraicCoord>& point, const Catalog& cat) {
    bool undecided = false;
    for (const AlgebraicCoord& c : point) {
        bool matched = false, open = false;
        for (const auto& p : cat.params) {
            Containment e = equal_algebraic(c, cat.coord(p.id));
            if (e == Containment::Yes) {
                matched = true;
                break;
            }
            if (e == Containment::Undecided) open = true;
        }
        if (matched) continue;
        if (open) {
            undecided = true;
            continue;
        }
        if (c.is_exact() && c.exact->is_real()) {
            if (is_pcf_rational(c.exact->re)) continue;  // PCF beyond the bound
            return Containment::No;
        }
        if (escape_rate_arch(c.at(160)).escaped) return Containment::No;
        undecided = true;
    }
    return undecided ? Containment::Undecided : Containment::Yes;
}

void SpecialSubvariety::validate() const {
    if (n < 1) throw ContractError("subvariety needs a positive ambient dimension");
    if (constant_indices.size() != constant_ids.size())
        throw ContractError("constant block and ids disagree");
    std::vector<bool> seen(n, false);
    auto mark = [&](int i) {
        if (i < 1 || i > n) throw ContractError("coordinate index out of range");
        if (seen[i - 1]) throw ContractError("partition blocks overlap");
        seen[i - 1] = true;
    };
    for (int i : constant_indices) mark(i);
    for (const auto& block : free_blocks) {
        if (block.empty()) throw ContractError("free block must be nonempty");
        for (int i : block) mark(i);
    }
    for (bool s : seen)
        if (!s) throw ContractError("partition does not cover every coordinate");
}

Containment subvariety_contains(const SpecialSubvariety& z,
                                const std::vector<AlgebraicCoord>& point,
                                const Catalog& cat) {
    z.validate();
    if (static_cast<int>(point.size()) != z.n)
        throw ContractError("point dimension does not match the subvariety");
    bool undecided = false;
    auto fold = [&](Containment e) {
        if (e == Containment::Undecided) undecided = true;
        return e == Containment::No;
    };
    for (size_t t = 0; t < z.constant_indices.size(); ++t) {
        AlgebraicCoord c = cat.coord(z.constant_ids[t]);
        if (fold(equal_algebraic(point[z.constant_indices[t] - 1], c))) return Containment::No;
    }
    for (const auto& block : z.free_blocks)
        for (size_t u = 1; u < block.size(); ++u)
            if (fold(equal_algebraic(point[block[0] - 1], point[block[u] - 1])))
                return Containment::No;
    return undecided ? Containment::Undecided : Containment::Yes;
}

namespace {

struct GridPoint {
    int i, j;  // parameter indices
};

std::vector<LineHit> verify_and_collect(const Catalog& cat,
                                        const std::vector<const PcfParam*>& ps,
                                        const std::vector<GridPoint>& pts,
                                        const std::vector<std::pair<long, long>>& candidates,
                                        int k) {
    std::vector<LineHit> hits;
    std::set<std::string> tried, seen_support;
    for (auto [ai, bi] : candidates) {
        SpecialPoint a = make_point(ps[pts[ai].i]->id, ps[pts[ai].j]->id);
        SpecialPoint b = make_point(ps[pts[bi].i]->id, ps[pts[bi].j]->id);
        Line2 line;
        try {
            line = line_through(a, b, cat);
        } catch (const DegeneracyError&) {
            continue;
        }
        if (!tried.insert(quantized_line_key(line)).second) continue;
        std::vector<SpecialPoint> support;
        for (const auto& pt : pts) {
            SpecialPoint r = make_point(ps[pt.i]->id, ps[pt.j]->id);
            if (collinear3(a, b, r, cat) == IncidenceVerdict::Kind::CollinearCertified)
                support.push_back(r);
        }
        if (static_cast<int>(support.size()) < k) continue;
        std::sort(support.begin(), support.end(), point_less);
        if (!seen_support.insert(support_key(support)).second) continue;
        hits.push_back({line, std::move(support), classify_line(line, cat)});
    }
    std::sort(hits.begin(), hits.end(), [](const LineHit& x, const LineHit& y) {
        if (x.support.size() != y.support.size()) return x.support.size() > y.support.size();
        return support_key(x.support) < support_key(y.support);
    });
    return hits;
}

}  // namespace

std::vector<LineHit> find_lines_with_k_points(const Catalog& cat, int k,
                                              const LineFilters& filters) {
    if (k < 3) throw ContractError("line search needs k >= 3");
    std::vector<const PcfParam*> ps;
    for (const auto& p : cat.params)
        if (p.type.m + p.type.n <= filters.max_type_sum &&
            p.degree_bound <= filters.max_coord_degree)
            ps.push_back(&p);
    std::vector<GridPoint> pts;
    for (int i = 0; i < static_cast<int>(ps.size()); ++i)
        for (int j = 0; j < static_cast<int>(ps.size()); ++j) pts.push_back({i, j});
    long m = static_cast<long>(pts.size());
    if (m * m > filters.pair_budget)
        throw ResourceError("line search pair budget exceeded: " + std::to_string(m) +
                            " points");

    // Per-anchor direction buckets: points collinear with the anchor share the
    // exact direction key, so with the 2x2 cell insertion they always meet in
    // at least one cell.
    const double grid = 1e-9;
    std::vector<std::pair<long, long>> candidates;
    for (long ai = 0; ai < m; ++ai) {
        std::map<std::array<long, 3>, std::vector<long>> buckets;
        const Ball& ax = ps[pts[ai].i]->ball;
        const Ball& ay = ps[pts[ai].j]->ball;
        for (long bi = 0; bi < m; ++bi) {
            if (bi == ai) continue;
            Ball dx = ps[pts[bi].i]->ball - ax;
            Ball dy = ps[pts[bi].j]->ball - ay;
            if (dx.contains_zero() && dy.contains_zero()) continue;  // same point
            bool use_dx = mid_hypot(dx) >= mid_hypot(dy);
            if (use_dx && dx.contains_zero()) use_dx = false;
            if (!use_dx && dy.contains_zero()) use_dx = true;
            Ball t = use_dx ? dy / dx : dx / dy;
            long kr = static_cast<long>(std::floor(t.mid_re_d() / grid));
            long ki = static_cast<long>(std::floor(t.mid_im_d() / grid));
            for (long dr = 0; dr <= 1; ++dr)
                for (long di = 0; di <= 1; ++di)
                    buckets[{use_dx ? 0L : 1L, kr + dr, ki + di}].push_back(bi);
        }
        for (const auto& [key, members] : buckets)
            if (static_cast<int>(members.size()) >= k - 1)
                for (long bi : members) candidates.emplace_back(ai, bi);
    }
    return verify_and_collect(cat, ps, pts, candidates, k);
}

std::vector<LineHit> pencil_two_point_lines(const SpecialPoint& p, const Catalog& cat) {
    cat.at(p.first);
    cat.at(p.second);
    std::vector<LineHit> out;
    for (const auto& qa : cat.params) {
        for (const auto& qb : cat.params) {
            SpecialPoint q = make_point(qa.id, qb.id);
            if (q.first == p.first && q.second == p.second) continue;
            Line2 line;
            try {
                line = line_through(p, q, cat);
            } catch (const DegeneracyError&) {
                continue;
            }
            bool dup = false;
            for (const auto& kept : out)
                if (lines_equal_certified(kept.line, line, cat)) {
                    dup = true;
                    break;
                }
            if (dup) continue;
            std::vector<SpecialPoint> support{p, q};
            std::sort(support.begin(), support.end(), point_less);
            out.push_back({line, std::move(support), classify_line(line, cat)});
        }
    }
    return out;
}

std::vector<SumLine> sum_spectrum(const Catalog& cat) {
    struct Group {
        AlgebraicCoord a, b;  // representative pair
        SumLine line;
    };
    std::vector<Group> groups;
    std::map<std::array<long, 2>, std::vector<size_t>> cells;
    const double grid = 1e-9;
    const long bits = 160;

    for (size_t i = 0; i < cat.params.size(); ++i) {
        for (size_t j = i; j < cat.params.size(); ++j) {
            AlgebraicCoord ca = cat.coord(cat.params[i].id);
            AlgebraicCoord cb = cat.coord(cat.params[j].id);
            Ball sum = ca.at(bits) + cb.at(bits);
            long kr = static_cast<long>(std::floor(sum.mid_re_d() / grid));
            long ki = static_cast<long>(std::floor(sum.mid_im_d() / grid));
            size_t found = groups.size();
            for (long dr = 0; dr <= 1 && found == groups.size(); ++dr)
                for (long di = 0; di <= 1 && found == groups.size(); ++di) {
                    auto it = cells.find({kr + dr, ki + di});
                    if (it == cells.end()) continue;
                    for (size_t g : it->second) {
                        std::vector<const AlgebraicCoord*> ops{&ca, &cb, &groups[g].a,
                                                               &groups[g].b};
                        SymExpr diff = SymExpr::coord(ca) + SymExpr::coord(cb) -
                                       SymExpr::coord(groups[g].a) -
                                       SymExpr::coord(groups[g].b);
                        auto eval = [&](long bb) {
                            return ca.at(bb) + cb.at(bb) - groups[g].a.at(bb) -
                                   groups[g].b.at(bb);
                        };
                        if (sign_of(ops, diff, eval, conj_bound_log2(ops) + 3, 1) ==
                            Sign::Zero) {
                            found = g;
                            break;
                        }
                    }
                }
            if (found == groups.size()) {
                groups.push_back({ca, cb, {sum, {}}});
                for (long dr = 0; dr <= 1; ++dr)
                    for (long di = 0; di <= 1; ++di)
                        cells[{kr + dr, ki + di}].push_back(found);
            }
            groups[found].line.support.push_back(make_point(cat.params[i].id, cat.params[j].id));
            if (i != j)
                groups[found].line.support.push_back(
                    make_point(cat.params[j].id, cat.params[i].id));
        }
    }
    std::vector<SumLine> out;
    out.reserve(groups.size());
    for (auto& g : groups) {
        std::sort(g.line.support.begin(), g.line.support.end(), point_less);
        out.push_back(std::move(g.line));
    }
    std::sort(out.begin(), out.end(), [](const SumLine& x, const SumLine& y) {
        return support_key(x.support) < support_key(y.support);
    });
    return out;
}

std::vector<HorizontalPair> horizontal_pairs_core(const std::vector<ImEntry>& entries) {
    std::vector<HorizontalPair> out;
    const long bits = 160;
    for (size_t i = 0; i < entries.size(); ++i) {
        for (size_t j = i + 1; j < entries.size(); ++j) {
            const ImEntry& u = entries[i];
            const ImEntry& v = entries[j];
            if (u.id == v.id) continue;
            // zero imaginary part iff the value is its own conjugate
            if (u.coord.id == u.conj.id || v.coord.id == v.conj.id) continue;
            std::vector<const AlgebraicCoord*> ops{&u.coord, &u.conj, &v.coord, &v.conj};
            SymExpr diff = (SymExpr::coord(u.coord) - SymExpr::coord(u.conj)) -
                           (SymExpr::coord(v.coord) - SymExpr::coord(v.conj));
            auto eval = [&](long b) {
                return (u.coord.at(b) - u.conj.at(b)) - (v.coord.at(b) - v.conj.at(b));
            };
            if (sign_of(ops, diff, eval, conj_bound_log2(ops) + 3, 1) != Sign::Zero) continue;
            Line2 line;
            line.a = Ball::exact_int(1, 0, bits);
            line.b = Ball::exact_int(1, 0, bits);
            line.r = u.coord.at(bits) + v.conj.at(bits);
            line.ea = GaussianRational::integer(1);
            line.eb = GaussianRational::integer(1);
            if (u.coord.is_exact() && v.conj.is_exact())
                line.er = *u.coord.exact + *v.conj.exact;
            else
                line.ea = line.eb = std::nullopt;
            out.push_back({u.id, v.id, line});
        }
    }
    return out;
}

std::vector<HorizontalPair> horizontal_pair_search(const Catalog& cat) {
    std::vector<ImEntry> entries;
    entries.reserve(cat.params.size());
    for (const auto& p : cat.params)
        entries.push_back({p.id, cat.coord(p.id), cat.coord(cat.conjugate_id(p.id))});
    return horizontal_pairs_core(entries);
}

void save_lines_csv(const std::vector<LineHit>& hits, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path);
    out << "a_re,a_im,b_re,b_im,r_re,r_im,class,support\n";
    for (const auto& h : hits) {
        out << h.line.a.mid_re_str() << ',' << h.line.a.mid_im_str() << ','
            << h.line.b.mid_re_str() << ',' << h.line.b.mid_im_str() << ','
            << h.line.r.mid_re_str() << ',' << h.line.r.mid_im_str() << ','
            << to_string(h.cls) << ',';
        for (size_t i = 0; i < h.support.size(); ++i) {
            if (i) out << ';';
            out << h.support[i].first << ':' << h.support[i].second;
        }
        out << '\n';
    }
    if (!out) throw IoError("write failed for " + path);
}

void save_lines_json(const std::vector<LineHit>& hits, const std::string& path) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& h : hits) {
        nlohmann::ordered_json rec;
        rec["a"] = {h.line.a.mid_re_str(), h.line.a.mid_im_str()};
        rec["b"] = {h.line.b.mid_re_str(), h.line.b.mid_im_str()};
        rec["r"] = {h.line.r.mid_re_str(), h.line.r.mid_im_str()};
        rec["class"] = to_string(h.cls);
        nlohmann::ordered_json sup = nlohmann::ordered_json::array();
        for (const auto& s : h.support) sup.push_back({s.first, s.second});
        rec["support"] = sup;
        arr.push_back(rec);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path);
    out << arr.dump(1) << '\n';
    if (!out) throw IoError("write failed for " + path);
}

}  // namespace pcf
