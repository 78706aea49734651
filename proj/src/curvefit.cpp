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

#include "pcf/curvefit.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <set>

#include <complex>

#include "pcf/errors.hpp"
#include "pcf/incidence.hpp"

namespace pcf {

namespace {

double mid_hypot(const Ball& z) { return std::hypot(z.mid_re_d(), z.mid_im_d()); }

std::vector<Ball> ball_powers(const Ball& z, int d) {
    std::vector<Ball> p;
    p.reserve(d + 1);
    p.push_back(Ball::exact_int(1, 0, z.prec()));
    for (int i = 1; i <= d; ++i) p.push_back(p.back() * z);
    return p;
}

std::vector<GaussianRational> exact_powers(const GaussianRational& z, int d) {
    std::vector<GaussianRational> p;
    p.reserve(d + 1);
    p.push_back(GaussianRational::integer(1));
    for (int i = 1; i <= d; ++i) p.push_back(p.back() * z);
    return p;
}

}  // namespace

int n_d(int d) {
    if (d < 1) throw ContractError("n_d needs degree >= 1");
    return d * (d + 3) / 2;
}

std::vector<std::pair<int, int>> curve_monomials(int d) {
    std::vector<std::pair<int, int>> mono;
    for (int t = 0; t <= d; ++t)
        for (int i = t; i >= 0; --i) mono.emplace_back(i, t - i);
    return mono;
}

Ball PlaneCurve::eval(const Ball& x, const Ball& y) const {
    auto mono = curve_monomials(d);
    auto xp = ball_powers(x, d);
    auto yp = ball_powers(y, d);
    Ball acc(std::max(x.prec(), y.prec()));
    for (size_t k = 0; k < mono.size(); ++k) {
        if (coeffs[k].is_exact() && coeffs[k].contains_zero()) continue;
        acc = acc + coeffs[k] * xp[mono[k].first] * yp[mono[k].second];
    }
    return acc;
}

void PlaneCurve::validate() const {
    size_t slots = static_cast<size_t>((d + 1) * (d + 2) / 2);
    if (d < 1 || coeffs.size() != slots)
        throw ContractError("plane curve has wrong coefficient slot count");
    if (!exact.empty() && exact.size() != slots)
        throw ContractError("exact coefficient vector length mismatch");
    bool all_zero = true;
    for (const Ball& c : coeffs)
        if (!(c.is_exact() && c.contains_zero())) all_zero = false;
    if (all_zero) throw ContractError("plane curve with all coefficients zero");
}

PlaneCurve curve_from_exact(int d, std::vector<GaussianRational> coeffs, long prec) {
    PlaneCurve c;
    c.d = d;
    for (const auto& g : coeffs) c.coeffs.push_back(g.ball(prec));
    c.exact = std::move(coeffs);
    c.validate();
    return c;
}

PlaneCurve normalize_curve(const PlaneCurve& c) {
    c.validate();
    int pivot = -1;
    double best = -1;
    for (size_t k = 0; k < c.coeffs.size(); ++k) {
        if (c.coeffs[k].contains_zero()) continue;
        double m = mid_hypot(c.coeffs[k]);
        if (m > best) {
            best = m;
            pivot = static_cast<int>(k);
        }
    }
    if (pivot < 0) throw ContractError("cannot normalize: no coefficient certified nonzero");

    const Ball& p = c.coeffs[pivot];
    bool pivot_is_one = p.is_exact() && p.mid_re_rat() == 1 && p.mid_im_rat() == 0;
    PlaneCurve out;
    out.d = c.d;
    out.normalized = true;
    if (pivot_is_one) {
        out.coeffs = c.coeffs;
        out.exact = c.exact;
        return out;
    }
    for (size_t k = 0; k < c.coeffs.size(); ++k) {
        if (static_cast<int>(k) == pivot)
            out.coeffs.push_back(Ball::exact_int(1, 0, p.prec()));
        else
            out.coeffs.push_back(c.coeffs[k] / p);
    }
    if (!c.exact.empty()) {
        const GaussianRational& ep = c.exact[pivot];
        if (ep.is_zero()) throw IntegrityError("exact coefficient contradicts its ball");
        for (const auto& g : c.exact) out.exact.push_back(g / ep);
    }
    return out;
}

CurvePoint exact_point(const GaussianRational& x, const GaussianRational& y) {
    return {AlgebraicCoord::from_exact(x), AlgebraicCoord::from_exact(y)};
}

CurvePoint catalog_point(const SpecialPoint& p, const Catalog& cat) {
    return {cat.coord(p.first), cat.coord(p.second)};
}

Sign point_on_curve(const PlaneCurve& c, const AlgebraicCoord& x, const AlgebraicCoord& y) {
    c.validate();
    auto mono = curve_monomials(c.d);

    if (!c.is_exact()) {
        // Only exclusion is available without exact coefficients.
        for (long bits = 64; bits <= 1024; bits *= 2) {
            Ball xb = x.at(bits), yb = y.at(bits);
            if (!c.eval(xb, yb).contains_zero()) return Sign::NonZero;
        }
        return Sign::Undecided;
    }

    // Clear coefficient denominators so the expression stays an algebraic
    // integer once sign_of clears the operand denominators.
    Int den = 1;
    for (const auto& g : c.exact)
        if (!g.is_zero()) den = lcm(den, g.denominator());
    std::vector<GaussianRational> gi;
    GaussianRational scale{Rat(den), Rat(0)};
    for (const auto& g : c.exact) gi.push_back(g * scale);

    SymExpr X = SymExpr::coord(x), Y = SymExpr::coord(y);
    std::vector<SymExpr> xp{SymExpr::constant(GaussianRational::integer(1))};
    std::vector<SymExpr> yp = xp;
    for (int i = 1; i <= c.d; ++i) {
        xp.push_back(xp.back() * X);
        yp.push_back(yp.back() * Y);
    }
    SymExpr expr = SymExpr::constant(GaussianRational{});
    Rat sum1 = 0;
    for (size_t k = 0; k < mono.size(); ++k) {
        if (gi[k].is_zero()) continue;
        expr = expr + SymExpr::constant(gi[k]) * xp[mono[k].first] * yp[mono[k].second];
        sum1 += boost::multiprecision::abs(gi[k].re) + boost::multiprecision::abs(gi[k].im);
    }

    std::vector<const AlgebraicCoord*> ops{&x, &y};
    double big = conj_bound_log2(ops);
    double log2b = std::log2(sum1.convert_to<double>() + 1.0) + c.d * big;
    auto eval = [&](long bits) {
        Ball xb = x.at(bits), yb = y.at(bits);
        auto xbp = ball_powers(xb, c.d);
        auto ybp = ball_powers(yb, c.d);
        Ball acc(bits);
        for (size_t k = 0; k < mono.size(); ++k) {
            if (gi[k].is_zero()) continue;
            acc = acc + gi[k].ball(bits) * xbp[mono[k].first] * ybp[mono[k].second];
        }
        return acc;
    };
    return sign_of(ops, expr, eval, log2b, c.d);
}

CurveCount count_special_on_curve(const PlaneCurve& c, const Catalog& cat) {
    c.validate();
    std::vector<AlgebraicCoord> coords;
    coords.reserve(cat.params.size());
    for (const auto& p : cat.params) coords.push_back(cat.coord(p.id));

    CurveCount out;
    for (size_t i = 0; i < coords.size(); ++i) {
        for (size_t j = 0; j < coords.size(); ++j) {
            // Cheap exclusion with the stored isolating balls first.
            if (!c.eval(coords[i].ball, coords[j].ball).contains_zero()) continue;
            Sign s = point_on_curve(c, coords[i], coords[j]);
            if (s == Sign::Zero) {
                out.support.push_back({cat.params[i].id, cat.params[j].id});
            } else if (s == Sign::Undecided) {
                out.complete = false;
            }
        }
    }
    std::sort(out.support.begin(), out.support.end(), [](const auto& a, const auto& b) {
        return std::tie(a.first, a.second) < std::tie(b.first, b.second);
    });
    out.count = static_cast<long>(out.support.size());
    return out;
}

namespace {

// Exact Gauss-Jordan; returns pivot columns, mat ends in RREF.
std::vector<int> rref_exact(std::vector<std::vector<GaussianRational>>& mat, int ncols) {
    std::vector<int> pivots;
    size_t r = 0;
    for (int col = 0; col < ncols && r < mat.size(); ++col) {
        size_t k = r;
        while (k < mat.size() && mat[k][col].is_zero()) ++k;
        if (k == mat.size()) continue;
        std::swap(mat[r], mat[k]);
        GaussianRational inv = GaussianRational::integer(1) / mat[r][col];
        for (auto& v : mat[r]) v = v * inv;
        for (size_t q = 0; q < mat.size(); ++q) {
            if (q == r || mat[q][col].is_zero()) continue;
            GaussianRational f = mat[q][col];
            for (size_t t = 0; t < mat[q].size(); ++t)
                mat[q][t] = mat[q][t] - f * mat[r][t];
        }
        pivots.push_back(col);
        ++r;
    }
    mat.resize(r, std::vector<GaussianRational>());
    return pivots;
}

// Ball Gauss-Jordan with full pivoting.  Every pivot must be certified
// nonzero; returns false (rank undecided at this precision) otherwise.
// On success mat is reduced so each pivot column is 1 at its row and 0
// elsewhere, and pivot_col[row] records the assignment.
bool reduce_ball(std::vector<std::vector<Ball>>& mat, int ncols,
                 std::vector<int>& pivot_col) {
    size_t rows = mat.size();
    std::vector<bool> row_done(rows, false), col_done(ncols, false);
    pivot_col.assign(rows, -1);
    for (size_t step = 0; step < rows; ++step) {
        int pr = -1, pc = -1;
        double best = -1;
        for (size_t r = 0; r < rows; ++r) {
            if (row_done[r]) continue;
            for (int c = 0; c < ncols; ++c) {
                if (col_done[c] || mat[r][c].contains_zero()) continue;
                double m = mid_hypot(mat[r][c]);
                if (m > best) {
                    best = m;
                    pr = static_cast<int>(r);
                    pc = c;
                }
            }
        }
        if (pr < 0) return false;
        Ball piv = mat[pr][pc];
        for (int c = 0; c < ncols; ++c) mat[pr][c] = mat[pr][c] / piv;
        mat[pr][pc] = Ball::exact_int(1, 0, piv.prec());
        for (size_t r = 0; r < rows; ++r) {
            if (static_cast<int>(r) == pr) continue;
            Ball f = mat[r][pc];
            if (f.is_exact() && f.contains_zero()) continue;
            for (int c = 0; c < ncols; ++c) mat[r][c] = mat[r][c] - f * mat[pr][c];
            mat[r][pc] = Ball(f.prec());
        }
        row_done[pr] = true;
        col_done[pc] = true;
        pivot_col[pr] = pc;
    }
    return true;
}

}  // namespace

FitResult fit_curve(const std::vector<CurvePoint>& points, int d) {
    int nd = n_d(d);
    if (static_cast<int>(points.size()) > nd)
        throw ContractError("fit_curve: more points than n_d(d)");
    auto mono = curve_monomials(d);
    int ncols = static_cast<int>(mono.size());

    // Identical ids name identical numbers; duplicates add no constraint.
    std::vector<const CurvePoint*> pts;
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& p : points)
        if (p.x.id.empty() || p.y.id.empty() || seen.insert({p.x.id, p.y.id}).second)
            pts.push_back(&p);

    bool all_exact = std::all_of(pts.begin(), pts.end(), [](const CurvePoint* p) {
        return p->x.is_exact() && p->y.is_exact();
    });

    auto finish = [&](std::vector<PlaneCurve> basis) -> FitResult {
        if (basis.size() == 1) return normalize_curve(basis[0]);
        SolutionFamily fam;
        fam.d = d;
        fam.dimension = static_cast<int>(basis.size()) - 1;
        fam.basis = std::move(basis);
        return fam;
    };

    if (all_exact) {
        std::vector<std::vector<GaussianRational>> mat;
        for (const CurvePoint* p : pts) {
            auto xp = exact_powers(*p->x.exact, d);
            auto yp = exact_powers(*p->y.exact, d);
            std::vector<GaussianRational> row;
            for (const auto& [i, j] : mono) row.push_back(xp[i] * yp[j]);
            mat.push_back(std::move(row));
        }
        std::vector<int> pivots = rref_exact(mat, ncols);
        std::vector<bool> is_pivot(ncols, false);
        for (int c : pivots) is_pivot[c] = true;
        std::vector<PlaneCurve> basis;
        for (int f = 0; f < ncols; ++f) {
            if (is_pivot[f]) continue;
            std::vector<GaussianRational> v(ncols);
            v[f] = GaussianRational::integer(1);
            for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -mat[r][f];
            basis.push_back(curve_from_exact(d, std::move(v)));
        }
        return finish(std::move(basis));
    }

    for (long bits = 192; bits <= (1L << 14); bits *= 2) {
        std::vector<std::vector<Ball>> mat;
        for (const CurvePoint* p : pts) {
            auto xp = ball_powers(p->x.at(bits), d);
            auto yp = ball_powers(p->y.at(bits), d);
            std::vector<Ball> row;
            for (const auto& [i, j] : mono) row.push_back(xp[i] * yp[j]);
            mat.push_back(std::move(row));
        }
        std::vector<int> pivot_col;
        if (!reduce_ball(mat, ncols, pivot_col)) continue;
        std::vector<bool> is_pivot(ncols, false);
        for (int c : pivot_col) is_pivot[c] = true;
        std::vector<PlaneCurve> basis;
        for (int f = 0; f < ncols; ++f) {
            if (is_pivot[f]) continue;
            std::vector<Ball> v(ncols, Ball(bits));
            v[f] = Ball::exact_int(1, 0, bits);
            for (size_t r = 0; r < mat.size(); ++r)
                v[pivot_col[r]] = -mat[r][f];
            PlaneCurve c;
            c.d = d;
            c.coeffs = std::move(v);
            basis.push_back(std::move(c));
        }
        return finish(std::move(basis));
    }
    throw ResourceError("fit_curve: rank undecided at the precision ceiling");
}

SymmetricConic symmetric_conic(const CurvePoint& p1, const CurvePoint& p2,
                               const CurvePoint& p3) {
    std::array<const CurvePoint*, 3> pts = {&p1, &p2, &p3};

    // The form is symmetric in x,y, so points with equal coordinate multisets
    // impose the same constraint.
    auto key = [](const CurvePoint& p) {
        std::pair<std::string, std::string> k{p.x.id, p.y.id};
        if (k.second < k.first) std::swap(k.first, k.second);
        return k;
    };
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!pts[i]->x.id.empty() && key(*pts[i]) == key(*pts[j]))
                throw DegeneracyError(
                    "symmetric_conic: points " + std::to_string(i + 1) + " and " +
                    std::to_string(j + 1) +
                    " are a symmetric pair and impose the same constraint");

    bool all_exact = std::all_of(pts.begin(), pts.end(), [](const CurvePoint* p) {
        return p->x.is_exact() && p->y.is_exact();
    });

    SymmetricConic out;
    if (all_exact) {
        // Rows: A*xy + B*(x+y) + C = -(x^2+y^2).
        std::vector<std::vector<GaussianRational>> mat;
        for (const CurvePoint* p : pts) {
            GaussianRational x = *p->x.exact, y = *p->y.exact;
            mat.push_back({x * y, x + y, GaussianRational::integer(1), -(x * x + y * y)});
        }
        auto scaled_eq = [](const std::vector<GaussianRational>& u,
                            const std::vector<GaussianRational>& v) {
            // u = t*v for some t (including the all-zero case).
            for (int c = 0; c < 4; ++c) {
                if (v[c].is_zero()) {
                    if (!u[c].is_zero()) return false;
                    continue;
                }
                GaussianRational t = u[c] / v[c];
                for (int k = 0; k < 4; ++k)
                    if (!(u[k] - t * v[k]).is_zero()) return false;
                return true;
            }
            return true;
        };
        auto check = mat;
        std::vector<int> pivots = rref_exact(check, 3);
        if (pivots.size() < 3) {
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j)
                    if (scaled_eq(mat[i], mat[j]))
                        throw DegeneracyError(
                            "symmetric_conic: constraints from points " +
                            std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                            " are proportional");
            throw DegeneracyError("symmetric_conic: the three constraints are linearly dependent");
        }
        // RREF of the augmented system leaves the solution in the last column.
        std::vector<std::vector<GaussianRational>> aug = mat;
        rref_exact(aug, 4);
        out.eA = aug[0][3];
        out.eB = aug[1][3];
        out.eC = aug[2][3];
        out.A = out.eA->ball(kStartPrec);
        out.B = out.eB->ball(kStartPrec);
        out.C = out.eC->ball(kStartPrec);
        return out;
    }

    for (long bits = 192; bits <= (1L << 14); bits *= 2) {
        std::vector<std::vector<Ball>> mat;
        for (const CurvePoint* p : pts) {
            Ball x = p->x.at(bits), y = p->y.at(bits);
            mat.push_back({x * y, x + y, Ball::exact_int(1, 0, bits), -(x * x + y * y)});
        }
        std::vector<int> pivot_col;
        if (!reduce_ball(mat, 3, pivot_col)) continue;
        std::array<Ball, 3> sol;
        for (size_t r = 0; r < 3; ++r) sol[pivot_col[r]] = mat[r][3];
        out.A = sol[0];
        out.B = sol[1];
        out.C = sol[2];
        return out;
    }
    throw ResourceError("symmetric_conic: system rank undecided at the precision ceiling");
}

PlaneCurve SymmetricConic::curve() const {
    // Slot order for d=2: 1; x, y; x^2, xy, y^2.
    if (eA && eB && eC) {
        return curve_from_exact(2, {*eC, *eB, *eB, GaussianRational::integer(1), *eA,
                                    GaussianRational::integer(1)});
    }
    PlaneCurve c;
    c.d = 2;
    long prec = std::max({A.prec(), B.prec(), C.prec()});
    c.coeffs = {C, B, B, Ball::exact_int(1, 0, prec), A, Ball::exact_int(1, 0, prec)};
    c.validate();
    return c;
}

namespace {

// Census of a line through two catalog points via the certified incidence
// determinant.  A ball-fitted line carries no exact coefficients, so
// point_on_curve can never certify membership on it; collinearity with the
// two defining points is decidable instead.  The double prefilter is sound:
// coordinates are bounded by 2 and the isolating radii are ~1e-40, so the
// double-evaluated determinant is accurate to ~1e-14.
CurveCount census_line(const SpecialPoint& s1, const SpecialPoint& s2, const Catalog& cat) {
    std::vector<std::complex<double>> mid;
    mid.reserve(cat.params.size());
    for (const auto& p : cat.params) mid.emplace_back(p.ball.mid_re_d(), p.ball.mid_im_d());
    auto approx = [&](const std::string& id) {
        for (size_t i = 0; i < cat.params.size(); ++i)
            if (cat.params[i].id == id) return mid[i];
        throw ContractError("census_line: unknown id " + id);
    };
    std::complex<double> x1 = approx(s1.first), y1 = approx(s1.second);
    std::complex<double> dx = approx(s2.first) - x1, dy = approx(s2.second) - y1;

    CurveCount out;
    for (size_t i = 0; i < cat.params.size(); ++i) {
        for (size_t j = 0; j < cat.params.size(); ++j) {
            std::complex<double> det = dx * (mid[j] - y1) - dy * (mid[i] - x1);
            if (std::abs(det) > 1e-6) continue;
            SpecialPoint p{cat.params[i].id, cat.params[j].id};
            if ((p.first == s1.first && p.second == s1.second) ||
                (p.first == s2.first && p.second == s2.second)) {
                out.support.push_back(p);
                continue;
            }
            IncidenceVerdict v = collinear3(s1, s2, p, cat);
            if (v == IncidenceVerdict::Kind::CollinearCertified) {
                out.support.push_back(p);
            } else if (v == IncidenceVerdict::Kind::Undecided) {
                out.complete = false;
            }
        }
    }
    std::sort(out.support.begin(), out.support.end(), [](const auto& a, const auto& b) {
        return std::tie(a.first, a.second) < std::tie(b.first, b.second);
    });
    out.count = static_cast<long>(out.support.size());
    return out;
}

}  // namespace

SharpnessReport sharpness_probe(const Catalog& cat, int d, long samples,
                                unsigned long long seed) {
    SharpnessReport rep;
    rep.d = d;
    rep.seed = seed;
    rep.requested = samples;
    int nd = n_d(d);
    size_t np = cat.params.size();
    if (np < 2) throw ContractError("sharpness_probe needs a catalog with at least 2 parameters");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> pick(0, np - 1);

    long attempts_left = 50 * samples;
    while (rep.fitted < samples && attempts_left-- > 0) {
        std::vector<SpecialPoint> sample;
        std::set<std::pair<std::string, std::string>> distinct;
        std::set<std::string> xs, ys;
        bool ok = true;
        for (int k = 0; k < nd && ok; ++k) {
            SpecialPoint p{cat.params[pick(rng)].id, cat.params[pick(rng)].id};
            if (!distinct.insert({p.first, p.second}).second) ok = false;
            // Shared coordinates force an axis-parallel line through both
            // points, so degree-1 samples avoid them.
            if (d == 1 && (!xs.insert(p.first).second || !ys.insert(p.second).second))
                ok = false;
            sample.push_back(p);
        }
        if (!ok) {
            ++rep.skipped;
            continue;
        }

        std::vector<CurvePoint> pts;
        for (const auto& p : sample) pts.push_back(catalog_point(p, cat));
        FitResult fit = [&]() -> FitResult {
            try {
                return fit_curve(pts, d);
            } catch (const ResourceError&) {
                return SolutionFamily{};
            }
        }();
        if (!std::holds_alternative<PlaneCurve>(fit)) {
            ++rep.skipped;
            continue;
        }
        ++rep.fitted;

        CurveCount cc = d == 1 ? census_line(sample[0], sample[1], cat)
                               : count_special_on_curve(std::get<PlaneCurve>(fit), cat);
        if (!cc.complete) {
            ++rep.undecided;
            continue;
        }
        if (cc.count == nd) {
            ++rep.exact_count;
            continue;
        }

        std::string tag = "other";
        if (d == 1) {
            const auto& p = sample[0];
            const auto& q = sample[1];
            if (p.first == p.second && q.first == q.second) {
                tag = "diagonal";
            } else if (p.first == q.second || p.second == q.first) {
                tag = "cross";
            } else {
                AlgebraicCoord x1 = cat.coord(p.first), y1 = cat.coord(p.second);
                AlgebraicCoord x2 = cat.coord(q.first), y2 = cat.coord(q.second);
                std::vector<const AlgebraicCoord*> ops{&x1, &y1, &x2, &y2};
                SymExpr diff = (SymExpr::coord(x1) + SymExpr::coord(y1)) -
                               (SymExpr::coord(x2) + SymExpr::coord(y2));
                auto eval = [&](long bits) {
                    return x1.at(bits) + y1.at(bits) - x2.at(bits) - y2.at(bits);
                };
                if (sign_of(ops, diff, eval, conj_bound_log2(ops) + 2, 1) == Sign::Zero) {
                    tag = "sum";
                } else {
                    // x1 y2 = x2 y1: both points on a line through the origin.
                    SymExpr det = SymExpr::coord(x1) * SymExpr::coord(y2) -
                                  SymExpr::coord(x2) * SymExpr::coord(y1);
                    auto deval = [&](long bits) {
                        return x1.at(bits) * y2.at(bits) - x2.at(bits) * y1.at(bits);
                    };
                    if (sign_of(ops, det, deval, 2 * conj_bound_log2(ops) + 2, 2) ==
                        Sign::Zero)
                        tag = "origin";
                }
            }
        }
        rep.exceptions.push_back({std::move(sample), cc.count, tag});
    }
    return rep;
}

void save_curve_json(const PlaneCurve& c, const std::string& path) {
    c.validate();
    nlohmann::json j;
    j["d"] = c.d;
    auto mono = curve_monomials(c.d);
    nlohmann::json arr = nlohmann::json::array();
    for (size_t k = 0; k < mono.size(); ++k) {
        arr.push_back({mono[k].first, mono[k].second, c.coeffs[k].mid_re_exact(),
                       c.coeffs[k].mid_im_exact(), c.coeffs[k].rad_exact()});
    }
    j["coeffs"] = std::move(arr);
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << j.dump(1) << "\n";
    if (!out) throw IoError("write failed: " + path);
}

PlaneCurve load_curve_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad curve json: ") + e.what());
    }
    if (!j.contains("d") || !j.contains("coeffs")) throw ParseError("curve json missing fields");
    PlaneCurve c;
    c.d = j["d"].get<int>();
    if (c.d < 1) throw ParseError("curve json: degree must be >= 1");
    auto mono = curve_monomials(c.d);
    c.coeffs.assign(mono.size(), Ball());
    std::map<std::pair<int, int>, size_t> slot;
    for (size_t k = 0; k < mono.size(); ++k) slot[mono[k]] = k;
    for (const auto& e : j["coeffs"]) {
        if (!e.is_array() || e.size() != 5) throw ParseError("curve json: bad coefficient entry");
        std::pair<int, int> m{e[0].get<int>(), e[1].get<int>()};
        auto it = slot.find(m);
        if (it == slot.end()) throw ParseError("curve json: exponent out of range");
        c.coeffs[it->second] = Ball::from_exact_decimal(
            e[2].get<std::string>(), e[3].get<std::string>(), e[4].get<std::string>());
    }
    c.validate();
    return c;
}

}  // namespace pcf
