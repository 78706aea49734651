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

#include "pcf/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <mutex>

#include <json.hpp>

#include "pcf/errors.hpp"
#include "pcf/rootcert.hpp"

namespace pcf {

namespace {

std::pair<int, int> key(const OrbitIndex& t) { return {t.m, t.n}; }

const IntPoly& squarefree_relation(const OrbitIndex& t) {
    static std::map<std::pair<int, int>, IntPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key(t));
    if (it == cache.end())
        it = cache.emplace(key(t), squarefree_part(critical_relation_polynomial(t))).first;
    return it->second;
}

// Sub-types of t, i.e. (m', n') != t with m' <= t.m and n' | t.n, ordered by
// m'+n' so a linear scan meets the exact (minimal) type first.
std::vector<OrbitIndex> sub_types(const OrbitIndex& t, bool include_t) {
    std::vector<OrbitIndex> out;
    for (int m = 0; m <= t.m; ++m)
        for (int n = 1; n <= t.n; ++n) {
            if (t.n % n != 0) continue;
            if (!include_t && m == t.m && n == t.n) continue;
            out.push_back({m, n});
        }
    std::sort(out.begin(), out.end(), [](const OrbitIndex& a, const OrbitIndex& b) {
        if (a.m + a.n != b.m + b.n) return a.m + a.n < b.m + b.n;
        return a.m < b.m;
    });
    return out;
}

std::string param_id(const OrbitIndex& t, size_t k) {
    return std::to_string(t.m) + "_" + std::to_string(t.n) + "_" + std::to_string(k);
}

std::string double_str(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) throw ContractError("double formatting failed");
    return std::string(buf, end);
}

// Yes/No with refinement escalation; the ball must isolate a root of the
// squarefree reference polynomial so it can be shrunk on demand.
bool root_membership(const IntPoly& p, const Ball& b, const IntPoly& refine_against,
                     const std::string& what) {
    Ball cur = b;
    for (int step = 0; step < 24; ++step) {
        Containment c = contains_root(p, cur);
        if (c == Containment::Yes) return true;
        if (c == Containment::No) return false;
        try {
            cur = refine_bits(cur, refine_against, cur.log2_rad() - 8.0);
        } catch (const std::exception&) {
            break;
        }
    }
    throw ResourceError("root membership undecided for " + what);
}

}  // namespace

IntPoly exact_type_factor(const OrbitIndex& t) {
    static std::map<std::pair<int, int>, IntPoly> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key(t));
        if (it != cache.end()) return it->second;
    }
    IntPoly f = squarefree_relation(t);
    for (const OrbitIndex& s : sub_types(t, false)) {
        IntPoly g = gcd(f, squarefree_relation(s));
        if (g.degree() > 0) f = exact_divide(f, g);
    }
    if (f.degree() >= 0 && f.leading() < 0) f = -f;
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key(t), f);
    return f;
}

OrbitIndex classify_exact_type(const Ball& ball, const OrbitIndex& t) {
    const IntPoly& ref = squarefree_relation(t);
    for (const OrbitIndex& s : sub_types(t, true)) {
        if (root_membership(squarefree_relation(s), ball, ref,
                            "type (" + std::to_string(s.m) + "," + std::to_string(s.n) + ")"))
            return s;
    }
    throw IntegrityError("ball is not a root of its own relation polynomial");
}

long period_center_count(int n) {
    if (n < 1) throw ContractError("period must be positive");
    if (n > 62) throw ResourceError("period center count overflows past n=62");
    long total = 1L << (n - 1);
    for (int d = 1; d < n; ++d)
        if (n % d == 0) total -= period_center_count(d);
    return total;
}

const PcfParam* Catalog::find(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? nullptr : &params[it->second];
}

const PcfParam& Catalog::at(const std::string& id) const {
    const PcfParam* p = find(id);
    if (!p) throw ContractError("unknown catalog id: " + id);
    return *p;
}

const std::string& Catalog::conjugate_id(const std::string& id) const {
    auto it = conj_.find(id);
    if (it == conj_.end()) throw ContractError("unknown catalog id: " + id);
    return it->second;
}

const IntPoly& Catalog::type_poly(const OrbitIndex& t) const {
    auto it = type_polys_.find(key(t));
    if (it == type_polys_.end()) throw ContractError("type not present in catalog");
    return it->second;
}

double Catalog::type_log2_modulus(const OrbitIndex& t) const {
    auto it = type_log2_modulus_.find(key(t));
    if (it == type_log2_modulus_.end()) throw ContractError("type not present in catalog");
    return it->second;
}

AlgebraicCoord Catalog::coord(const std::string& id) const {
    const PcfParam& p = at(id);
    const IntPoly& poly = type_poly(p.type);
    AlgebraicCoord c;
    c.id = id;
    c.ball = p.ball;
    c.poly = &poly;
    c.log2_conj_modulus = type_log2_modulus(p.type);
    if (poly.degree() == 1) {
        c.exact = GaussianRational(Rat(-poly[0]), Rat(0));
    } else if (poly == IntPoly{1, 0, 1}) {
        c.exact = GaussianRational(Rat(0), Rat(p.ball.mid_im_d() > 0 ? 1 : -1));
    }
    return c;
}

void Catalog::finalize() {
    if (bound < 1) throw IntegrityError("catalog bound must be at least 1");
    if (!(precision > 0)) throw IntegrityError("catalog precision must be positive");

    type_polys_.clear();
    type_log2_modulus_.clear();
    index_.clear();
    conj_.clear();

    std::map<std::pair<int, int>, std::vector<size_t>> by_type;
    for (size_t i = 0; i < params.size(); ++i) {
        const PcfParam& p = params[i];
        if (p.type.m + p.type.n > bound)
            throw IntegrityError("parameter " + p.id + " exceeds the catalog bound");
        if (!index_.emplace(p.id, i).second)
            throw IntegrityError("duplicate catalog id: " + p.id);
        by_type[key(p.type)].push_back(i);
    }

    // Completeness: every contributing type up to the bound, with exactly one
    // entry per root of its exact-type factor.
    for (int m = 0; m + 1 <= bound; ++m) {
        for (int n = 1; m + n <= bound; ++n) {
            OrbitIndex t{m, n};
            IntPoly f = exact_type_factor(t);
            size_t have = 0;
            if (auto it = by_type.find(key(t)); it != by_type.end()) have = it->second.size();
            if (have != static_cast<size_t>(std::max(f.degree(), 0)))
                throw IntegrityError("type (" + std::to_string(m) + "," + std::to_string(n) +
                                     ") has " + std::to_string(have) + " entries, expected " +
                                     std::to_string(std::max(f.degree(), 0)));
            if (f.degree() > 0) type_polys_.emplace(key(t), std::move(f));
        }
    }

    for (auto& [tk, idxs] : by_type) {
        const IntPoly& f = type_polys_.at(tk);
        double log2_mod = 0.0;
        for (size_t i : idxs) {
            PcfParam& p = params[i];
            if (p.degree_bound != f.degree())
                throw IntegrityError("parameter " + p.id + " records degree " +
                                     std::to_string(p.degree_bound) + ", expected " +
                                     std::to_string(f.degree()));
            if (p.ball.rad_d() > precision * (1.0 + 1e-9))
                throw IntegrityError("parameter " + p.id + " ball exceeds catalog precision");
            try {
                if (!root_membership(f, p.ball, f, p.id))
                    throw IntegrityError("ball of " + p.id +
                                         " does not certify a root of its type factor");
            } catch (const ContractError&) {
                throw IntegrityError("ball of " + p.id +
                                     " does not certify a root of its type factor");
            } catch (const ResourceError&) {
                throw IntegrityError("ball of " + p.id +
                                     " does not certify a root of its type factor");
            }
            log2_mod = std::max(log2_mod, p.ball.log2_abs_ubound());
        }
        type_log2_modulus_[tk] = log2_mod;

        // Deterministic ids: midpoint-lexicographic order within the type.
        std::vector<size_t> sorted = idxs;
        std::sort(sorted.begin(), sorted.end(), [&](size_t a, size_t b) {
            int c = mpfr_cmp(params[a].ball.mid_re(), params[b].ball.mid_re());
            if (c != 0) return c < 0;
            return mpfr_cmp(params[a].ball.mid_im(), params[b].ball.mid_im()) < 0;
        });
        for (size_t k = 0; k < sorted.size(); ++k) {
            const PcfParam& p = params[sorted[k]];
            std::string want = param_id(p.type, k);
            if (p.id != want)
                throw IntegrityError("id " + p.id + " violates the deterministic scheme (expected " +
                                     want + ")");
        }

        // Conjugate closure within the type (the factor has real coefficients).
        for (size_t i : idxs) {
            Ball cj = params[i].ball.conj();
            std::string partner;
            for (size_t j : idxs) {
                if (cj.disjoint_from(params[j].ball)) continue;
                if (!partner.empty())
                    throw IntegrityError("conjugate of " + params[i].id +
                                         " overlaps several catalog balls");
                partner = params[j].id;
            }
            if (partner.empty())
                throw IntegrityError("catalog is not conjugate-closed at " + params[i].id);
            conj_[params[i].id] = partner;
        }
    }
    for (const auto& [a, b] : conj_)
        if (conj_.at(b) != a) throw IntegrityError("conjugate pairing is not an involution");

    // Pairwise disjointness across the whole catalog.
    for (size_t i = 0; i < params.size(); ++i)
        for (size_t j = i + 1; j < params.size(); ++j)
            if (!params[i].ball.disjoint_from(params[j].ball))
                throw IntegrityError("catalog balls " + params[i].id + " and " + params[j].id +
                                     " are not disjoint");
}

Catalog build_catalog(int bound, double precision) {
    if (bound < 1) throw ContractError("catalog bound must be at least 1");
    if (!(precision > 0)) throw ContractError("catalog precision must be positive");
    Catalog cat;
    cat.bound = bound;
    cat.precision = precision;
    for (int m = 0; m + 1 <= bound; ++m) {
        for (int n = 1; m + n <= bound; ++n) {
            OrbitIndex t{m, n};
            IntPoly f = exact_type_factor(t);
            if (f.degree() < 1) continue;
            RootSet rs = isolate_roots(f, precision);
            std::sort(rs.roots.begin(), rs.roots.end(), [](const auto& a, const auto& b) {
                int c = mpfr_cmp(a.ball.mid_re(), b.ball.mid_re());
                if (c != 0) return c < 0;
                return mpfr_cmp(a.ball.mid_im(), b.ball.mid_im()) < 0;
            });
            for (size_t k = 0; k < rs.roots.size(); ++k) {
                PcfParam p;
                p.type = t;
                p.ball = rs.roots[k].ball;
                p.degree_bound = f.degree();
                p.id = param_id(t, k);
                // Cross-check: the minimal-type classification agrees with the
                // factor the root came from.
                OrbitIndex cls = classify_exact_type(p.ball, t);
                if (!(cls == t))
                    throw IntegrityError("classification disagreement at " + p.id);
                cat.params.push_back(std::move(p));
            }
        }
    }
    cat.finalize();
    return cat;
}

void save_catalog(const Catalog& cat, const std::string& path) {
    nlohmann::ordered_json j;
    j["bound"] = cat.bound;
    j["precision"] = double_str(cat.precision);
    j["params"] = nlohmann::ordered_json::array();
    for (const PcfParam& p : cat.params) {
        nlohmann::ordered_json e;
        e["id"] = p.id;
        e["m"] = p.type.m;
        e["n"] = p.type.n;
        e["mid"] = {p.ball.mid_re_exact(), p.ball.mid_im_exact()};
        e["rad"] = p.ball.rad_exact();
        e["poly_degree"] = p.degree_bound;
        j["params"].push_back(std::move(e));
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << j.dump(1) << "\n";
    if (!out) throw IoError("write failed: " + path);
}

Catalog load_catalog(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("catalog parse error: ") + e.what());
    }
    Catalog cat;
    try {
        cat.bound = j.at("bound").get<int>();
        std::string prec_s = j.at("precision").get<std::string>();
        cat.precision = std::strtod(prec_s.c_str(), nullptr);
        for (const auto& e : j.at("params")) {
            PcfParam p;
            p.id = e.at("id").get<std::string>();
            p.type = OrbitIndex(e.at("m").get<int>(), e.at("n").get<int>());
            const auto& mid = e.at("mid");
            if (!mid.is_array() || mid.size() != 2)
                throw ParseError("param " + p.id + ": mid must be [re, im]");
            p.ball = Ball::from_exact_decimal(mid[0].get<std::string>(),
                                              mid[1].get<std::string>(),
                                              e.at("rad").get<std::string>());
            p.degree_bound = e.at("poly_degree").get<int>();
            cat.params.push_back(std::move(p));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("catalog field error: ") + e.what());
    }
    cat.finalize();
    return cat;
}

}  // namespace pcf
