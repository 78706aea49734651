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

#include "pcf/intpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace pcf {

namespace {
const Int kZero = 0;
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(const Int& a) {
    IntPoly p;
    if (a != 0) p.c_.push_back(a);
    return p;
}

IntPoly IntPoly::monomial(const Int& a, int deg) {
    IntPoly p;
    if (a != 0) {
        p.c_.assign(static_cast<size_t>(deg) + 1, Int(0));
        p.c_.back() = a;
    }
    return p;
}

const Int& IntPoly::leading() const {
    if (c_.empty()) throw ContractError("leading coefficient of zero polynomial");
    return c_.back();
}

const Int& IntPoly::operator[](int i) const {
    if (i < 0 || static_cast<size_t>(i) >= c_.size()) return kZero;
    return c_[static_cast<size_t>(i)];
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly{};
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly{};
    std::vector<Int> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(i);
    return IntPoly(std::move(r));
}

Int IntPoly::eval(const Int& x) const {
    Int v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

Rat IntPoly::eval(const Rat& x) const {
    Rat v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

std::pair<Int, Int> IntPoly::eval_gaussian(const Int& re, const Int& im) const {
    Int vr = 0, vi = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        Int nr = vr * re - vi * im + *it;
        Int ni = vr * im + vi * re;
        vr = std::move(nr);
        vi = std::move(ni);
    }
    return {vr, vi};
}

std::pair<Rat, Rat> IntPoly::eval_gaussian(const Rat& re, const Rat& im) const {
    Rat vr = 0, vi = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        Rat nr = vr * re - vi * im + *it;
        Rat ni = vr * im + vi * re;
        vr = std::move(nr);
        vi = std::move(ni);
    }
    return {vr, vi};
}

IntPoly IntPoly::compose_neg() const {
    IntPoly r = *this;
    for (size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
}

Int IntPoly::content() const {
    Int g = 0;
    for (const auto& x : c_) {
        g = boost::multiprecision::gcd(g, x);
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return *this;
    Int g = content();
    if (leading() < 0) g = -g;
    IntPoly r = *this;
    for (auto& x : r.c_) x /= g;
    return r;
}

long IntPoly::coeff_bits() const {
    long b = 0;
    for (const auto& x : c_) {
        long s = static_cast<long>(mpz_sizeinbase(x.backend().data(), 2));
        if (x != 0) b = std::max(b, s);
    }
    return b;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& a = (*this)[i];
        if (a == 0) continue;
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        Int m = boost::multiprecision::abs(a);
        if (m != 1 || i == 0) os << m;
        if (i >= 1) os << "c";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

IntPoly exact_divide(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw ContractError("exact_divide by zero polynomial");
    if (a.is_zero()) return IntPoly{};
    int da = a.degree(), db = b.degree();
    if (da < db) throw ArithmeticError("non-exact division: remainder degree " + std::to_string(da));
    std::vector<Int> rem(a.coeffs());
    std::vector<Int> q(static_cast<size_t>(da - db) + 1, Int(0));
    const Int& bl = b.leading();
    for (int i = da; i >= db; --i) {
        Int& r = rem[static_cast<size_t>(i)];
        if (r == 0) continue;
        if (r % bl != 0)
            throw ArithmeticError("non-exact division: remainder degree " + std::to_string(i));
        Int qi = r / bl;
        for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(i - db + j)] -= qi * b[j];
        q[static_cast<size_t>(i - db)] = std::move(qi);
    }
    for (int i = db - 1; i >= 0; --i) {
        if (rem[static_cast<size_t>(i)] != 0)
            throw ArithmeticError("non-exact division: remainder degree " + std::to_string(i));
    }
    return IntPoly(std::move(q));
}

namespace {

// gcd over F_p as a fast coprimality certificate: for inputs whose leading
// coefficients are units mod p, gcd mod p == 1 implies gcd over Z is constant.
bool coprime_mod_p(const IntPoly& a, const IntPoly& b) {
    constexpr uint64_t p = 2147483647ULL;  // 2^31 - 1
    auto reduce = [&](const IntPoly& f) {
        std::vector<uint64_t> r(f.coeffs().size());
        for (size_t i = 0; i < r.size(); ++i) {
            Int m = f.coeffs()[i] % Int(p);
            if (m < 0) m += p;
            r[i] = m.convert_to<uint64_t>();
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    };
    auto u = reduce(a), v = reduce(b);
    // Leading coefficient vanished mod p: certificate unavailable.
    if (u.size() != a.coeffs().size() || v.size() != b.coeffs().size()) return false;
    auto powmod = [&](uint64_t base, uint64_t e) {
        uint64_t r = 1;
        while (e) {
            if (e & 1) r = (__uint128_t)r * base % p;
            base = (__uint128_t)base * base % p;
            e >>= 1;
        }
        return r;
    };
    while (!v.empty()) {
        // u mod v over F_p
        uint64_t vinv = powmod(v.back(), p - 2);
        while (u.size() >= v.size()) {
            uint64_t q = (__uint128_t)u.back() * vinv % p;
            size_t off = u.size() - v.size();
            for (size_t j = 0; j < v.size(); ++j) {
                uint64_t t = (__uint128_t)q * v[j] % p;
                u[off + j] = (u[off + j] + p - t) % p;
            }
            while (!u.empty() && u.back() == 0) u.pop_back();
            if (u.empty()) break;
        }
        std::swap(u, v);
    }
    return u.size() == 1;  // constant nonzero gcd mod p
}

// Pseudo-remainder of a by b (deg a >= deg b >= 0).
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> r(a.coeffs());
    int db = b.degree();
    const Int& bl = b.leading();
    int dr = a.degree();
    while (dr >= db) {
        Int lead = r[static_cast<size_t>(dr)];
        for (auto& x : r) x *= bl;
        for (int j = 0; j <= db; ++j) r[static_cast<size_t>(dr - db + j)] -= lead * b[j];
        while (!r.empty() && r.back() == 0) r.pop_back();
        dr = static_cast<int>(r.size()) - 1;
    }
    return IntPoly(std::move(r));
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    if (a.degree() > 0 && b.degree() > 0 && coprime_mod_p(a, b))
        return IntPoly{Int(1)};
    IntPoly u = a.primitive_part(), v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        if (v.degree() == 0) return IntPoly{Int(1)};
        IntPoly r = pseudo_rem(u, v).primitive_part();
        u = std::move(v);
        v = std::move(r);
    }
    return u;
}

IntPoly squarefree_part(const IntPoly& a) {
    if (a.is_zero()) throw ContractError("squarefree_part of zero polynomial");
    if (a.degree() == 0) return a;  // unit, no roots
    IntPoly g = gcd(a, a.derivative());
    if (g.degree() == 0) {
        IntPoly r = a.primitive_part();
        return r;
    }
    return exact_divide(a.primitive_part(), g);
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& a) {
    if (a.is_zero()) throw ContractError("squarefree_decomposition of zero polynomial");
    std::vector<std::pair<IntPoly, int>> out;
    IntPoly f = a.primitive_part();
    if (f.degree() == 0) return out;
    // Yun's algorithm.
    IntPoly g = gcd(f, f.derivative());
    if (g.degree() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    IntPoly w = exact_divide(f, g);
    IntPoly y = exact_divide(f.derivative(), g);
    int mult = 1;
    while (w.degree() > 0) {
        IntPoly z = y - w.derivative();
        IntPoly h = gcd(w, z);
        if (h.degree() > 0) out.emplace_back(h.primitive_part(), mult);
        w = exact_divide(w, h);
        y = exact_divide(z, h);
        ++mult;
    }
    return out;
}

OrbitIndex::OrbitIndex(int m_, int n_) : m(m_), n(n_) {
    if (m < 0 || n < 1) throw ContractError("OrbitIndex requires m >= 0, n >= 1");
}

IntPoly orbit_polynomial(int k, int degree_budget) {
    if (k < 1) throw ContractError("orbit_polynomial requires k >= 1");
    if (k > degree_budget || k > kMaxOrbitDepth)
        throw ResourceError("orbit polynomial degree 2^" + std::to_string(k - 1) +
                            " exceeds budget 2^" + std::to_string(degree_budget - 1));
    IntPoly c{Int(0), Int(1)};
    IntPoly p = c;  // p_1 = c
    for (int i = 2; i <= k; ++i) p = p.square() + c;
    return p;
}

IntPoly critical_relation_polynomial(const OrbitIndex& t, int degree_budget) {
    if (t.m == 0) return orbit_polynomial(t.n, degree_budget);
    return orbit_polynomial(t.m + t.n, degree_budget) - orbit_polynomial(t.m, degree_budget);
}

}  // namespace pcf
