/*
 * Copyright 2026 The dres Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "dres/poly.hpp"

#include <algorithm>
#include <cstdlib>

namespace dres {

namespace {

const Rat kZero;

}  // namespace

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::monomial(const Rat& c, int k) {
    if (k < 0)
        throw InvalidInput("negative monomial degree");
    std::vector<Rat> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

const Rat& Poly::operator[](int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size()))
        return kZero;
    return c_[static_cast<std::size_t>(i)];
}

const Rat& Poly::lc() const {
    if (c_.empty())
        throw InvalidInput("leading coefficient of the zero polynomial");
    return c_.back();
}

Rat Poly::eval(const Rat& at) const {
    Rat acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= at;
        acc += *it;
    }
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1)
        return {};
    std::vector<Rat> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    if (c_.empty())
        return {};
    return scaled(lc().inv());
}

Poly Poly::scaled(const Rat& s) const {
    if (s.is_zero())
        return {};
    std::vector<Rat> v = c_;
    for (auto& c : v)
        c *= s;
    return Poly(std::move(v));
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rat> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
}

bool canonical_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        if (a[i] != b[i])
            return a[i] < b[i];
    }
    return false;
}

std::string Poly::str(const char* var) const {
    if (c_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rat& c = (*this)[k];
        if (c.is_zero())
            continue;
        Rat mag = c;
        if (first) {
            if (c.sign() < 0) {
                out += "-";
                mag = -c;
            }
        } else {
            out += c.sign() < 0 ? " - " : " + ";
            mag = c.abs();
        }
        first = false;
        if (k == 0) {
            out += mag.str();
            continue;
        }
        if (!mag.is_one())
            out += mag.str() + "*";
        out += var;
        if (k > 1)
            out += "^" + std::to_string(k);
    }
    return out;
}

DivMod divmod(const Poly& a, const Poly& b) {
    if (b.is_zero())
        throw InvalidInput("polynomial division by zero");
    if (a.degree() < b.degree())
        return {Poly{}, a};
    std::vector<Rat> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<Rat> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const int db = b.degree();
    const Rat inv_lc = b.lc().inv();
    for (int k = a.degree() - db; k >= 0; --k) {
        Rat q = rem[static_cast<std::size_t>(k + db)] * inv_lc;
        quot[static_cast<std::size_t>(k)] = q;
        if (q.is_zero())
            continue;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k + j)] -= q * b[j];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).rem; }
Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quot; }

bool divides(const Poly& d, const Poly& p) { return (p % d).is_zero(); }

Poly pow(const Poly& p, unsigned e) {
    Poly result = Poly::constant(Rat(1));
    Poly base = p;
    while (e) {
        if (e & 1U)
            result = result * base;
        e >>= 1U;
        if (e)
            base = base * base;
    }
    return result;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero())
        throw InvalidInput("gcd of two zero polynomials");
    Poly u = a.monic();
    Poly v = b.monic();
    while (!v.is_zero()) {
        Poly r = (u % v).monic();
        u = std::move(v);
        v = std::move(r);
    }
    return u;
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero())
        throw InvalidInput("gcd of two zero polynomials");
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(Rat(1)), s1;
    Poly t0, t1 = Poly::constant(Rat(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - q * s1;
        Poly t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    Rat k = r0.lc().inv();
    return {r0.scaled(k), s0.scaled(k), t0.scaled(k)};
}

Rat resultant(const Poly& a_in, const Poly& b_in) {
    if (a_in.is_zero() || b_in.is_zero())
        throw InvalidInput("resultant with a zero polynomial");
    Poly a = a_in, b = b_in;
    Rat acc(1);
    for (;;) {
        const int m = a.degree();
        const int n = b.degree();
        if (n == 0)
            return acc * b.lc().pow(m);
        Poly r = a % b;
        if (r.is_zero())
            return Rat(0);
        if ((m % 2 == 1) && (n % 2 == 1))
            acc = -acc;
        acc *= b.lc().pow(m - r.degree());
        a = std::move(b);
        b = std::move(r);
    }
}

std::vector<SqfFactor> squarefree_decomposition(const Poly& p) {
    if (p.is_zero())
        throw InvalidInput("squarefree decomposition of zero");
    std::vector<SqfFactor> out;
    if (p.degree() < 1)
        return out;
    Poly f = p.monic();
    Poly fp = f.derivative();
    Poly a0 = poly_gcd(f, fp);
    Poly b = f / a0;
    Poly c = fp / a0;
    Poly d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        Poly a = poly_gcd(b, d);
        if (a.degree() > 0)
            out.push_back({a, i});
        b = b / a;
        c = d / a;
        d = c - b.derivative();
    }
    return out;
}

Poly squarefree_part(const Poly& p) {
    if (p.is_zero())
        throw InvalidInput("squarefree part of zero");
    if (p.degree() < 1)
        return Poly::constant(Rat(1));
    Poly f = p.monic();
    return f / poly_gcd(f, f.derivative());
}

Poly taylor_shift(const Poly& p, const Rat& a) {
    if (a.is_zero())
        return p;
    const Poly lin{a, Rat(1)};
    Poly acc;
    for (int k = p.degree(); k >= 0; --k)
        acc = acc * lin + Poly::constant(p[k]);
    return acc;
}

Poly dilate(const Poly& p, const Rat& u) {
    if (u.is_zero())
        throw InvalidInput("dilation by zero");
    std::vector<Rat> v(p.coeffs().begin(), p.coeffs().end());
    Rat f(1);
    for (auto& c : v) {
        c *= f;
        f *= u;
    }
    return Poly(std::move(v));
}

Poly compose(const Poly& p, const Poly& q) {
    Poly acc;
    for (int k = p.degree(); k >= 0; --k)
        acc = acc * q + Poly::constant(p[k]);
    return acc;
}

namespace {

Poly powmod(Poly base, unsigned long e, const Poly& m) {
    Poly result = Poly::constant(Rat(1)) % m;
    base = base % m;
    while (e) {
        if (e & 1UL)
            result = (result * base) % m;
        e >>= 1UL;
        if (e)
            base = (base * base) % m;
    }
    return result;
}

}  // namespace

Poly power_poly(const Poly& b, unsigned long t) {
    if (t == 0)
        throw InvalidInput("power_poly with t = 0");
    if (b.degree() < 1)
        throw InvalidInput("power_poly of a constant");
    const Poly mb = b.monic();
    if (t == 1)
        return mb;
    // Res_y(b(y), X - y^t) = prod (X - alpha^t), sampled at X = 0..deg b.
    const Poly yt = powmod(Poly::x(), t, mb);
    const int n = mb.degree();
    std::vector<Rat> xs, ys;
    for (int i = 0; i <= n; ++i) {
        Rat X(i);
        Poly c = Poly::constant(X) - yt;
        xs.push_back(X);
        ys.push_back(c.is_zero() ? Rat(0) : resultant(mb, c));
    }
    return interpolate(xs, ys);
}

Poly inverse_mod(const Poly& a, const Poly& m) {
    if (m.degree() < 1)
        throw InvalidInput("inverse_mod needs a nonconstant modulus");
    Poly ar = a % m;
    if (ar.is_zero())
        throw NotInvertible(m.monic());
    ExtGcd e = ext_gcd(ar, m);
    if (e.g.degree() > 0)
        throw NotInvertible(e.g);
    return e.s % m;
}

Poly interpolate(std::span<const Rat> xs, std::span<const Rat> ys) {
    if (xs.size() != ys.size())
        throw InvalidInput("interpolate: size mismatch");
    const std::size_t n = xs.size();
    std::vector<Rat> dd(ys.begin(), ys.end());
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
    Poly acc;
    for (std::size_t i = n; i-- > 0;)
        acc = acc * Poly{-xs[i], Rat(1)} + Poly::constant(dd[i]);
    return acc;
}

namespace {

// Integer coefficients of the primitive part of a rational polynomial.
std::vector<Int> primitive_integer(const Poly& p) {
    Int l = 1;
    for (const Rat& c : p.coeffs())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    std::vector<Int> z;
    Int g = 0;
    for (const Rat& c : p.coeffs()) {
        z.push_back(c.num() * (l / c.den()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
    }
    if (g != 0 && g != 1)
        for (auto& v : z)
            v /= g;
    return z;
}

Int eval_mod(const std::vector<Int>& z, const Int& x, const Int& m) {
    Int acc = 0;
    for (auto it = z.rbegin(); it != z.rend(); ++it) {
        acc = acc * x + *it;
        mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
    }
    return acc;
}

bool is_prime(unsigned long n) {
    if (n < 2)
        return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

}  // namespace

std::vector<Int> integer_roots(const Poly& p) {
    if (p.is_zero())
        throw InvalidInput("integer roots of the zero polynomial");
    std::vector<Int> roots;
    if (p.degree() < 1)
        return roots;
    Poly s = squarefree_part(p);
    if (s[0].is_zero()) {
        roots.emplace_back(0);
        s = s / Poly::x();
    }
    if (s.degree() >= 1) {
        std::vector<Int> z = primitive_integer(s);
        std::vector<Int> dz;
        for (std::size_t i = 1; i < z.size(); ++i)
            dz.push_back(z[i] * static_cast<unsigned long>(i));
        const Int lead = abs(z.back());
        Int bound = 0;
        for (std::size_t i = 0; i + 1 < z.size(); ++i) {
            Int q;
            mpz_cdiv_q(q.get_mpz_t(), Int(abs(z[i])).get_mpz_t(), lead.get_mpz_t());
            bound = std::max(bound, q);
        }
        bound += 1;
        const Int window = 2 * bound + 1;

        for (unsigned long prime = 3;; prime += 2) {
            if (!is_prime(prime))
                continue;
            const Int P(prime);
            if (lead % P == 0)
                continue;
            std::vector<Int> local;
            bool separable = true;
            for (unsigned long r = 0; r < prime && separable; ++r) {
                Int R(r);
                if (eval_mod(z, R, P) != 0)
                    continue;
                if (eval_mod(dz, R, P) == 0)
                    separable = false;
                else
                    local.push_back(R);
            }
            if (!separable)
                continue;
            for (Int r : local) {
                // Newton lifting doubles the precision each round.
                Int mod = P;
                while (mod < window) {
                    Int mod2 = mod * mod;
                    Int fr = eval_mod(z, r, mod2);
                    Int dr = eval_mod(dz, r, mod2);
                    Int inv;
                    mpz_invert(inv.get_mpz_t(), dr.get_mpz_t(), mod2.get_mpz_t());
                    r = r - fr * inv;
                    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), mod2.get_mpz_t());
                    mod = mod2;
                }
                Int cand = r;
                if (cand > mod / 2)
                    cand -= mod;
                if (abs(cand) > bound)
                    continue;
                if (s.eval(Rat(cand)).is_zero())
                    roots.push_back(cand);
            }
            break;
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<Rat> rational_roots(const Poly& p) {
    if (p.is_zero())
        throw InvalidInput("rational roots of the zero polynomial");
    std::vector<Rat> roots;
    if (p.degree() < 1)
        return roots;
    const std::vector<Int> z = primitive_integer(squarefree_part(p));
    const Int lead = z.back();
    // The roots of p(y / lead) * lead^(n-1) / z_n are lead times those of p,
    // and that polynomial is monic with integer coefficients.
    const Poly scaled = dilate(Poly(std::vector<Rat>(z.begin(), z.end())), Rat(Int(1), lead)).monic();
    for (const Int& y : integer_roots(scaled))
        roots.emplace_back(y, lead);
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<Poly> coprime_basis(std::span<const Poly> polys) {
    std::vector<Poly> basis;
    for (const Poly& p : polys)
        if (p.degree() > 0)
            basis.push_back(p.monic());
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < basis.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < basis.size() && !changed; ++j) {
                Poly g = poly_gcd(basis[i], basis[j]);
                if (g.degree() < 1)
                    continue;
                Poly a = basis[i] / g;
                Poly b = basis[j] / g;
                basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(j));
                basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
                for (Poly* q : {&a, &b, &g})
                    if (q->degree() > 0)
                        basis.push_back(q->monic());
                changed = true;
            }
        }
    }
    std::sort(basis.begin(), basis.end(), canonical_less);
    return basis;
}

Rat root_bound(const Poly& p) {
    if (p.degree() < 1)
        throw InvalidInput("root bound of a constant");
    Rat m;
    for (int i = 0; i < p.degree(); ++i)
        m = std::max(m, (p[i] / p.lc()).abs());
    return m + Rat(1);
}

}  // namespace dres
