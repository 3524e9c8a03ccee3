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

#include "dres/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace dres::oracle {

const char* case_name(Case c) {
    switch (c) {
    case Case::Shift:
        return "shift";
    case Case::Q:
        return "q";
    case Case::MahlerLaurent:
        return "mahler";
    }
    return "shift";
}

namespace {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : e_(seed) {}
    // Uniform in [lo, hi]; plain modulo keeps the stream portable.
    long range(long lo, long hi) {
        return lo + static_cast<long>(e_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    long nonzero(long c) {
        long v = range(1, c);
        return range(0, 1) ? v : -v;
    }

private:
    std::mt19937_64 e_;
};

Poly lcm(const Poly& a, const Poly& b) { return ((a * b) / poly_gcd(a, b)).monic(); }

Poly reversal(const Poly& p) {
    std::vector<Rat> c(p.coeffs().rbegin(), p.coeffs().rend());
    return Poly(std::move(c));
}

// Is r an integral power q^s with s != 0?
bool is_q_power(const Rat& r, const Rat& q) {
    const Rat big = std::max(r.abs(), r.abs().inv());
    Rat p = q.abs() > Rat(1) ? q : q.inv();
    for (; p.abs() <= big; p *= (q.abs() > Rat(1) ? q : q.inv()))
        if (p == r || p == r.inv())
            return true;
    return false;
}

void validate_plants(Case kase, const std::vector<Plant>& plants, const Rat& q, long m) {
    for (std::size_t i = 0; i < plants.size(); ++i) {
        const Plant& a = plants[i];
        if (a.value.is_zero())
            throw InvalidInput("plant with zero value");
        if (kase != Case::MahlerLaurent && a.order < 1)
            throw InvalidInput("plant order must be positive");
        if (kase == Case::Q && a.point.is_zero())
            throw InvalidInput("q-case plants cannot sit at zero");
        if (kase == Case::MahlerLaurent && a.label != 0 && a.label % m == 0)
            throw InvalidInput("Mahler plant label must be 0 or m-free");
        for (std::size_t j = 0; j < i; ++j) {
            const Plant& b = plants[j];
            bool clash = false;
            switch (kase) {
            case Case::Shift:
                clash = (a.point - b.point).is_integer();
                break;
            case Case::Q:
                clash = a.point == b.point || is_q_power(a.point / b.point, q);
                break;
            case Case::MahlerLaurent:
                clash = a.label == b.label;
                break;
            }
            if (clash)
                throw InvalidInput("plants share an orbit");
        }
    }
}

Poly random_poly(Rng& rng, int degree, int coeff) {
    std::vector<Rat> c;
    for (int i = 0; i < degree; ++i)
        c.emplace_back(rng.range(-coeff, coeff));
    c.emplace_back(rng.nonzero(coeff));
    return Poly(std::move(c));
}

Poly random_factor(Rng& rng, const Shape& shape, bool avoid_zero) {
    for (;;) {
        const int d = static_cast<int>(rng.range(1, shape.max_factor_degree));
        std::vector<Rat> c;
        for (int i = 0; i < d; ++i)
            c.emplace_back(rng.range(-shape.coeff, shape.coeff));
        c.emplace_back(1);
        Poly p(std::move(c));
        if (avoid_zero && p[0].is_zero())
            continue;
        if (poly_gcd(p, p.derivative()).degree() > 0)
            continue;
        return p;
    }
}

// Largest |s| with gcd(a(x), b(x + s)) nonconstant, by direct search.
long shift_spread(const Poly& a, const Poly& b) {
    const Rat r = root_bound(a) + root_bound(b);
    const long w = static_cast<long>(r.num().get_si() / r.den().get_si()) + 1;
    long best = 0;
    for (long s = -w; s <= w; ++s)
        if (poly_gcd(a, taylor_shift(b, Rat(s))).degree() > 0)
            best = std::max(best, std::labs(s));
    return best;
}

// Largest |s| with gcd(a(x), b(q^s x)) nonconstant, by direct search.
long q_spread(const Poly& a, const Poly& b, const Rat& q) {
    const Rat big = root_bound(a) * root_bound(reversal(a)) * root_bound(b) * root_bound(reversal(b));
    long best = 0;
    Rat p(1);
    for (long s = 0; p.abs() <= big; ++s, p *= (q.abs() > Rat(1) ? q : q.inv())) {
        if (poly_gcd(a, dilate(b, p)).degree() > 0 || poly_gcd(b, dilate(a, p)).degree() > 0)
            best = std::max(best, s);
    }
    return best;
}

}  // namespace

Instance generate_instance(Case kase, std::uint64_t seed, const std::vector<Plant>& plants,
                           const Rat& q, long m, const Shape& shape) {
    if (kase == Case::Q && (q.is_zero() || q.abs().is_one()))
        throw ParameterError("q must be a rational number other than 0, 1 and -1");
    if (kase == Case::MahlerLaurent && m < 2)
        throw ParameterError("Mahler parameter m must be at least 2");
    validate_plants(kase, plants, q, m);

    Instance inst;
    inst.kase = kase;
    inst.q = q;
    inst.m = m;
    inst.seed = seed;
    inst.planted = plants;
    inst.summable = plants.empty();
    Rng rng(seed);

    if (kase == Case::MahlerLaurent) {
        std::map<long, Rat> g, f;
        const long terms = rng.range(1, shape.laurent_terms);
        for (long t = 0; t < terms; ++t)
            g[rng.range(-shape.laurent_exponent, shape.laurent_exponent)] += Rat(rng.nonzero(shape.coeff));
        for (const auto& [e, c] : g) {
            f[e * m] += c;
            f[e] -= c;
        }
        for (const auto& p : plants)
            f[p.label] += p.value;
        auto to_ratfun = [](const std::map<long, Rat>& terms) {
            RatFun acc;
            for (const auto& [e, c] : terms)
                if (!c.is_zero())
                    acc += RatFun(c) * RatFun::x().pow(e);
            return acc;
        };
        inst.g = to_ratfun(g);
        inst.f = to_ratfun(f);
        return inst;
    }

    const bool is_q = kase == Case::Q;
    Poly num = random_poly(rng, static_cast<int>(rng.range(0, shape.num_degree)), shape.coeff);
    Poly den = Poly::constant(Rat(1));
    std::vector<Poly> factors;
    int max_mult = 1;
    const long nfac = rng.range(1, shape.max_factors);
    for (long i = 0; i < nfac; ++i) {
        Poly d;
        for (bool fits = false; !fits;) {
            d = random_factor(rng, shape, is_q);
            fits = true;
            for (const auto& other : factors)
                fits = fits && (is_q ? q_spread(d, other, q) : shift_spread(d, other)) <= shape.max_dispersion;
            fits = fits && (is_q ? q_spread(d, d, q) : shift_spread(d, d)) <= shape.max_dispersion;
        }
        const int e = static_cast<int>(rng.range(1, shape.max_multiplicity));
        max_mult = std::max(max_mult, e);
        factors.push_back(d);
        den = den * pow(d, static_cast<unsigned>(e));
    }
    if (is_q && rng.range(0, 2) == 0) {
        const int e = static_cast<int>(rng.range(1, shape.max_multiplicity));
        max_mult = std::max(max_mult, e);
        den = den * Poly::monomial(Rat(1), e);
    }
    inst.g = RatFun(num, den);
    inst.f = is_q ? dilate(inst.g, q) - inst.g : taylor_shift(inst.g, Rat(1)) - inst.g;
    for (const auto& p : plants)
        inst.f += RatFun(p.value) / RatFun(pow(Poly::linear_root(p.point), static_cast<unsigned>(p.order)));

    long spread = 0;
    for (const auto& a : factors)
        for (const auto& b : factors)
            spread = std::max(spread, is_q ? q_spread(a, b, q) : shift_spread(a, b));
    const Poly gpoly = divmod(inst.g.num(), inst.g.den()).quot;
    inst.bounds.window = static_cast<int>(spread) + 1;
    inst.bounds.multiplicity = max_mult + 1;
    inst.bounds.poly_degree = std::max(0, gpoly.degree());
    return inst;
}

std::optional<std::vector<Rat>> solve_linear(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero())
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        const Rat inv = a[r][c].inv();
        for (std::size_t k = c; k < cols; ++k)
            if (!a[r][k].is_zero())
                a[r][k] *= inv;
        b[r] *= inv;
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c].is_zero())
                continue;
            const Rat f = a[i][c];
            for (std::size_t k = c; k < cols; ++k)
                if (!a[r][k].is_zero())
                    a[i][k] -= f * a[r][k];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (!b[i].is_zero())
            return std::nullopt;
    std::vector<Rat> u(cols);
    for (std::size_t i = r; i-- > 0;) {
        const std::size_t c = pivot_col[i];
        Rat acc = b[i];
        for (std::size_t k = c + 1; k < cols; ++k)
            if (!a[i][k].is_zero())
                acc -= a[i][k] * u[k];
        u[c] = acc;
    }
    return u;
}

namespace {

// Solves sum_j u_j * columns[j] == rhs coefficientwise.
std::optional<std::vector<Rat>> solve_columns(const std::vector<Poly>& columns, const Poly& rhs) {
    int top = rhs.degree();
    for (const auto& c : columns)
        top = std::max(top, c.degree());
    const auto rows = static_cast<std::size_t>(std::max(top, 0) + 1);
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(columns.size()));
    std::vector<Rat> b(rows);
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (int i = 0; i <= columns[j].degree(); ++i)
            a[static_cast<std::size_t>(i)][j] = columns[j][i];
    for (int i = 0; i <= rhs.degree(); ++i)
        b[static_cast<std::size_t>(i)] = rhs[i];
    return solve_linear(std::move(a), std::move(b));
}

struct Ansatz {
    Poly den;
    int poly_degree;
};

// g = sum_{j=1..P} u_j x^j + N(x) / den, with `sigma` acting on polynomials.
template <typename Sigma>
std::optional<RatFun> solve_ansatz(const RatFun& f, const Ansatz& an, Sigma sigma) {
    const Poly sden = sigma(an.den);
    const Poly L = lcm(lcm(an.den, sden), f.den());
    const Poly over_s = L / sden;
    const Poly over_d = L / an.den;
    std::vector<Poly> columns;
    for (int j = 1; j <= an.poly_degree; ++j) {
        const Poly xj = Poly::monomial(Rat(1), j);
        columns.push_back((sigma(xj) - xj) * L);
    }
    for (int j = 0; j < an.den.degree(); ++j) {
        const Poly xj = Poly::monomial(Rat(1), j);
        columns.push_back(sigma(xj) * over_s - xj * over_d);
    }
    const auto u = solve_columns(columns, f.num() * (L / f.den()));
    if (!u)
        return std::nullopt;
    std::vector<Rat> pc(static_cast<std::size_t>(an.poly_degree) + 1);
    for (int j = 1; j <= an.poly_degree; ++j)
        pc[static_cast<std::size_t>(j)] = (*u)[static_cast<std::size_t>(j - 1)];
    std::vector<Rat> nc(u->begin() + an.poly_degree, u->end());
    RatFun g = RatFun(Poly(std::move(pc))) + RatFun(Poly(std::move(nc)), an.den);
    const RatFun delta = RatFun(sigma(g.num()), sigma(g.den())) - g;
    if (delta != f)
        return std::nullopt;
    return g;
}

}  // namespace

std::optional<RatFun> solve_telescoper_shift(const RatFun& f, const AnsatzBounds& bounds) {
    if (f.is_zero())
        return RatFun();
    Poly den = Poly::constant(Rat(1));
    if (!f.is_polynomial()) {
        for (const auto& sf : squarefree_decomposition(f.den()))
            for (int s = 0; s <= bounds.window; ++s)
                den = lcm(den, pow(taylor_shift(sf.factor, Rat(s)),
                                   static_cast<unsigned>(std::max(bounds.multiplicity, sf.multiplicity))));
    }
    // Delta lowers polynomial degree by one.
    const int p = std::max(bounds.poly_degree, divmod(f.num(), f.den()).quot.degree() + 1);
    return solve_ansatz(f, Ansatz{den, p}, [](const Poly& x) { return taylor_shift(x, Rat(1)); });
}

std::optional<RatFun> solve_telescoper_q(const RatFun& f, const Rat& q, const AnsatzBounds& bounds) {
    if (q.is_zero() || q.abs().is_one())
        throw ParameterError("q must be a rational number other than 0, 1 and -1");
    if (f.is_zero())
        return RatFun();
    int zero_order = std::max(bounds.multiplicity, 1);
    Poly den = Poly::constant(Rat(1));
    // The outermost pole of g in each orbit survives in f; the others sit
    // towards zero when |q| > 1 and away from zero otherwise.
    const Rat step = q.abs() > Rat(1) ? q : q.inv();
    if (!f.is_polynomial()) {
        for (const auto& sf : squarefree_decomposition(f.den())) {
            Poly d = sf.factor;
            if (d[0].is_zero()) {
                zero_order = std::max(zero_order, sf.multiplicity);
                d = d / Poly::x();
            }
            if (d.degree() < 1)
                continue;
            const auto e = static_cast<unsigned>(std::max(bounds.multiplicity, sf.multiplicity));
            Rat u(1);
            for (int s = 0; s <= bounds.window; ++s, u *= step)
                den = lcm(den, pow(dilate(d, u).monic(), e));
        }
    }
    den = den * Poly::monomial(Rat(1), zero_order);
    const int p = std::max(bounds.poly_degree, divmod(f.num(), f.den()).quot.degree());
    return solve_ansatz(f, Ansatz{den, p}, [q](const Poly& x) { return dilate(x, q); });
}

std::optional<RatFun> solve_telescoper_mahler_laurent(const RatFun& f, long m) {
    if (m < 2)
        throw ParameterError("Mahler parameter m must be at least 2");
    const Poly& den = f.den();
    if (den.degree() != 0 && den != Poly::monomial(Rat(1), den.degree()))
        throw InvalidInput("not a Laurent polynomial");
    const long low = -den.degree();
    const long high = f.num().degree() + low;
    if (f.is_zero())
        return RatFun();
    // unknowns u_j for j in [low, high] \ {0}; equations for exponents
    // in [low * m, high * m]
    std::vector<long> js;
    for (long j = std::min(low, 0L); j <= std::max(high, 0L); ++j)
        if (j != 0)
            js.push_back(j);
    const long lo = std::min(low, 0L) * m;
    const long hi = std::max(high, 0L) * m;
    const auto rows = static_cast<std::size_t>(hi - lo + 1);
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(js.size()));
    std::vector<Rat> b(rows);
    for (std::size_t c = 0; c < js.size(); ++c) {
        a[static_cast<std::size_t>(js[c] * m - lo)][c] += Rat(1);
        a[static_cast<std::size_t>(js[c] - lo)][c] -= Rat(1);
    }
    for (int i = 0; i <= f.num().degree(); ++i)
        b[static_cast<std::size_t>(i + low - lo)] = f.num()[i];
    const auto u = solve_linear(std::move(a), std::move(b));
    if (!u)
        return std::nullopt;
    RatFun g;
    for (std::size_t c = 0; c < js.size(); ++c)
        if (!(*u)[c].is_zero())
            g += RatFun((*u)[c]) * RatFun::x().pow(js[c]);
    if (compose_power(g, static_cast<unsigned>(m)) - g != f)
        return std::nullopt;
    return g;
}

std::vector<Plant> default_plants(Case kase, int count, std::uint64_t seed, const Rat& q, long m) {
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<Plant> out;
    long prime = 2;
    long label = 0;
    for (int i = 0; i < count; ++i) {
        Plant p;
        p.order = static_cast<int>(rng.range(1, 3));
        p.value = Rat(rng.nonzero(9));
        switch (kase) {
        case Case::Shift:
            // Distinct fractional parts keep the orbits apart.
            p.point = Rat(rng.range(-5, 5)) + Rat(1, i + 2);
            break;
        case Case::Q:
            // Primes foreign to q are never related by a power of q.
            for (;;) {
                ++prime;
                bool is_prime = true;
                for (long d = 2; d * d <= prime; ++d)
                    is_prime = is_prime && prime % d != 0;
                if (is_prime && mpz_divisible_ui_p(q.num().get_mpz_t(), static_cast<unsigned long>(prime)) == 0 &&
                    mpz_divisible_ui_p(q.den().get_mpz_t(), static_cast<unsigned long>(prime)) == 0)
                    break;
            }
            p.point = Rat(rng.range(0, 1) ? prime : -prime);
            break;
        case Case::MahlerLaurent:
            do
                label += rng.range(1, 3);
            while (label % m == 0);
            p.label = rng.range(0, 1) ? label : -label;
            break;
        }
        out.push_back(p);
    }
    return out;
}

std::string serialize_instance(const Instance& inst) {
    std::ostringstream os;
    os << "# case=" << case_name(inst.kase);
    if (inst.kase == Case::Q)
        os << " q=" << inst.q.str();
    if (inst.kase == Case::MahlerLaurent)
        os << " m=" << inst.m;
    os << " seed=" << inst.seed << " truth=" << (inst.summable ? "SUMMABLE" : "NOT_SUMMABLE");
    if (!inst.planted.empty()) {
        os << " planted=";
        for (std::size_t i = 0; i < inst.planted.size(); ++i) {
            const Plant& p = inst.planted[i];
            if (i)
                os << ',';
            if (inst.kase == Case::MahlerLaurent)
                os << "label:" << p.label << ":" << p.value.str();
            else
                os << p.point.str() << ":" << p.order << ":" << p.value.str();
        }
    }
    os << '\n' << inst.f.str() << '\n';
    return os.str();
}

}  // namespace dres::oracle
