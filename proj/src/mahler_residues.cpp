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

#include "dres/mahler_residues.hpp"

#include "dres/parfrac.hpp"
#include "dres/quotient.hpp"

#include <algorithm>
#include <numeric>

namespace dres {

MahlerParam::MahlerParam(long m) : m_(m) {
    if (m < 2)
        throw ParameterError("Mahler parameter m must be at least 2");
}

void LaurentPoly::add(long exponent, const Rat& c) {
    Rat& slot = terms_[exponent];
    slot += c;
    if (slot.is_zero())
        terms_.erase(exponent);
}

RatFun LaurentPoly::to_ratfun() const {
    if (terms_.empty())
        return {};
    const long low = std::min(0L, terms_.begin()->first);
    std::vector<Rat> c(static_cast<std::size_t>(terms_.rbegin()->first - low + 1));
    for (const auto& [e, v] : terms_)
        c[static_cast<std::size_t>(e - low)] = v;
    return RatFun(Poly(std::move(c)), Poly::monomial(Rat(1), static_cast<int>(-low)));
}

std::pair<LaurentPoly, RatFun> laurent_split(const RatFun& f) {
    const SqfPartFrac pf = sqf_partial_fractions(f);
    LaurentPoly L;
    for (int i = 0; i <= pf.poly_part.degree(); ++i)
        if (!pf.poly_part[i].is_zero())
            L.add(i, pf.poly_part[i]);
    for (const auto& t : pf.terms) {
        if (!t.modulus[0].is_zero())
            continue;
        const LocalExpansion ex = residue_polys(t);
        for (std::size_t k = 1; k <= ex.coeffs.size(); ++k)
            L.add(-static_cast<long>(k), ex.coeffs[k - 1].value.eval(Rat(0)));
    }
    return {L, f - L.to_ratfun()};
}

long exponent_class_label(long j, long m) {
    if (m < 2)
        throw ParameterError("Mahler parameter m must be at least 2");
    if (j == 0)
        return 0;
    while (j % m == 0)
        j /= m;
    return j;
}

std::vector<ExponentClassResidue> mahler_laurent_residues(const LaurentPoly& L, const MahlerParam& m) {
    std::map<long, Rat> sums;
    for (const auto& [e, c] : L.terms())
        sums[exponent_class_label(e, m.value())] += c;
    std::vector<ExponentClassResidue> out;
    for (const auto& [label, sum] : sums)
        out.push_back({label, sum});
    return out;
}

Verdict is_mahler_summable_laurent(const LaurentPoly& L, const MahlerParam& m) {
    for (const auto& r : mahler_laurent_residues(L, m))
        if (!r.sum.is_zero())
            return Verdict::NotSummable;
    return Verdict::Summable;
}

namespace {

long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        while (n % p == 0)
            n /= p;
        result -= result / p;
    }
    if (n > 1)
        result -= result / n;
    return result;
}

// Product of the roots of unity among the roots of the squarefree atom.
Poly torsion_part(const Poly& atom) {
    const QuotientRing ring(atom);
    const long d = atom.degree();
    Poly part = Poly::constant(Rat(1));
    // phi(n) >= sqrt(n / 2), so phi(n) <= d forces n <= 2 d^2.
    for (long n = 1; n <= 2 * d * d; ++n) {
        if (euler_phi(n) > d)
            continue;
        Poly xn = ring.pow(Poly::x(), static_cast<unsigned long>(n));
        Poly g = poly_gcd(atom, xn - Poly::constant(Rat(1)));
        if (g.degree() > 0)
            part = (part * g) / poly_gcd(part, g);
        if (part.degree() == d)
            break;
    }
    return part.monic();
}

// Q(y^e) reduced modulo the atom.
Poly compose_power_mod(const Poly& Q, unsigned long e, const QuotientRing& ring) {
    const Poly z = ring.pow(Poly::x(), e);
    Poly acc;
    for (int k = Q.degree(); k >= 0; --k)
        acc = ring.add(ring.mul(acc, z), Poly::constant(Q[k]));
    return acc;
}

std::vector<Poly> power_chain(const Poly& atom, unsigned long m, int bound) {
    std::vector<Poly> chain{atom};
    for (int r = 1; r <= bound; ++r)
        chain.push_back(squarefree_part(power_poly(chain.back(), m)));
    return chain;
}

}  // namespace

bool is_torsion(const Poly& atom) {
    if (atom.degree() < 1)
        return false;
    return torsion_part(atom.monic()).degree() == atom.degree();
}

std::vector<TreeAtom> mahler_tree_partition(const std::vector<Poly>& moduli, const MahlerParam& mp,
                                            int bound) {
    if (bound < 1)
        throw ParameterError("tree search bound must be at least 1");
    const auto m = static_cast<unsigned long>(mp.value());

    std::vector<Poly> atoms;
    for (const Poly& a : coprime_basis(moduli)) {
        if (a[0].is_zero())
            throw InvalidInput("Mahler tree atoms cannot vanish at zero");
        if (poly_gcd(a, a.derivative()).degree() > 0)
            throw InvalidInput("Mahler tree moduli must be squarefree");
        // Torsion and non-torsion roots never share a tree.
        Poly t = torsion_part(a);
        if (t.degree() > 0 && t.degree() < a.degree()) {
            atoms.push_back(t);
            atoms.push_back((a / t).monic());
        } else {
            atoms.push_back(a);
        }
    }

    std::vector<std::vector<Poly>> chains;
    for (const auto& a : atoms)
        chains.push_back(power_chain(a, m, bound));

    std::vector<unsigned long> mpow{1};
    for (int r = 1; r <= bound; ++r) {
        unsigned long next = 0;
        if (__builtin_mul_overflow(mpow.back(), m, &next))
            throw ParameterError("m^bound exceeds the supported range");
        mpow.push_back(next);
    }

    // Split atoms until each one is related to another atom at a given
    // (r, s) either through all of its roots or through none of them.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < atoms.size() && !changed; ++i) {
            const QuotientRing ring(atoms[i]);
            for (std::size_t j = 0; j < atoms.size() && !changed; ++j) {
                if (i == j)
                    continue;
                for (int r = 0; r <= bound && !changed; ++r) {
                    for (int s = 0; s <= bound && !changed; ++s) {
                        Poly common = poly_gcd(chains[i][static_cast<std::size_t>(r)],
                                               chains[j][static_cast<std::size_t>(s)]);
                        if (common.degree() < 1)
                            continue;
                        Poly image = compose_power_mod(common, mpow[static_cast<std::size_t>(r)], ring);
                        Poly g = image.is_zero() ? atoms[i] : poly_gcd(atoms[i], image);
                        if (g.degree() < 1 || g == atoms[i])
                            continue;
                        Poly rest = (atoms[i] / g).monic();
                        atoms[i] = g;
                        chains[i] = power_chain(g, m, bound);
                        atoms.push_back(rest);
                        chains.push_back(power_chain(rest, m, bound));
                        changed = true;
                    }
                }
            }
        }
    }

    const std::size_t n = atoms.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (int r = 0; r <= bound; ++r)
                for (int s = 0; s <= bound; ++s)
                    if (poly_gcd(chains[i][static_cast<std::size_t>(r)],
                                 chains[j][static_cast<std::size_t>(s)])
                            .degree() > 0)
                        parent[find(i)] = find(j);

    // Trees are numbered in the canonical order of their smallest atom.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return canonical_less(atoms[a], atoms[b]); });
    std::map<std::size_t, int> tree_of_root;
    std::vector<TreeAtom> out;
    for (std::size_t i : order) {
        auto [it, inserted] = tree_of_root.emplace(find(i), static_cast<int>(tree_of_root.size()));
        out.push_back({atoms[i], it->second, is_torsion(atoms[i]), bound});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const TreeAtom& a, const TreeAtom& b) { return a.tree_id < b.tree_id; });
    return out;
}

MahlerReport mahler_report(const RatFun& f, const MahlerParam& m, int bound) {
    if (bound < 1)
        throw ParameterError("tree search bound must be at least 1");
    MahlerReport rep;
    auto [L, fT] = laurent_split(f);
    rep.laurent = L;
    rep.complement = fT;
    rep.classes = mahler_laurent_residues(L, m);
    rep.laurent_verdict = is_mahler_summable_laurent(L, m);
    if (!fT.is_zero()) {
        std::vector<Poly> moduli;
        for (const auto& sf : squarefree_decomposition(fT.den()))
            moduli.push_back(sf.factor);
        rep.trees = mahler_tree_partition(moduli, m, bound);
    }
    if (rep.laurent_verdict == Verdict::NotSummable)
        rep.verdict = Verdict::NotSummable;
    else if (fT.is_zero())
        rep.verdict = Verdict::Summable;
    else
        rep.verdict = Verdict::Undecided;
    return rep;
}

RatFun mahler_delta(const RatFun& g, const MahlerParam& m) {
    return compose_power(g, static_cast<unsigned>(m.value())) - g;
}

LaurentPoly mahler_delta(const LaurentPoly& g, const MahlerParam& m) {
    LaurentPoly out;
    for (const auto& [e, c] : g.terms()) {
        out.add(e * m.value(), c);
        out.add(e, -c);
    }
    return out;
}

}  // namespace dres
