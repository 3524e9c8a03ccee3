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

#include "dres/q_residues.hpp"

#include "dres/parfrac.hpp"
#include "orbits.hpp"

#include <algorithm>
#include <map>

namespace dres {

QParam::QParam(const Rat& q) : q_(q) {
    if (q.is_zero() || q.abs().is_one())
        throw ParameterError("q must be a rational number other than 0, 1 and -1");
}

namespace {

Poly reversal(const Poly& p) {
    std::vector<Rat> c(p.coeffs().rbegin(), p.coeffs().rend());
    return Poly(std::move(c));
}

}  // namespace

std::set<long> q_dispersion(const Poly& b1, const Poly& b2, const QParam& qp) {
    const Poly a = b1.monic();
    const Poly b = b2.monic();
    if (a.degree() < 1 || b.degree() < 1)
        return {};
    if (a[0].is_zero() || b[0].is_zero())
        throw InvalidInput("q_dispersion needs nonzero constant terms");
    // A common root means q^s = beta / alpha; bound |beta / alpha| above and
    // below with root bounds of b and of the reversal of a, and vice versa.
    const Rat upper = root_bound(b) * root_bound(reversal(a));
    const Rat lower = (root_bound(a) * root_bound(reversal(b))).inv();
    const Rat& q = qp.value();
    std::set<long> out;
    for (int dir : {1, -1}) {
        const Rat step = dir > 0 ? q : q.inv();
        Rat power(1);
        for (long s = 0;; s += dir) {
            const Rat mag = power.abs();
            if (mag > upper || mag < lower)
                break;
            if (resultant(a, dilate(b, power)).is_zero())
                out.insert(s);
            power *= step;
        }
    }
    return out;
}

namespace {

std::vector<detail::OrbitAtom> q_orbits(const std::vector<Poly>& moduli, const QParam& q) {
    detail::OrbitRelation rel;
    rel.relations = [q](const Poly& a, const Poly& b) {
        auto d = q_dispersion(a, b, q);
        return std::vector<long>(d.begin(), d.end());
    };
    // Roots of a that x -> q^s x carries into roots of b.
    rel.common = [q](const Poly& a, const Poly& b, long s) {
        return poly_gcd(a, dilate(b, q.value().pow(s)));
    };
    rel.to_other = [q](const Poly& g, long s) { return dilate(g, q.value().pow(-s)).monic(); };
    return detail::build_orbits(coprime_basis(moduli), rel);
}

// Moduli of the partial-fraction terms with any factor x removed.
std::vector<Poly> nonzero_pole_moduli(const SqfPartFrac& pf) {
    std::vector<Poly> out;
    for (const auto& t : pf.terms) {
        Poly m = t.modulus;
        if (m[0].is_zero())
            m = m / Poly::x();
        if (m.degree() > 0)
            out.push_back(m);
    }
    return out;
}

}  // namespace

std::vector<QAtom> q_atom_basis(const std::vector<Poly>& moduli, const QParam& q) {
    for (const auto& m : moduli)
        if (m.degree() > 0 && m[0].is_zero())
            throw InvalidInput("q atoms cannot carry a pole at zero");
    std::vector<QAtom> out;
    for (const auto& a : q_orbits(moduli, q))
        out.push_back({a.modulus, a.orbit_id, a.position});
    return out;
}

QResidues q_discrete_residues(const RatFun& f, const QParam& qp, long rebase) {
    const Rat& q = qp.value();
    const SqfPartFrac pf = sqf_partial_fractions(f);
    QResidues out;
    out.dres_infinity = pf.poly_part[0];

    const auto atoms = q_orbits(nonzero_pole_moduli(pf), qp);
    const auto residues = detail::atom_residues(pf, atoms);

    std::map<int, std::vector<const detail::AtomResidues*>> orbits;
    for (const auto& r : residues)
        orbits[r.atom->orbit_id].push_back(&r);

    for (const auto& [id, members] : orbits) {
        const Poly* base = nullptr;
        std::size_t max_order = 0;
        for (const auto* m : members) {
            if (m->atom->position == 0)
                base = &m->atom->modulus;
            max_order = std::max(max_order, m->c.size());
        }
        // Distinguished roots q^rebase * alpha for the roots alpha of base.
        const Poly rep = dilate(*base, q.pow(-rebase)).monic();
        for (std::size_t k = 1; k <= max_order; ++k) {
            Poly D;
            for (const auto* m : members) {
                if (m->c.size() < k)
                    continue;
                // Member roots are q^-n times the distinguished roots, which
                // is the term of index -n in the weighted orbit sum.
                const long n = m->atom->position + rebase;
                const auto kk = static_cast<long>(k);
                D += dilate(m->c[k - 1], q.pow(-n)).scaled(q.pow(n * kk));
            }
            out.certificates.push_back({static_cast<int>(k), id, rep, D % rep});
        }
    }
    return out;
}

QDecision is_q_summable(const RatFun& f, const QParam& q) {
    QDecision d;
    d.residues = q_discrete_residues(f, q);
    if (!d.residues.dres_infinity.is_zero())
        d.verdict = Verdict::NotSummable;
    for (const auto& c : d.residues.certificates)
        if (!c.D.is_zero())
            d.verdict = Verdict::NotSummable;
    return d;
}

RatFun q_delta(const RatFun& g, const QParam& q) { return dilate(g, q.value()) - g; }

}  // namespace dres
