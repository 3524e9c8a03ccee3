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

#include "dres/shift_residues.hpp"

#include "dres/parfrac.hpp"
#include "orbits.hpp"

#include <algorithm>
#include <map>

namespace dres {

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Summable:
        return "SUMMABLE";
    case Verdict::NotSummable:
        return "NOT_SUMMABLE";
    case Verdict::Undecided:
        return "UNDECIDED";
    }
    return "UNDECIDED";
}

std::set<long> dispersion_set(const Poly& b1, const Poly& b2) {
    const Poly a = b1.monic();
    const Poly b = b2.monic();
    if (a.degree() < 1 || b.degree() < 1)
        return {};
    // Res_x(a(x), b(x + s)) = prod (alpha_i + s - beta_j) has degree
    // deg a * deg b in s; recover it by interpolation.
    const int n = a.degree() * b.degree();
    std::vector<Rat> xs, ys;
    for (int s = 0; s <= n; ++s) {
        xs.emplace_back(s);
        ys.push_back(resultant(a, taylor_shift(b, Rat(s))));
    }
    const Poly res = interpolate(xs, ys);
    std::set<long> out;
    for (const Int& r : integer_roots(res)) {
        if (!r.fits_slong_p())
            throw InvalidInput("dispersion exceeds the supported range");
        out.insert(r.get_si());
    }
    return out;
}

namespace {

std::vector<detail::OrbitAtom> shift_orbits(const std::vector<Poly>& moduli) {
    detail::OrbitRelation rel;
    rel.relations = [](const Poly& a, const Poly& b) {
        auto d = dispersion_set(a, b);
        return std::vector<long>(d.begin(), d.end());
    };
    // Roots of a that x -> x + s carries into roots of b.
    rel.common = [](const Poly& a, const Poly& b, long s) {
        return poly_gcd(a, taylor_shift(b, Rat(s)));
    };
    rel.to_other = [](const Poly& g, long s) { return taylor_shift(g, Rat(-s)).monic(); };
    return detail::build_orbits(coprime_basis(moduli), rel);
}

}  // namespace

std::vector<ShiftAtom> shift_atom_basis(const std::vector<Poly>& moduli) {
    std::vector<ShiftAtom> out;
    for (const auto& a : shift_orbits(moduli))
        out.push_back({a.modulus, a.orbit_id, a.position});
    return out;
}

std::vector<ResidueCertificate> shift_discrete_residues(const RatFun& f) {
    const SqfPartFrac pf = sqf_partial_fractions(f);
    std::vector<Poly> moduli;
    for (const auto& t : pf.terms)
        moduli.push_back(t.modulus);
    const auto atoms = shift_orbits(moduli);
    const auto residues = detail::atom_residues(pf, atoms);

    std::map<int, std::vector<const detail::AtomResidues*>> orbits;
    for (const auto& r : residues)
        orbits[r.atom->orbit_id].push_back(&r);

    std::vector<ResidueCertificate> out;
    for (const auto& [id, members] : orbits) {
        const Poly* rep = nullptr;
        std::size_t max_order = 0;
        for (const auto* m : members) {
            if (m->atom->position == 0)
                rep = &m->atom->modulus;
            max_order = std::max(max_order, m->c.size());
        }
        for (std::size_t k = 1; k <= max_order; ++k) {
            Poly D;
            for (const auto* m : members) {
                if (m->c.size() < k)
                    continue;
                // Member roots are the representative roots minus the offset.
                D += taylor_shift(m->c[k - 1], Rat(-m->atom->position));
            }
            out.push_back({static_cast<int>(k), id, *rep, D % *rep});
        }
    }
    return out;
}

ShiftDecision is_shift_summable(const RatFun& f) {
    ShiftDecision d;
    d.certificates = shift_discrete_residues(f);
    for (const auto& c : d.certificates)
        if (!c.D.is_zero())
            d.verdict = Verdict::NotSummable;
    return d;
}

RatFun shift_delta(const RatFun& g) { return taylor_shift(g, Rat(1)) - g; }

}  // namespace dres
