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

#include "orbits.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <utility>

namespace dres::detail {

namespace {

void replace_split(std::vector<Poly>& basis, std::size_t i, const Poly& part) {
    Poly rest = (basis[i] / part).monic();
    basis[i] = part.monic();
    basis.push_back(std::move(rest));
}

// One refinement step; returns true when an atom was split.
bool refine_once(std::vector<Poly>& basis, const OrbitRelation& rel) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            for (long s : rel.relations(basis[i], basis[j])) {
                if (i == j && s == 0)
                    continue;
                Poly g = rel.common(basis[i], basis[j], s);
                if (g.degree() < 1)
                    continue;
                if (g != basis[i]) {
                    replace_split(basis, i, g);
                    return true;
                }
                Poly h = rel.to_other(g, s);
                if (h != basis[j]) {
                    replace_split(basis, j, h);
                    return true;
                }
            }
        }
    }
    return false;
}

}  // namespace

std::vector<OrbitAtom> build_orbits(std::vector<Poly> basis, const OrbitRelation& rel) {
    for (auto& b : basis)
        b = b.monic();
    while (refine_once(basis, rel)) {
    }
    std::sort(basis.begin(), basis.end(), canonical_less);

    const std::size_t n = basis.size();
    // edges[i] = (j, s) with basis[i] == T_s(basis[j])
    std::vector<std::vector<std::pair<std::size_t, long>>> edges(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                for (long s : rel.relations(basis[i], basis[j]))
                    edges[i].push_back({j, s});

    std::vector<std::optional<long>> pos(n);
    std::vector<int> comp(n, -1);
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t start = 0; start < n; ++start) {
        if (comp[start] >= 0)
            continue;
        const int id = static_cast<int>(groups.size());
        groups.emplace_back();
        pos[start] = 0;
        comp[start] = id;
        std::vector<std::size_t> stack{start};
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            groups.back().push_back(i);
            for (auto [j, s] : edges[i]) {
                if (comp[j] >= 0)
                    continue;
                // pos_i = pos_j + s
                pos[j] = *pos[i] - s;
                comp[j] = id;
                stack.push_back(j);
            }
        }
    }

    struct Group {
        std::size_t rep;
        long min_pos;
        std::vector<std::size_t> members;
    };
    std::vector<Group> gs;
    for (auto& members : groups) {
        std::size_t rep = members.front();
        for (std::size_t m : members)
            if (*pos[m] < *pos[rep])
                rep = m;
        gs.push_back({rep, *pos[rep], members});
    }
    std::sort(gs.begin(), gs.end(), [&](const Group& a, const Group& b) {
        return canonical_less(basis[a.rep], basis[b.rep]);
    });

    std::vector<OrbitAtom> out;
    for (std::size_t g = 0; g < gs.size(); ++g) {
        std::vector<OrbitAtom> part;
        for (std::size_t m : gs[g].members)
            part.push_back({basis[m], static_cast<int>(g), *pos[m] - gs[g].min_pos});
        std::sort(part.begin(), part.end(),
                  [](const OrbitAtom& a, const OrbitAtom& b) { return a.position < b.position; });
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<AtomResidues> atom_residues(const SqfPartFrac& pf, const std::vector<OrbitAtom>& atoms) {
    std::vector<LocalExpansion> exps;
    for (const auto& t : pf.terms)
        exps.push_back(residue_polys(t));
    std::vector<AtomResidues> out;
    for (const auto& atom : atoms) {
        AtomResidues ar{&atom, {}};
        for (std::size_t t = 0; t < pf.terms.size(); ++t) {
            if (!divides(atom.modulus, pf.terms[t].modulus))
                continue;
            for (const auto& c : exps[t].coeffs)
                ar.c.push_back(c.value % atom.modulus);
            break;
        }
        out.push_back(std::move(ar));
    }
    return out;
}

}  // namespace dres::detail
