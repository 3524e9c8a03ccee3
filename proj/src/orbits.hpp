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

#pragma once

#include "dres/parfrac.hpp"
#include "dres/poly.hpp"

#include <functional>
#include <vector>

namespace dres::detail {

// A family of transforms T_s (s in Z) on polynomials with T_s T_t = T_{s+t}:
// x -> x + s for the shift case, x -> q^s x for the q-dilation case.
struct OrbitRelation {
    // All s such that a and T_s(b) share a root.
    std::function<std::vector<long>(const Poly& a, const Poly& b)> relations;
    // Monic gcd(a, T_s(b)): the roots of a that T_s carries into b.
    std::function<Poly(const Poly& a, const Poly& b, long s)> common;
    // Monic polynomial whose roots are the images in b of the roots of g.
    std::function<Poly(const Poly& g, long s)> to_other;
};

struct OrbitAtom {
    Poly modulus;
    int orbit_id = 0;
    long position = 0;  // modulus == T_position(representative)
};

// Refines a coprime basis until any two atoms are either unrelated or exact
// transforms of each other, then assigns orbits and nonnegative positions.
std::vector<OrbitAtom> build_orbits(std::vector<Poly> basis, const OrbitRelation& rel);

struct AtomResidues {
    const OrbitAtom* atom;
    std::vector<Poly> c;  // c[k-1] = C_k reduced modulo the atom
};

// Restricts the residue polynomials of every partial-fraction term to the
// atoms dividing its modulus. Atoms dividing no term get no coefficients.
std::vector<AtomResidues> atom_residues(const SqfPartFrac& pf, const std::vector<OrbitAtom>& atoms);

}  // namespace dres::detail
