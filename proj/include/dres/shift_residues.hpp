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

// Discrete residues for the shift operator x -> x + 1.
//
// The poles of f are grouped into orbits under integer translation. Poles are
// carried by "atoms": monic squarefree factors of the denominator that are
// pairwise either coprime under every integer shift, or exact shifts of each
// other. Each class of mutually shifted atoms has a representative atom, and
// the residue of order k at the orbit of a representative root alpha is
// returned as a polynomial D with D(alpha) = sum over the orbit of the order-k
// Laurent coefficients.

#include "dres/ratfun.hpp"

#include <set>
#include <vector>

namespace dres {

enum class Verdict { Summable, NotSummable, Undecided };

const char* verdict_name(Verdict v);

/// atom(x) == representative(x + offset); the representative has offset 0
/// and every offset in the orbit is >= 0.
struct ShiftAtom {
    Poly modulus;
    int orbit_id = 0;
    long offset = 0;
    friend bool operator==(const ShiftAtom&, const ShiftAtom&) = default;
};

struct ResidueCertificate {
    int order = 0;
    int orbit_id = 0;
    Poly rep_modulus;
    Poly D;  // reduced modulo rep_modulus
};

/// Integers s with gcd(b1(x), b2(x + s)) nonconstant, ascending.
std::set<long> dispersion_set(const Poly& b1, const Poly& b2);

/// Splits the moduli into shift-aligned atoms and groups them into orbits.
/// Atoms are sorted by (orbit_id, offset); orbit ids follow the canonical
/// order of the representatives.
std::vector<ShiftAtom> shift_atom_basis(const std::vector<Poly>& moduli);

/// One certificate per orbit and per order 1..(largest pole order in the
/// orbit). Zero certificates are kept.
std::vector<ResidueCertificate> shift_discrete_residues(const RatFun& f);

struct ShiftDecision {
    Verdict verdict = Verdict::Summable;
    std::vector<ResidueCertificate> certificates;
};

ShiftDecision is_shift_summable(const RatFun& f);

/// sigma(g) - g for sigma(x) = x + 1.
RatFun shift_delta(const RatFun& g);

}  // namespace dres
