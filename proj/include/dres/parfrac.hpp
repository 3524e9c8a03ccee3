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

// Squarefree partial fractions over Q.
//
// A rational function f is written as
//
//     f = p + sum_i sum_{k=1..e_i} a_{i,k} / d_i^k
//
// with d_i monic, squarefree and pairwise coprime, and deg a_{i,k} < deg d_i.
// The coefficients of the complete decomposition over the algebraic closure,
// c_k(alpha) for the roots alpha of d_i, are recovered as residue polynomials
// C_k in Q[y]/(d_i): C_k(alpha) = c_k(alpha) for every root alpha at once.

#include "dres/quotient.hpp"
#include "dres/ratfun.hpp"

#include <utility>
#include <vector>

namespace dres {

struct PartFracTerm {
    Poly modulus;              // d, monic squarefree
    int multiplicity = 0;      // e
    std::vector<Poly> digits;  // a_1..a_e, digit k-1 is the numerator over d^k
    friend bool operator==(const PartFracTerm&, const PartFracTerm&) = default;
};

struct SqfPartFrac {
    Poly poly_part;
    std::vector<PartFracTerm> terms;
    friend bool operator==(const SqfPartFrac&, const SqfPartFrac&) = default;

    /// Sum of all parts as a single rational function.
    RatFun reconstruct() const;
};

struct LocalExpansion {
    Poly modulus;
    int order = 0;
    std::vector<QuotientElem> coeffs;  // coeffs[j-1] = C_j
};

/// f = p + r with r proper.
std::pair<Poly, RatFun> proper_split(const RatFun& f);

SqfPartFrac sqf_partial_fractions(const RatFun& f);

/// Laurent coefficients C_1..C_{k_max} of sum_k digits[k-1]/d^k at every root
/// of d, as elements of Q[y]/(d). Throws NotInvertible when d is not
/// squarefree.
LocalExpansion residue_polys(const std::vector<Poly>& digits, const Poly& d, int k_max);

/// residue_polys with k_max equal to the term multiplicity.
LocalExpansion residue_polys(const PartFracTerm& term);

}  // namespace dres
