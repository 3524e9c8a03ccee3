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

// q-discrete residues for sigma(x) = q x with rational q not in {0, 1, -1}.
//
// Orbits are the classes of nonzero poles under multiplication by powers of
// q. For an orbit with distinguished root alpha the order-k residue is
//
//     sum_n q^(-n k) c_k(q^n alpha)
//
// and the obstruction at infinity is the constant term of the polynomial
// part. Poles at zero never obstruct: x^-k = Delta(x^-k / (q^-k - 1)).

#include "dres/shift_residues.hpp"

#include <set>
#include <vector>

namespace dres {

/// Validated q parameter.
class QParam {
public:
    /// Throws ParameterError for q in {0, 1, -1}.
    explicit QParam(const Rat& q);
    const Rat& value() const { return q_; }

private:
    Rat q_;
};

/// atom(x) is proportional to representative(q^exponent x), so the roots of
/// the atom are the representative roots divided by q^exponent.
struct QAtom {
    Poly modulus;
    int orbit_id = 0;
    long exponent = 0;
    friend bool operator==(const QAtom&, const QAtom&) = default;
};

struct QResidueCertificate {
    int order = 0;
    int orbit_id = 0;
    Poly rep_modulus;
    Poly D;
};

/// Integers s with gcd(b1(x), b2(q^s x)) nonconstant. Both inputs need a
/// nonzero constant term.
std::set<long> q_dispersion(const Poly& b1, const Poly& b2, const QParam& q);

std::vector<QAtom> q_atom_basis(const std::vector<Poly>& moduli, const QParam& q);

struct QResidues {
    Rat dres_infinity;
    std::vector<QResidueCertificate> certificates;
};

/// `rebase` moves every distinguished root alpha to q^rebase * alpha; the
/// evaluated order-k residues then scale by q^(rebase * k).
QResidues q_discrete_residues(const RatFun& f, const QParam& q, long rebase = 0);

struct QDecision {
    Verdict verdict = Verdict::Summable;
    QResidues residues;
};

QDecision is_q_summable(const RatFun& f, const QParam& q);

/// sigma(g) - g for sigma(x) = q x.
RatFun q_delta(const RatFun& g, const QParam& q);

}  // namespace dres
