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

// Mahler operator sigma(x) = x^m.
//
// f splits into a Laurent component f_L (polynomial part plus the principal
// part at 0) and the complement f_T; f is summable iff both are. On f_L the
// exponent-class sums are the complete obstruction. For f_T only the
// structure of the poles is reported: they are grouped into Mahler trees
// (alpha ~ beta iff alpha^(m^r) == beta^(m^s)) with a search bound, and each
// atom is classified as torsion (roots of unity only) or not.

#include "dres/shift_residues.hpp"

#include <map>
#include <utility>
#include <vector>

namespace dres {

class MahlerParam {
public:
    /// Throws ParameterError for m < 2.
    explicit MahlerParam(long m);
    long value() const { return m_; }

private:
    long m_;
};

/// Sparse Laurent polynomial; zero coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    void add(long exponent, const Rat& c);
    const std::map<long, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    RatFun to_ratfun() const;
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    std::map<long, Rat> terms_;
};

struct ExponentClassResidue {
    long label = 0;
    Rat sum;
    friend bool operator==(const ExponentClassResidue&, const ExponentClassResidue&) = default;
};

struct TreeAtom {
    Poly modulus;
    int tree_id = 0;
    bool torsion = false;
    int bound_used = 0;
};

/// (f_L, f_T) with f == f_L + f_T.
std::pair<LaurentPoly, RatFun> laurent_split(const RatFun& f);

/// 0 for 0; otherwise j with every factor m removed, sign kept.
long exponent_class_label(long j, long m);

/// One entry per label in the support, ascending by label; zero sums kept.
std::vector<ExponentClassResidue> mahler_laurent_residues(const LaurentPoly& L, const MahlerParam& m);

Verdict is_mahler_summable_laurent(const LaurentPoly& L, const MahlerParam& m);

/// True iff every root of the squarefree atom is a root of unity.
bool is_torsion(const Poly& atom);

/// Splits the moduli into atoms and groups them into Mahler trees, searching
/// exponents m^r, m^s with 0 <= r, s <= bound. Throws ParameterError for
/// bound < 1.
std::vector<TreeAtom> mahler_tree_partition(const std::vector<Poly>& moduli, const MahlerParam& m,
                                            int bound);

struct MahlerReport {
    Verdict verdict = Verdict::Undecided;
    LaurentPoly laurent;
    std::vector<ExponentClassResidue> classes;
    Verdict laurent_verdict = Verdict::Summable;
    RatFun complement;
    std::vector<TreeAtom> trees;
};

MahlerReport mahler_report(const RatFun& f, const MahlerParam& m, int bound = 6);

/// sigma(g) - g for sigma(x) = x^m.
RatFun mahler_delta(const RatFun& g, const MahlerParam& m);
LaurentPoly mahler_delta(const LaurentPoly& g, const MahlerParam& m);

}  // namespace dres
