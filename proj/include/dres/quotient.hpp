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

#include "dres/poly.hpp"

#include <vector>

namespace dres {

/// Element of Q[y]/(modulus) for a monic squarefree modulus. Evaluating
/// `value` at any root of `modulus` gives the represented algebraic number.
struct QuotientElem {
    Poly modulus;
    Poly value;
    friend bool operator==(const QuotientElem&, const QuotientElem&) = default;
};

/// Arithmetic in Q[y]/(m). Every result is reduced.
class QuotientRing {
public:
    /// Throws InvalidInput unless m is nonconstant and squarefree.
    explicit QuotientRing(const Poly& m);

    const Poly& modulus() const { return m_; }
    int degree() const { return m_.degree(); }

    Poly reduce(const Poly& p) const { return p % m_; }
    Poly add(const Poly& a, const Poly& b) const { return reduce(a + b); }
    Poly mul(const Poly& a, const Poly& b) const { return reduce(a * b); }
    Poly inv(const Poly& a) const { return inverse_mod(a, m_); }
    Poly pow(const Poly& a, unsigned long e) const;

    QuotientElem elem(const Poly& p) const { return {m_, reduce(p)}; }

    /// Truncated power series with coefficients in this ring; index i holds
    /// the coefficient of T^i.
    using Series = std::vector<Poly>;
    Series series_mul(const Series& a, const Series& b, std::size_t n) const;
    /// Inverse of a series with invertible constant term, to n terms.
    Series series_inv(const Series& a, std::size_t n) const;

private:
    Poly m_;
};

}  // namespace dres
