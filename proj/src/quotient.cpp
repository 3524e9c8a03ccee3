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

#include "dres/quotient.hpp"

namespace dres {

QuotientRing::QuotientRing(const Poly& m) : m_(m.monic()) {
    if (m_.degree() < 1)
        throw InvalidInput("quotient ring modulus must be nonconstant");
    if (poly_gcd(m_, m_.derivative()).degree() > 0)
        throw InvalidInput("quotient ring modulus must be squarefree");
}

Poly QuotientRing::pow(const Poly& a, unsigned long e) const {
    Poly result = reduce(Poly::constant(Rat(1)));
    Poly base = reduce(a);
    while (e) {
        if (e & 1UL)
            result = mul(result, base);
        e >>= 1UL;
        if (e)
            base = mul(base, base);
    }
    return result;
}

QuotientRing::Series QuotientRing::series_mul(const Series& a, const Series& b,
                                              std::size_t n) const {
    Series out(n);
    for (std::size_t i = 0; i < a.size() && i < n; ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.size() && i + j < n; ++j)
            out[i + j] += a[i] * b[j];
    }
    for (auto& c : out)
        c = reduce(c);
    return out;
}

QuotientRing::Series QuotientRing::series_inv(const Series& a, std::size_t n) const {
    Series out(n);
    if (n == 0)
        return out;
    const Poly a0_inv = inv(a.empty() ? Poly{} : a[0]);
    out[0] = a0_inv;
    for (std::size_t i = 1; i < n; ++i) {
        Poly acc;
        for (std::size_t j = 1; j <= i && j < a.size(); ++j)
            acc += a[j] * out[i - j];
        out[i] = mul(-reduce(acc), a0_inv);
    }
    return out;
}

}  // namespace dres
