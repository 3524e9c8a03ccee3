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

#include "dres/parfrac.hpp"

#include <algorithm>

namespace dres {

std::pair<Poly, RatFun> proper_split(const RatFun& f) {
    auto [q, r] = divmod(f.num(), f.den());
    return {q, RatFun(r, f.den())};
}

RatFun SqfPartFrac::reconstruct() const {
    RatFun acc(poly_part);
    for (const auto& t : terms) {
        RatFun dk(Poly::constant(Rat(1)));
        for (const auto& a : t.digits) {
            dk *= RatFun(t.modulus);
            acc += RatFun(a, dk.num());
        }
    }
    return acc;
}

SqfPartFrac sqf_partial_fractions(const RatFun& f) {
    SqfPartFrac out;
    auto [p, r] = proper_split(f);
    out.poly_part = p;
    if (r.is_zero())
        return out;

    // Rational linear factors are split off each squarefree block; the
    // remaining cofactor is kept whole.
    std::vector<SqfFactor> factors;
    for (const SqfFactor& sf : squarefree_decomposition(r.den())) {
        std::vector<Poly> parts;
        Poly rest_block = sf.factor;
        for (const Rat& root : rational_roots(sf.factor)) {
            parts.push_back(Poly::linear_root(root));
            rest_block = rest_block / parts.back();
        }
        if (rest_block.degree() > 0)
            parts.push_back(rest_block.monic());
        std::sort(parts.begin(), parts.end(), canonical_less);
        for (Poly& d : parts)
            factors.push_back({std::move(d), sf.multiplicity});
    }
    Poly num = r.num();
    Poly rest = r.den();
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const Poly& d = factors[i].factor;
        const int e = factors[i].multiplicity;
        const Poly block = pow(d, static_cast<unsigned>(e));
        Poly block_num;
        if (i + 1 == factors.size()) {
            block_num = num;
        } else {
            // num / (block * other) = a / block + b / other
            const Poly other = rest / block;
            ExtGcd eg = ext_gcd(block, other);
            block_num = (num * eg.t) % block;
            Poly b = (num - block_num * other) / block;
            num = std::move(b);
            rest = other;
        }
        // d-adic digits: block_num = sum_j b_j d^j, and a_k = b_{e-k}.
        std::vector<Poly> low(static_cast<std::size_t>(e));
        Poly q = block_num;
        for (int j = 0; j < e; ++j) {
            auto dm = divmod(q, d);
            low[static_cast<std::size_t>(j)] = std::move(dm.rem);
            q = std::move(dm.quot);
        }
        PartFracTerm term{d, e, {}};
        for (int k = 1; k <= e; ++k)
            term.digits.push_back(low[static_cast<std::size_t>(e - k)]);
        out.terms.push_back(std::move(term));
    }
    return out;
}

namespace {

// Coefficients of P(y + T) as a series in T over Q[y]/(d), n terms.
QuotientRing::Series taylor_series(const Poly& p, const QuotientRing& ring, std::size_t n) {
    QuotientRing::Series s(n);
    Poly deriv = p;
    Rat fact(1);
    for (std::size_t i = 0; i < n && !deriv.is_zero(); ++i) {
        if (i > 0) {
            deriv = deriv.derivative();
            fact *= Rat(static_cast<long>(i));
        }
        s[i] = ring.reduce(deriv.scaled(fact.inv()));
    }
    return s;
}

}  // namespace

LocalExpansion residue_polys(const std::vector<Poly>& digits, const Poly& d, int k_max) {
    if (k_max < 0)
        throw InvalidInput("residue_polys: negative order");
    const Poly dm = d.monic();
    // Surfaces NotInvertible (with the offending gcd) for non-squarefree d.
    inverse_mod(dm.derivative(), dm);
    const QuotientRing ring(dm);

    LocalExpansion out;
    out.modulus = dm;
    out.order = k_max;
    const std::size_t n = std::max<std::size_t>(digits.size(), 1);

    // d(y + T) = T * w(T) since d(y) = 0 in the ring.
    auto dser = taylor_series(dm, ring, n + 1);
    QuotientRing::Series w(dser.begin() + 1, dser.end());
    const auto w_inv = ring.series_inv(w, n);

    std::vector<Poly> c(static_cast<std::size_t>(k_max));
    QuotientRing::Series w_inv_k{ring.reduce(Poly::constant(Rat(1)))};
    for (std::size_t k = 1; k <= digits.size(); ++k) {
        w_inv_k = ring.series_mul(w_inv_k, w_inv, n);
        const Poly& a = digits[k - 1];
        if (a.is_zero())
            continue;
        auto s = ring.series_mul(taylor_series(a, ring, k), w_inv_k, k);
        for (std::size_t j = 1; j <= k && j <= static_cast<std::size_t>(k_max); ++j)
            c[j - 1] = ring.add(c[j - 1], s[k - j]);
    }
    for (auto& cj : c)
        out.coeffs.push_back({dm, std::move(cj)});
    return out;
}

LocalExpansion residue_polys(const PartFracTerm& term) {
    return residue_polys(term.digits, term.modulus, term.multiplicity);
}

}  // namespace dres
