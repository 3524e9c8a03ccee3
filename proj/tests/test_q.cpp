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


#include "dres/expr.hpp"
#include "dres/q_residues.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

using namespace dres;
using dres::testing::Random;

TEST_CASE("QParam rejects roots of unity") {
    CHECK_THROWS_AS(QParam(Rat(0)), ParameterError);
    CHECK_THROWS_AS(QParam(Rat(1)), ParameterError);
    CHECK_THROWS_AS(QParam(Rat(-1)), ParameterError);
    CHECK(QParam(Rat(-3, 2)).value() == Rat(-3, 2));
}

TEST_CASE("q_dispersion examples") {
    const QParam two(Rat(2));
    CHECK(q_dispersion(Poly{-1, 1}, Poly{-2, 1}, two) == std::set<long>{1});
    CHECK(q_dispersion(Poly{-1, 1}, Poly{-3, 1}, two).empty());
    CHECK(q_dispersion(Poly{-2, 0, 1}, Poly{-8, 0, 1}, two) == std::set<long>{1});
    CHECK_THROWS_AS(q_dispersion(Poly{0, 1}, Poly{-8, 1}, two), InvalidInput);
}

TEST_CASE("property: q_dispersion matches brute force") {
    Random rng(41);
    for (const Rat q : {Rat(2), Rat(3, 2), Rat(-2), Rat(1, 3)}) {
        const QParam qp(q);
        for (int i = 0; i < 25; ++i) {
            std::vector<Rat> r1, r2;
            for (long k = rng.range(1, 2); k > 0; --k)
                r1.push_back(Rat(rng.nonzero(6), rng.range(1, 3)));
            for (long k = rng.range(1, 2); k > 0; --k)
                r2.push_back(rng.range(0, 1) ? r1[0] * q.pow(rng.range(-3, 3)) : Rat(rng.nonzero(6), rng.range(1, 3)));
            const Poly b1 = squarefree_part(dres::testing::from_roots(r1));
            const Poly b2 = squarefree_part(dres::testing::from_roots(r2));
            std::set<long> brute;
            for (long s = -12; s <= 12; ++s)
                if (dres::testing::sylvester_resultant(b1, dilate(b2, q.pow(s))).is_zero())
                    brute.insert(s);
            CHECK(q_dispersion(b1, b2, qp) == brute);
        }
    }
}

TEST_CASE("q_discrete_residues examples") {
    const QParam two(Rat(2));
    QResidues r = q_discrete_residues(parse_ratfun("x + 5"), two);
    CHECK(r.dres_infinity == Rat(5));
    CHECK(r.certificates.empty());
    CHECK(q_discrete_residues(parse_ratfun("x"), two).dres_infinity.is_zero());

    const RatFun f = parse_ratfun("1/(2*x-1) - 1/(x-1)");
    CHECK(f == q_delta(parse_ratfun("1/(x-1)"), two));
    r = q_discrete_residues(f, two);
    CHECK(!r.certificates.empty());
    for (const auto& c : r.certificates)
        CHECK(c.D.is_zero());

    r = q_discrete_residues(parse_ratfun("1/(x-1)"), two);
    REQUIRE(r.certificates.size() == 1);
    CHECK(r.certificates[0].order == 1);
    CHECK(r.certificates[0].rep_modulus == (Poly{-1, 1}));
    CHECK(r.certificates[0].D == Poly{1});
}

TEST_CASE("is_q_summable examples") {
    CHECK(-RatFun(Rat(2)) / RatFun::x() == parse_ratfun("-2/x"));
    CHECK(q_delta(parse_ratfun("-2/x"), QParam(Rat(2))) == parse_ratfun("1/x"));
    CHECK(is_q_summable(parse_ratfun("1/x"), QParam(Rat(2))).verdict == Verdict::Summable);
    const QDecision d = is_q_summable(parse_ratfun("7"), QParam(Rat(3)));
    CHECK(d.verdict == Verdict::NotSummable);
    CHECK(d.residues.dres_infinity == Rat(7));
    CHECK(q_delta(parse_ratfun("x^3/7"), QParam(Rat(2))) == parse_ratfun("x^3"));
    CHECK(is_q_summable(parse_ratfun("x^3"), QParam(Rat(2))).verdict == Verdict::Summable);
}

TEST_CASE("property: monomials are summable") {
    for (const Rat q : {Rat(2), Rat(-3, 2)})
        for (long j = -8; j <= 8; ++j) {
            if (j == 0)
                continue;
            const QDecision d = is_q_summable(RatFun::x().pow(j), QParam(q));
            CHECK(d.verdict == Verdict::Summable);
            CHECK(d.residues.dres_infinity.is_zero());
            for (const auto& c : d.residues.certificates)
                CHECK(c.D.is_zero());
        }
}

TEST_CASE("property: kernel on random g") {
    Random rng(42);
    const Rat qs[] = {Rat(2), Rat(3, 2), Rat(-2)};
    for (int i = 0; i < 90; ++i) {
        const QParam q(qs[i % 3]);
        RatFun g = rng.ratfun();
        if (i % 4 == 0)
            g /= RatFun(Poly::monomial(Rat(1), static_cast<int>(rng.range(1, 3))));
        const QDecision d = is_q_summable(q_delta(g, q), q);
        CHECK(d.verdict == Verdict::Summable);
        CHECK(d.residues.dres_infinity.is_zero());
        for (const auto& c : d.residues.certificates)
            CHECK(c.D.is_zero());
    }
}

TEST_CASE("property: planted residue and representative covariance") {
    Random rng(43);
    const Rat qs[] = {Rat(2), Rat(3, 2), Rat(-2)};
    for (int i = 0; i < 45; ++i) {
        const Rat q = qs[i % 3];
        const QParam qp(q);
        const Rat a(rng.nonzero(7), rng.range(1, 3));
        const Rat c(rng.nonzero(9));
        const int k = static_cast<int>(rng.range(1, 3));
        const RatFun f =
            q_delta(rng.ratfun(true), qp) + RatFun(c) / RatFun(pow(Poly::linear_root(a), static_cast<unsigned>(k)));
        const QResidues r = q_discrete_residues(f, qp);
        bool found = false;
        for (const auto& cert : r.certificates) {
            if (cert.order != k)
                continue;
            for (long n = -20; n <= 20; ++n) {
                const Rat alpha = a * q.pow(n);
                if (cert.rep_modulus.eval(alpha).is_zero()) {
                    CHECK(cert.D.eval(alpha) == c * q.pow(n * k));
                    found = true;
                }
            }
        }
        CHECK(found);

        const long ell = rng.range(1, 3);
        const QResidues moved = q_discrete_residues(f, qp, ell);
        REQUIRE(moved.certificates.size() == r.certificates.size());
        for (std::size_t j = 0; j < r.certificates.size(); ++j) {
            const auto& c0 = r.certificates[j];
            const auto& c1 = moved.certificates[j];
            CHECK(c1.order == c0.order);
            CHECK(c1.rep_modulus == dilate(c0.rep_modulus, q.pow(-ell)).monic());
            CHECK(c1.D.is_zero() == c0.D.is_zero());
            for (const Rat& alpha : rational_roots(c0.rep_modulus))
                CHECK(c1.D.eval(alpha * q.pow(ell)) == q.pow(ell * c0.order) * c0.D.eval(alpha));
        }
    }
}
