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
#include "dres/mahler_residues.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

using namespace dres;
using dres::testing::Random;

namespace {

LaurentPoly laurent(std::initializer_list<std::pair<long, long>> terms) {
    LaurentPoly L;
    for (const auto& [e, c] : terms)
        L.add(e, Rat(c));
    return L;
}

std::vector<ExponentClassResidue> classes(const LaurentPoly& L, long m) {
    return mahler_laurent_residues(L, MahlerParam(m));
}

}  // namespace

TEST_CASE("MahlerParam") {
    CHECK_THROWS_AS(MahlerParam(1), ParameterError);
    CHECK_THROWS_AS(MahlerParam(-2), ParameterError);
    CHECK(MahlerParam(3).value() == 3);
}

TEST_CASE("laurent_split examples") {
    auto [L1, T1] = laurent_split(parse_ratfun("x + 1/x + 1/(x-1)"));
    CHECK(L1 == laurent({{1, 1}, {-1, 1}}));
    CHECK(T1 == parse_ratfun("1/(x-1)"));

    const RatFun p = parse_ratfun("3*x^4 - x + 2");
    auto [L2, T2] = laurent_split(p);
    CHECK(L2.to_ratfun() == p);
    CHECK(T2.is_zero());

    auto [L3, T3] = laurent_split(parse_ratfun("1/(x^2+x)"));
    CHECK(L3 == laurent({{-1, 1}}));
    CHECK(T3 == parse_ratfun("-1/(x+1)"));
}

TEST_CASE("exponent_class_label examples") {
    CHECK(exponent_class_label(12, 2) == 3);
    CHECK(exponent_class_label(0, 5) == 0);
    CHECK(exponent_class_label(-8, 2) == -1);
}

TEST_CASE("mahler_laurent_residues examples") {
    CHECK(classes(laurent({{2, 1}, {1, -1}}), 2) == std::vector<ExponentClassResidue>{{1, Rat(0)}});
    CHECK(classes(laurent({{3, 1}, {2, 1}}), 2) ==
          std::vector<ExponentClassResidue>{{1, Rat(1)}, {3, Rat(1)}});
    CHECK(classes(laurent({{0, 7}}), 3) == std::vector<ExponentClassResidue>{{0, Rat(7)}});
}

TEST_CASE("is_mahler_summable_laurent examples") {
    const MahlerParam two(2);
    CHECK(is_mahler_summable_laurent(laurent({{2, 1}, {1, -1}}), two) == Verdict::Summable);
    CHECK(mahler_delta(laurent({{1, 1}}), two) == laurent({{2, 1}, {1, -1}}));
    CHECK(is_mahler_summable_laurent(laurent({{1, 1}}), two) == Verdict::NotSummable);
    Random rng(51);
    const MahlerParam three(3);
    for (int i = 0; i < 20; ++i) {
        LaurentPoly g;
        for (long t = rng.range(1, 8); t > 0; --t)
            g.add(rng.range(-20, 20), Rat(rng.nonzero(9)));
        CHECK(is_mahler_summable_laurent(mahler_delta(g, three), three) == Verdict::Summable);
    }
}

TEST_CASE("mahler_tree_partition examples") {
    const MahlerParam two(2);
    auto t = mahler_tree_partition({Poly{-2, 1}, Poly{-4, 1}}, two, 6);
    REQUIRE(t.size() == 2);
    CHECK(t[0].tree_id == t[1].tree_id);
    CHECK(!t[0].torsion);
    CHECK(!t[1].torsion);
    CHECK(t[0].bound_used == 6);

    t = mahler_tree_partition({Poly{-2, 1}, Poly{-3, 1}}, two, 6);
    REQUIRE(t.size() == 2);
    CHECK(t[0].tree_id != t[1].tree_id);

    t = mahler_tree_partition({Poly{-1, 1}, Poly{1, 1}}, two, 6);
    REQUIRE(t.size() == 2);
    CHECK(t[0].tree_id == t[1].tree_id);
    CHECK(t[0].torsion);
    CHECK(t[1].torsion);
    CHECK(divides(Poly{-1, 1} * Poly{1, 1}, Poly{-1, 0, 1}));

    CHECK_THROWS_AS(mahler_tree_partition({Poly{-2, 1}}, two, 0), ParameterError);
    CHECK_THROWS_AS(mahler_tree_partition({Poly{0, 1}}, two, 2), InvalidInput);
}

TEST_CASE("torsion classification") {
    CHECK(is_torsion(Poly{1, 1, 1}));            // primitive cube roots
    CHECK(is_torsion(Poly{1, 0, 1}));            // +-i
    CHECK(is_torsion(Poly{1, -1, 1, -1, 1}));    // primitive 10th roots
    CHECK(!is_torsion(Poly{-2, 1}));
    CHECK(!is_torsion(Poly{1, -1, 1} * Poly{-2, 1}));
    CHECK(!is_torsion(Poly{1, 3, 1}));
    // a mixed modulus is split into a torsion atom and the rest
    const auto t = mahler_tree_partition({Poly{1, 1, 1} * Poly{-3, 1}}, MahlerParam(2), 3);
    REQUIRE(t.size() == 2);
    CHECK(t[0].torsion != t[1].torsion);
}

TEST_CASE("mahler_report examples") {
    const MahlerParam two(2);
    CHECK(mahler_report(parse_ratfun("x^3 + x^2"), two).verdict == Verdict::NotSummable);
    CHECK(mahler_report(parse_ratfun("x^2 - x"), two).verdict == Verdict::Summable);
    const MahlerReport r = mahler_report(parse_ratfun("x^2 - x + 1/(x-2)"), two);
    CHECK(r.verdict == Verdict::Undecided);
    REQUIRE(r.trees.size() == 1);
    CHECK(r.trees[0].modulus == (Poly{-2, 1}));
    CHECK_THROWS_AS(mahler_report(parse_ratfun("x"), two, 0), ParameterError);
}

TEST_CASE("property: Laurent kernel") {
    Random rng(52);
    for (int i = 0; i < 200; ++i) {
        const long m = std::array<long, 3>{2, 3, 5}[static_cast<std::size_t>(i % 3)];
        LaurentPoly g;
        for (long t = rng.range(1, 8); t > 0; --t)
            g.add(rng.range(-20, 20), Rat(rng.nonzero(9)));
        const MahlerParam mp(m);
        for (const auto& c : mahler_laurent_residues(mahler_delta(g, mp), mp))
            CHECK(c.sum.is_zero());
        // the rational-function route agrees
        auto [L, T] = laurent_split(mahler_delta(g.to_ratfun(), mp));
        CHECK(T.is_zero());
        CHECK(L == mahler_delta(g, mp));
    }
}

TEST_CASE("property: label idempotence") {
    for (long m : {2L, 3L, 5L})
        for (long j = -60; j <= 60; ++j) {
            const long label = exponent_class_label(j, m);
            CHECK((label == 0 || label % m != 0));
            long scaled = label;
            for (int t = 0; t <= 5; ++t, scaled *= m)
                CHECK(exponent_class_label(scaled, m) == label);
        }
}

TEST_CASE("property: tree relation symmetric and monotone in the bound") {
    Random rng(53);
    for (int i = 0; i < 20; ++i) {
        const long m = rng.range(2, 3);
        std::vector<Poly> moduli;
        for (long k = rng.range(2, 4); k > 0; --k) {
            const Rat base(rng.range(2, 4));
            moduli.push_back(Poly::linear_root(base.pow(rng.range(1, 3)) * Rat(rng.range(0, 1) ? 1 : -1)));
        }
        for (std::size_t a = 0; a < moduli.size(); ++a)
            for (std::size_t b = 0; b < a; ++b)
                if (moduli[a] == moduli[b])
                    moduli[a] = moduli[a] * Poly::linear_root(Rat(7));
        std::vector<Poly> sq;
        for (const Poly& p : coprime_basis(moduli))
            sq.push_back(p);
        const MahlerParam mp(m);
        const auto small = mahler_tree_partition(sq, mp, 2);
        const auto big = mahler_tree_partition(sq, mp, 4);
        auto reversed = sq;
        std::reverse(reversed.begin(), reversed.end());
        const auto flipped = mahler_tree_partition(reversed, mp, 2);
        auto tree_of = [](const std::vector<TreeAtom>& t, const Poly& p) {
            for (const auto& a : t)
                if (a.modulus == p)
                    return a.tree_id;
            return -1;
        };
        for (const auto& x : small)
            for (const auto& y : small) {
                if (x.tree_id == y.tree_id)
                    CHECK(tree_of(big, x.modulus) == tree_of(big, y.modulus));
                CHECK((tree_of(flipped, x.modulus) == tree_of(flipped, y.modulus)) == (x.tree_id == y.tree_id));
            }
    }
}
