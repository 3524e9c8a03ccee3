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
#include "dres/report.hpp"

#include <doctest.h>

using namespace dres;

TEST_CASE("shift report for 1/x") {
    const Report r = analyze_shift(parse_ratfun("1/x"));
    CHECK(r.verdict == Verdict::NotSummable);
    CHECK(render_json(r) ==
          R"({"case":"shift","params":{},"verdict":"NOT_SUMMABLE","certificates":[{"order":1,"B":["0","1"],"D":["1"],"orbit_id":0}],"aggregate":[{"order":1,"B":["0","1"],"D":["1"]}],"version":"0.1.0"})");
}

TEST_CASE("q report carries dres_infinity") {
    const Report r = analyze_q(parse_ratfun("x + 5"), QParam(Rat(2)));
    CHECK(r.verdict == Verdict::NotSummable);
    CHECK(r.json["dres_infinity"] == "5");
    CHECK(r.json["params"]["q"] == "2");
    CHECK(r.json["certificates"].empty());
    CHECK(!r.json.contains("aggregate"));
}

TEST_CASE("mahler report lists trees") {
    const Report r = analyze_mahler(parse_ratfun("x^2 - x + 1/(x-2)"), MahlerParam(2));
    CHECK(r.verdict == Verdict::Undecided);
    CHECK(render_json(r) ==
          R"({"case":"mahler","params":{"m":2,"tree_bound":6},"verdict":"UNDECIDED","certificates":[],"laurent_classes":[{"label":1,"sum":"0"}],"trees":[{"modulus":["-2","1"],"tree_id":0,"torsion":false,"bound_used":6}],"version":"0.1.0"})");
}

TEST_CASE("verdict is consistent with the certificates") {
    for (const char* text : {"1/(x*(x+1))", "1/x + 1/(x^2+1)", "x^3", "2/(x-1)^2 - 2/x^2"}) {
        const Report r = analyze_shift(parse_ratfun(text));
        bool nonzero = false;
        for (const auto& c : r.json["certificates"])
            nonzero = nonzero || c["D"] != nlohmann::ordered_json::array({"0"});
        CHECK(nonzero == (r.verdict == Verdict::NotSummable));
    }
}

TEST_CASE("aggregate combines orbits by CRT") {
    const RatFun f = parse_ratfun("3/(x-1/2) + 1/(x^2+1) + 5/(x-1/3)^2 + 7/(x-1/3)");
    const ShiftDecision d = is_shift_summable(f);
    const auto agg = aggregate_certificates(d.certificates);
    REQUIRE(agg.size() == 2);
    CHECK(agg[0].order == 1);
    CHECK(agg[0].B.degree() == 4);
    CHECK(agg[1].order == 2);
    CHECK(agg[1].B == Poly::linear_root(Rat(1, 3)));
    CHECK(agg[1].D == Poly{5});
    for (const auto& c : d.certificates) {
        if (c.D.is_zero())
            continue;
        const auto& a = agg[static_cast<std::size_t>(c.order - 1)];
        CHECK(divides(c.rep_modulus, a.B));
        CHECK(a.D % c.rep_modulus == c.D);
        CHECK(a.D.degree() < a.B.degree());
    }
}

TEST_CASE("text rendering") {
    const std::string t = render_text(analyze_shift(parse_ratfun("1/x")));
    CHECK(t.find("verdict: NOT_SUMMABLE") != std::string::npos);
    CHECK(t.find("certificate order 1 orbit 0: B = x, D = 1") != std::string::npos);
}
