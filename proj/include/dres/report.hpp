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

// Analysis reports with a stable JSON layout and a plain-text rendering.
//
//   {"case", "params", "verdict", "dres_infinity"?, "certificates",
//    "aggregate"?, "laurent_classes"?, "trees"?, "version"}
//
// Rationals are strings, polynomials are ascending arrays of such strings.

#include "dres/mahler_residues.hpp"
#include "dres/q_residues.hpp"

#include <json.hpp>

#include <string>

namespace dres {

inline constexpr const char* kVersion = "0.1.0";

struct Report {
    Verdict verdict = Verdict::Summable;
    nlohmann::ordered_json json;
};

Report analyze_shift(const RatFun& f);
Report analyze_q(const RatFun& f, const QParam& q);
Report analyze_mahler(const RatFun& f, const MahlerParam& m, int tree_bound = 6);

/// Compact single-line JSON.
std::string render_json(const Report& r);
std::string render_text(const Report& r);

/// Pairs (B_k, D_k) per order: B_k is the product of the representatives
/// with a nonzero residue of order k, D_k agrees with each of them modulo
/// its representative. Orders without a nonzero residue are omitted.
struct AggregateCertificate {
    int order = 0;
    Poly B;
    Poly D;
};
std::vector<AggregateCertificate> aggregate_certificates(const std::vector<ResidueCertificate>& certs);

nlohmann::ordered_json poly_json(const Poly& p);

}  // namespace dres
