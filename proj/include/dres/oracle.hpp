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

// Ground truth for the decision procedures.
//
// Instances are built as f = sigma(g) - g plus planted terms at pairwise
// inequivalent orbits, so their verdict is known by construction. The
// telescoping solvers search for g with sigma(g) - g = f inside a bounded
// ansatz by exact linear algebra. They only use polynomial arithmetic and
// never call into the residue modules.

#include "dres/ratfun.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dres::oracle {

enum class Case { Shift, Q, MahlerLaurent };

const char* case_name(Case c);

/// A planted obstruction. Shift and q cases: value / (x - point)^order.
/// Mahler-Laurent case: value * x^label.
struct Plant {
    Rat point;
    int order = 1;
    Rat value;
    long label = 0;
};

struct AnsatzBounds {
    int window = 0;        // shifts 0..window of each denominator factor
    int multiplicity = 0;  // exponent cap on every ansatz factor, raised to the pole orders of f
    int poly_degree = 0;   // degree cap of the polynomial part
};

/// Size limits of the random g.
struct Shape {
    int num_degree = 6;
    int max_factors = 3;
    int max_factor_degree = 2;
    int max_multiplicity = 3;
    int coeff = 9;
    // Largest shift (or q-power) relating two denominator factors of g.
    int max_dispersion = 3;
    // Laurent case
    int laurent_terms = 8;
    int laurent_exponent = 20;
};

struct Instance {
    Case kase = Case::Shift;
    Rat q;      // q case
    long m = 0; // Mahler case
    std::uint64_t seed = 0;
    RatFun g;   // the telescoped part
    RatFun f;
    bool summable = true;
    std::vector<Plant> planted;
    AnsatzBounds bounds;  // sufficient for the solver on this instance
};

/// Deterministic in (case, parameter, seed, plants, shape). Throws
/// InvalidInput when two plants share an orbit (or class), a plant value is
/// zero, or a q-case plant sits at zero.
Instance generate_instance(Case kase, std::uint64_t seed, const std::vector<Plant>& plants,
                           const Rat& q = Rat(2), long m = 2, const Shape& shape = {});

/// g with g(x + 1) - g(x) == f inside the ansatz, verified by substitution.
std::optional<RatFun> solve_telescoper_shift(const RatFun& f, const AnsatzBounds& bounds);

/// g with g(q x) - g(x) == f inside the ansatz, verified by substitution.
std::optional<RatFun> solve_telescoper_q(const RatFun& f, const Rat& q, const AnsatzBounds& bounds);

/// g with g(x^m) - g(x) == f among Laurent polynomials whose exponents lie
/// within the exponent range of f, verified by substitution. f must be a
/// Laurent polynomial.
std::optional<RatFun> solve_telescoper_mahler_laurent(const RatFun& f, long m);

/// `count` plants in pairwise distinct orbits (or classes), derived from the
/// seed. Orders are 1..3 and values lie in [-9, 9].
std::vector<Plant> default_plants(Case kase, int count, std::uint64_t seed, const Rat& q = Rat(2),
                                  long m = 2);

/// Header comment line plus expression line.
std::string serialize_instance(const Instance& inst);

/// Exact solution of A u = b, or nullopt when inconsistent. Free variables
/// are set to zero.
std::optional<std::vector<Rat>> solve_linear(std::vector<std::vector<Rat>> a, std::vector<Rat> b);

}  // namespace dres::oracle
