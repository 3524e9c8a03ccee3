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

// Rational-function expressions in one variable x.
//
//   expr     := term (('+' | '-') term)*
//   term     := factor (('*' | '/') factor)*
//   factor   := '-'? base ('^' exponent)?
//   exponent := signed-integer | '(' signed-integer ')'
//   base     := integer | 'x' | '(' expr ')'
//
// Whitespace is ignored. "3/2" parses as a division, which has the value of
// the rational literal. There is no implicit multiplication.

#include "dres/ratfun.hpp"

#include <memory>
#include <string_view>
#include <variant>

namespace dres {

inline constexpr long kMaxExponent = 4096;

struct ExprNode;
using ExprPtr = std::unique_ptr<ExprNode>;

struct ExprNode {
    struct Literal {
        Rat value;
    };
    struct Var {};
    struct Neg {
        ExprPtr operand;
    };
    struct Binary {
        char op;  // one of + - * /
        ExprPtr lhs;
        ExprPtr rhs;
    };
    struct Power {
        ExprPtr base;
        long exponent;
    };
    std::variant<Literal, Var, Neg, Binary, Power> node;
    std::size_t offset = 0;  // byte offset of the node in the source
};

/// Throws ParseError with the byte offset of the offending token.
ExprPtr parse_expr(std::string_view text);

/// Throws DivisionByZero when dividing by (or inverting) zero.
RatFun eval_ast(const ExprNode& ast);

/// parse_expr followed by eval_ast.
RatFun parse_ratfun(std::string_view text);

}  // namespace dres
