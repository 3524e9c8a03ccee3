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

#include <cctype>
#include <string>

namespace dres {

namespace {

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    ExprPtr run() {
        ExprPtr e = expr();
        skip_ws();
        if (pos_ < src_.size())
            fail("unexpected '" + std::string(1, src_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c))
            return false;
        ++pos_;
        return true;
    }

    static ExprPtr make(ExprNode::Binary b, std::size_t at) {
        auto n = std::make_unique<ExprNode>();
        n->node = std::move(b);
        n->offset = at;
        return n;
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        for (;;) {
            skip_ws();
            const std::size_t at = pos_;
            if (accept('+'))
                lhs = make({'+', std::move(lhs), term()}, at);
            else if (accept('-'))
                lhs = make({'-', std::move(lhs), term()}, at);
            else
                return lhs;
        }
    }

    ExprPtr term() {
        ExprPtr lhs = factor();
        for (;;) {
            skip_ws();
            const std::size_t at = pos_;
            if (accept('*'))
                lhs = make({'*', std::move(lhs), factor()}, at);
            else if (accept('/'))
                lhs = make({'/', std::move(lhs), factor()}, at);
            else
                return lhs;
        }
    }

    ExprPtr factor() {
        skip_ws();
        const std::size_t at = pos_;
        const bool negate = accept('-');
        ExprPtr b = base();
        if (accept('^')) {
            auto p = std::make_unique<ExprNode>();
            p->offset = b->offset;
            p->node = ExprNode::Power{std::move(b), exponent()};
            b = std::move(p);
        }
        if (!negate)
            return b;
        auto n = std::make_unique<ExprNode>();
        n->offset = at;
        n->node = ExprNode::Neg{std::move(b)};
        return n;
    }

    long exponent() {
        const bool paren = accept('(');
        skip_ws();
        const std::size_t at = pos_;
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        skip_ws();
        const std::size_t digits_at = pos_;
        long value = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            if (value <= kMaxExponent)
                value = value * 10 + (src_[pos_] - '0');
            ++pos_;
        }
        if (pos_ == digits_at)
            fail(pos_ < src_.size() ? "expected integer exponent" : "unexpected end of input");
        if (value > kMaxExponent)
            throw ParseError("exponent overflow (|exponent| > " + std::to_string(kMaxExponent) + ")", at);
        if (paren && !accept(')'))
            fail(pos_ < src_.size() ? "expected ')'" : "unexpected end of input");
        return neg ? -value : value;
    }

    ExprPtr base() {
        skip_ws();
        auto n = std::make_unique<ExprNode>();
        n->offset = pos_;
        if (pos_ >= src_.size())
            fail("unexpected end of input");
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            n->node = ExprNode::Literal{Rat(Int(std::string(src_.substr(start, pos_ - start)), 10))};
            return n;
        }
        if (c == 'x') {
            ++pos_;
            n->node = ExprNode::Var{};
            return n;
        }
        if (c == '(') {
            ++pos_;
            ExprPtr inner = expr();
            if (!accept(')'))
                fail(pos_ < src_.size() ? "expected ')'" : "unexpected end of input");
            return inner;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text).run(); }

RatFun eval_ast(const ExprNode& ast) {
    return std::visit(
        [](const auto& n) -> RatFun {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, ExprNode::Literal>) {
                return RatFun(n.value);
            } else if constexpr (std::is_same_v<T, ExprNode::Var>) {
                return RatFun::x();
            } else if constexpr (std::is_same_v<T, ExprNode::Neg>) {
                return -eval_ast(*n.operand);
            } else if constexpr (std::is_same_v<T, ExprNode::Power>) {
                RatFun b = eval_ast(*n.base);
                if (n.exponent < 0 && b.is_zero())
                    throw DivisionByZero("zero raised to a negative power");
                return b.pow(n.exponent);
            } else {
                RatFun l = eval_ast(*n.lhs);
                RatFun r = eval_ast(*n.rhs);
                switch (n.op) {
                case '+':
                    return l + r;
                case '-':
                    return l - r;
                case '*':
                    return l * r;
                default:
                    if (r.is_zero())
                        throw DivisionByZero("division by the zero rational function");
                    return l / r;
                }
            }
        },
        ast.node);
}

RatFun parse_ratfun(std::string_view text) { return eval_ast(*parse_expr(text)); }

}  // namespace dres
