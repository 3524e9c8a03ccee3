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

#include <string>

namespace dres {

/// Reduced fraction num/den with gcd(num, den) = 1 and den monic.
class RatFun {
public:
    RatFun() : den_(Poly::constant(Rat(1))) {}
    RatFun(const Poly& p) : num_(p), den_(Poly::constant(Rat(1))) {}  // NOLINT
    RatFun(const Rat& c) : RatFun(Poly::constant(c)) {}               // NOLINT
    /// Normalizes; throws DivisionByZero when den is zero.
    RatFun(const Poly& num, const Poly& den);

    static RatFun x() { return RatFun(Poly::x()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFun inv() const;
    RatFun pow(long e) const;

    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a) { return RatFun(-a.num_, a.den_); }
    friend bool operator==(const RatFun& a, const RatFun& b) = default;

    /// Expression-grammar text that parses back to the same value.
    std::string str() const;

private:
    Poly num_;
    Poly den_;
};

/// f(x + a).
RatFun taylor_shift(const RatFun& f, const Rat& a);
/// f(u x).
RatFun dilate(const RatFun& f, const Rat& u);
/// f(x^m).
RatFun compose_power(const RatFun& f, unsigned m);

}  // namespace dres
