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

#include "dres/ratfun.hpp"

namespace dres {

RatFun::RatFun(const Poly& num, const Poly& den) {
    if (den.is_zero())
        throw DivisionByZero("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = Poly::constant(Rat(1));
        return;
    }
    Poly g = poly_gcd(num, den);
    Poly n = num / g;
    Poly d = den / g;
    Rat k = d.lc().inv();
    num_ = n.scaled(k);
    den_ = d.scaled(k);
}

RatFun RatFun::inv() const {
    if (is_zero())
        throw DivisionByZero("division by the zero rational function");
    return RatFun(den_, num_);
}

RatFun RatFun::pow(long e) const {
    if (e < 0)
        return inv().pow(-e);
    auto ue = static_cast<unsigned>(e);
    // Numerator and denominator stay coprime under powers.
    RatFun out;
    out.num_ = dres::pow(num_, ue);
    out.den_ = dres::pow(den_, ue);
    return out;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.den_ == b.den_)
        return RatFun(a.num_ + b.num_, a.den_);
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inv(); }

std::string RatFun::str() const {
    if (is_polynomial())
        return num_.scaled(den_.lc().inv()).str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFun taylor_shift(const RatFun& f, const Rat& a) {
    return RatFun(taylor_shift(f.num(), a), taylor_shift(f.den(), a));
}

RatFun dilate(const RatFun& f, const Rat& u) {
    return RatFun(dilate(f.num(), u), dilate(f.den(), u));
}

RatFun compose_power(const RatFun& f, unsigned m) {
    Poly xm = Poly::monomial(Rat(1), static_cast<int>(m));
    return RatFun(compose(f.num(), xm), compose(f.den(), xm));
}

}  // namespace dres
