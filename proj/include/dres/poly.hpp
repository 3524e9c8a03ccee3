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

#include "dres/error.hpp"
#include "dres/rat.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dres {

/// Dense univariate polynomial over the rationals. Coefficients are stored
/// in ascending order of degree and never carry a trailing zero, so the zero
/// polynomial is the empty sequence.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);
    Poly(std::initializer_list<Rat> coeffs) : Poly(std::vector<Rat>(coeffs)) {}
    /// Constant polynomial.
    static Poly constant(const Rat& c);
    /// c * x^k.
    static Poly monomial(const Rat& c, int k);
    /// The polynomial x.
    static Poly x() { return monomial(Rat(1), 1); }
    /// x - a.
    static Poly linear_root(const Rat& a) { return Poly{-a, Rat(1)}; }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    /// Coefficient of x^i, zero past the degree.
    const Rat& operator[](int i) const;
    const Rat& lc() const;
    std::span<const Rat> coeffs() const { return c_; }

    Rat eval(const Rat& at) const;
    Poly derivative() const;
    Poly monic() const;
    Poly scaled(const Rat& s) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) { return a.scaled(Rat(-1)); }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rat& s, const Poly& p) { return p.scaled(s); }

    friend bool operator==(const Poly& a, const Poly& b) = default;

    /// Human readable form in the expression grammar, e.g. "x^2 - 1/2*x + 3".
    std::string str(const char* var = "x") const;

private:
    void trim();
    std::vector<Rat> c_;
};

/// Canonical total order: by degree, then coefficients from the top.
bool canonical_less(const Poly& a, const Poly& b);

/// Raised by inverse_mod when the element shares a factor with the modulus.
/// `gcd()` is the monic nontrivial common factor.
class NotInvertible : public Error {
public:
    explicit NotInvertible(Poly gcd)
        : Error("element not invertible modulo polynomial, gcd " + gcd.str()),
          gcd_(std::move(gcd)) {}
    const Poly& gcd() const noexcept { return gcd_; }

private:
    Poly gcd_;
};

struct DivMod {
    Poly quot;
    Poly rem;
};

/// Euclidean division; throws InvalidInput when `b` is zero.
DivMod divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);  // exact quotient part only
bool divides(const Poly& d, const Poly& p);

Poly pow(const Poly& p, unsigned e);

/// Monic gcd. Throws InvalidInput when both inputs are zero.
Poly poly_gcd(const Poly& a, const Poly& b);

struct ExtGcd {
    Poly g;  // monic gcd
    Poly s;  // s*a + t*b == g
    Poly t;
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);

/// lc(a)^deg(b) * prod b(alpha) over the roots alpha of a.
Rat resultant(const Poly& a, const Poly& b);

struct SqfFactor {
    Poly factor;       // monic, squarefree
    int multiplicity;  // strictly increasing along the decomposition
    friend bool operator==(const SqfFactor&, const SqfFactor&) = default;
};
/// Yun's algorithm: p = lc(p) * prod factor_i^multiplicity_i.
std::vector<SqfFactor> squarefree_decomposition(const Poly& p);
/// Monic squarefree part (product of the decomposition factors).
Poly squarefree_part(const Poly& p);

/// p(x + a).
Poly taylor_shift(const Poly& p, const Rat& a);
/// p(u x); u must be nonzero.
Poly dilate(const Poly& p, const Rat& u);
/// p(q(x)).
Poly compose(const Poly& p, const Poly& q);

/// prod (x - alpha^t) over the roots alpha of the monic b, with multiplicity.
Poly power_poly(const Poly& b, unsigned long t);

/// r with a*r == 1 mod m and deg r < deg m. Throws NotInvertible carrying the
/// gcd when a and m share a factor.
Poly inverse_mod(const Poly& a, const Poly& m);

/// Newton interpolation through (xs[i], ys[i]); the xs must be distinct.
Poly interpolate(std::span<const Rat> xs, std::span<const Rat> ys);

/// Distinct integer roots, ascending.
std::vector<Int> integer_roots(const Poly& p);

/// Distinct rational roots, ascending.
std::vector<Rat> rational_roots(const Poly& p);

/// Splits a list of squarefree polynomials into pairwise coprime monic
/// squarefree factors such that every input is a product of them. The
/// result is sorted canonically.
std::vector<Poly> coprime_basis(std::span<const Poly> polys);

/// Upper bound on the modulus of every complex root (Cauchy); p nonconstant.
Rat root_bound(const Poly& p);

}  // namespace dres
