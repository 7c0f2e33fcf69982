/*
   Copyright 2026 The progsum authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PROGSUM_POLY_HPP
#define PROGSUM_POLY_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "progsum/rational.hpp"

namespace progsum {

/**
 * Dense univariate polynomial over the rationals.
 *
 * Canonical form: no stored trailing zero coefficients; the zero
 * polynomial stores no coefficients at all.  degree() refuses the zero
 * polynomial rather than returning a fake -1, so degree arithmetic can
 * never silently go wrong; test is_zero() first.
 *
 * Values are immutable in practice: every operation returns a fresh
 * polynomial, so sharing across threads is safe.
 */
class Poly {
   public:
    Poly() = default;
    explicit Poly(Rat constant) {
        if (!constant.is_zero()) c_.push_back(std::move(constant));
    }

    static Poly from_coeffs(std::vector<Rat> ascending);
    static Poly monomial(int degree, Rat coeff = Rat(1));
    static Poly variable() { return monomial(1); }

    bool is_zero() const { return c_.empty(); }
    /// Throws std::domain_error for the zero polynomial.
    int degree() const;
    /// Coefficient of x^i (zero beyond the degree).
    Rat coeff(int i) const;
    const Rat& leading() const;
    Rat constant_term() const { return c_.empty() ? Rat(0) : c_.front(); }
    const std::vector<Rat>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rat& s, const Poly& p);
    friend Poly operator*(const Poly& p, const Rat& s) { return s * p; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly& operator+=(const Rat& s) { return *this += Poly(s); }
    Poly& operator-=(const Rat& s) { return *this -= Poly(s); }

    /// Exact evaluation by Horner's scheme.
    Rat eval(const Rat& t) const;

    Poly derivative() const;

    /// p(u*x + v), computed exactly.
    Poly compose_linear(const Rat& u, const Rat& v) const;

    /// Scaled to leading coefficient 1; zero stays zero.
    Poly monic() const;

    /// Canonical text form, terms in descending degree, coefficients as
    /// p/q: e.g. "x^3 - 3/2*x^2 + 1/2*x".  Zero prints as "0".
    std::string str() const;

    /// Parses the canonical text form (whitespace tolerant, repeated
    /// powers summed).  Throws std::invalid_argument on malformed input.
    static Poly parse(std::string_view text);

   private:
    void trim();

    std::vector<Rat> c_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Quotient and remainder over Q; divisor must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& p, const Poly& d);

/// Exact quotient; throws std::domain_error if the division leaves a remainder.
Poly poly_exact_div(const Poly& p, const Poly& d);

/// Monic gcd over Q.  Coefficient growth is controlled by running a
/// primitive pseudo-remainder sequence on the integer-primitive parts.
/// Both arguments zero -> std::domain_error.
Poly poly_gcd(const Poly& p, const Poly& q);

struct SquarefreePart {
    Poly factor;       // monic, squarefree, nonconstant
    int multiplicity;  // >= 1
};

/**
 * content * prod factor_i^multiplicity_i with the factors monic,
 * squarefree and pairwise coprime, multiplicities strictly increasing.
 * Reconstruction is exact; this is the computational handle on root
 * multiplicities used throughout.
 */
struct SquarefreeDecomposition {
    Rat content;
    std::vector<SquarefreePart> parts;

    Poly reconstruct() const;
    int max_multiplicity() const;
};

/// Yun's algorithm; p nonzero (zero -> std::domain_error).
SquarefreeDecomposition squarefree_decompose(const Poly& p);

/**
 * All rational roots with exact multiplicities, ascending by root.
 * Candidates are divisor pairs of the integer-cleared constant and
 * leading coefficients of each squarefree part, pruned by the f(1) /
 * f(-1) divisibility sieve before exact testing.  p nonzero.
 */
std::vector<std::pair<Rat, int>> rational_roots(const Poly& p);

/// Naive height: max |coefficient| of the primitive integer form
/// (denominators cleared, integer content removed).  Zero -> 0.
BigInt poly_height(const Poly& p);

}  // namespace progsum

#endif
