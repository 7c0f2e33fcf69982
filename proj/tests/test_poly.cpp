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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "progsum/poly.hpp"

using progsum::BigInt;
using progsum::Poly;
using progsum::Rat;

namespace {

Poly P(const char* text) { return Poly::parse(text); }

// Random nonzero polynomial as a product of small factors with
// multiplicities, so squarefree structure is varied.
Poly random_poly(std::mt19937& rng, int max_factors = 3, int max_mult = 3) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<int> nfac(1, max_factors);
    std::uniform_int_distribution<int> mult(1, max_mult);
    std::uniform_int_distribution<int> deg(1, 2);
    int lead = coeff(rng);
    if (lead == 0) lead = 1;
    Poly p(Rat(lead, den(rng)));
    const int n = nfac(rng);
    for (int i = 0; i < n; ++i) {
        std::vector<Rat> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (Rat& a : c) a = Rat(coeff(rng), den(rng));
        if (c.back().is_zero()) c.back() = Rat(1);
        const Poly factor = Poly::from_coeffs(std::move(c));
        const int m = mult(rng);
        for (int e = 0; e < m; ++e) p = p * factor;
    }
    return p;
}

std::vector<int> multiplicity_multiset(const Poly& p) {
    std::vector<int> mults;
    for (const auto& part : progsum::squarefree_decompose(p).parts)
        for (int d = 0; d < part.factor.degree(); ++d) mults.push_back(part.multiplicity);
    std::sort(mults.begin(), mults.end());
    return mults;
}

}  // namespace

TEST_CASE("canonical form and degree") {
    CHECK(Poly{}.is_zero());
    CHECK(Poly::from_coeffs({Rat(0), Rat(0)}).is_zero());
    CHECK_THROWS_AS(Poly{}.degree(), std::domain_error);
    CHECK_THROWS_AS(Poly{}.leading(), std::domain_error);
    const Poly p = Poly::from_coeffs({Rat(1), Rat(0), Rat(3)});
    CHECK(p.degree() == 2);
    CHECK(p.leading() == Rat(3));
    CHECK(p.coeff(1) == Rat(0));
    CHECK(p.coeff(9) == Rat(0));
    CHECK(Poly(Rat(0)).is_zero());
}

TEST_CASE("ring arithmetic") {
    CHECK(P("x + 1") * P("x - 1") == P("x^2 - 1"));
    const Poly p = P("x^3 - 2*x + 5/7");
    CHECK(p + Poly{} == p);
    CHECK(p - p == Poly{});
    const Poly q = P("x^2 - x - 1");
    const Poly sq = q * q;
    CHECK(sq == P("x^4 - 2*x^3 - x^2 + 2*x + 1"));
    for (int t : {0, 1, 2}) {
        const Rat v = q.eval(Rat(t));
        CHECK(sq.eval(Rat(t)) == v * v);
    }
    CHECK(Rat(3) * P("x - 2") == P("3*x - 6"));
    CHECK((-P("x^2 - 1")) == P("1 - x^2"));
}

TEST_CASE("evaluation by Horner") {
    const Poly b2 = P("x^2 - x + 1/6");
    CHECK(b2.eval(Rat(0)) == Rat(1, 6));
    CHECK(P("x^3 - 3/2*x^2 + 1/2*x").eval(Rat(1, 2)) == Rat(0));
    CHECK(P("7").eval(Rat(100)) == Rat(7));
    CHECK(Poly{}.eval(Rat(5)) == Rat(0));
}

TEST_CASE("derivative") {
    CHECK(P("x^3").derivative() == P("3*x^2"));
    CHECK(P("42").derivative().is_zero());
    CHECK(P("x^4 - 2*x^3 + x^2 - 1/30").derivative() == P("4*x^3 - 6*x^2 + 2*x"));
    // Monomial rule i*c_i x^(i-1), coefficient by coefficient.
    const Poly p = P("5/3*x^4 - x^2 + 7/2*x - 9");
    const Poly d = p.derivative();
    for (int i = 1; i <= 4; ++i) CHECK(d.coeff(i - 1) == Rat(i) * p.coeff(i));
}

TEST_CASE("linear composition") {
    CHECK(P("x^2").compose_linear(Rat(1), Rat(1)) == P("x^2 + 2*x + 1"));
    const Poly p = P("x^3 - x + 2/5");
    CHECK(p.compose_linear(Rat(1), Rat(0)) == p);
    CHECK(P("x^2 - x + 1/6").compose_linear(Rat(1), Rat(1, 2)) == P("x^2 - 1/12"));
    // p(u*x+v) evaluated at t equals p(u*t+v).
    const Rat u(-3, 2), v(1, 7), t(2, 3);
    CHECK(p.compose_linear(u, v).eval(t) == p.eval(u * t + v));
}

TEST_CASE("division") {
    const auto [q, r] = poly_divmod(P("x^3 - 1"), P("x - 1"));
    CHECK(q == P("x^2 + x + 1"));
    CHECK(r.is_zero());
    const auto [q2, r2] = poly_divmod(P("x^2 + 1"), P("x + 1"));
    CHECK(q2 == P("x - 1"));
    CHECK(r2 == P("2"));
    CHECK_THROWS_AS(poly_divmod(P("x"), Poly{}), std::domain_error);
    CHECK(poly_exact_div(P("x^2 - 1"), P("x + 1")) == P("x - 1"));
    CHECK_THROWS_AS(poly_exact_div(P("x^2 + 1"), P("x + 1")), std::domain_error);
}

TEST_CASE("gcd") {
    CHECK(poly_gcd(P("x^2 - 1"), P("x - 1")) == P("x - 1"));
    CHECK(poly_gcd(P("x^2 - 1"), P("1")) == P("1"));
    CHECK(poly_gcd(Poly{}, P("3*x - 6")) == P("x - 2"));
    CHECK_THROWS_AS(poly_gcd(Poly{}, Poly{}), std::domain_error);
    // E_5 written out and verified by expansion before the gcd is trusted.
    const Poly e5 = P("x^5 - 5/2*x^4 + 5/2*x^2 - 1/2");
    const Poly expanded = P("x - 1/2") * P("x^2 - x - 1") * P("x^2 - x - 1");
    CHECK(expanded == e5);
    CHECK(poly_gcd(e5, e5.derivative()) == P("x^2 - x - 1"));
    // Fractional coefficients do not disturb the monic result.
    CHECK(poly_gcd(Rat(3, 7) * (P("x - 2") * P("x + 5")), Rat(-2, 9) * (P("x - 2") * P("x - 3")))
          == P("x - 2"));
}

TEST_CASE("squarefree decomposition") {
    const auto sf = squarefree_decompose(P("x^2 - x") * P("x^2 - x"));
    REQUIRE(sf.parts.size() == 1);
    CHECK(sf.content == Rat(1));
    CHECK(sf.parts[0].factor == P("x^2 - x"));
    CHECK(sf.parts[0].multiplicity == 2);

    const auto sq = squarefree_decompose(P("x^4 - 2*x^3 + x^2"));
    REQUIRE(sq.parts.size() == 1);
    CHECK(sq.parts[0].factor == P("x^2 - x"));
    CHECK(sq.parts[0].multiplicity == 2);

    const Poly p = P("3*x^2 - 3*x - 3/2");
    const auto sp = squarefree_decompose(p);
    REQUIRE(sp.parts.size() == 1);
    CHECK(sp.content == Rat(3));
    CHECK(sp.parts[0].multiplicity == 1);
    CHECK(sp.reconstruct() == p);

    const auto sc = squarefree_decompose(P("-7/2"));
    CHECK(sc.parts.empty());
    CHECK(sc.content == Rat(-7, 2));
    CHECK(sc.reconstruct() == P("-7/2"));

    CHECK_THROWS_AS(squarefree_decompose(Poly{}), std::domain_error);
}

TEST_CASE("rational roots") {
    using RootList = std::vector<std::pair<Rat, int>>;
    CHECK(rational_roots(P("x^2 - x")) == RootList{{Rat(0), 1}, {Rat(1), 1}});
    CHECK(rational_roots(P("x^2 + 1")).empty());
    CHECK(rational_roots(P("x^4 - 2*x^3 + x^2")) == RootList{{Rat(0), 2}, {Rat(1), 2}});
    // Non-integer roots with mixed multiplicities, ascending order.
    const Poly p = P("2*x - 1") * P("2*x - 1") * P("3*x + 2") * P("x^2 + x + 1");
    CHECK(rational_roots(p) == RootList{{Rat(-2, 3), 1}, {Rat(1, 2), 2}});
    CHECK_THROWS_AS(rational_roots(Poly{}), std::domain_error);
    CHECK(rational_roots(P("5")).empty());
}

TEST_CASE("height") {
    CHECK(poly_height(P("x^2 - x + 1/6")) == 6);
    CHECK(poly_height(P("x - 1")) == 1);
    CHECK(poly_height(Poly{}) == 0);
    CHECK(poly_height(P("4*x^2 - 2")) == 2);  // content removed first
}

TEST_CASE("canonical text form") {
    CHECK(P("x^3 - 3/2*x^2 + 1/2*x").str() == "x^3 - 3/2*x^2 + 1/2*x");
    CHECK(Poly{}.str() == "0");
    CHECK(P("-x^2 + 1").str() == "-x^2 + 1");
    CHECK(Poly::from_coeffs({Rat(0), Rat(-1, 2)}).str() == "-1/2*x");
    CHECK(Poly::parse("0").is_zero());
    CHECK(Poly::parse("x + x").str() == "2*x");
    CHECK_THROWS_AS(Poly::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Poly::parse("x^"), std::invalid_argument);
    CHECK_THROWS_AS(Poly::parse("x y"), std::invalid_argument);
    CHECK_THROWS_AS(Poly::parse("3*"), std::invalid_argument);
    CHECK_THROWS_AS(Poly::parse("3/0*x"), std::invalid_argument);
}

TEST_CASE("property: squarefree reconstruction round-trips") {
    std::mt19937 rng(20260823);
    for (int trial = 0; trial < 60; ++trial) {
        const Poly p = random_poly(rng);
        const auto sf = squarefree_decompose(p);
        CHECK(sf.reconstruct() == p);
        int last = 0;
        for (const auto& part : sf.parts) {
            CHECK(part.multiplicity > last);
            last = part.multiplicity;
            CHECK(part.factor.leading() == Rat(1));
            // Each part squarefree, parts pairwise coprime.
            CHECK(poly_gcd(part.factor, part.factor.derivative()).degree() == 0);
        }
        for (std::size_t i = 0; i < sf.parts.size(); ++i)
            for (std::size_t j = i + 1; j < sf.parts.size(); ++j)
                CHECK(poly_gcd(sf.parts[i].factor, sf.parts[j].factor).degree() == 0);
    }
}

TEST_CASE("property: multiplicities survive linear substitution") {
    std::mt19937 rng(7131);
    std::uniform_int_distribution<int> small(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        const Poly p = random_poly(rng);
        if (p.degree() < 1) continue;
        const int un = small(rng);
        const Rat u(un == 0 ? 2 : un, 1 + std::abs(small(rng)) % 2);
        const Rat v(small(rng), 1 + std::abs(small(rng)) % 3);
        CHECK(multiplicity_multiset(p.compose_linear(u, v)) == multiplicity_multiset(p));
    }
}

TEST_CASE("property: gcd with derivative is constant iff squarefree") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 60; ++trial) {
        const Poly p = random_poly(rng);
        if (p.degree() < 1) continue;
        const bool gcd_constant = poly_gcd(p, p.derivative()).degree() == 0;
        bool all_simple = true;
        for (const auto& part : progsum::squarefree_decompose(p).parts)
            all_simple = all_simple && part.multiplicity == 1;
        CHECK(gcd_constant == all_simple);
    }
}

TEST_CASE("property: print then parse is the identity") {
    std::mt19937 rng(99281);
    for (int trial = 0; trial < 80; ++trial) {
        const Poly p = random_poly(rng, 2, 2);
        CHECK(Poly::parse(p.str()) == p);
    }
    CHECK(Poly::parse(Poly{}.str()).is_zero());
}
