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

#include "progsum/poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

#include "progsum/integers.hpp"

namespace progsum {

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::from_coeffs(std::vector<Rat> ascending) {
    Poly p;
    p.c_ = std::move(ascending);
    p.trim();
    return p;
}

Poly Poly::monomial(int degree, Rat coeff) {
    if (degree < 0) throw std::domain_error("Poly::monomial: negative degree");
    if (coeff.is_zero()) return Poly{};
    Poly p;
    p.c_.assign(static_cast<std::size_t>(degree) + 1, Rat(0));
    p.c_.back() = std::move(coeff);
    return p;
}

int Poly::degree() const {
    if (c_.empty()) throw std::domain_error("Poly::degree: zero polynomial");
    return static_cast<int>(c_.size()) - 1;
}

Rat Poly::coeff(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= c_.size()) return Rat(0);
    return c_[static_cast<std::size_t>(i)];
}

const Rat& Poly::leading() const {
    if (c_.empty()) throw std::domain_error("Poly::leading: zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (Rat& a : p.c_) a = -a;
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    std::vector<Rat> prod(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            prod[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly::from_coeffs(std::move(prod));
}

Poly operator*(const Rat& s, const Poly& p) {
    if (s.is_zero()) return Poly{};
    Poly out = p;
    for (Rat& a : out.c_) a *= s;
    return out;
}

Rat Poly::eval(const Rat& t) const {
    Rat v(0);
    for (std::size_t i = c_.size(); i-- > 0;) v = v * t + c_[i];
    return v;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly{};
    std::vector<Rat> d;
    d.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(Rat(BigInt(i)) * c_[i]);
    return from_coeffs(std::move(d));
}

Poly Poly::compose_linear(const Rat& u, const Rat& v) const {
    const Poly lin = from_coeffs({v, u});
    Poly acc;
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = acc * lin;
        acc += Poly(c_[i]);
    }
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) return Poly{};
    return leading().inverse() * *this;
}

std::string Poly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Rat& a = c_[i];
        if (a.is_zero()) continue;
        const bool neg = a.sign() < 0;
        if (out.empty()) {
            if (neg) out += '-';
        } else {
            out += neg ? " - " : " + ";
        }
        const Rat mag = a.abs();
        if (i == 0) {
            out += mag.str();
        } else {
            if (!(mag == Rat(1))) {
                out += mag.str();
                out += '*';
            }
            out += 'x';
            if (i > 1) {
                out += '^';
                out += std::to_string(i);
            }
        }
    }
    return out;
}

Poly Poly::parse(std::string_view text) {
    std::size_t i = 0;
    const auto fail = [](const char* msg) {
        throw std::invalid_argument(std::string("Poly::parse: ") + msg);
    };
    const auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    const auto digits = [&]() -> std::string {
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        std::string d(text.substr(i, j - i));
        i = j;
        return d;
    };

    skip();
    if (i == text.size()) fail("empty input");

    std::vector<Rat> acc;
    bool first = true;
    while (true) {
        skip();
        if (i == text.size()) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            fail("expected '+' or '-' between terms");
        }

        bool have_coeff = false;
        Rat coeff(1);
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            const std::string num = digits();
            std::string den;
            const std::size_t save = i;
            skip();
            if (i < text.size() && text[i] == '/') {
                ++i;
                skip();
                den = digits();
                if (den.empty()) fail("expected denominator digits");
            } else {
                i = save;
            }
            if (!den.empty() && BigInt(den) == 0) fail("zero denominator");
            coeff = den.empty() ? Rat(BigInt(num)) : Rat(BigInt(num), BigInt(den));
            have_coeff = true;
        }

        int deg = 0;
        bool have_x = false;
        {
            const std::size_t save = i;
            skip();
            bool starred = false;
            if (i < text.size() && text[i] == '*') {
                if (!have_coeff) fail("unexpected '*'");
                starred = true;
                ++i;
                skip();
            }
            if (i < text.size() && text[i] == 'x') {
                ++i;
                have_x = true;
                deg = 1;
                const std::size_t save2 = i;
                skip();
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    skip();
                    const std::string e = digits();
                    if (e.empty()) fail("expected exponent digits");
                    if (e.size() > 4) fail("exponent out of range");
                    deg = std::stoi(e);
                } else {
                    i = save2;
                }
            } else {
                if (starred) fail("expected 'x' after '*'");
                i = save;
            }
        }

        if (!have_coeff && !have_x) fail("expected a term");
        if (sign < 0) coeff = -coeff;
        if (static_cast<std::size_t>(deg) >= acc.size()) acc.resize(static_cast<std::size_t>(deg) + 1, Rat(0));
        acc[static_cast<std::size_t>(deg)] += coeff;
        first = false;
    }
    return from_coeffs(std::move(acc));
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

std::pair<Poly, Poly> poly_divmod(const Poly& p, const Poly& d) {
    if (d.is_zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
    if (p.is_zero()) return {Poly{}, Poly{}};
    const int dd = d.degree();
    if (p.degree() < dd) return {Poly{}, p};
    std::vector<Rat> rem = p.coeffs();
    std::vector<Rat> quot(static_cast<std::size_t>(p.degree() - dd) + 1, Rat(0));
    const Rat& lead = d.leading();
    for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
        if (rem[static_cast<std::size_t>(i)].is_zero()) continue;
        const Rat q = rem[static_cast<std::size_t>(i)] / lead;
        quot[static_cast<std::size_t>(i - dd)] = q;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(i - dd + j)] -= q * d.coeff(j);
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {Poly::from_coeffs(std::move(quot)), Poly::from_coeffs(std::move(rem))};
}

Poly poly_exact_div(const Poly& p, const Poly& d) {
    auto [q, r] = poly_divmod(p, d);
    if (!r.is_zero()) throw std::domain_error("poly_exact_div: nonzero remainder");
    return q;
}

namespace {

// Integer polynomial, ascending coefficients, no trailing zeros.
using ZPoly = std::vector<BigInt>;

void trim_z(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Divides out the integer content and normalizes the leading sign to +.
void make_primitive(ZPoly& a) {
    BigInt g = 0;
    for (const BigInt& ai : a) g = gcd(g, ai);
    if (sgn(a.back()) < 0) g = -g;
    for (BigInt& ai : a) ai /= g;
}

// Clears denominators of a nonzero Poly and returns the primitive
// integer image with positive leading coefficient.
ZPoly to_primitive_z(const Poly& p) {
    BigInt den = 1;
    for (const Rat& a : p.coeffs()) den = lcm(den, a.denominator());
    ZPoly z;
    z.reserve(p.coeffs().size());
    for (const Rat& a : p.coeffs()) z.push_back(a.numerator() * (den / a.denominator()));
    trim_z(z);
    make_primitive(z);
    return z;
}

// Pseudo-remainder: repeatedly scales by lc(b) so every elimination
// step stays in Z.
ZPoly prem_z(ZPoly a, const ZPoly& b) {
    const BigInt lb = b.back();
    const int db = static_cast<int>(b.size()) - 1;
    while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
        const int s = static_cast<int>(a.size()) - 1 - db;
        const BigInt head = a.back();
        for (BigInt& ai : a) ai *= lb;
        for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(s + j)] -= head * b[static_cast<std::size_t>(j)];
        trim_z(a);
    }
    return a;
}

bool divides(const BigInt& d, const BigInt& n) {
    if (d == 0) return n == 0;
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Rational roots of a monic squarefree nonconstant polynomial.
std::vector<Rat> squarefree_rational_roots(const Poly& f) {
    ZPoly F = to_primitive_z(f);
    std::vector<Rat> roots;
    std::size_t low = 0;
    while (low < F.size() && F[low] == 0) ++low;
    if (low > 0) {
        roots.emplace_back(0);
        F.erase(F.begin(), F.begin() + static_cast<std::ptrdiff_t>(low));
    }
    if (F.size() <= 1) return roots;

    BigInt f_at_1 = 0, f_at_m1 = 0;
    for (std::size_t i = 0; i < F.size(); ++i) {
        f_at_1 += F[i];
        if (i % 2 == 0)
            f_at_m1 += F[i];
        else
            f_at_m1 -= F[i];
    }

    const std::vector<BigInt> nums = divisors(abs(F.front()));
    const std::vector<BigInt> dens = divisors(abs(F.back()));
    const int d = static_cast<int>(F.size()) - 1;
    for (const BigInt& q : dens) {
        for (const BigInt& p : nums) {
            if (gcd(p, q) != 1) continue;
            for (const int s : {1, -1}) {
                const BigInt n = s > 0 ? p : BigInt(-p);
                if (!divides(n - q, f_at_1)) continue;
                if (!divides(n + q, f_at_m1)) continue;
                // q^(d-i)-homogenized Horner keeps the test in Z.
                BigInt v = F[static_cast<std::size_t>(d)];
                BigInt qpow = 1;
                for (int i = d - 1; i >= 0; --i) {
                    qpow *= q;
                    v = v * n + F[static_cast<std::size_t>(i)] * qpow;
                }
                if (v == 0) roots.emplace_back(n, q);
            }
        }
    }
    return roots;
}

}  // namespace

Poly poly_gcd(const Poly& p, const Poly& q) {
    if (p.is_zero() && q.is_zero()) throw std::domain_error("poly_gcd: gcd(0, 0)");
    if (p.is_zero()) return q.monic();
    if (q.is_zero()) return p.monic();
    ZPoly a = to_primitive_z(p);
    ZPoly b = to_primitive_z(q);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        ZPoly r = prem_z(a, b);
        if (!r.empty()) make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    std::vector<Rat> c;
    c.reserve(a.size());
    for (const BigInt& ai : a) c.emplace_back(ai);
    return Poly::from_coeffs(std::move(c)).monic();
}

Poly SquarefreeDecomposition::reconstruct() const {
    Poly acc(content);
    for (const SquarefreePart& part : parts) {
        Poly power(Rat(1));
        for (int e = 0; e < part.multiplicity; ++e) power = power * part.factor;
        acc = acc * power;
    }
    return acc;
}

int SquarefreeDecomposition::max_multiplicity() const {
    return parts.empty() ? 0 : parts.back().multiplicity;
}

SquarefreeDecomposition squarefree_decompose(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree_decompose: zero polynomial");
    SquarefreeDecomposition out;
    out.content = p.leading();
    const Poly m = p.monic();
    if (m.degree() == 0) return out;

    const Poly d = m.derivative();
    const Poly g = poly_gcd(m, d);
    if (g.degree() == 0) {
        out.parts.push_back({m, 1});
        return out;
    }
    // Yun's iteration.
    Poly w = poly_exact_div(m, g);
    Poly y = poly_exact_div(d, g);
    Poly z = y - w.derivative();
    int mult = 1;
    while (w.degree() > 0) {
        const Poly h = poly_gcd(w, z);
        if (h.degree() > 0) out.parts.push_back({h, mult});
        w = poly_exact_div(w, h);
        y = poly_exact_div(z, h);
        z = y - w.derivative();
        ++mult;
    }
    return out;
}

std::vector<std::pair<Rat, int>> rational_roots(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
    std::vector<std::pair<Rat, int>> out;
    if (p.degree() == 0) return out;
    const SquarefreeDecomposition sf = squarefree_decompose(p);
    for (const SquarefreePart& part : sf.parts)
        for (const Rat& r : squarefree_rational_roots(part.factor))
            out.emplace_back(r, part.multiplicity);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

BigInt poly_height(const Poly& p) {
    if (p.is_zero()) return 0;
    const ZPoly z = to_primitive_z(p);
    BigInt h = 0;
    for (const BigInt& ai : z) {
        BigInt a = abs(ai);
        if (a > h) h = std::move(a);
    }
    return h;
}

}  // namespace progsum
