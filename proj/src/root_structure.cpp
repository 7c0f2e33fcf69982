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

#include "progsum/root_structure.hpp"

#include <algorithm>
#include <stdexcept>

#include "progsum/classical.hpp"
#include "progsum/integers.hpp"
#include "progsum/parallel.hpp"

namespace progsum {

RootStructureReport analyze_roots(const Poly& p, const std::vector<int>& primes) {
    if (p.is_zero() || p.degree() < 1)
        throw std::domain_error("analyze_roots: polynomial must be nonconstant");
    const SquarefreeDecomposition sf = squarefree_decompose(p);
    RootStructureReport report;
    for (const int ell : primes) report.coprime_counts[ell] = 0;
    Poly multiple(Rat(1));
    for (const SquarefreePart& part : sf.parts) {
        const int d = part.factor.degree();
        const int m = part.multiplicity;
        report.distinct_roots += d;
        if (m % 2 != 0) report.odd_multiplicity_roots += d;
        if (m == 1) report.simple_roots += d;
        report.max_multiplicity = std::max(report.max_multiplicity, m);
        for (const int ell : primes)
            if (m % ell != 0) report.coprime_counts[ell] += d;
        for (int e = 1; e < m; ++e) multiple = multiple * part.factor;
    }
    if (!multiple.is_zero() && multiple.degree() > 0) report.multiple_factor = std::move(multiple);
    return report;
}

bool is_admissible_quadratic_product(const Poly& m) {
    if (m.is_zero()) return false;
    if (m.degree() == 0) return m.coeff(0) == Rat(1);
    if (m.degree() % 2 != 0) return false;
    const Rat c = m.constant_term();
    if (c.is_zero() || !c.is_integer()) return false;
    for (const BigInt& beta : divisors(abs(c.numerator()))) {
        if (!mpz_odd_p(beta.get_mpz_t())) continue;
        const Poly quad = Poly::from_coeffs({Rat(BigInt(-beta)), Rat(-1), Rat(1)});
        auto [quot, rem] = poly_divmod(m, quad);
        if (!rem.is_zero()) continue;
        if (is_admissible_quadratic_product(quot)) return true;
    }
    return false;
}

namespace {

struct MultipleFactorInfo {
    std::optional<Poly> factor;
    int max_multiplicity;
};

MultipleFactorInfo multiple_factor_of(const Poly& p) {
    const SquarefreeDecomposition sf = squarefree_decompose(p);
    Poly m(Rat(1));
    for (const SquarefreePart& part : sf.parts)
        for (int e = 1; e < part.multiplicity; ++e) m = m * part.factor;
    MultipleFactorInfo info{std::nullopt, sf.max_multiplicity()};
    if (m.degree() > 0) info.factor = std::move(m);
    return info;
}

std::vector<LemmaSweepEntry> multiple_factor_sweep(int k_max, int threads, bool bernoulli) {
    if (k_max < 1) throw std::domain_error("lemma sweep: k_max must be >= 1");
    // Warm the shared table once so workers only read.
    if (bernoulli)
        bernoulli_poly(k_max);
    else
        euler_poly(k_max);
    const Poly golden = Poly::from_coeffs({Rat(-1), Rat(-1), Rat(1)});  // x^2 - x - 1
    std::vector<LemmaSweepEntry> entries(static_cast<std::size_t>(k_max));
    parallel_for(static_cast<std::size_t>(k_max), threads, [&](std::size_t i) {
        const int k = static_cast<int>(i) + 1;
        const Poly p = bernoulli ? bernoulli_poly(k) : euler_poly(k);
        MultipleFactorInfo info = multiple_factor_of(p);
        bool pass;
        if (!info.factor.has_value()) {
            pass = true;
        } else if (info.max_multiplicity > 2) {
            pass = false;
        } else if (bernoulli) {
            // Odd-indexed B_k must be squarefree; even-indexed may only
            // carry x^2 - x - beta quadratics, beta odd positive.
            pass = k % 2 == 0 && is_admissible_quadratic_product(*info.factor);
        } else {
            // Even-indexed E_k must be squarefree; odd-indexed may only
            // carry x^2 - x - 1.
            pass = k % 2 != 0 && *info.factor == golden;
        }
        entries[i] = LemmaSweepEntry{k, pass, std::move(info.factor)};
    });
    return entries;
}

void append_unique(std::vector<Rat>& v, Rat value) {
    if (std::find(v.begin(), v.end(), value) == v.end()) v.push_back(std::move(value));
}

std::vector<Rat> default_shifts(const Poly& p) {
    std::vector<Rat> shifts{Rat(0), Rat(1, 2), Rat(-1, 2), Rat(1), Rat(-1), Rat(1, 3), Rat(-1, 3)};
    for (const Rat& q : {Rat(0), Rat(1, 4), Rat(1, 3), Rat(1, 2), Rat(2)})
        append_unique(shifts, -p.eval(q));
    return shifts;
}

}  // namespace

std::vector<LemmaSweepEntry> check_lemma3(int k_max, int threads) {
    return multiple_factor_sweep(k_max, threads, true);
}

std::vector<LemmaSweepEntry> check_lemma6(int k_max, int threads) {
    return multiple_factor_sweep(k_max, threads, false);
}

std::vector<ShiftCheckEntry> check_lemma4(int k, const std::vector<Rat>& shifts) {
    if (k < 3 || k == 4 || k == 6)
        throw std::domain_error("check_lemma4: requires k >= 3 with k not in {4, 6}");
    const Poly bk = bernoulli_poly(k);
    std::vector<ShiftCheckEntry> entries;
    entries.reserve(shifts.size());
    for (const Rat& s : shifts) {
        const int count = analyze_roots(bk + Poly(s)).odd_multiplicity_roots;
        entries.push_back(ShiftCheckEntry{s, count, count >= 3});
    }
    return entries;
}

std::vector<ShiftCheckEntry> check_lemma5_rational(int k, const std::vector<Rat>& shifts) {
    if (k < 7) throw std::domain_error("check_lemma5_rational: requires k >= 7");
    const Poly ek = euler_poly(k);
    std::vector<ShiftCheckEntry> entries;
    entries.reserve(shifts.size());
    for (const Rat& z : shifts) {
        const int count = analyze_roots(ek + Poly(z)).simple_roots;
        entries.push_back(ShiftCheckEntry{z, count, count >= 3});
    }
    return entries;
}

std::vector<Rat> default_shifts_bernoulli(int k) { return default_shifts(bernoulli_poly(k)); }

std::vector<Rat> default_shifts_euler(int k) { return default_shifts(euler_poly(k)); }

}  // namespace progsum
