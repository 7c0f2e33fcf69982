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

#include "progsum/integers.hpp"

#include <algorithm>
#include <stdexcept>

namespace progsum {

namespace {

constexpr unsigned long kTrialBound = 100000;

// Pollard-Brent rho. n must be odd, composite, > 1.
BigInt pollard_brent(const BigInt& n) {
    if (n % 2 == 0) return 2;
    for (unsigned long c = 1;; ++c) {
        BigInt x = 2, y = 2, d = 1;
        BigInt ys = y, q = 1;
        const unsigned long m = 128;
        unsigned long r = 1;
        auto f = [&](const BigInt& v) { return (v * v + c) % n; };
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            while (k < r && d == 1) {
                ys = y;
                const unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = f(y);
                    q = q * abs(x - y) % n;
                }
                d = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (d == n) {
            // backtrack one step at a time
            d = 1;
            while (d == 1) {
                ys = f(ys);
                d = gcd(abs(x - ys), n);
            }
        }
        if (d != n) return d;
        // cycle degenerated for this c; retry with the next increment
    }
}

void factor_into(BigInt n, std::map<BigInt, int>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
        ++out[n];
        return;
    }
    const BigInt d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::map<BigInt, int> factorize(const BigInt& n) {
    if (n == 0) throw std::domain_error("factorize: zero has no factorization");
    BigInt m = abs(n);
    std::map<BigInt, int> out;
    for (unsigned long p = 2; p <= kTrialBound && m > 1; p += (p == 2) ? 1 : 2) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
            int e = 0;
            while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
                m /= p;
                ++e;
            }
            out[BigInt(static_cast<unsigned long>(p))] = e;
        }
        // no point trialing past sqrt(m)
        if (BigInt(static_cast<unsigned long>(p)) * static_cast<unsigned long>(p) > m) break;
    }
    if (m > 1) factor_into(m, out);
    return out;
}

std::vector<BigInt> divisors(const BigInt& n) {
    const auto fac = factorize(n);
    std::vector<BigInt> out{1};
    for (const auto& [p, e] : fac) {
        const std::size_t base = out.size();
        BigInt pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> prime_factors_int(int n) {
    if (n < 2) throw std::domain_error("prime_factors_int: need n >= 2");
    std::vector<int> out;
    int m = n;
    for (int p = 2; static_cast<long long>(p) * p <= m; ++p) {
        if (m % p == 0) {
            out.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

}  // namespace progsum
