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

#include "progsum/search.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

#include "progsum/parallel.hpp"

namespace progsum {

void SearchBox::validate() const {
    if (x_min > x_max) throw std::domain_error("SearchBox: x_min must be <= x_max");
    if (ell_max < 2) throw std::domain_error("SearchBox: ell_max must be >= 2");
}

std::pair<BigInt, bool> integer_nth_root(const BigInt& v, int n) {
    if (n < 1) throw std::domain_error("integer_nth_root: n must be >= 1");
    if (sgn(v) < 0) throw std::domain_error("integer_nth_root: v must be >= 0");
    BigInt root;
    const int exact = mpz_root(root.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(n));
    return {root, exact != 0};
}

namespace {

constexpr long long kChunk = 4096;

// Scans the box in fixed chunks; per_x appends its solutions for one x
// in final order, so concatenating chunks yields the deterministic
// ascending result regardless of thread count.
template <typename PerX>
std::vector<Solution> chunked_scan(const SearchBox& box, int threads, PerX&& per_x) {
    box.validate();
    const long long span = box.x_max - box.x_min + 1;
    const std::size_t chunks = static_cast<std::size_t>((span + kChunk - 1) / kChunk);
    std::vector<std::vector<Solution>> buckets(chunks);
    parallel_for(chunks, threads, [&](std::size_t ci) {
        const long long lo = box.x_min + static_cast<long long>(ci) * kChunk;
        const long long hi = std::min(box.x_max, lo + kChunk - 1);
        for (long long x = lo; x <= hi; ++x) per_x(x, buckets[ci]);
    });
    std::vector<Solution> out;
    for (std::vector<Solution>& bucket : buckets)
        out.insert(out.end(), std::make_move_iterator(bucket.begin()),
                   std::make_move_iterator(bucket.end()));
    return out;
}

bool small_y(const BigInt& y) { return abs(y) <= 1; }

}  // namespace

std::vector<Solution> solve_quadratic_rhs(PowerSumFamily family, const ProgressionParams& params,
                                          const QuadraticRHS& rhs, const SearchBox& box,
                                          int threads) {
    if (rhs.A.is_zero()) throw std::domain_error("solve_quadratic_rhs: A must be nonzero");
    const Poly p = family_poly(family, params);
    return chunked_scan(box, threads, [&](long long x, std::vector<Solution>& out) {
        const Rat v = p.eval(Rat(x));
        // Clear denominators of A*y^2 + B*y + (C - v) = 0.
        const Rat cv = rhs.C - v;
        BigInt scale = lcm(rhs.A.denominator(), rhs.B.denominator());
        scale = lcm(scale, cv.denominator());
        const BigInt a2 = rhs.A.numerator() * (scale / rhs.A.denominator());
        const BigInt b2 = rhs.B.numerator() * (scale / rhs.B.denominator());
        const BigInt c2 = cv.numerator() * (scale / cv.denominator());
        const BigInt disc = b2 * b2 - 4 * a2 * c2;
        if (sgn(disc) < 0) return;
        const auto [sq, exact] = integer_nth_root(disc, 2);
        if (!exact) return;
        const BigInt den = 2 * a2;
        std::vector<BigInt> ys;
        for (const BigInt& num : {BigInt(-b2 + sq), BigInt(-b2 - sq)}) {
            if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) continue;
            BigInt y = num / den;
            if (box.require_y_gt_1 && small_y(y)) continue;
            if (std::find(ys.begin(), ys.end(), y) == ys.end()) ys.push_back(std::move(y));
        }
        std::sort(ys.begin(), ys.end());
        for (BigInt& y : ys)
            out.push_back(Solution{x, std::move(y), std::nullopt, family, v});
    });
}

std::vector<Solution> solve_power_rhs(PowerSumFamily family, const ProgressionParams& params,
                                      const PowerRHS& rhs, const SearchBox& box, int threads) {
    if (rhs.c.is_zero()) throw std::domain_error("solve_power_rhs: c must be nonzero");
    if (rhs.ell.has_value() && *rhs.ell < 2)
        throw std::domain_error("solve_power_rhs: ell must be >= 2");
    const Poly p = family_poly(family, params);
    const int ell_lo = rhs.ell.value_or(2);
    const int ell_hi = rhs.ell.value_or(box.ell_max);
    return chunked_scan(box, threads, [&](long long x, std::vector<Solution>& out) {
        const Rat lhs = p.eval(Rat(x));
        const Rat v = (lhs - rhs.d) / rhs.c;
        if (!v.is_integer()) return;
        const BigInt value = v.numerator();
        for (int ell = ell_lo; ell <= ell_hi; ++ell) {
            std::vector<BigInt> ys;
            if (sgn(value) == 0) {
                ys.emplace_back(0);
            } else if (sgn(value) > 0) {
                const auto [root, exact] = integer_nth_root(value, ell);
                if (exact) {
                    if (ell % 2 == 0) ys.push_back(-root);
                    ys.push_back(root);
                }
            } else if (ell % 2 != 0) {
                const auto [root, exact] = integer_nth_root(BigInt(-value), ell);
                if (exact) ys.push_back(-root);
            }
            for (BigInt& y : ys) {
                if (box.require_y_gt_1 && small_y(y)) continue;
                out.push_back(Solution{x, std::move(y), ell, family, lhs});
            }
        }
    });
}

}  // namespace progsum
