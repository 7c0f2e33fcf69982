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

#include "progsum/power_sums.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "progsum/classical.hpp"

namespace progsum {

namespace {

BigInt to_bigint(long long v) { return BigInt(std::to_string(v)); }

}  // namespace

std::string_view family_name(PowerSumFamily f) {
    switch (f) {
        case PowerSumFamily::S: return "S";
        case PowerSumFamily::TPlus: return "T+";
        case PowerSumFamily::TMinus: return "T-";
    }
    return "?";
}

std::optional<PowerSumFamily> family_from_name(std::string_view s) {
    if (s == "S") return PowerSumFamily::S;
    if (s == "T+") return PowerSumFamily::TPlus;
    if (s == "T-") return PowerSumFamily::TMinus;
    return std::nullopt;
}

ProgressionParams::ProgressionParams(long long a_, long long b_, int k_) : a(a_), b(b_), k(k_) {
    if (a == 0) throw std::domain_error("ProgressionParams: a must be nonzero");
    if (k < 0) throw std::domain_error("ProgressionParams: k must be nonnegative");
    if (std::gcd(a, b) != 1) throw std::domain_error("ProgressionParams: gcd(a, b) must be 1");
}

Rat ProgressionParams::b_over_a() const { return Rat(to_bigint(b), to_bigint(a)); }

Rat ProgressionParams::a_pow_k() const {
    return Rat(to_bigint(a)).pow(static_cast<unsigned long>(k));
}

Poly build_S(const ProgressionParams& p) {
    if (p.k < 1) throw std::domain_error("build_S: k must be >= 1");
    const Rat ba = p.b_over_a();
    const Poly bk1 = bernoulli_poly(p.k + 1);
    const Poly shifted = bk1.compose_linear(Rat(1), ba);
    const Rat scale = p.a_pow_k() / Rat(p.k + 1);
    return scale * (shifted - Poly(bk1.eval(ba)));
}

Poly build_T(const ProgressionParams& p, PowerSumFamily sign) {
    if (sign == PowerSumFamily::S) throw std::domain_error("build_T: sign must be T+ or T-");
    const Rat ba = p.b_over_a();
    const Poly ek = euler_poly(p.k);
    const Poly shifted = ek.compose_linear(Rat(1), ba);
    const Poly constant(ek.eval(ba));
    const Rat scale = p.a_pow_k() / Rat(2);
    return scale * (sign == PowerSumFamily::TPlus ? constant + shifted : constant - shifted);
}

Poly family_poly(PowerSumFamily f, const ProgressionParams& p) {
    return f == PowerSumFamily::S ? build_S(p) : build_T(p, f);
}

namespace {

Rat signed_power_sum(const ProgressionParams& p, long long n, bool alternating) {
    if (n < 1) throw std::domain_error("power sum oracle: n must be >= 1");
    const BigInt a = to_bigint(p.a);
    const BigInt b = to_bigint(p.b);
    BigInt acc = 0;
    for (long long i = 0; i < n; ++i) {
        const BigInt base = a * to_bigint(i) + b;
        BigInt term;
        mpz_pow_ui(term.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(p.k));
        if (alternating && (i % 2 != 0))
            acc -= term;
        else
            acc += term;
    }
    return Rat(acc);
}

}  // namespace

Rat direct_power_sum(const ProgressionParams& p, long long n) {
    return signed_power_sum(p, n, false);
}

Rat direct_alt_power_sum(const ProgressionParams& p, long long n) {
    return signed_power_sum(p, n, true);
}

}  // namespace progsum
