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

#ifndef PROGSUM_POWER_SUMS_HPP
#define PROGSUM_POWER_SUMS_HPP

#include <optional>
#include <string_view>

#include "progsum/poly.hpp"
#include "progsum/rational.hpp"

namespace progsum {

/// The three polynomial families: ordinary power sums S, and the two
/// alternating branches T+ (matches alternating sums of odd length)
/// and T- (even length).
enum class PowerSumFamily { S, TPlus, TMinus };

std::string_view family_name(PowerSumFamily f);                     // "S", "T+", "T-"
std::optional<PowerSumFamily> family_from_name(std::string_view s);

/**
 * Parameters (a, b, k) of the progression b, a+b, 2a+b, ... raised to
 * the k-th power.  Constructor enforces a != 0, gcd(a, b) = 1, k >= 0
 * (throws std::domain_error otherwise).
 */
struct ProgressionParams {
    long long a;
    long long b;
    int k;

    ProgressionParams(long long a_, long long b_, int k_);

    Rat b_over_a() const;
    /// a^k as an exact rational.
    Rat a_pow_k() const;
};

/**
 * S_{a,b}^k(x) = (a^k/(k+1)) * (B_{k+1}(x + b/a) - B_{k+1}(b/a)).
 * Degree k+1, constant term 0.  Requires k >= 1.
 */
Poly build_S(const ProgressionParams& p);

/**
 * T_{a,b}^{k,±}(x) = (a^k/2) * (E_k(b/a) ± E_k(x + b/a)).
 * Degree k.  sign must be TPlus or TMinus.
 */
Poly build_T(const ProgressionParams& p, PowerSumFamily sign);

/// Dispatches to build_S / build_T.
Poly family_poly(PowerSumFamily f, const ProgressionParams& p);

/// Literal summation oracle sum_{i=0}^{n-1} (a*i + b)^k, n >= 1.
Rat direct_power_sum(const ProgressionParams& p, long long n);

/// Literal alternating oracle sum_{i=0}^{n-1} (-1)^i (a*i + b)^k, n >= 1.
Rat direct_alt_power_sum(const ProgressionParams& p, long long n);

}  // namespace progsum

#endif
