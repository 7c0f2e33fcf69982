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

#ifndef PROGSUM_SEARCH_HPP
#define PROGSUM_SEARCH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "progsum/power_sums.hpp"
#include "progsum/rational.hpp"
#include "progsum/reduction.hpp"

namespace progsum {

/// Bounded enumeration window.  ell_max only applies when the power
/// RHS leaves the exponent unknown.
struct SearchBox {
    long long x_min;
    long long x_max;
    int ell_max = 2;
    bool require_y_gt_1 = false;

    void validate() const;
};

struct Solution {
    long long x;
    BigInt y;
    std::optional<int> ell;  // absent for quadratic RHS
    PowerSumFamily family;
    Rat lhs_value;
};

/// Floor ell-th root with exactness flag, pure integer arithmetic.
/// Requires v >= 0, n >= 1.
std::pair<BigInt, bool> integer_nth_root(const BigInt& v, int n);

/**
 * All integer (x, y) in the box with family(x) = A*y^2 + B*y + C,
 * decided per x by an exact discriminant perfect-square test.
 * Ascending (x, y) order, deterministic under any thread count.
 */
std::vector<Solution> solve_quadratic_rhs(PowerSumFamily family, const ProgressionParams& params,
                                          const QuadraticRHS& rhs, const SearchBox& box,
                                          int threads = 0);

/**
 * All integer (x, y, ell) in the box with family(x) = c*y^ell + d,
 * ell fixed by the RHS or swept in [2, ell_max]; per value an exact
 * integer ell-th root test, negative values admitted at odd ell.
 * box.require_y_gt_1 drops |y| <= 1.  Ascending (x, ell, y) order.
 */
std::vector<Solution> solve_power_rhs(PowerSumFamily family, const ProgressionParams& params,
                                      const PowerRHS& rhs, const SearchBox& box, int threads = 0);

}  // namespace progsum

#endif
