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

#ifndef PROGSUM_CLASSICAL_HPP
#define PROGSUM_CLASSICAL_HPP

#include <vector>

#include "progsum/poly.hpp"
#include "progsum/rational.hpp"

namespace progsum {

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
BigInt binomial(unsigned long n, unsigned long k);

/**
 * Lazily grown table of Bernoulli numbers and polynomials.
 *
 * Numbers follow B_0 = 1, B_n = -1/(n+1) * sum_{j<n} C(n+1, j) B_j,
 * so B_1 = -1/2; polynomials are B_n(x) = sum_j C(n, j) B_j x^{n-j}.
 * Not internally synchronized; the module-level accessors below add a
 * lock around one shared instance.
 */
class BernoulliTable {
   public:
    explicit BernoulliTable(int initial_max_k = 64) { ensure(initial_max_k); }

    int max_k() const { return static_cast<int>(numbers_.size()) - 1; }
    Rat number(int k);
    Poly poly(int k);

   private:
    void ensure(int k);

    std::vector<Rat> numbers_;
    std::vector<Poly> polys_;
};

/**
 * Lazily grown table of Euler polynomials,
 * E_n(x) = x^n - 1/2 * sum_{j<n} C(n, j) E_j(x).
 * Same synchronization contract as BernoulliTable.
 */
class EulerTable {
   public:
    explicit EulerTable(int initial_max_k = 64) { ensure(initial_max_k); }

    int max_k() const { return static_cast<int>(polys_.size()) - 1; }
    Poly poly(int k);

   private:
    void ensure(int k);

    std::vector<Poly> polys_;
};

/// Shared-table accessors, safe to call from any thread.
Rat bernoulli_number(int k);
Poly bernoulli_poly(int k);
Poly euler_poly(int k);

}  // namespace progsum

#endif
