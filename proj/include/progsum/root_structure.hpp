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

#ifndef PROGSUM_ROOT_STRUCTURE_HPP
#define PROGSUM_ROOT_STRUCTURE_HPP

#include <map>
#include <optional>
#include <vector>

#include "progsum/poly.hpp"
#include "progsum/rational.hpp"

namespace progsum {

/**
 * Root-multiplicity census of a polynomial over the complex numbers,
 * read off the squarefree decomposition by degree sums — no numerical
 * root isolation anywhere.
 */
struct RootStructureReport {
    int distinct_roots = 0;
    int odd_multiplicity_roots = 0;
    int simple_roots = 0;
    /// For each requested prime ell: number of roots whose multiplicity
    /// is coprime to ell.
    std::map<int, int> coprime_counts;
    /// Monic gcd(p, p') when nonconstant (the "multiple factor").
    std::optional<Poly> multiple_factor;
    /// Largest multiplicity of any complex root.
    int max_multiplicity = 0;
};

/// Requires deg p >= 1 (constant or zero -> std::domain_error).
RootStructureReport analyze_roots(const Poly& p, const std::vector<int>& primes = {});

/// Verdict row of the B_k / E_k multiple-factor sweeps.
struct LemmaSweepEntry {
    int k;
    bool pass;
    std::optional<Poly> multiple_factor;
};

/**
 * For 1 <= k <= k_max checks the multiple-factor shape of B_k(x): odd k
 * must be squarefree; even k may carry a product of quadratics
 * x^2 - x - beta (beta an odd positive integer), never multiplicity > 2.
 */
std::vector<LemmaSweepEntry> check_lemma3(int k_max, int threads = 0);

/**
 * Same sweep for E_k(x): even k must be squarefree; for odd k the only
 * admissible multiple factor is x^2 - x - 1, multiplicity at most 2.
 */
std::vector<LemmaSweepEntry> check_lemma6(int k_max, int threads = 0);

/// Verdict row of the shifted-polynomial checks below.
struct ShiftCheckEntry {
    Rat shift;
    int count;
    bool pass;
};

/**
 * For each s checks that B_k(x) + s has at least three roots of odd
 * multiplicity.  Valid for k >= 3, k not in {4, 6} (those two are
 * genuine exceptions; probe them with analyze_roots directly).
 */
std::vector<ShiftCheckEntry> check_lemma4(int k, const std::vector<Rat>& shifts);

/**
 * For each rational z checks that E_k(x) + z has at least three simple
 * roots.  Valid for k >= 7.  Rational slice only: irrational critical
 * values would need algebraic-number arithmetic.
 */
std::vector<ShiftCheckEntry> check_lemma5_rational(int k, const std::vector<Rat>& shifts);

/// Default shift samples: fixed small rationals plus critical-value
/// probes -B_k(q) (resp. -E_k(q)) at q in {0, 1/4, 1/3, 1/2, 2}.
std::vector<Rat> default_shifts_bernoulli(int k);
std::vector<Rat> default_shifts_euler(int k);

/// True iff m is a (possibly empty) product of quadratics x^2 - x - beta
/// with each beta an odd positive integer.  m must be monic.
bool is_admissible_quadratic_product(const Poly& m);

}  // namespace progsum

#endif
