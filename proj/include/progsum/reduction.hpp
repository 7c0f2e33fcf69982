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

#ifndef PROGSUM_REDUCTION_HPP
#define PROGSUM_REDUCTION_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "progsum/poly.hpp"
#include "progsum/power_sums.hpp"
#include "progsum/rational.hpp"

namespace progsum {

/// Right-hand side A*y^2 + B*y + C with A != 0.
struct QuadraticRHS {
    Rat A;
    Rat B;
    Rat C;
};

/// Right-hand side c*y^ell + d with c != 0 and ell >= 2; ell absent
/// means the exponent itself is an unknown of the equation.
struct PowerRHS {
    Rat c;
    Rat d;
    std::optional<int> ell;
};

struct ShiftConstants {
    std::optional<Rat> mu;
    std::optional<Rat> nu;
    std::optional<Rat> s;
};

/// One verified lemma hypothesis: which lemma, the claim in words, the
/// witness counts backing it, and whether it held.
struct HypothesisCheck {
    int lemma_id;
    std::string claim;
    std::map<std::string, int> counts;
    bool pass;
};

enum class Verdict { Certified, HypothesisViolated, OutOfTheoremRange };

std::string_view verdict_name(Verdict v);

/**
 * Per-instance record that the root-structure hypotheses guaranteeing
 * finitely many integer solutions hold at concrete (family, a, b, k)
 * against a concrete right-hand side.  It attests hypotheses only;
 * deliberately, no numeric solution bound appears anywhere in it.
 */
struct FinitenessCertificate {
    int theorem_id;  // 1..6
    ProgressionParams params;
    PowerSumFamily family;
    std::variant<QuadraticRHS, PowerRHS> rhs;
    Poly reduced_poly;
    ShiftConstants shift_constants;
    std::vector<HypothesisCheck> hypothesis_checks;
    Verdict verdict;
};

/// 1..3 for quadratic right-hand sides (S, T+, T-), 4..6 for power.
int theorem_id_for(PowerSumFamily family, bool quadratic_rhs);

/// k >= 2 with k not in {3, 5} for family S; k >= 7 for T+/T-.
bool theorem_range_ok(PowerSumFamily family, int k);

/**
 * Replays the quadratic-RHS reduction: completes the square on the RHS
 * (mu = B/(2A), nu = (B^2 - 4AC)/(4A)), forms P(x) = family(x) + nu,
 * reports the equivalent classical shift s, and checks the root
 * hypotheses (S: >= 3 odd-multiplicity roots; T: >= 3 simple roots).
 */
FinitenessCertificate reduce_quadratic(PowerSumFamily family, const ProgressionParams& params,
                                       const QuadraticRHS& rhs);

/**
 * Power-RHS reduction: P(x) = family(x) - d.  H1 (>= 2 distinct roots)
 * certifies the exponent is bounded; H2 adds, per prime p dividing ell,
 * the coprime-multiplicity count check (p = 2 needs 3 odd-multiplicity
 * roots, odd p needs 2 roots of multiplicity coprime to p).  A
 * composite ell bundles the checks of its prime divisors.
 */
FinitenessCertificate reduce_power(PowerSumFamily family, const ProgressionParams& params,
                                   const PowerRHS& rhs);

/// Derivative-side refutation of the collapsed shapes.
struct ProbeReport {
    Poly derivative;
    std::vector<std::pair<Rat, int>> rational_roots;
    int max_rational_multiplicity;  // 0 when no rational root
    std::optional<Poly> multiple_factor;
    int max_multiplicity;  // over C
    bool pass;
};

/**
 * Refutes S_{a,b}^k(x) - d = R*(Ux+V)^(k+1): the derivative is
 * a^k * B_k(x + b/a), which must not have a rational root of
 * multiplicity k.  Requires k >= 2.
 */
ProbeReport contradiction_probe_S(const ProgressionParams& params, const Rat& d);

/**
 * Refutes the analogous collapses for T±: the derivative is
 * ±(k*a^k/2) * E_{k-1}(x + b/a), which must have no rational root of
 * multiplicity >= 6 and whose multiple factor may be at most the
 * shifted image of x^2 - x - 1, multiplicity <= 2.  Requires k >= 7.
 */
ProbeReport contradiction_probe_T(const ProgressionParams& params, const Rat& d,
                                  PowerSumFamily sign);

}  // namespace progsum

#endif
