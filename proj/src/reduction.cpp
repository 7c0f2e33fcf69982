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

#include "progsum/reduction.hpp"

#include <stdexcept>

#include "progsum/classical.hpp"
#include "progsum/integers.hpp"
#include "progsum/root_structure.hpp"

namespace progsum {

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Certified: return "CERTIFIED";
        case Verdict::HypothesisViolated: return "HYPOTHESIS_VIOLATED";
        case Verdict::OutOfTheoremRange: return "OUT_OF_THEOREM_RANGE";
    }
    return "?";
}

int theorem_id_for(PowerSumFamily family, bool quadratic_rhs) {
    const int base = quadratic_rhs ? 0 : 3;
    switch (family) {
        case PowerSumFamily::S: return base + 1;
        case PowerSumFamily::TPlus: return base + 2;
        case PowerSumFamily::TMinus: return base + 3;
    }
    return 0;
}

bool theorem_range_ok(PowerSumFamily family, int k) {
    if (family == PowerSumFamily::S) return k >= 2 && k != 3 && k != 5;
    return k >= 7;
}

namespace {

Verdict settle(bool in_range, const std::vector<HypothesisCheck>& checks) {
    if (!in_range) return Verdict::OutOfTheoremRange;
    for (const HypothesisCheck& c : checks)
        if (!c.pass) return Verdict::HypothesisViolated;
    return Verdict::Certified;
}

HypothesisCheck odd_multiplicity_check(const RootStructureReport& report) {
    return HypothesisCheck{
        2,
        "reduced polynomial has at least three roots of odd multiplicity",
        {{"odd_multiplicity_roots", report.odd_multiplicity_roots},
         {"distinct_roots", report.distinct_roots},
         {"required", 3}},
        report.odd_multiplicity_roots >= 3};
}

HypothesisCheck coprime_multiplicity_check(const RootStructureReport& report, int p) {
    const int count = report.coprime_counts.at(p);
    return HypothesisCheck{
        2,
        "reduced polynomial has at least two roots of multiplicity coprime to " +
            std::to_string(p),
        {{"coprime_count", count}, {"distinct_roots", report.distinct_roots}, {"required", 2}},
        count >= 2};
}

}  // namespace

FinitenessCertificate reduce_quadratic(PowerSumFamily family, const ProgressionParams& params,
                                       const QuadraticRHS& rhs) {
    if (rhs.A.is_zero()) throw std::domain_error("reduce_quadratic: A must be nonzero");

    const Rat mu = rhs.B / (Rat(2) * rhs.A);
    const Rat nu = (rhs.B * rhs.B - Rat(4) * rhs.A * rhs.C) / (Rat(4) * rhs.A);
    const Poly reduced = family_poly(family, params) + Poly(nu);

    const Rat ak = params.a_pow_k();
    Rat s;
    if (family == PowerSumFamily::S)
        s = -bernoulli_poly(params.k + 1).eval(params.b_over_a()) + Rat(params.k + 1) * nu / ak;
    else
        s = euler_poly(params.k).eval(params.b_over_a()) + Rat(2) * nu / ak;

    const RootStructureReport report = analyze_roots(reduced);
    std::vector<HypothesisCheck> checks;
    if (family == PowerSumFamily::S) {
        checks.push_back(odd_multiplicity_check(report));
    } else {
        checks.push_back(HypothesisCheck{
            5,
            "reduced polynomial has at least three simple roots",
            {{"simple_roots", report.simple_roots},
             {"distinct_roots", report.distinct_roots},
             {"required", 3}},
            report.simple_roots >= 3});
    }

    return FinitenessCertificate{theorem_id_for(family, true),
                                 params,
                                 family,
                                 rhs,
                                 reduced,
                                 ShiftConstants{mu, nu, s},
                                 checks,
                                 settle(theorem_range_ok(family, params.k), checks)};
}

FinitenessCertificate reduce_power(PowerSumFamily family, const ProgressionParams& params,
                                   const PowerRHS& rhs) {
    if (rhs.c.is_zero()) throw std::domain_error("reduce_power: c must be nonzero");
    if (rhs.ell.has_value() && *rhs.ell < 2)
        throw std::domain_error("reduce_power: ell must be >= 2");

    const Poly reduced = family_poly(family, params) - Poly(rhs.d);

    std::vector<int> primes;
    if (rhs.ell.has_value()) primes = prime_factors_int(*rhs.ell);
    const RootStructureReport report = analyze_roots(reduced, primes);

    std::vector<HypothesisCheck> checks;
    checks.push_back(HypothesisCheck{
        1,
        "reduced polynomial has at least two distinct roots (exponent is bounded)",
        {{"distinct_roots", report.distinct_roots}, {"required", 2}},
        report.distinct_roots >= 2});
    for (const int p : primes) {
        if (p == 2)
            checks.push_back(odd_multiplicity_check(report));
        else
            checks.push_back(coprime_multiplicity_check(report, p));
    }

    return FinitenessCertificate{theorem_id_for(family, false),
                                 params,
                                 family,
                                 rhs,
                                 reduced,
                                 ShiftConstants{},
                                 checks,
                                 settle(theorem_range_ok(family, params.k), checks)};
}

namespace {

ProbeReport probe_common(Poly derivative, int forbidden_multiplicity) {
    ProbeReport report;
    report.derivative = std::move(derivative);
    report.rational_roots = rational_roots(report.derivative);
    report.max_rational_multiplicity = 0;
    for (const auto& [root, mult] : report.rational_roots)
        report.max_rational_multiplicity = std::max(report.max_rational_multiplicity, mult);
    const RootStructureReport rs = analyze_roots(report.derivative);
    report.multiple_factor = rs.multiple_factor;
    report.max_multiplicity = rs.max_multiplicity;
    report.pass = report.max_rational_multiplicity < forbidden_multiplicity;
    return report;
}

}  // namespace

ProbeReport contradiction_probe_S(const ProgressionParams& params, const Rat&) {
    if (params.k < 2) throw std::domain_error("contradiction_probe_S: requires k >= 2");
    // d/dx [S(x) - d] = a^k * B_k(x + b/a); a collapse to R*(Ux+V)^(k+1)
    // would force a rational root of multiplicity k here.
    const Poly derivative =
        params.a_pow_k() * bernoulli_poly(params.k).compose_linear(Rat(1), params.b_over_a());
    return probe_common(derivative, params.k);
}

ProbeReport contradiction_probe_T(const ProgressionParams& params, const Rat&,
                                  PowerSumFamily sign) {
    if (sign == PowerSumFamily::S)
        throw std::domain_error("contradiction_probe_T: sign must be T+ or T-");
    if (params.k < 7) throw std::domain_error("contradiction_probe_T: requires k >= 7");
    const Rat scale = Rat(params.k) * params.a_pow_k() / Rat(2);
    Poly derivative =
        scale * euler_poly(params.k - 1).compose_linear(Rat(1), params.b_over_a());
    if (sign == PowerSumFamily::TMinus) derivative = -derivative;
    ProbeReport report = probe_common(std::move(derivative), 6);
    if (report.multiple_factor.has_value()) {
        const Poly expected =
            Poly::from_coeffs({Rat(-1), Rat(-1), Rat(1)}).compose_linear(Rat(1), params.b_over_a());
        report.pass = report.pass && *report.multiple_factor == expected &&
                      report.max_multiplicity <= 2;
    }
    return report;
}

}  // namespace progsum
