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

#include "progsum/json_io.hpp"

namespace progsum {

OrderedJson json_of(const Rat& r) { return r.str(); }

OrderedJson json_of(const Poly& p) { return p.str(); }

OrderedJson json_of_integer(const BigInt& v) {
    if (v.fits_slong_p()) return static_cast<long>(v.get_si());
    return v.get_str();
}

OrderedJson json_of(const RootStructureReport& report) {
    OrderedJson j;
    j["distinct_roots"] = report.distinct_roots;
    j["odd_multiplicity_roots"] = report.odd_multiplicity_roots;
    j["simple_roots"] = report.simple_roots;
    OrderedJson counts = OrderedJson::object();
    for (const auto& [ell, count] : report.coprime_counts) counts[std::to_string(ell)] = count;
    j["coprime_counts"] = counts;
    j["max_multiplicity"] = report.max_multiplicity;
    if (report.multiple_factor.has_value()) j["multiple_factor"] = json_of(*report.multiple_factor);
    return j;
}

OrderedJson json_of(const FinitenessCertificate& cert) {
    OrderedJson j;
    j["theorem_id"] = cert.theorem_id;
    j["family"] = std::string(family_name(cert.family));
    j["params"] = {{"a", cert.params.a}, {"b", cert.params.b}, {"k", cert.params.k}};
    OrderedJson rhs;
    if (const auto* quad = std::get_if<QuadraticRHS>(&cert.rhs)) {
        rhs["type"] = "quadratic";
        rhs["A"] = json_of(quad->A);
        rhs["B"] = json_of(quad->B);
        rhs["C"] = json_of(quad->C);
    } else {
        const auto& power = std::get<PowerRHS>(cert.rhs);
        rhs["type"] = "power";
        rhs["c"] = json_of(power.c);
        rhs["d"] = json_of(power.d);
        if (power.ell.has_value())
            rhs["ell"] = *power.ell;
        else
            rhs["ell"] = "unknown";
    }
    j["rhs"] = rhs;
    j["reduced_poly"] = json_of(cert.reduced_poly);
    OrderedJson shifts = OrderedJson::object();
    if (cert.shift_constants.mu.has_value()) shifts["mu"] = json_of(*cert.shift_constants.mu);
    if (cert.shift_constants.nu.has_value()) shifts["nu"] = json_of(*cert.shift_constants.nu);
    if (cert.shift_constants.s.has_value()) shifts["s"] = json_of(*cert.shift_constants.s);
    j["shift_constants"] = shifts;
    OrderedJson checks = OrderedJson::array();
    for (const HypothesisCheck& check : cert.hypothesis_checks) {
        OrderedJson c;
        c["lemma_id"] = check.lemma_id;
        c["claim"] = check.claim;
        OrderedJson counts = OrderedJson::object();
        for (const auto& [name, value] : check.counts) counts[name] = value;
        c["counts"] = counts;
        c["pass"] = check.pass;
        checks.push_back(c);
    }
    j["hypothesis_checks"] = checks;
    j["verdict"] = std::string(verdict_name(cert.verdict));
    return j;
}

OrderedJson json_of(const Solution& solution) {
    OrderedJson j;
    j["x"] = solution.x;
    j["y"] = json_of_integer(solution.y);
    if (solution.ell.has_value()) j["ell"] = *solution.ell;
    j["family"] = std::string(family_name(solution.family));
    j["lhs_value"] = json_of(solution.lhs_value);
    if (solution.family == PowerSumFamily::S) j["x_classical"] = solution.x - 1;
    return j;
}

OrderedJson json_of(const ProbeReport& report) {
    OrderedJson j;
    j["derivative"] = json_of(report.derivative);
    OrderedJson roots = OrderedJson::array();
    for (const auto& [root, mult] : report.rational_roots)
        roots.push_back({{"root", json_of(root)}, {"multiplicity", mult}});
    j["rational_roots"] = roots;
    j["max_rational_multiplicity"] = report.max_rational_multiplicity;
    if (report.multiple_factor.has_value()) j["multiple_factor"] = json_of(*report.multiple_factor);
    j["max_multiplicity"] = report.max_multiplicity;
    j["pass"] = report.pass;
    return j;
}

}  // namespace progsum
