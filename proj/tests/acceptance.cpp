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

// End-to-end acceptance checks.  Each criterion prints exactly one
// PASS/FAIL line; the process exit code is the number of failures.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "progsum/classical.hpp"
#include "progsum/json_io.hpp"
#include "progsum/power_sums.hpp"
#include "progsum/reduction.hpp"
#include "progsum/root_structure.hpp"
#include "progsum/search.hpp"

using namespace progsum;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

int g_failures = 0;

void run_criterion(int n, const std::function<Outcome()>& body) {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
        outcome = body();
    } catch (const std::exception& e) {
        outcome.ok = false;
        outcome.detail = std::string("unexpected exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << "CRITERION " << n << ": " << (outcome.ok ? "PASS" : "FAIL");
    if (!outcome.detail.empty()) line << " - " << outcome.detail;
    line << " [" << std::fixed << std::setprecision(2) << secs << "s]";
    std::cout << line.str() << std::endl;
    if (!outcome.ok) ++g_failures;
}

std::vector<std::pair<long long, long long>> coprime_pairs(long long a_max, long long b_max) {
    std::vector<std::pair<long long, long long>> out;
    for (long long a = -a_max; a <= a_max; ++a) {
        if (a == 0) continue;
        for (long long b = -b_max; b <= b_max; ++b)
            if (std::gcd(a, b) == 1) out.emplace_back(a, b);
    }
    return out;
}

double elapsed_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ----- criterion bodies ---------------------------------------------------

Outcome criterion_schaeffer() {
    const auto start = std::chrono::steady_clock::now();
    const auto sols = solve_quadratic_rhs(PowerSumFamily::S, ProgressionParams(1, 0, 2),
                                          {Rat(1), Rat(0), Rat(0)}, SearchBox{0, 100});
    const double secs = elapsed_since(start);

    std::vector<std::pair<long long, BigInt>> got;
    for (const auto& s : sols) got.emplace_back(s.x, s.y);
    const std::vector<std::pair<long long, BigInt>> expected = {
        {0, BigInt(0)}, {1, BigInt(0)}, {2, BigInt(-1)},
        {2, BigInt(1)}, {25, BigInt(-70)}, {25, BigInt(70)}};
    const std::vector<std::pair<long long, BigInt>> published = {
        {0, BigInt(0)}, {1, BigInt(0)}, {25, BigInt(-70)}, {25, BigInt(70)}};

    bool ok = got == expected && secs < 1.0;
    for (const auto& p : published)
        ok = ok && std::find(got.begin(), got.end(), p) != got.end();
    ok = ok && sols.back().lhs_value == Rat(4900);

    return {ok,
            "box [0,100] has exactly 6 solutions incl. the sporadic x=25 (classical 24), y=+/-70 "
            "with 1^2+...+24^2 = 4900; note: x=2, y=+/-1 also lies in the box and is reported, "
            "though absent from the published 4-element list"};
}

Outcome criterion_closed_forms() {
    const auto start = std::chrono::steady_clock::now();
    long long identities = 0;
    bool ok = true;
    for (const auto& [a, b] : coprime_pairs(5, 5)) {
        for (int k = 0; k <= 12 && ok; ++k) {
            const ProgressionParams params(a, b, k);
            const Poly tp = build_T(params, PowerSumFamily::TPlus);
            const Poly tm = build_T(params, PowerSumFamily::TMinus);
            Poly s;
            if (k >= 1) s = build_S(params);
            for (long long n = 1; n <= 30; ++n) {
                if (k >= 1) {
                    ok = ok && s.eval(Rat(n)) == direct_power_sum(params, n);
                    ++identities;
                }
                const Rat alt = direct_alt_power_sum(params, n);
                const Poly& branch = (n % 2 != 0) ? tp : tm;
                ok = ok && branch.eval(Rat(n)) == alt;
                ++identities;
                if (!ok) break;
            }
        }
        if (!ok) break;
    }
    const double secs = elapsed_since(start);
    ok = ok && secs < 30.0;
    std::ostringstream detail;
    detail << identities << " closed-form evaluations equal the summation oracle exactly";
    return {ok, detail.str()};
}

Outcome criterion_bernoulli_squarefree() {
    const auto start = std::chrono::steady_clock::now();
    const auto entries = check_lemma3(40);
    bool ok = entries.size() == 40;
    for (const auto& e : entries) ok = ok && e.pass && !e.multiple_factor.has_value();
    ok = ok && elapsed_since(start) < 60.0;
    return {ok, "gcd(B_k, B_k') is constant for every k in [1,40]"};
}

Outcome criterion_euler_multiple_factor() {
    const auto start = std::chrono::steady_clock::now();
    const auto entries = check_lemma6(40);
    bool ok = entries.size() == 40;
    const Poly golden = Poly::parse("x^2 - x - 1");
    for (const auto& e : entries) {
        ok = ok && e.pass;
        if (e.k == 5)
            ok = ok && e.multiple_factor.has_value() && *e.multiple_factor == golden;
        else
            ok = ok && !e.multiple_factor.has_value();
    }
    ok = ok && elapsed_since(start) < 60.0;
    return {ok, "every E_k in [1,40] passes; only E_5 has a multiple factor, exactly x^2 - x - 1"};
}

Outcome criterion_shifted_bernoulli() {
    bool ok = true;
    int rows = 0;
    for (int k = 3; k <= 20; ++k) {
        if (k == 4 || k == 6) continue;
        for (const auto& row : check_lemma4(k, default_shifts_bernoulli(k))) {
            ok = ok && row.pass && row.count >= 3;
            ++rows;
        }
    }

    // The excluded indices fail for the exact reason the statement names.
    const Poly b4s = bernoulli_poly(4) + Poly(Rat(1, 30));
    const Poly sq = Poly::parse("x^2 - x");
    const auto d4 = squarefree_decompose(b4s);
    ok = ok && d4.reconstruct() == b4s && b4s == sq * sq;
    ok = ok && analyze_roots(b4s).odd_multiplicity_roots == 0;

    const Poly b6 = bernoulli_poly(6);
    const Poly b6s = b6 - Poly(b6.eval(Rat(0)));
    const auto d6 = squarefree_decompose(b6s);
    ok = ok && d6.reconstruct() == b6s && b6s == sq * sq * Poly::parse("x^2 - x - 1/2");
    ok = ok && analyze_roots(b6s).odd_multiplicity_roots == 2;

    std::ostringstream detail;
    detail << rows << " (k, s) samples all show >= 3 odd-multiplicity roots; "
           << "witnesses k=4 (0 such roots) and k=6 (2) confirm the exclusions";
    return {ok, detail.str()};
}

Outcome criterion_shifted_euler() {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    int rows = 0;
    for (int k = 7; k <= 16; ++k)
        for (const auto& row : check_lemma5_rational(k, default_shifts_euler(k))) {
            ok = ok && row.pass && row.count >= 3;
            ++rows;
        }
    ok = ok && elapsed_since(start) < 60.0;
    std::ostringstream detail;
    detail << rows << " (k, z) samples all show >= 3 simple roots";
    return {ok, detail.str()};
}

Outcome criterion_certificates() {
    const auto pairs = coprime_pairs(3, 3);
    const std::vector<Rat> nus = {Rat(0),  Rat(1, 2),  Rat(-1, 2), Rat(1),
                                  Rat(-1), Rat(7, 4),  Rat(-7, 4)};
    bool ok = pairs.size() == 30;
    long long certified = 0, out_of_range = 0;
    for (int k = 2; k <= 16; ++k)
        for (const auto& [a, b] : pairs)
            for (const Rat& nu : nus) {
                const auto cert = reduce_quadratic(PowerSumFamily::S, ProgressionParams(a, b, k),
                                                   {Rat(1), Rat(0), -nu});
                ok = ok && *cert.shift_constants.nu == nu;
                if (k == 3 || k == 5) {
                    ok = ok && cert.verdict == Verdict::OutOfTheoremRange;
                    ++out_of_range;
                } else {
                    ok = ok && cert.verdict == Verdict::Certified;
                    ++certified;
                }
            }
    std::ostringstream detail;
    detail << certified << " certificates CERTIFIED; " << out_of_range
           << " instances at k in {3,5} report OUT_OF_THEOREM_RANGE";
    return {ok, detail.str()};
}

Outcome criterion_probes() {
    const auto pairs = coprime_pairs(3, 3);
    const std::vector<Rat> ds = {Rat(0), Rat(1), Rat(-1), Rat(1, 2)};
    bool ok = true;
    long long s_probes = 0, t_probes = 0;
    for (int k = 2; k <= 16; ++k)
        for (const auto& [a, b] : pairs)
            for (const Rat& d : ds) {
                const auto probe = contradiction_probe_S(ProgressionParams(a, b, k), d);
                ok = ok && probe.pass && probe.max_rational_multiplicity < k;
                ++s_probes;
            }
    for (int k = 7; k <= 16; ++k)
        for (const auto sign : {PowerSumFamily::TPlus, PowerSumFamily::TMinus})
            for (const auto& [a, b] : pairs)
                for (const Rat& d : ds) {
                    const auto probe = contradiction_probe_T(ProgressionParams(a, b, k), d, sign);
                    ok = ok && probe.pass && probe.max_multiplicity <= 2;
                    ++t_probes;
                }
    std::ostringstream detail;
    detail << s_probes << " S-probes and " << t_probes
           << " T-probes pass; no derivative admits the collapsed shapes";
    return {ok, detail.str()};
}

Outcome criterion_brute_force() {
    std::mt19937 rng(20260823u);
    std::uniform_int_distribution<int> family_pick(0, 2);
    std::uniform_int_distribution<long long> a_pick(-3, 3), b_pick(-3, 3);
    std::uniform_int_distribution<int> k_small(0, 4);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> coeff_pick(0, 4);
    std::uniform_int_distribution<long long> b_coeff(-3, 3), c_coeff(-5, 5);
    std::uniform_int_distribution<int> ell_pick(0, 4);  // 0 means unknown
    const std::vector<long long> lead_values = {-2, -1, 1, 2, 3};

    constexpr long kXBound = 40, kYBound = 2000;
    bool ok = true;
    int matched = 0;
    long long total_solutions = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const int family_index = family_pick(rng);
        const PowerSumFamily family = family_index == 0   ? PowerSumFamily::S
                                      : family_index == 1 ? PowerSumFamily::TPlus
                                                          : PowerSumFamily::TMinus;
        long long a = 0, b = 0;
        do {
            a = a_pick(rng);
            b = b_pick(rng);
        } while (a == 0 || std::gcd(a, b) != 1);
        int k = k_small(rng);
        if (family == PowerSumFamily::S && k == 0) k = 1;
        const ProgressionParams params(a, b, k);
        const Poly lhs = family_poly(family, params);

        SearchBox box{-kXBound, kXBound};
        box.ell_max = 5;
        bool instance_ok = true;

        if (coin(rng) == 0) {
            const QuadraticRHS rhs{Rat(lead_values[static_cast<std::size_t>(coeff_pick(rng))]),
                                   Rat(b_coeff(rng)), Rat(c_coeff(rng))};
            auto sols = solve_quadratic_rhs(family, params, rhs, box);
            std::vector<std::pair<long long, long long>> from_solver;
            for (const auto& s : sols)
                if (abs(s.y) <= kYBound) from_solver.emplace_back(s.x, s.y.get_si());

            std::vector<Rat> rhs_at_y(static_cast<std::size_t>(2 * kYBound + 1));
            for (long long y = -kYBound; y <= kYBound; ++y) {
                const Rat ry(y);
                rhs_at_y[static_cast<std::size_t>(y + kYBound)] =
                    rhs.A * ry * ry + rhs.B * ry + rhs.C;
            }
            std::vector<std::pair<long long, long long>> naive;
            for (long long x = -kXBound; x <= kXBound; ++x) {
                const Rat v = lhs.eval(Rat(x));
                for (long long y = -kYBound; y <= kYBound; ++y)
                    if (rhs_at_y[static_cast<std::size_t>(y + kYBound)] == v)
                        naive.emplace_back(x, y);
            }
            instance_ok = from_solver == naive;
            total_solutions += static_cast<long long>(naive.size());
        } else {
            const int drawn = ell_pick(rng);
            const std::optional<int> ell =
                drawn == 0 ? std::optional<int>{} : std::optional<int>{drawn + 1};
            const PowerRHS rhs{Rat(lead_values[static_cast<std::size_t>(coeff_pick(rng))]),
                               Rat(c_coeff(rng)), ell};
            auto sols = solve_power_rhs(family, params, rhs, box);
            std::vector<std::tuple<long long, int, long long>> from_solver;
            for (const auto& s : sols)
                if (abs(s.y) <= kYBound) from_solver.emplace_back(s.x, *s.ell, s.y.get_si());

            const int ell_lo = ell ? *ell : 2;
            const int ell_hi = ell ? *ell : box.ell_max;
            std::vector<std::vector<Rat>> rhs_at(static_cast<std::size_t>(ell_hi - ell_lo + 1));
            for (int l = ell_lo; l <= ell_hi; ++l) {
                auto& column = rhs_at[static_cast<std::size_t>(l - ell_lo)];
                column.resize(static_cast<std::size_t>(2 * kYBound + 1));
                for (long long y = -kYBound; y <= kYBound; ++y)
                    column[static_cast<std::size_t>(y + kYBound)] =
                        rhs.c * Rat(y).pow(static_cast<unsigned long>(l)) + rhs.d;
            }
            std::vector<std::tuple<long long, int, long long>> naive;
            for (long long x = -kXBound; x <= kXBound; ++x) {
                const Rat v = lhs.eval(Rat(x));
                for (int l = ell_lo; l <= ell_hi; ++l) {
                    const auto& column = rhs_at[static_cast<std::size_t>(l - ell_lo)];
                    for (long long y = -kYBound; y <= kYBound; ++y)
                        if (column[static_cast<std::size_t>(y + kYBound)] == v)
                            naive.emplace_back(x, l, y);
                }
            }
            instance_ok = from_solver == naive;
            total_solutions += static_cast<long long>(naive.size());
        }
        ok = ok && instance_ok;
        if (instance_ok) ++matched;
    }
    ok = ok && total_solutions > 0;
    std::ostringstream detail;
    detail << matched << "/20 random instances agree exactly with the double-loop oracle ("
           << total_solutions << " solutions compared)";
    return {ok, detail.str()};
}

bool keys_clean(const OrderedJson& j) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (key.find("bound") != std::string::npos) return false;
            if (!keys_clean(value)) return false;
        }
    } else if (j.is_array()) {
        for (const auto& value : j) {
            if (!keys_clean(value)) return false;
        }
    }
    return true;
}

Outcome criterion_substitution() {
    const std::vector<std::string> schema = {"theorem_id",      "family",
                                             "params",          "rhs",
                                             "reduced_poly",    "shift_constants",
                                             "hypothesis_checks", "verdict"};
    const ProgressionParams params(1, 0, 2);
    const auto quad = reduce_quadratic(PowerSumFamily::S, params, {Rat(1), Rat(0), Rat(0)});
    const auto power = reduce_power(PowerSumFamily::S, params, {Rat(1), Rat(0), 2});

    bool ok = true;
    for (const auto* cert : {&quad, &power}) {
        const OrderedJson j = json_of(*cert);
        std::vector<std::string> keys;
        for (const auto& [key, value] : j.items()) keys.push_back(key);
        ok = ok && keys == schema && keys_clean(j);
    }
    // Coherent end to end: a certified instance still only ever yields
    // box-bounded enumerations, never a closed-form solution bound.
    ok = ok && quad.verdict == Verdict::Certified;
    const auto sols = solve_quadratic_rhs(PowerSumFamily::S, params, {Rat(1), Rat(0), Rat(0)},
                                          SearchBox{0, 100});
    for (const auto& s : sols) {
        const Rat y(s.y);
        ok = ok && s.lhs_value == y * y && s.lhs_value == family_poly(PowerSumFamily::S, params).eval(Rat(s.x));
    }
    return {ok,
            "certificates attest root hypotheses only (no numeric bound field) and searches "
            "stay box-bounded; effective constants C1..C6 are out of desk scale by design"};
}

}  // namespace

int main() {
    run_criterion(1, criterion_schaeffer);
    run_criterion(2, criterion_closed_forms);
    run_criterion(3, criterion_bernoulli_squarefree);
    run_criterion(4, criterion_euler_multiple_factor);
    run_criterion(5, criterion_shifted_bernoulli);
    run_criterion(6, criterion_shifted_euler);
    run_criterion(7, criterion_certificates);
    run_criterion(8, criterion_probes);
    run_criterion(9, criterion_brute_force);
    run_criterion(10, criterion_substitution);
    std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT") << std::endl;
    return g_failures;
}
