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

#include "progsum/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <optional>
#include <stdexcept>

#include "progsum/classical.hpp"
#include "progsum/json_io.hpp"
#include "progsum/power_sums.hpp"
#include "progsum/reduction.hpp"
#include "progsum/root_structure.hpp"
#include "progsum/search.hpp"

namespace progsum {

namespace {

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> parts;
    std::string current;
    for (const char ch : s) {
        if (ch == ',') {
            parts.push_back(current);
            current.clear();
        } else {
            current += ch;
        }
    }
    parts.push_back(current);
    return parts;
}

PowerSumFamily parse_family(const std::string& name) {
    const auto f = family_from_name(name);
    if (!f) throw std::invalid_argument("unknown family '" + name + "' (expected S, T+ or T-)");
    return *f;
}

std::optional<int> parse_ell_field(const std::string& text) {
    if (text == "unknown") return std::nullopt;
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("ell must be an integer >= 2 or 'unknown'");
    }
    if (used != text.size() || value < 2)
        throw std::invalid_argument("ell must be an integer >= 2 or 'unknown'");
    return value;
}

QuadraticRHS parse_quadratic_rhs(const std::string& csv) {
    const std::vector<std::string> parts = split_csv(csv);
    if (parts.size() != 3)
        throw std::invalid_argument("--rhs-quad expects three comma-separated rationals A,B,C");
    return QuadraticRHS{Rat::parse(parts[0]), Rat::parse(parts[1]), Rat::parse(parts[2])};
}

PowerRHS parse_power_rhs(const std::string& csv) {
    const std::vector<std::string> parts = split_csv(csv);
    if (parts.size() != 3)
        throw std::invalid_argument("--rhs-power expects c,d,l with l an integer or 'unknown'");
    return PowerRHS{Rat::parse(parts[0]), Rat::parse(parts[1]), parse_ell_field(parts[2])};
}

void print_solution_text(std::ostream& out, const Solution& s) {
    out << "x=" << s.x << "  y=" << s.y;
    if (s.ell.has_value()) out << "  ell=" << *s.ell;
    out << "  lhs_value=" << s.lhs_value;
    if (s.family == PowerSumFamily::S) out << "  x_classical=" << (s.x - 1);
    out << "\n";
}

void print_certificate_text(std::ostream& out, const FinitenessCertificate& cert) {
    out << "theorem " << cert.theorem_id << "  family " << family_name(cert.family) << "  a="
        << cert.params.a << " b=" << cert.params.b << " k=" << cert.params.k << "\n";
    if (const auto* quad = std::get_if<QuadraticRHS>(&cert.rhs)) {
        out << "rhs: quadratic A=" << quad->A << " B=" << quad->B << " C=" << quad->C << "\n";
    } else {
        const auto& power = std::get<PowerRHS>(cert.rhs);
        out << "rhs: power c=" << power.c << " d=" << power.d << " ell=";
        if (power.ell.has_value())
            out << *power.ell;
        else
            out << "unknown";
        out << "\n";
    }
    out << "reduced_poly: " << cert.reduced_poly << "\n";
    const ShiftConstants& sc = cert.shift_constants;
    if (sc.mu || sc.nu || sc.s) {
        out << "shift_constants:";
        if (sc.mu) out << " mu=" << *sc.mu;
        if (sc.nu) out << " nu=" << *sc.nu;
        if (sc.s) out << " s=" << *sc.s;
        out << "\n";
    }
    for (const HypothesisCheck& check : cert.hypothesis_checks) {
        out << "check lemma " << check.lemma_id << ":";
        for (const auto& [name, value] : check.counts) out << " " << name << "=" << value;
        out << (check.pass ? "  PASS" : "  FAIL") << "\n";
    }
    out << "verdict: " << verdict_name(cert.verdict) << "\n";
}

struct LemmaCheckArgs {
    int lemma = 0;
    std::optional<int> k;
    std::optional<int> kmax;
    std::string shifts_csv;
};

void run_lemma_check(const LemmaCheckArgs& args, bool json, int threads, std::ostream& out) {
    OrderedJson rows = OrderedJson::array();
    if (args.lemma == 3 || args.lemma == 6) {
        if (!args.k && !args.kmax)
            throw std::invalid_argument("lemma-check: provide --kmax (sweep) or --k (single index)");
        const int upper = args.kmax ? *args.kmax : *args.k;
        std::vector<LemmaSweepEntry> entries =
            args.lemma == 3 ? check_lemma3(upper, threads) : check_lemma6(upper, threads);
        if (!args.kmax) {
            entries.erase(std::remove_if(entries.begin(), entries.end(),
                                         [&](const LemmaSweepEntry& e) { return e.k != *args.k; }),
                          entries.end());
        }
        for (const LemmaSweepEntry& e : entries) {
            if (json) {
                OrderedJson row;
                row["k"] = e.k;
                row["counts"] = OrderedJson::object();
                row["verdict"] = e.pass ? "PASS" : "FAIL";
                if (e.multiple_factor) row["multiple_factor"] = e.multiple_factor->str();
                rows.push_back(row);
            } else {
                out << "k=" << e.k << "  " << (e.pass ? "PASS" : "FAIL");
                if (e.multiple_factor) out << "  multiple_factor=" << *e.multiple_factor;
                out << "\n";
            }
        }
    } else if (args.lemma == 4 || args.lemma == 5) {
        std::vector<int> ks;
        if (args.k) {
            ks.push_back(*args.k);
        } else if (args.kmax) {
            const int lo = args.lemma == 4 ? 3 : 7;
            for (int k = lo; k <= *args.kmax; ++k) {
                if (args.lemma == 4 && (k == 4 || k == 6)) continue;
                ks.push_back(k);
            }
        } else {
            throw std::invalid_argument("lemma-check: provide --k or --kmax");
        }
        std::vector<Rat> custom;
        if (!args.shifts_csv.empty())
            for (const std::string& field : split_csv(args.shifts_csv))
                custom.push_back(Rat::parse(field));
        const char* count_name =
            args.lemma == 4 ? "odd_multiplicity_roots" : "simple_roots";
        for (const int k : ks) {
            const std::vector<Rat> shifts =
                !custom.empty() ? custom
                                : (args.lemma == 4 ? default_shifts_bernoulli(k)
                                                   : default_shifts_euler(k));
            const std::vector<ShiftCheckEntry> entries =
                args.lemma == 4 ? check_lemma4(k, shifts) : check_lemma5_rational(k, shifts);
            for (const ShiftCheckEntry& e : entries) {
                if (json) {
                    OrderedJson row;
                    row["k"] = k;
                    row["s"] = e.shift.str();
                    row["counts"] = {{count_name, e.count}};
                    row["verdict"] = e.pass ? "PASS" : "FAIL";
                    rows.push_back(row);
                } else {
                    out << "k=" << k << "  s=" << e.shift << "  " << count_name << "=" << e.count
                        << "  " << (e.pass ? "PASS" : "FAIL") << "\n";
                }
            }
        }
    } else {
        throw std::invalid_argument("lemma-check: --lemma must be one of 3, 4, 5, 6");
    }
    if (json) out << rows.dump(2) << "\n";
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact arithmetic for power sums of arithmetic progressions"};
    app.require_subcommand(1);

    bool json = false;
    int threads = 0;
    app.add_flag("--json", json, "emit a single JSON object or array");
    app.add_option("--threads", threads, "max worker threads (0 = all cores)");

    auto* cmd_bernoulli = app.add_subcommand("bernoulli", "print B_k(x)");
    cmd_bernoulli->fallthrough();
    int bernoulli_k = 0;
    cmd_bernoulli->add_option("--k", bernoulli_k, "index k >= 0")->required();

    auto* cmd_euler = app.add_subcommand("euler", "print E_k(x)");
    cmd_euler->fallthrough();
    int euler_k = 0;
    cmd_euler->add_option("--k", euler_k, "index k >= 0")->required();

    auto* cmd_powersum = app.add_subcommand("powersum", "print S/T+/T- polynomial");
    cmd_powersum->fallthrough();
    std::string ps_family;
    long long ps_a = 0, ps_b = 0;
    int ps_k = 0;
    std::optional<long long> ps_eval;
    cmd_powersum->add_option("--family", ps_family, "S, T+ or T-")->required();
    cmd_powersum->add_option("--a", ps_a, "progression step")->required();
    cmd_powersum->add_option("--b", ps_b, "progression offset")->required();
    cmd_powersum->add_option("--k", ps_k, "exponent")->required();
    cmd_powersum->add_option("--eval", ps_eval, "also evaluate at this point");

    auto* cmd_lemma = app.add_subcommand("lemma-check", "verify root-structure lemmas");
    cmd_lemma->fallthrough();
    LemmaCheckArgs lemma_args;
    cmd_lemma->add_option("--lemma", lemma_args.lemma, "lemma id: 3, 4, 5 or 6")->required();
    cmd_lemma->add_option("--k", lemma_args.k, "single index");
    cmd_lemma->add_option("--kmax", lemma_args.kmax, "sweep up to this index");
    cmd_lemma->add_option("--shifts", lemma_args.shifts_csv,
                          "comma-separated rational shifts (default: built-in sample set)");

    auto* cmd_certify = app.add_subcommand("certify", "emit a finiteness certificate");
    cmd_certify->fallthrough();
    int cert_theorem = 0;
    long long cert_a = 0, cert_b = 0;
    int cert_k = 0;
    std::optional<std::string> cert_A, cert_B, cert_C, cert_c, cert_d, cert_l;
    cmd_certify->add_option("--theorem", cert_theorem, "theorem id 1..6")->required();
    cmd_certify->add_option("--a", cert_a, "progression step")->required();
    cmd_certify->add_option("--b", cert_b, "progression offset")->required();
    cmd_certify->add_option("--k", cert_k, "exponent")->required();
    cmd_certify->add_option("--A", cert_A, "quadratic RHS leading coefficient");
    cmd_certify->add_option("--B", cert_B, "quadratic RHS linear coefficient");
    cmd_certify->add_option("--C", cert_C, "quadratic RHS constant");
    cmd_certify->add_option("--c", cert_c, "power RHS coefficient");
    cmd_certify->add_option("--d", cert_d, "power RHS constant");
    cmd_certify->add_option("--l", cert_l, "power RHS exponent (integer >= 2 or 'unknown')");

    auto* cmd_solve = app.add_subcommand("solve", "enumerate solutions in a box");
    cmd_solve->fallthrough();
    std::string solve_family;
    long long solve_a = 0, solve_b = 0;
    int solve_k = 0;
    std::optional<std::string> solve_quad, solve_power;
    long long solve_xmin = 0, solve_xmax = 0;
    int solve_ellmax = 6;
    bool allow_small_y = false;
    cmd_solve->add_option("--family", solve_family, "S, T+ or T-")->required();
    cmd_solve->add_option("--a", solve_a, "progression step")->required();
    cmd_solve->add_option("--b", solve_b, "progression offset")->required();
    cmd_solve->add_option("--k", solve_k, "exponent")->required();
    auto* opt_quad = cmd_solve->add_option("--rhs-quad", solve_quad, "A,B,C");
    auto* opt_power = cmd_solve->add_option("--rhs-power", solve_power, "c,d,l|unknown");
    opt_quad->excludes(opt_power);
    cmd_solve->add_option("--xmin", solve_xmin, "box lower end")->required();
    cmd_solve->add_option("--xmax", solve_xmax, "box upper end")->required();
    cmd_solve->add_option("--ellmax", solve_ellmax, "exponent sweep cap for unknown ell");
    cmd_solve->add_flag("--allow-small-y", allow_small_y, "keep solutions with |y| <= 1");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*cmd_bernoulli) {
            const Poly p = bernoulli_poly(bernoulli_k);
            if (json)
                out << OrderedJson{{"k", bernoulli_k}, {"poly", p.str()}}.dump(2) << "\n";
            else
                out << p << "\n";
        } else if (*cmd_euler) {
            const Poly p = euler_poly(euler_k);
            if (json)
                out << OrderedJson{{"k", euler_k}, {"poly", p.str()}}.dump(2) << "\n";
            else
                out << p << "\n";
        } else if (*cmd_powersum) {
            const PowerSumFamily family = parse_family(ps_family);
            const ProgressionParams params(ps_a, ps_b, ps_k);
            const Poly p = family_poly(family, params);
            std::optional<Rat> value, oracle;
            if (ps_eval) {
                value = p.eval(Rat(*ps_eval));
                if (*ps_eval >= 1)
                    oracle = family == PowerSumFamily::S ? direct_power_sum(params, *ps_eval)
                                                         : direct_alt_power_sum(params, *ps_eval);
            }
            if (json) {
                OrderedJson j{{"family", std::string(family_name(family))},
                              {"a", params.a},
                              {"b", params.b},
                              {"k", params.k},
                              {"poly", p.str()}};
                if (ps_eval) {
                    j["eval_at"] = *ps_eval;
                    j["value"] = value->str();
                    if (oracle) {
                        j["oracle"] = oracle->str();
                        j["oracle_matches"] = *value == *oracle;
                    }
                }
                out << j.dump(2) << "\n";
            } else {
                out << p << "\n";
                if (value) out << "value = " << *value << "\n";
                if (oracle) {
                    out << "oracle = " << *oracle << "\n";
                    if (!(*value == *oracle))
                        out << "note: the alternating oracle matches T+ at odd n and T- at even n\n";
                }
            }
        } else if (*cmd_lemma) {
            run_lemma_check(lemma_args, json, threads, out);
        } else if (*cmd_certify) {
            if (cert_theorem < 1 || cert_theorem > 6)
                throw std::invalid_argument("certify: --theorem must be 1..6");
            const bool quadratic = cert_theorem <= 3;
            const PowerSumFamily family = cert_theorem % 3 == 1 ? PowerSumFamily::S
                                          : cert_theorem % 3 == 2 ? PowerSumFamily::TPlus
                                                                  : PowerSumFamily::TMinus;
            const ProgressionParams params(cert_a, cert_b, cert_k);
            FinitenessCertificate cert = [&] {
                if (quadratic) {
                    if (!cert_A || !cert_B || !cert_C)
                        throw std::invalid_argument("certify: theorems 1-3 need --A --B --C");
                    if (cert_c || cert_d || cert_l)
                        throw std::invalid_argument("certify: theorems 1-3 take no power RHS flags");
                    return reduce_quadratic(family, params,
                                            QuadraticRHS{Rat::parse(*cert_A), Rat::parse(*cert_B),
                                                         Rat::parse(*cert_C)});
                }
                if (!cert_c || !cert_d || !cert_l)
                    throw std::invalid_argument("certify: theorems 4-6 need --c --d --l");
                if (cert_A || cert_B || cert_C)
                    throw std::invalid_argument("certify: theorems 4-6 take no quadratic RHS flags");
                return reduce_power(family, params,
                                    PowerRHS{Rat::parse(*cert_c), Rat::parse(*cert_d),
                                             parse_ell_field(*cert_l)});
            }();
            if (json)
                out << json_of(cert).dump(2) << "\n";
            else
                print_certificate_text(out, cert);
        } else if (*cmd_solve) {
            const PowerSumFamily family = parse_family(solve_family);
            const ProgressionParams params(solve_a, solve_b, solve_k);
            if (!solve_quad && !solve_power)
                throw std::invalid_argument("solve: provide --rhs-quad or --rhs-power");
            SearchBox box{solve_xmin, solve_xmax, solve_ellmax, false};
            std::vector<Solution> solutions;
            if (solve_quad) {
                box.require_y_gt_1 = false;
                solutions =
                    solve_quadratic_rhs(family, params, parse_quadratic_rhs(*solve_quad), box, threads);
            } else {
                box.require_y_gt_1 = !allow_small_y;
                solutions =
                    solve_power_rhs(family, params, parse_power_rhs(*solve_power), box, threads);
            }
            if (json) {
                OrderedJson rows = OrderedJson::array();
                for (const Solution& s : solutions) rows.push_back(json_of(s));
                out << rows.dump(2) << "\n";
            } else {
                for (const Solution& s : solutions) print_solution_text(out, s);
                out << "solutions: " << solutions.size() << "\n";
            }
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace progsum
