/**
 * @file contx_cli.cpp
 * @brief Command-line surface: evaluate continuants, construct extrema,
 *        run formula-vs-oracle verification grids, print growth bounds and
 *        reflection traces.
 *
 * Exit codes: 0 success / all grid points match, 1 verification mismatch,
 * 2 usage or domain error, 3 infeasible set.
 */
#include "contx/contx.hpp"
#include "contx/grids.hpp"
#include "contx/serialize.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace contx;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;

int cmd_eval(const std::vector<std::int64_t>& raw, bool cf) {
    if (cf) {
        if (raw.empty()) throw domain_error("eval --cf needs a leading term");
        if (raw.front() < 0) throw domain_error("leading term must be >= 0");
        Sequence tail(std::vector<Elem>(raw.begin() + 1, raw.end()));
        Rational value = cf_value(tail, raw.front());
        std::cout << to_decimal(value.numerator()) << "/" << to_decimal(value.denominator())
                  << "\n";
        return kExitOk;
    }
    Sequence seq{std::vector<Elem>(raw.begin(), raw.end())};
    std::cout << to_decimal(continuant(seq)) << "\n";
    return kExitOk;
}

MultisetSpec multiset_from_args(const std::string& values, const std::string& mults) {
    std::vector<Elem> v = Sequence::parse(values).elems();
    std::vector<Elem> raw = mults.empty() ? std::vector<Elem>(v.size(), 1)
                                          : Sequence::parse(mults).elems();
    return MultisetSpec(v, std::vector<std::int64_t>(raw.begin(), raw.end()));
}

int cmd_extremal(const std::string& which, const std::string& values, const std::string& mults,
                 Elem S, std::int64_t t, Elem n) {
    ExtremalResult res;
    if (which == "max-v") {
        res = max_V(multiset_from_args(values, mults));
    } else if (which == "max-w") {
        res = max_W(multiset_from_args(values, mults));
    } else if (which == "min-w") {
        res = min_W(multiset_from_args(values, mults));
    } else if (which == "max-un") {
        res = max_Un(S);
    } else if (which == "max-ust") {
        res = max_USt(S, t);
    } else if (which == "min-ustn") {
        res = min_UStn(S, t, n);
    } else if (which == "min-un") {
        res = min_Un(S, n);
    } else {
        throw domain_error("unknown extremal family: " + which);
    }
    std::cout << to_json(res).dump(2) << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& family, Elem h_max, std::int64_t f_max, std::int64_t t_max,
               Elem S_max, Elem n_max, const GridOptions& opt, bool plain) {
    GridReport report;
    if (family == "thm1") {
        report = verify_thm1(h_max, f_max, t_max, opt);
    } else if (family == "thm2") {
        report = verify_thm2(h_max, f_max, t_max, opt);
    } else if (family == "thm3") {
        report = verify_thm3(h_max, f_max, t_max, opt);
    } else if (family == "thm4") {
        report = verify_thm4(S_max == 0 ? 20 : S_max, n_max, opt);
    } else if (family == "thm5") {
        report = verify_thm5(S_max == 0 ? 18 : S_max, opt);
    } else if (family == "thm6") {
        report = verify_thm6(S_max == 0 ? 20 : S_max, n_max, opt);
    } else if (family == "thm7") {
        report = verify_thm7(S_max == 0 ? 24 : S_max, n_max, opt);
    } else {
        throw domain_error("unknown family: " + family);
    }

    const GridPoint* counterexample = nullptr;
    for (const auto& p : report.points) {
        if (!p.match || !p.witness_in_set) {
            counterexample = &p;
            break;
        }
    }

    if (plain) {
        for (const auto& p : report.points) {
            std::cout << report.family << " " << p.params << " formula=" << p.formula_value
                      << " oracle=" << p.oracle_value << (p.match ? " ok" : " MISMATCH") << "\n";
        }
        std::cout << report.family << ": " << report.points.size() << " points, "
                  << report.mismatches << " mismatches\n";
    } else {
        Json j;
        j["family"] = report.family;
        j["ranges"] = report.ranges;
        j["points"] = report.points.size();
        j["mismatches"] = report.mismatches;
        Json rows = Json::array();
        for (const auto& p : report.points) {
            Json row;
            row["params"] = p.params;
            row["formula"] = p.formula_value;
            row["oracle"] = p.oracle_value;
            row["match"] = p.match;
            row["witness"] = to_json(p.witness);
            row["runtime_us"] = p.runtime_us;
            rows.push_back(row);
        }
        j["grid"] = rows;
        std::cout << j.dump(2) << "\n";
    }
    if (counterexample) {
        std::cerr << "counterexample: " << report.family << " " << counterexample->params
                  << " formula=" << counterexample->formula_value
                  << " oracle=" << counterexample->oracle_value << "\n";
        return kExitMismatch;
    }
    return kExitOk;
}

int cmd_bound(Elem S, Elem n, unsigned digits, bool remark1) {
    if (remark1) {
        GrowthBaseComparison r = growth_base_comparison(std::max(6u, digits));
        std::cout << r.lhs_digits << (r.lhs_greater ? " > " : " <= ") << r.rhs_digits << "\n";
        return kExitOk;
    }
    BoundReport report = growth_lower_bound(S, n, digits);
    const BigInt* min_ptr = nullptr;
    BigInt exact_min;
    if (S >= 2 * n + 2) {
        exact_min = min_Un(S, n).value;
        min_ptr = &exact_min;
    }
    std::cout << to_json(report, min_ptr).dump(2) << "\n";
    return kExitOk;
}

int cmd_trace(const std::string& seq_csv, bool maximize, bool minimize) {
    if (maximize == minimize) throw domain_error("trace needs exactly one of --maximize/--minimize");
    Sequence seq = Sequence::parse(seq_csv);
    TransitiveResult res = maximize ? transitive_maximize(seq) : transitive_minimize(seq);
    std::cout << to_json(res, seq).dump(2) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact continuant extremal toolkit"};
    app.require_subcommand(1);

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a continuant");
    std::vector<std::int64_t> eval_elems;
    bool eval_cf = false;
    eval->add_option("elements", eval_elems, "sequence elements");
    eval->add_flag("--cf", eval_cf, "treat the first element as the leading CF term");

    // extremal
    auto* extremal = app.add_subcommand("extremal", "closed-form extremal construction");
    std::string ex_which, ex_values, ex_mults;
    std::int64_t ex_t = 0;
    Elem ex_S = 0, ex_n = 0;
    extremal->add_option("which", ex_which, "max-v|max-w|min-w|max-un|max-ust|min-ustn|min-un")
        ->required();
    extremal->add_option("--values", ex_values, "multiset values, e.g. 1,2,3");
    extremal->add_option("--mults", ex_mults, "multiplicities, e.g. 2,1,1");
    extremal->add_option("--sum", ex_S, "element sum S");
    extremal->add_option("--len", ex_t, "length t");
    extremal->add_option("--bound", ex_n, "element bound n");

    // verify
    auto* verify = app.add_subcommand("verify", "formula vs brute-force oracle grid");
    std::string vf_family;
    Elem vf_h_max = 6, vf_S_max = 0, vf_n_max = 5;
    std::int64_t vf_f_max = 4, vf_t_max = 9;
    GridOptions vf_opt;
    bool vf_plain = false;
    verify->add_option("--family", vf_family, "thm1..thm7")->required();
    verify->add_option("--h-max", vf_h_max, "largest multiset value");
    verify->add_option("--f-max", vf_f_max, "most distinct values");
    verify->add_option("--t-max", vf_t_max, "largest multiset size");
    verify->add_option("--S-max", vf_S_max, "largest element sum");
    verify->add_option("--n-max", vf_n_max, "largest element bound");
    verify->add_option("--jobs", vf_opt.jobs, "parallel workers");
    verify->add_flag("--plain", vf_plain, "table output instead of JSON");
    verify->add_flag("--inject-mismatch", vf_opt.inject_mismatch)->group("");

    // bound
    auto* bound = app.add_subcommand("bound", "growth lower bound");
    Elem b_S = 0, b_n = 0;
    unsigned b_digits = 6;
    bool b_remark1 = false;
    bound->add_option("--sum", b_S, "element sum S");
    bound->add_option("--bound", b_n, "element bound n");
    bound->add_option("--digits", b_digits, "decimal digits");
    bound->add_flag("--remark1", b_remark1, "print the fifth-root comparison");

    // trace
    auto* trace = app.add_subcommand("trace", "reflection trace");
    std::string tr_seq;
    bool tr_max = false, tr_min = false;
    trace->add_option("--seq", tr_seq, "sequence, e.g. 1,3,2")->required();
    trace->add_flag("--maximize", tr_max);
    trace->add_flag("--minimize", tr_min);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(eval)) return cmd_eval(eval_elems, eval_cf);
        if (app.got_subcommand(extremal))
            return cmd_extremal(ex_which, ex_values, ex_mults, ex_S, ex_t, ex_n);
        if (app.got_subcommand(verify))
            return cmd_verify(vf_family, vf_h_max, vf_f_max, vf_t_max, vf_S_max, vf_n_max, vf_opt,
                              vf_plain);
        if (app.got_subcommand(bound)) return cmd_bound(b_S, b_n, b_digits, b_remark1);
        if (app.got_subcommand(trace)) return cmd_trace(tr_seq, tr_max, tr_min);
    } catch (const infeasible_error& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
