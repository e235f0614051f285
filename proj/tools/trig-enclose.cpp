// Command-line surface: certified evaluation of the remainder expansions,
// sharp-constant computation, closed-form lattice sums, and inequality
// certification, with machine-readable output.
//
// Exit codes: 0 success/certified, 1 violated or not certified,
//             2 domain error, 3 budget error, 4 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "trig_enclose/errors.hpp"
#include "trig_enclose/report_io.hpp"

using namespace trig_enclose;

namespace {

struct RunConfig {
    long precision_bits = 256;
    unsigned long grid_points = 2001;
    std::string tolerance; // parsed against precision when used
    std::string format = "text";
    std::string out_path;

    Prec prec() const { return static_cast<Prec>(precision_bits); }
    BigFloat tol() const {
        if (tolerance.empty()) return BigFloat::pow2(-128, prec());
        BigFloat t = BigFloat::from_string(tolerance, prec());
        if (t.sign() <= 0) throw RejectedInput("tolerance must be positive");
        return t;
    }
};

void write_output(const RunConfig& cfg, const std::string& body) {
    if (cfg.out_path.empty()) {
        std::cout << body;
        if (!body.empty() && body.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) throw RejectedInput("cannot open output path '" + cfg.out_path + "'");
    out << body;
    if (!body.empty() && body.back() != '\n') out << '\n';
}

std::string iv_text(const Interval& v, Prec prec) {
    return "[" + fmt_number(v.lo(), prec) + ", " + fmt_number(v.hi(), prec) + "]";
}

// ---- eval / remainder -------------------------------------------------------

int run_eval(const RunConfig& cfg, const std::string& fn_name, unsigned long order,
             const std::string& at, bool remainder_only) {
    FunctionId fn = parse_function_id(fn_name);
    const Prec prec = cfg.prec();
    BigFloat t = BigFloat::from_string(at, prec);
    RemainderEval ev = eval_with_enclosure(fn, order, t, prec);

    if (cfg.format == "json") {
        nlohmann::json j = eval_to_json(ev, prec);
        j["command"] = remainder_only ? "remainder" : "eval";
        write_output(cfg, j.dump(2));
    } else if (cfg.format == "csv") {
        std::ostringstream os;
        os << "function,order,at,partial_sum,remainder_lo,remainder_hi,value_lo,value_hi,"
              "terms_used,tail_bound\n";
        os << function_id_name(fn) << ',' << order << ',' << fmt_number(t, prec) << ','
           << fmt_number(ev.partial_sum, prec) << ',' << fmt_number(ev.remainder.lo(), prec)
           << ',' << fmt_number(ev.remainder.hi(), prec) << ','
           << fmt_number(ev.value.lo(), prec) << ',' << fmt_number(ev.value.hi(), prec)
           << ',' << ev.terms_used << ',' << ev.tail.bound.to_decimal(6) << '\n';
        write_output(cfg, os.str());
    } else {
        std::ostringstream os;
        os << function_id_name(fn) << " at t = " << fmt_number(t, prec)
           << ", order N = " << order << "\n";
        os << "  partial sum : " << fmt_number(ev.partial_sum, prec) << "\n";
        os << "  remainder   : " << iv_text(ev.remainder, prec) << "\n";
        if (!remainder_only) os << "  value       : " << iv_text(ev.value, prec) << "\n";
        os << "  terms used  : " << ev.terms_used
           << ", tail bound " << ev.tail.bound.to_decimal(6)
           << ", width " << ev.value.width().to_decimal(6) << "\n";
        write_output(cfg, os.str());
    }
    return 0;
}

// ---- constants ---------------------------------------------------------------

SharpConstantPair constants_for(const std::string& family, unsigned long order, Prec prec) {
    if (family == "wilker") return wilker_lambda_mu(order, prec);
    if (family == "wilker-alphabeta") return wilker_alpha_beta(order, prec);
    if (family == "huygens") return huygens_a_b(order, prec);
    if (family == "sec-remainder") return sec_remainder_constants(order, prec);
    if (family == "wilker-conjecture2") {
        SharpConstantPair out;
        out.inequality_id = "wilker.conjecture2";
        out.order = order;
        out.lower.value = Interval::zero(prec);
        out.lower.exact = ExactForm();
        out.lower.exactness = Exactness::exact_rational;
        Rat q = wilker_q(order);
        out.upper.value = Interval::from_rat(q, prec);
        out.upper.exact = ExactForm::rational(q);
        out.upper.exactness = Exactness::exact_rational;
        return out;
    }
    if (family == "huygens-varrho") {
        SharpConstantPair out;
        out.inequality_id = "huygens.varrho";
        out.order = order;
        out.lower.value = Interval::zero(prec);
        out.lower.exact = ExactForm();
        out.lower.exactness = Exactness::exact_rational;
        Rat v = huygens_varrho(order);
        out.upper.value = Interval::from_rat(v, prec);
        out.upper.exact = ExactForm::rational(v);
        out.upper.exactness = Exactness::exact_rational;
        return out;
    }
    throw RejectedInput("unknown constants family '" + family + "'");
}

int run_constants(const RunConfig& cfg, const std::string& family, unsigned long order) {
    const Prec prec = cfg.prec();
    SharpConstantPair pair = constants_for(family, order, prec);
    if (cfg.format == "json") {
        nlohmann::json j = pair_to_json(pair, prec);
        j["command"] = "constants";
        write_output(cfg, j.dump(2));
    } else if (cfg.format == "csv") {
        std::ostringstream os;
        os << "inequality,order,side,closed_form,value_lo,value_hi,exactness\n";
        for (const auto* side : {&pair.lower, &pair.upper}) {
            os << pair.inequality_id << ',' << pair.order << ','
               << (side == &pair.lower ? "lower" : "upper") << ','
               << (side->exact ? '"' + side->exact->to_string() + '"' : std::string("-"))
               << ',' << fmt_number(side->value.lo(), prec) << ','
               << fmt_number(side->value.hi(), prec) << ','
               << exactness_name(side->exactness) << '\n';
        }
        write_output(cfg, os.str());
    } else {
        std::ostringstream os;
        os << pair.inequality_id << ", order " << pair.order << "\n";
        os << "  lower: " << iv_text(pair.lower.value, prec);
        if (pair.lower.exact) os << "  = " << pair.lower.exact->to_string();
        os << "  (" << exactness_name(pair.lower.exactness) << ")\n";
        os << "  upper: " << iv_text(pair.upper.value, prec);
        if (pair.upper.exact) os << "  = " << pair.upper.exact->to_string();
        os << "  (" << exactness_name(pair.upper.exactness) << ")\n";
        write_output(cfg, os.str());
    }
    return 0;
}

// ---- verify -------------------------------------------------------------------

int run_verify(const RunConfig& cfg, const std::string& id) {
    const Prec prec = cfg.prec();
    std::vector<InequalityReport> reports;
    if (id == "all") {
        reports = verify_all(cfg.grid_points, prec);
    } else {
        reports.push_back(verify(id, cfg.grid_points, prec));
    }

    bool all_certified = true;
    for (const auto& r : reports)
        if (r.verdict != Verdict::certified) all_certified = false;

    if (cfg.format == "json") {
        nlohmann::json j;
        j["command"] = "verify";
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(report_to_json(r, prec));
        j["reports"] = arr;
        j["all_certified"] = all_certified;
        write_output(cfg, j.dump(2));
    } else if (cfg.format == "csv") {
        std::ostringstream os;
        os << "id,domain,grid_points,precision_bits,verdict,min_margin,argmin,"
              "unresolved\n";
        for (const auto& r : reports) {
            os << r.id << ',' << '"' << r.domain << '"' << ',' << r.grid_points << ','
               << r.precision_bits << ',' << verdict_name(r.verdict) << ','
               << fmt_number(r.min_margin, prec) << ',' << fmt_number(r.argmin, prec) << ','
               << r.unresolved_points << '\n';
        }
        write_output(cfg, os.str());
    } else {
        std::ostringstream os;
        for (const auto& r : reports) {
            os << (r.verdict == Verdict::certified ? "PASS " : "FAIL ") << r.id << "  ["
               << verdict_name(r.verdict) << "]  min margin " << r.min_margin.to_decimal(6)
               << " at x = " << r.argmin.to_decimal(10) << "\n";
        }
        write_output(cfg, os.str());
    }
    return all_certified ? 0 : 1;
}

// ---- sums ----------------------------------------------------------------------

int run_sums(const RunConfig& cfg, const std::string& id) {
    const Prec prec = cfg.prec();
    std::vector<std::string> ids;
    if (id == "all")
        ids = sum_registry_ids();
    else
        ids.push_back(id);

    nlohmann::json arr = nlohmann::json::array();
    std::ostringstream text, csv;
    csv << "id,closed_form,value_lo,value_hi,brute_lo,brute_hi,tail_bound,method\n";
    for (const auto& sid : ids) {
        ClosedFormConstant c = registry_constant(sid, prec);
        BruteResult b = brute_sum(registry_rule(sid), prec, cfg.tol());
        arr.push_back(sum_to_json(c, &b, prec));
        text << sid << " = " << c.exact.to_string() << "\n"
             << "  closed form: " << iv_text(c.numeric, prec) << "\n"
             << "  brute [" << b.method << ", " << b.tail.terms_used
             << " terms]: " << iv_text(b.value, prec) << "\n";
        csv << sid << ',' << '"' << c.exact.to_string() << '"' << ','
            << fmt_number(c.numeric.lo(), prec) << ',' << fmt_number(c.numeric.hi(), prec)
            << ',' << fmt_number(b.value.lo(), prec) << ',' << fmt_number(b.value.hi(), prec)
            << ',' << b.tail.bound.to_decimal(6) << ',' << b.method << '\n';
    }

    if (cfg.format == "json") {
        nlohmann::json j;
        j["command"] = "sums";
        j["constants"] = arr;
        write_output(cfg, j.dump(2));
    } else if (cfg.format == "csv") {
        write_output(cfg, csv.str());
    } else {
        write_output(cfg, text.str());
    }
    return 0;
}

// ---- table ----------------------------------------------------------------------

int run_table(const RunConfig& cfg, const std::string& spec, const std::string& orders) {
    const Prec prec = cfg.prec();
    unsigned long lo = 1, hi = 6;
    if (!orders.empty()) {
        auto dots = orders.find("..");
        if (dots == std::string::npos)
            lo = hi = std::stoul(orders);
        else {
            lo = std::stoul(orders.substr(0, dots));
            hi = std::stoul(orders.substr(dots + 2));
        }
    }
    if (lo > hi || hi > 64) throw RejectedInput("table: bad order range");

    std::string family;
    std::string lo_name, hi_name;
    if (spec == "wilker-constants") {
        family = "wilker";
        lo_name = "lambda";
        hi_name = "mu";
    } else if (spec == "huygens-constants") {
        family = "huygens";
        lo_name = "a";
        hi_name = "b";
    } else if (spec == "alphabeta-constants") {
        family = "wilker-alphabeta";
        lo_name = "alpha";
        hi_name = "beta";
    } else if (spec == "sec-remainder-constants") {
        family = "sec-remainder";
        lo_name = "lower";
        hi_name = "upper";
    } else {
        throw RejectedInput("unknown table spec '" + spec + "'");
    }

    std::ostringstream csv;
    csv << "N," << lo_name << ',' << hi_name << '\n';
    nlohmann::json arr = nlohmann::json::array();
    for (unsigned long n = lo; n <= hi; ++n) {
        SharpConstantPair pair = constants_for(family, n, prec);
        csv << n << ',' << fmt_number(pair.lower.value.mid(), prec) << ','
            << fmt_number(pair.upper.value.mid(), prec) << '\n';
        arr.push_back(pair_to_json(pair, prec));
    }
    if (cfg.format == "json") {
        nlohmann::json j;
        j["command"] = "table";
        j["spec"] = spec;
        j["rows"] = arr;
        write_output(cfg, j.dump(2));
    } else {
        // the table output is columnar by nature; text mode emits CSV too
        write_output(cfg, csv.str());
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified remainder-series evaluation and inequality verification"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* env = std::getenv("TRIG_ENCLOSE_PRECISION")) {
        cfg.precision_bits = std::atol(env);
    }
    app.add_option("--precision", cfg.precision_bits, "working precision in bits (>= 64)")
        ->check(CLI::Range(64L, 1L << 20));
    app.add_option("--grid", cfg.grid_points, "grid points for verification (>= 3)")
        ->check(CLI::Range(3UL, 100000000UL));
    app.add_option("--tolerance", cfg.tolerance, "tail tolerance for oracle sums");
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", cfg.out_path, "write output to this path");

    std::string fn_name, at_str = "0", family, verify_id = "all", sum_id = "all";
    std::string table_spec, orders;
    unsigned long order = 0;
    bool order_set = false;

    auto add_order = [&](CLI::App* sub) {
        sub->add_option("--order", order, "truncation order N")
            ->each([&](const std::string&) { order_set = true; });
    };

    CLI::App* eval = app.add_subcommand("eval", "enclose f(t) as partial sum + remainder");
    eval->add_option("function", fn_name, "tan|tanh|sec|cot|csc|sec2tan")->required();
    add_order(eval);
    eval->add_option("--at", at_str, "evaluation point t (decimal)")->required();

    CLI::App* rem = app.add_subcommand("remainder", "enclose the remainder term only");
    rem->add_option("function", fn_name, "tan|tanh|sec|cot|csc|sec2tan")->required();
    add_order(rem);
    rem->add_option("--at", at_str, "evaluation point t (decimal)")->required();

    CLI::App* cons = app.add_subcommand("constants", "sharp constants of an inequality family");
    cons->add_option("family", family,
                     "wilker|wilker-alphabeta|wilker-conjecture2|huygens|huygens-varrho|"
                     "sec-remainder")
        ->required();
    add_order(cons);

    CLI::App* ver = app.add_subcommand("verify", "certify inequalities on a Chebyshev grid");
    ver->add_option("id", verify_id, "inequality id or 'all'");

    CLI::App* sums = app.add_subcommand("sums", "closed-form lattice sums with brute oracle");
    sums->add_option("id", sum_id, "S1..S15 or 'all'");

    CLI::App* table = app.add_subcommand("table", "CSV tables of sharp constants");
    table->add_option("spec", table_spec,
                      "wilker-constants|huygens-constants|alphabeta-constants|"
                      "sec-remainder-constants")
        ->required();
    table->add_option("--orders", orders, "order range A..B (default 1..6)");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 4;
    }

    try {
        if (app.got_subcommand(eval) || app.got_subcommand(rem)) {
            if (!order_set) {
                static const std::map<std::string, unsigned long> defaults = {
                    {"tan", 1}, {"tanh", 1}, {"sec", 1},
                    {"cot", 1}, {"csc", 1},  {"sec2tan", 2}};
                auto it = defaults.find(fn_name);
                order = it != defaults.end() ? it->second : 1;
            }
            return run_eval(cfg, fn_name, order, at_str, app.got_subcommand(rem));
        }
        if (app.got_subcommand(cons)) {
            if (!order_set) {
                static const std::map<std::string, unsigned long> defaults = {
                    {"wilker", 1},          {"wilker-alphabeta", 1},
                    {"wilker-conjecture2", 2}, {"huygens", 1},
                    {"huygens-varrho", 2},  {"sec-remainder", 1}};
                auto it = defaults.find(family);
                order = it != defaults.end() ? it->second : 1;
            }
            return run_constants(cfg, family, order);
        }
        if (app.got_subcommand(ver)) return run_verify(cfg, verify_id);
        if (app.got_subcommand(sums)) return run_sums(cfg, sum_id);
        if (app.got_subcommand(table)) return run_table(cfg, table_spec, orders);
        std::cerr << "no subcommand\n";
        return 4;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetError& e) {
        std::cerr << "budget error: " << e.what();
        if (!e.best_bound().empty()) std::cerr << " (best bound " << e.best_bound() << ")";
        std::cerr << "\n";
        return 3;
    } catch (const RejectedInput& e) {
        std::cerr << "rejected input: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
