// Command-line front end: invariants, representation tables, WRT tables, oracle suites.
#include <seifert_wrt/seifert_wrt.hpp>

#include <CLI11.hpp>

#include <iostream>

namespace
{

using namespace swrt;


int run_verify(const std::string &suite, const std::string &fibers, long m, long root_order, mpfr_prec_t prec)
{
    std::vector<std::vector<long>> tuples{{2, 3, 5, 7}, {3, 4, 5, 7}, {2, 3, 5, 11}};
    std::optional<std::vector<long>> chosen;
    if (!fibers.empty()) {
        chosen = parse_fibers(fibers);
        new_seifert(*chosen);
        if (m > 0 && static_cast<long>(chosen->size()) != m) {
            throw std::invalid_argument("--m " + std::to_string(m) + " does not match " + std::to_string(chosen->size())
                                        + " fibers");
        }
    }
    const auto four = [&] {
        if (chosen) {
            if (chosen->size() != 4) {
                throw std::invalid_argument("this suite needs four fibers");
            }
            return std::vector<std::vector<long>>{*chosen};
        }
        return tuples;
    };

    std::vector<SuiteResult> results;
    const bool all = suite == "all";
    bool known = all;
    if (all || suite == "omega") {
        known = true;
        results.push_back(verify_omega(25, prec));
    }
    if (all || suite == "gauss") {
        known = true;
        results.push_back(verify_gauss(20, 20240601u, prec));
    }
    if (all || suite == "theorem3") {
        known = true;
        const long lo = root_order > 0 ? root_order : 3;
        const long hi = root_order > 0 ? root_order : 12;
        results.push_back(verify_theorem3(four(), lo, hi, prec));
    }
    if (all || suite == "tseries") {
        known = true;
        results.push_back(verify_tseries(four(), 5));
    }
    if (all || suite == "conjecture") {
        known = true;
        if (chosen) {
            results.push_back(verify_conjecture(*chosen));
        } else {
            for (const auto &p : std::vector<std::vector<long>>{{5, 7}, {2, 3, 5}, {2, 3, 5, 7}, {3, 4, 5, 7}}) {
                results.push_back(verify_conjecture(p));
            }
        }
    }
    if (!known) {
        throw std::invalid_argument("unknown suite '" + suite + "'");
    }
    bool ok = true;
    for (const auto &r : results) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << "  max deviation " << r.max_deviation << "  tolerance "
                  << r.tolerance << "  " << r.detail << "\n";
        ok = ok && r.passed;
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"WRT invariants of Seifert homology spheres"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string fibers;
    std::string format = "text";
    std::string mode = "both";
    std::string rows;
    long root_order = 0;
    long precision = default_precision;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--precision", precision, "working precision in bits (>= 64)")->default_val(default_precision);
        sub->add_option("--format", format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
    };

    auto *inv = app.add_subcommand("invariants", "D, gamma, lattice count, phi, Casson and Ohtsuki invariants");
    inv->add_option("fibers", fibers, "comma separated fiber exponents, e.g. 2,3,5,7")->required();
    inv->add_option("--tail", cfg.tail_order, "highest Ohtsuki index to print")->default_val(3);
    add_common(inv);

    auto *reps = app.add_subcommand("reps", "interior and missing representation tables");
    reps->add_option("fibers", fibers, "comma separated fiber exponents")->required();
    add_common(reps);

    auto *wrt = app.add_subcommand("wrt", "exact and asymptotic WRT table");
    wrt->add_option("fibers", fibers, "comma separated fiber exponents")->required();
    auto *rows_opt = wrt->add_option("--rows", rows, "levels: a..b, a list, or both (e.g. 10..14,100)");
    auto *root_opt = wrt->add_option("--root-order,--level", root_order, "single root order N (level N-2)");
    rows_opt->excludes(root_opt);
    wrt->add_option("--mode", mode, "exact, asymptotic or both")->check(CLI::IsMember({"exact", "asymptotic", "both"}));
    wrt->add_option("--tail", cfg.tail_order, "tail order K")->default_val(3);
    wrt->add_option("--chunks", cfg.chunk_size, "fixed summation chunks (deterministic per value)")->default_val(1);
    wrt->add_option("--digits", cfg.digits, "significant digits in text and csv output")->default_val(10);
    add_common(wrt);

    auto *ver = app.add_subcommand("verify", "oracle suites with pass/fail report");
    std::string suite = "all";
    long m = 0;
    ver->add_option("--suite", suite, "all, omega, gauss, theorem3, tseries or conjecture")->default_val("all");
    ver->add_option("--fibers", fibers, "fiber exponents for the suite");
    ver->add_option("--m", m, "number of fibers (must match --fibers)");
    ver->add_option("--root-order", root_order, "single root order for theorem3");
    ver->add_option("--precision", precision, "working precision in bits")->default_val(default_precision);

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.precision_bits = precision;
        cfg.output_format = parse_format(format);
        if (*ver) {
            check_precision(precision);
            return run_verify(suite, fibers, m, root_order, precision);
        }
        cfg.fibers = parse_fibers(fibers);
        const SeifertData s = new_seifert(cfg.fibers);
        if (*inv) {
            cfg.validate();
            std::cout << render(s, invariant_report(s, cfg.tail_order), cfg.output_format);
        } else if (*reps) {
            std::cout << render(s, rep_table(s), cfg.output_format);
        } else if (*wrt) {
            cfg.mode = parse_mode(mode);
            if (root_order > 0) {
                if (root_order < 3) {
                    throw std::invalid_argument("root order must be at least 3");
                }
                cfg.rows = {root_order - 2};
            } else if (!rows.empty()) {
                cfg.rows = parse_rows(rows);
            } else {
                throw std::invalid_argument("wrt needs --rows or --root-order");
            }
            std::cout << render(compute_wrt(cfg));
        }
    } catch (const invalid_fibers &e) {
        std::cerr << "invalid fibers: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
