// pclab: exact q-series computations and desk-scale verification of the
// 2-color partition congruence families modulo powers of 7.
//
// Exit codes: 0 all checks pass, 1 at least one FAIL line, 2 usage or I/O error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "pclab/congruence.hpp"
#include "pclab/eta.hpp"
#include "pclab/io.hpp"
#include "pclab/verify.hpp"

namespace {

using namespace pclab;

bool is_power_of_7(long v)
{
    if (v < 7)
        return false;
    while (v % 7 == 0)
        v /= 7;
    return v == 1;
}

RunConfig make_config(const std::string& profile)
{
    if (profile == "full")
        return RunConfig::full();
    RunConfig c = RunConfig::quick();
    if (profile == "custom")
        c.profile = RunConfig::Profile::Custom;
    return c;
}

int run_verify(const std::string& target, RunConfig cfg,
               const std::optional<unsigned>& k_filter,
               const std::optional<unsigned>& beta_filter, const std::string& json_path)
{
    if (k_filter)
        cfg.kmin = cfg.kmax = *k_filter;
    if (beta_filter)
        cfg.betamin = cfg.betamax = *beta_filter;

    Reporter rep(&std::cout);
    MTable m;
    bool ok = true;
    if (target == "all")
        ok = run_all_suites(cfg, m, rep);
    else if (target == "mtable")
        ok = run_mtable_suite(cfg, m, rep);
    else if (target == "lemmas")
        ok = run_lemmas_suite(cfg, m, rep);
    else if (target == "gf")
        ok = run_gf_suite(cfg, m, rep);
    else if (target == "congruence")
        ok = run_congruence_suite(cfg, rep);
    else if (target == "valuations")
        ok = run_valuation_suite(cfg, m, rep);

    std::cout << (ok ? "RESULT PASS" : "RESULT FAIL") << " checks=" << rep.size()
              << " fail=" << rep.fail_count() << " warn=" << rep.warn_count() << "\n";

    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) {
            std::cerr << "error: cannot write " << json_path << "\n";
            return 2;
        }
        out << rep.json() << "\n";
    }
    return ok ? 0 : 1;
}

std::ostream& open_output(const std::string& path, std::ofstream& file)
{
    if (path.empty() || path == "-")
        return std::cout;
    file.open(path);
    if (!file)
        throw std::runtime_error("cannot write " + path);
    return file;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact q-series toolkit for 2-color partition congruences mod powers of 7"};
    app.require_subcommand(1);

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::string target = "all";
    verify->add_option("target", target, "all|gf|congruence|valuations|mtable|lemmas")
        ->check(CLI::IsMember({"all", "gf", "congruence", "valuations", "mtable", "lemmas"}));
    std::string profile = "quick";
    verify->add_option("--profile", profile, "quick|full|custom")
        ->check(CLI::IsMember({"quick", "full", "custom"}));
    std::optional<std::size_t> precision;
    std::optional<long> nmax, gf_nmax, imax, jmax;
    std::optional<unsigned> kmax, betamax, k_filter, beta_filter, jobs;
    std::string json_path, cache_dir;
    bool no_cache = false;
    verify->add_option("-N,--precision", precision, "series precision");
    verify->add_option("--nmax", nmax, "argument bound for congruence scans");
    verify->add_option("--gf-nmax", gf_nmax, "oracle extent for identity checks");
    verify->add_option("--kmax", kmax);
    verify->add_option("--betamax", betamax);
    verify->add_option("--k", k_filter, "restrict to one k");
    verify->add_option("--beta", beta_filter, "restrict to one beta");
    verify->add_option("--imax", imax, "mtable: highest recurrence row to cross-derive");
    verify->add_option("--jmax", jmax, "mtable: seed column extent to report");
    verify->add_option("--jobs", jobs, "parallel claim scans (default: hardware)");
    verify->add_option("--json", json_path, "write the JSON report mirror here");
    verify->add_option("--cache-dir", cache_dir, "table cache directory");
    verify->add_flag("--no-cache", no_cache, "disable the table cache");

    // ---- compute ----
    auto* compute = app.add_subcommand("compute", "print exact values");
    compute->require_subcommand(1);
    long arg_n = 0, arg_i = 0, arg_j = 0, arg_ell = 7, arg_jmax = 8;
    unsigned arg_k = 1, arg_s = 1;
    std::string family = "odd";
    auto* cp = compute->add_subcommand("p", "partition count p(n)");
    cp->add_option("--n", arg_n)->required();
    auto* cp2 = compute->add_subcommand("p2", "2-color count p_{1,ell}(n)");
    cp2->add_option("--ell", arg_ell)->required();
    cp2->add_option("--n", arg_n)->required();
    auto* cl = compute->add_subcommand("lambda", "inverse of 24 mod 7^k");
    cl->add_option("--k", arg_k)->required();
    auto* cm = compute->add_subcommand("mentry", "matrix entry m_{i,j}");
    cm->add_option("--i", arg_i)->required();
    cm->add_option("--j", arg_j)->required();
    auto* cx = compute->add_subcommand("xvec", "coefficient vector x_k");
    cx->add_option("--k", arg_k)->required();
    cx->add_option("--jmax", arg_jmax);
    auto* cy = compute->add_subcommand("yvec", "coefficient vector y^(family)_s");
    cy->add_option("--family", family)->check(CLI::IsMember({"odd", "even"}));
    cy->add_option("--k", arg_k)->required();
    cy->add_option("--s", arg_s, "paper subscript (1 = base)")->required();
    cy->add_option("--jmax", arg_jmax);

    // ---- export ----
    auto* exp = app.add_subcommand("export", "write tables");
    std::string table, format = "csv", out_path = "-";
    exp->add_option("table", table, "mtable|partition|twocolor")
        ->required()
        ->check(CLI::IsMember({"mtable", "partition", "twocolor"}));
    exp->add_option("--format", format, "csv|json|factored (mtable only)")
        ->check(CLI::IsMember({"csv", "json", "factored"}));
    exp->add_option("--out", out_path, "output path ('-' = stdout)");
    long ex_imax = 7, ex_jmax = 14, ex_nmax = 100;
    exp->add_option("--imax", ex_imax);
    exp->add_option("--jmax", ex_jmax);
    exp->add_option("--nmax", ex_nmax);
    exp->add_option("--ell", arg_ell);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify) {
            RunConfig cfg = make_config(profile);
            if (precision)
                cfg.precision = *precision;
            if (nmax)
                cfg.nmax = *nmax;
            if (gf_nmax)
                cfg.gf_nmax = *gf_nmax;
            if (kmax)
                cfg.kmax = *kmax;
            if (betamax)
                cfg.betamax = *betamax;
            if (imax)
                cfg.mtable_imax = *imax;
            if (jmax)
                cfg.mtable_jmax = *jmax;
            if (jobs)
                cfg.jobs = *jobs;
            cfg.cache_dir = no_cache ? "" : cache_dir;
            if (no_cache)
                setenv("PCLAB_CACHE", "", 1);
            return run_verify(target, cfg, k_filter, beta_filter, json_path);
        }

        if (*compute) {
            if (*cp) {
                std::cout << partition_count(arg_n).at(arg_n).get_str() << "\n";
            } else if (*cp2) {
                if (!is_power_of_7(arg_ell))
                    std::cerr << "warning: ell = " << arg_ell
                              << " is not a power of 7; the count is still well defined\n";
                auto p = partition_count(arg_n);
                std::cout << two_color_at(p, arg_ell, arg_n).get_str() << "\n";
            } else if (*cl) {
                std::cout << lambda(arg_k).get_str() << "\n";
            } else if (*cm) {
                MTable m;
                std::cout << m.at(arg_i, arg_j).get_str() << "\n";
            } else if (*cx) {
                MTable m;
                auto v = x_vector(m, arg_k, arg_jmax);
                for (std::size_t j = 1; j <= v.size(); ++j)
                    std::cout << "x_{" << arg_k << "," << j << "} = " << v[j - 1].get_str()
                              << " = " << factored7(v[j - 1]) << "\n";
            } else if (*cy) {
                MTable m;
                auto v = (family == "odd") ? y_odd(m, arg_k, arg_s, arg_jmax)
                                           : y_even(m, arg_k, arg_s, arg_jmax);
                int fam = (family == "odd") ? 2 * static_cast<int>(arg_k) - 1
                                            : 2 * static_cast<int>(arg_k);
                for (std::size_t j = 1; j <= v.size(); ++j)
                    std::cout << "y^(" << fam << ")_{" << arg_s << "," << j
                              << "} = " << v[j - 1].get_str() << " = "
                              << factored7(v[j - 1]) << "\n";
            }
            return 0;
        }

        if (*exp) {
            std::ofstream file;
            std::ostream& out = open_output(out_path, file);
            if (table == "mtable") {
                MTable m;
                if (format == "csv")
                    export_mtable_csv(m, ex_imax, ex_jmax, out);
                else if (format == "json")
                    export_mtable_json(m, ex_imax, ex_jmax, out);
                else
                    export_mtable_factored(m, ex_imax, ex_jmax, out);
            } else {
                if (format == "factored")
                    throw std::runtime_error("factored export is for mtable only");
                auto p = partition_count(ex_nmax);
                if (table == "partition") {
                    if (format == "csv")
                        export_values_csv(p.values, "p", out);
                    else
                        export_values_json(p.values, "partition", out);
                } else {
                    auto t = two_color_count(p, arg_ell, ex_nmax);
                    if (format == "csv")
                        export_values_csv(t.values, "p_{1," + std::to_string(arg_ell) + "}",
                                          out);
                    else
                        export_values_json(t.values, "twocolor", out);
                }
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
