// Command-line front end: single values, series dumps, tables, and the
// named-identity verification registry.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "abel/error.hpp"
#include "abel/lattice.hpp"
#include "abel/series_json.hpp"
#include "abel/series_ops.hpp"
#include "abel/threefold.hpp"
#include "abel/verify.hpp"

namespace {

struct GlobalOptions {
    std::optional<int> qmax;
    std::optional<int> umax;
    std::optional<int> window;
    std::string out;
    int jobs = 1;
};

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw abel::precondition_error("cannot open output file " + out_path);
    f << content;
}

std::string render_plaurent(const abel::PLaurent& c) {
    if (c.is_zero()) return "0";
    std::string s;
    for (const auto& [w, v] : c.support()) {
        if (!s.empty()) s += " + ";
        s += "(" + v.str() + ")";
        if (w != 0) {
            if (w % 2 == 0)
                s += "*p^" + std::to_string(w / 2);
            else
                s += "*p^(" + std::to_string(w) + "/2)";
        }
    }
    if (c.is_window())
        s += "   [trusted |2*p-exp| <= " + std::to_string(c.validity()) + "]";
    return s;
}

std::string render_series_plain(const abel::QSeries<abel::PLaurent>& s) {
    std::string out;
    for (int d = 0; d <= s.order(); ++d)
        out += "q^" + std::to_string(d) + ": " + render_plaurent(s[d]) + "\n";
    return out;
}

int run_nu(long d1, long d2, std::optional<long> d3, const std::string& oracle) {
    std::vector<long> type = {d1, d2};
    if (d3) type.push_back(*d3);
    bool threefold = d3.has_value();

    std::vector<std::pair<std::string, long>> results;
    if (oracle == "formula" || oracle == "all")
        results.emplace_back("formula", abel::nu_subgroup_formula(type));
    if (oracle == "isotropic" || oracle == "all")
        results.emplace_back("isotropic", abel::nu_isotropic(type));
    if (oracle == "closed" || oracle == "all") {
        if (threefold) {
            if (oracle == "closed")
                throw abel::precondition_error(
                    "nu: no closed form for three nontrivial entries; use "
                    "formula or isotropic");
        } else {
            results.emplace_back("closed", abel::nu_closed(d1, d2));
        }
    }
    if (results.empty())
        throw abel::precondition_error("nu: unknown oracle '" + oracle + "'");

    bool agree = true;
    for (const auto& [name, value] : results) {
        std::cout << name << ": " << value << "\n";
        if (value != results.front().second) agree = false;
    }
    if (!agree) {
        std::cerr << "oracle disagreement\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact curve-counting invariants of abelian surfaces and "
                 "threefolds"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOptions global;
    app.add_option("--qmax", global.qmax, "q-series truncation order");
    app.add_option("--umax", global.umax, "u-series truncation order");
    app.add_option("--window", global.window,
                   "Laurent window bound (doubled w-units)");
    app.add_option("--out", global.out, "write output to a file");
    app.add_option("--jobs", global.jobs, "parallel verification workers");

    // nu
    long nu_d1 = 0, nu_d2 = 0;
    std::optional<long> nu_d3;
    std::string nu_oracle = "all";
    CLI::App* nu = app.add_subcommand("nu", "polarized isogeny count");
    nu->add_option("d1", nu_d1)->required();
    nu->add_option("d2", nu_d2)->required();
    nu->add_option("d3", nu_d3);
    nu->add_option("--oracle", nu_oracle)
        ->check(CLI::IsMember({"formula", "isotropic", "closed", "all"}));

    // table
    std::string table_kind, table_format = "plain";
    int table_gmax = 8, table_dmax = -1;
    CLI::App* table = app.add_subcommand("table", "exact value tables");
    table->add_option("kind", table_kind)
        ->required()
        ->check(CLI::IsMember(
            {"hyperelliptic", "genus2-quotient", "genus3", "nu"}));
    table->add_option("--gmax", table_gmax);
    table->add_option("--dmax", table_dmax);
    table->add_option("--format", table_format)
        ->check(CLI::IsMember({"csv", "json", "plain"}));

    // series
    std::string series_name;
    bool series_json_flag = false;
    CLI::App* series = app.add_subcommand("series", "partition function dumps");
    series->add_option("name", series_name)
        ->required()
        ->check(CLI::IsMember({"dt1", "dt2", "dthat1", "dthat2", "gw11d"}));
    series->add_flag("--json", series_json_flag, "canonical JSON output");

    // verify
    std::vector<std::string> verify_names;
    CLI::App* verify = app.add_subcommand("verify", "named identity checks");
    verify->add_option("names", verify_names,
                       "check names, or 'all' for the full registry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (!global.qmax) {
        if (const char* env = std::getenv("ABELCOUNT_DEFAULT_QMAX")) {
            int v = std::atoi(env);
            if (v > 0) global.qmax = v;
        }
    }

    try {
        if (nu->parsed()) return run_nu(nu_d1, nu_d2, nu_d3, nu_oracle);

        if (table->parsed()) {
            abel::TableParams params;
            params.gmax = table_gmax;
            params.dmax = table_dmax > 0
                              ? table_dmax
                              : (table_kind == "nu" ? 24 : 10);
            if (table_kind == "genus2-quotient" || table_kind == "genus3")
                params.dmax = table_dmax > 0 ? table_dmax : 6;
            write_output(global.out,
                         abel::emit_table(table_kind, params, table_format));
            return 0;
        }

        if (series->parsed()) {
            int qmax = global.qmax.value_or(10);
            int window = global.window.value_or(24);
            abel::QSeries<abel::PLaurent> s = abel::qseries_plaurent(0);
            if (series_name == "dt1")
                s = abel::dt_1(qmax, window).series;
            else if (series_name == "dt2")
                s = abel::dt_2(qmax, window).series;
            else if (series_name == "dthat1")
                s = abel::dt_hat_1(qmax, window).series;
            else if (series_name == "dthat2")
                s = abel::dt_hat_2_closed(qmax, window).series;
            else
                s = abel::gw_11d_series(qmax, window).series;
            std::string content = series_json_flag
                                      ? abel::to_json(s).dump(2) + "\n"
                                      : render_series_plain(s);
            write_output(global.out, content);
            return 0;
        }

        if (verify->parsed()) {
            abel::CheckOverrides overrides;
            overrides.qmax = global.qmax;
            overrides.umax = global.umax;
            overrides.window = global.window;
            std::vector<abel::VerifyReport> reports;
            bool all = verify_names.empty() ||
                       (verify_names.size() == 1 && verify_names[0] == "all");
            if (all) {
                reports = abel::run_all(overrides, global.jobs);
            } else {
                for (const auto& name : verify_names)
                    reports.push_back(abel::run_check(name, overrides));
            }
            write_output(global.out,
                         abel::reports_to_json(reports).dump(2) + "\n");
            for (const auto& r : reports)
                if (!r.passed()) return 1;
            return 0;
        }
    } catch (const abel::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
