#include "abel/verify.hpp"

#include <atomic>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <thread>

#include "abel/error.hpp"
#include "abel/lattice.hpp"
#include "abel/modular.hpp"
#include "abel/series_ops.hpp"
#include "abel/surface.hpp"
#include "abel/threefold.hpp"

namespace abel {

namespace {

// Published hyperelliptic counts h_g(d) for g = 2..8, d = 1..10.
const long kHypTable[7][10] = {
    {1, 12, 36, 112, 150, 432, 392, 960, 1053, 1800},
    {0, 6, 90, 456, 1650, 4320, 9996, 20640, 36774, 67500},
    {0, 0, 9, 192, 1425, 6732, 23814, 68352, 173907, 387900},
    {0, 0, 0, 4, 150, 1656, 10486, 48240, 174474, 539200},
    {0, 0, 0, 0, 0, 36, 735, 6720, 41310, 191400},
    {0, 0, 0, 0, 0, 0, 0, 96, 1620, 14700},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 100},
};

VerifyReport from_comparison(const std::string& name,
                             const SeriesComparison& cmp) {
    VerifyReport r;
    r.check = name;
    r.region = cmp.region;
    r.verdict = cmp.equal ? Verdict::Pass : Verdict::Fail;
    r.locator = cmp.locator;
    return r;
}

VerifyReport pass_report(const std::string& name, const std::string& region) {
    VerifyReport r;
    r.check = name;
    r.region = region;
    r.verdict = Verdict::Pass;
    return r;
}

VerifyReport fail_report(const std::string& name, const std::string& region,
                         const std::string& locator) {
    VerifyReport r;
    r.check = name;
    r.region = region;
    r.verdict = Verdict::Fail;
    r.locator = locator;
    return r;
}

VerifyReport check_k_two_representations(const CheckParams& p) {
    QSeries<USeries> from_product =
        antisymmetric_w_to_u(theta_K_pq(p.qmax, p.window), p.umax);
    QSeries<USeries> from_exponential = theta_K_u(p.qmax, p.umax);
    return from_comparison("k-two-representations",
                           compare_series(from_product, from_exponential));
}

VerifyReport check_dthat1_assembly(const CheckParams& p) {
    return from_comparison(
        "dthat1-assembly",
        compare_series(dt_hat_1_assembled(p.qmax, p.window).series,
                       dt_hat_1(p.qmax, p.window).series));
}

VerifyReport check_dthat2_assembly(const CheckParams& p) {
    return from_comparison(
        "dthat2-assembly",
        compare_series(dt_hat_2_assembled(p.qmax, p.window).series,
                       dt_hat_2_closed(p.qmax, p.window).series));
}

VerifyReport check_modular_identity(const CheckParams& p) {
    return modular_identity_check(p.qmax, p.window);
}

VerifyReport check_fg_consistency(const CheckParams& p) {
    return consistency_fg(p.qmax, p.window);
}

VerifyReport check_gwdt_11d(const CheckParams& p) {
    DTSeries base = dt_1(p.qmax, p.window);
    SeriesComparison cmp =
        compare_series(gw_11d_series(p.qmax, p.window).series,
                       sign_flip_p(base.series));
    std::string region = cmp.region + "; u-coefficients at q^0";
    if (!cmp.equal) return fail_report("gwdt-1-1-d", region, cmp.locator);
    QSeries<USeries> gw = gw_from_dt(base, std::max(p.umax, 4));
    if (coeff(gw, 0, 2) != Rational(1))
        return fail_report("gwdt-1-1-d", region,
                           "u^2 q^0: expected 1/1, got " + coeff(gw, 0, 2).str());
    if (coeff(gw, 0, 4) != Rational(-1, 12))
        return fail_report("gwdt-1-1-d", region,
                           "u^4 q^0: expected -1/12, got " +
                               coeff(gw, 0, 4).str());
    return pass_report("gwdt-1-1-d", region);
}

VerifyReport check_table1(const CheckParams&) {
    std::string region = "g=2..8, d=1..10 (70 cells)";
    InvariantTable table = hyp_h_table(8, 10);
    for (int g = 2; g <= 8; ++g)
        for (int d = 1; d <= 10; ++d) {
            const Rational& got = table.cells[g - 2][d - 1];
            Rational expected(kHypTable[g - 2][d - 1]);
            if (got != expected)
                return fail_report("table1", region,
                                   "g=" + std::to_string(g) + ", d=" +
                                       std::to_string(d) + ": expected " +
                                       expected.str() + ", got " + got.str());
        }
    return pass_report("table1", region);
}

VerifyReport check_hyp3_row(const CheckParams&) {
    std::string region = "g=3, d=1..10";
    InvariantTable table = hyp_h_table(3, 10);
    for (int d = 1; d <= 10; ++d) {
        Rational closed = hyp3_closed(d);
        const Rational& from_series = table.cells[1][d - 1];
        if (closed != from_series)
            return fail_report("hyp3-row", region,
                               "d=" + std::to_string(d) + ": closed form " +
                                   closed.str() + ", series " +
                                   from_series.str());
    }
    return pass_report("hyp3-row", region);
}

VerifyReport check_nonvanishing(const CheckParams&) {
    std::string region = "g=2..8, d=1..10";
    InvariantTable table = hyp_h_table(8, 10);
    for (int g = 2; g <= 8; ++g)
        for (int d = 1; d <= 10; ++d) {
            bool nonzero = !table.cells[g - 2][d - 1].is_zero();
            if (nonzero != hyp_nonvanishing(g, d))
                return fail_report(
                    "nonvanishing-pattern", region,
                    "g=" + std::to_string(g) + ", d=" + std::to_string(d) +
                        ": cell " + table.cells[g - 2][d - 1].str() +
                        " vs criterion " +
                        (hyp_nonvanishing(g, d) ? "nonzero" : "zero"));
        }
    return pass_report("nonvanishing-pattern", region);
}

VerifyReport check_nu_oracles(const CheckParams& p) {
    long bound = p.qmax;  // product bound d1*d2
    std::string region =
        "d1 | d2, d1*d2 <= " + std::to_string(bound) + ", three oracles";
    for (long d1 = 1; d1 * d1 <= bound; ++d1)
        for (long d2 = d1; d1 * d2 <= bound; d2 += d1) {
            if (d2 % d1 != 0) continue;
            long formula = nu_subgroup_formula({d1, d2});
            long isotropic = nu_isotropic({d1, d2});
            long closed = nu_closed(d1, d2);
            if (formula != isotropic || formula != closed)
                return fail_report(
                    "nu-oracles", region,
                    "(" + std::to_string(d1) + "," + std::to_string(d2) +
                        "): subgroup-formula " + std::to_string(formula) +
                        ", isotropic " + std::to_string(isotropic) +
                        ", closed " + std::to_string(closed));
            if (d1 == 1 && formula != divisor_sigma(d2))
                return fail_report("nu-oracles", region,
                                   "(1," + std::to_string(d2) +
                                       "): expected sigma = " +
                                       std::to_string(divisor_sigma(d2)) +
                                       ", got " + std::to_string(formula));
        }
    return pass_report("nu-oracles", region);
}

VerifyReport check_nu_recursion(const CheckParams&) {
    std::string region = "p in {2,3}, 1 <= m <= n, p^(m+n) <= 32";
    for (long p : {2L, 3L})
        for (int m = 1; m <= 5; ++m)
            for (int n = m; n <= 5; ++n) {
                long total = 1;
                for (int i = 0; i < m + n; ++i) total *= p;
                if (total > 32) continue;
                long pm = 1, pn = 1;
                for (int i = 0; i < m; ++i) pm *= p;
                for (int i = 0; i < n; ++i) pn *= p;
                long rec = nu_recursion(p, m, n);
                long direct = nu_subgroup_formula({pm, pn});
                if (rec != direct)
                    return fail_report(
                        "nu-recursion", region,
                        "p=" + std::to_string(p) + ", m=" + std::to_string(m) +
                            ", n=" + std::to_string(n) + ": recursion " +
                            std::to_string(rec) + ", subgroup formula " +
                            std::to_string(direct));
            }
    return pass_report("nu-recursion", region);
}

VerifyReport check_genus2_bridge(const CheckParams& p) {
    long bound = p.qmax;
    std::string region = "d1 <= d2, d1*d2 <= " + std::to_string(bound);
    for (long d1 = 1; d1 * d1 <= bound; ++d1)
        for (long d2 = d1; d1 * d2 <= bound; ++d2) {
            Rational quotient = n_quotient(2, SurfaceClassType(d1, d2));
            Rational nu(nu_subgroup_formula({d1, d2}));
            if (quotient != nu)
                return fail_report("genus2-bridge", region,
                                   "(" + std::to_string(d1) + "," +
                                       std::to_string(d2) + "): quotient " +
                                       quotient.str() + ", nu " + nu.str());
        }
    return pass_report("genus2-bridge", region);
}

VerifyReport check_genus3_bridge(const CheckParams&) {
    long bound = 16;
    std::string region = "d1 | d2 | d3, d1*d2*d3 <= " + std::to_string(bound);
    for (long d1 = 1; d1 * d1 * d1 <= bound; ++d1)
        for (long d2 = d1; d1 * d2 * d2 <= bound; d2 += d1)
            for (long d3 = d2; d1 * d2 * d3 <= bound; d3 += d2) {
                long nu_f = nu_subgroup_formula({d1, d2, d3});
                long nu_i = nu_isotropic({d1, d2, d3});
                if (nu_f != nu_i)
                    return fail_report(
                        "genus3-bridge", region,
                        "nu oracles disagree at (" + std::to_string(d1) + "," +
                            std::to_string(d2) + "," + std::to_string(d3) +
                            "): " + std::to_string(nu_f) + " vs " +
                            std::to_string(nu_i));
                Rational series =
                    n_g_imprimitive(3, ThreefoldClassType(d1, d2, d3));
                if (series != Rational(2 * nu_f))
                    return fail_report(
                        "genus3-bridge", region,
                        "(" + std::to_string(d1) + "," + std::to_string(d2) +
                            "," + std::to_string(d3) + "): multiple-cover " +
                            series.str() + ", 2 nu = " +
                            std::to_string(2 * nu_f));
            }
    return pass_report("genus3-bridge", region);
}

VerifyReport check_mc_coherence(const CheckParams& p) {
    long bound = p.qmax;
    std::string region = "surface: d1*d2 <= " + std::to_string(bound) +
                         ", g <= 6; threefold: (1,2,2) vs (2,2,1)";
    for (int g = 2; g <= 6; ++g)
        for (long d1 = 1; d1 * d1 <= bound; ++d1)
            for (long d2 = d1; d1 * d2 <= bound; ++d2) {
                SurfaceClassType t(d1, d2);
                Rational mc = multiple_cover_surface(g, t);
                Rational direct = n_quotient(g, t);
                if (mc != direct)
                    return fail_report(
                        "mc-coherence", region,
                        "g=" + std::to_string(g) + ", (" + std::to_string(d1) +
                            "," + std::to_string(d2) + "): multiple-cover " +
                            mc.str() + ", direct " + direct.str());
            }
    Rational f = mc_threefold_f(3, 2, 2);
    Rational n = n_g_imprimitive(3, ThreefoldClassType(2, 2, 1));
    if (f != Rational(30) || n != Rational(30))
        return fail_report("mc-coherence", region,
                           "threefold: f(3;2,2) = " + f.str() +
                               ", N_3(2,2,1) = " + n.str() + ", expected 30");
    return pass_report("mc-coherence", region);
}

VerifyReport check_gs(const CheckParams& p) {
    return from_comparison(
        "gs-equals-qdqS",
        compare_series(gs_stable_pairs_series(p.qmax),
                       s_function(p.qmax).q_derivative()));
}

}  // namespace

const std::vector<CheckDescriptor>& check_registry() {
    static const std::vector<CheckDescriptor> registry = {
        {"k-two-representations",
         "theta kernel: product form converted to u equals exponential form",
         {8, 16, 24}, check_k_two_representations},
        {"dthat1-assembly",
         "stratified assembly of the degree-one Euler theory equals K^2",
         {8, 0, 24}, check_dthat1_assembly},
        {"dthat2-assembly",
         "pencil assembly of the degree-two Euler theory equals its closed form",
         {8, 0, 24}, check_dthat2_assembly},
        {"modular-identity",
         "K^4 (3 wp + theta_D4/4) = (3/2) K^4 wp + (3/8) K(p^2,q^2)^2",
         {8, 0, 24}, check_modular_identity},
        {"fg-consistency",
         "g_d = f_2d (+ f_{d/2}(p^2)/2 for even d) for the kernel series",
         {4, 0, 24}, check_fg_consistency},
        {"gwdt-1-1-d",
         "type (1,1,d) curve series equals the y = -p conversion of -K^2",
         {8, 4, 24}, check_gwdt_11d},
        {"table1", "hyperelliptic count table regeneration, 70 cells",
         {10, 20, 24}, check_table1},
        {"hyp3-row", "closed genus 3 hyperelliptic formula matches the table",
         {10, 20, 24}, check_hyp3_row},
        {"nonvanishing-pattern",
         "table cells vanish exactly where the degree criterion says",
         {10, 20, 24}, check_nonvanishing},
        {"nu-oracles",
         "subgroup-formula, isotropic and closed-form isogeny counts agree",
         {24, 0, 24}, check_nu_oracles},
        {"nu-recursion",
         "prime-power recursion matches the subgroup formula",
         {32, 0, 24}, check_nu_recursion},
        {"genus2-bridge", "genus 2 quotient counts equal isogeny counts",
         {24, 0, 24}, check_genus2_bridge},
        {"genus3-bridge",
         "genus 3 threefold counts equal twice the isogeny counts",
         {16, 0, 24}, check_genus3_bridge},
        {"mc-coherence",
         "multiple-cover formulas agree with direct evaluations",
         {24, 0, 24}, check_mc_coherence},
        {"gs-equals-qdqS",
         "stable-pairs Euler characteristic series equals q d/dq of S",
         {10, 0, 24}, check_gs},
    };
    return registry;
}

namespace {
CheckParams merge(const CheckParams& defaults, const CheckOverrides& o) {
    CheckParams p = defaults;
    if (o.qmax) p.qmax = *o.qmax;
    if (o.umax) p.umax = *o.umax;
    if (o.window) p.window = *o.window;
    return p;
}
}  // namespace

VerifyReport run_check(const std::string& name, const CheckOverrides& overrides) {
    for (const auto& check : check_registry())
        if (check.name == name)
            return check.runner(merge(check.defaults, overrides));
    throw precondition_error("run_check: unknown check '" + name + "'");
}

std::vector<VerifyReport> run_all(const CheckOverrides& overrides, int jobs) {
    const auto& registry = check_registry();
    std::vector<VerifyReport> reports(registry.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < registry.size(); ++i)
            reports[i] = registry[i].runner(merge(registry[i].defaults, overrides));
        return reports;
    }
    std::atomic<size_t> next{0};
    std::vector<std::exception_ptr> errors(registry.size());
    auto work = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= registry.size()) return;
            try {
                reports[i] =
                    registry[i].runner(merge(registry[i].defaults, overrides));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    int n = std::min<int>(jobs, (int)registry.size());
    pool.reserve(n);
    for (int i = 0; i < n; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return reports;
}

nlohmann::json report_to_json(const VerifyReport& report) {
    nlohmann::json j;
    j["check"] = report.check;
    j["region"] = report.region;
    switch (report.verdict) {
        case Verdict::Pass: j["verdict"] = "pass"; break;
        case Verdict::Fail: j["verdict"] = "fail"; break;
        case Verdict::Skipped: j["verdict"] = "skipped"; break;
    }
    if (report.verdict == Verdict::Fail) j["locator"] = report.locator;
    if (report.verdict == Verdict::Skipped) j["skip_reason"] = report.skip_reason;
    return j;
}

nlohmann::json reports_to_json(const std::vector<VerifyReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    return arr;
}

namespace {

std::string render_matrix(const InvariantTable& t, const std::string& format,
                          const std::string& comment) {
    std::ostringstream os;
    if (format == "csv") {
        os << "# " << comment << "\n";
        os << t.row_label << "\\" << t.col_label;
        for (long c : t.cols) os << "," << c;
        os << "\n";
        for (size_t i = 0; i < t.rows.size(); ++i) {
            os << t.rows[i];
            for (size_t j = 0; j < t.cols.size(); ++j)
                os << "," << t.cells[i][j].to_long();
            os << "\n";
        }
        return os.str();
    }
    if (format == "json") {
        nlohmann::json j;
        j["description"] = comment;
        j["row_label"] = t.row_label;
        j["col_label"] = t.col_label;
        j["rows"] = t.rows;
        j["cols"] = t.cols;
        nlohmann::json cells = nlohmann::json::array();
        for (size_t i = 0; i < t.rows.size(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (size_t j2 = 0; j2 < t.cols.size(); ++j2)
                row.push_back(t.cells[i][j2].to_long());
            cells.push_back(row);
        }
        j["cells"] = cells;
        return j.dump(2) + "\n";
    }
    if (format == "plain") {
        os << comment << "\n";
        os << std::setw(6) << (t.row_label + "\\" + t.col_label);
        for (long c : t.cols) os << std::setw(9) << c;
        os << "\n";
        for (size_t i = 0; i < t.rows.size(); ++i) {
            os << std::setw(6) << t.rows[i];
            for (size_t j = 0; j < t.cols.size(); ++j)
                os << std::setw(9) << t.cells[i][j].to_long();
            os << "\n";
        }
        return os.str();
    }
    throw precondition_error("emit_table: unsupported format '" + format + "'");
}

InvariantTable genus2_quotient_table(int dmax) {
    InvariantTable t;
    t.row_label = "d1";
    t.col_label = "d2";
    for (int d = 1; d <= dmax; ++d) {
        t.rows.push_back(d);
        t.cols.push_back(d);
    }
    t.cells.assign(dmax, std::vector<Rational>(dmax, Rational(0)));
    t.sources.assign(dmax, std::vector<std::string>(dmax, "n_quotient"));
    for (int i = 1; i <= dmax; ++i)
        for (int j = 1; j <= dmax; ++j)
            t.cells[i - 1][j - 1] = n_quotient(2, SurfaceClassType(i, j));
    return t;
}

InvariantTable genus3_table(int dmax) {
    InvariantTable t;
    t.row_label = "d2";
    t.col_label = "d3";
    for (int d = 1; d <= dmax; ++d) {
        t.rows.push_back(d);
        t.cols.push_back(d);
    }
    t.cells.assign(dmax, std::vector<Rational>(dmax, Rational(0)));
    t.sources.assign(dmax, std::vector<std::string>(dmax, "n_g_imprimitive"));
    // One shared primitive series: classes (1, d, d') draw their multiple
    // cover contributions from type (1,1,m) coefficients, m <= dmax^2.
    int qmax = dmax * dmax;
    QSeries<USeries> gw = gw_from_dt(dt_1(qmax, 2 * qmax + 4), 4);
    for (int i = 1; i <= dmax; ++i)
        for (int j = 1; j <= dmax; ++j) {
            Rational total(0);
            long g = std::gcd((long)i, (long)j);
            for (long k = 1; k <= g; ++k) {
                if (g % k != 0) continue;
                long target = (long)i * j / (k * k);
                total += Rational(n_mc_factor(1, i, j, k)) * Rational(k).pow(3) *
                         coeff(gw, (int)target, 4);
            }
            t.cells[i - 1][j - 1] = total;
        }
    return t;
}

std::string render_nu_listing(long bound, const std::string& format) {
    struct Row {
        long d1, d2, nu;
    };
    std::vector<Row> rows;
    for (long d1 = 1; d1 * d1 <= bound; ++d1)
        for (long d2 = d1; d1 * d2 <= bound; d2 += d1)
            rows.push_back({d1, d2, nu_subgroup_formula({d1, d2})});
    const std::string comment =
        "polarized isogeny counts nu(d1,d2) over d1 | d2 with d1*d2 <= " +
        std::to_string(bound);
    std::ostringstream os;
    if (format == "csv") {
        os << "# " << comment << "\n";
        os << "d1,d2,nu\n";
        for (const auto& r : rows)
            os << r.d1 << "," << r.d2 << "," << r.nu << "\n";
        return os.str();
    }
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows)
            arr.push_back({{"d1", r.d1}, {"d2", r.d2}, {"nu", r.nu}});
        return nlohmann::json{{"description", comment}, {"values", arr}}.dump(2) +
               "\n";
    }
    if (format == "plain") {
        os << comment << "\n";
        for (const auto& r : rows)
            os << "nu(" << r.d1 << "," << r.d2 << ") = " << r.nu << "\n";
        return os.str();
    }
    throw precondition_error("emit_table: unsupported format '" + format + "'");
}

}  // namespace

std::string emit_table(const std::string& kind, const TableParams& params,
                       const std::string& format) {
    if (kind == "hyperelliptic")
        return render_matrix(
            hyp_h_table(params.gmax, params.dmax), format,
            "hyperelliptic curve counts per fixed linear system, genus rows, "
            "degree columns");
    if (kind == "genus2-quotient")
        return render_matrix(
            genus2_quotient_table(params.dmax), format,
            "genus 2 curve counts up to translation for class type (d1,d2)");
    if (kind == "genus3")
        return render_matrix(
            genus3_table(params.dmax), format,
            "genus 3 threefold curve counts for class type (1,d2,d3)");
    if (kind == "nu") return render_nu_listing(params.dmax, format);
    throw precondition_error("emit_table: unsupported kind '" + kind + "'");
}

}  // namespace abel
