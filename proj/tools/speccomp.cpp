// speccomp: computes the stepped-well spectrum three ways (exact bisection,
// second-order perturbation theory, periodic-orbit sum), reports the error
// columns, and writes CSV/JSON/SVG/dat tables.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "aisw/comparison.hpp"

namespace {

struct CliOptions {
    double a = 1.0, v0 = 0.0, mass = 1.0, hbar = 1.0;
    double alpha = 0.0;
    int n_min = 1, n_max = 30;
    std::string out_csv, out_json, out_svg, out_dat;
    bool oracle = false;
    int orbit_max_len = 79;
    int nu_max = 40;
    double tol_bisect = 1e-13;
    double tol_sum = 1e-12;
    bool verbose = false;
};

// Resolves the physical parameters against --alpha. With fewer than four
// physicals given, unset ones default (a = m = hbar = 1) and v0 is derived
// from alpha unless it was given explicitly; a fully specified set must be
// consistent with alpha.
aisw::WellConfig resolve_well(const CliOptions& o, bool alpha_given, bool a_given,
                              bool v0_given, bool m_given, bool hbar_given) {
    if (!alpha_given) return aisw::WellConfig(o.a, o.v0, o.mass, o.hbar);

    const int physicals = int(a_given) + int(v0_given) + int(m_given) + int(hbar_given);
    double a = a_given ? o.a : 1.0;
    double m = m_given ? o.mass : 1.0;
    double hbar = hbar_given ? o.hbar : 1.0;
    double v0 = o.v0;

    if (!v0_given) {
        v0 = o.alpha * hbar * hbar / (m * a * a);
    } else if (physicals == 3) {
        // alpha + three physicals: solve the missing one.
        if (!a_given) {
            if (v0 <= 0.0) throw CLI::ValidationError("--alpha", "cannot solve a from alpha with v0 <= 0");
            a = std::sqrt(o.alpha * hbar * hbar / (m * v0));
        } else if (!m_given) {
            if (v0 <= 0.0) throw CLI::ValidationError("--alpha", "cannot solve mass from alpha with v0 <= 0");
            m = o.alpha * hbar * hbar / (a * a * v0);
        } else {
            if (o.alpha <= 0.0) throw CLI::ValidationError("--alpha", "cannot solve hbar from alpha <= 0");
            hbar = std::sqrt(m * a * a * v0 / o.alpha);
        }
    }

    aisw::WellConfig cfg(a, v0, m, hbar);
    const double derived = cfg.alpha();
    const double scale = std::max(std::abs(derived), std::abs(o.alpha));
    if (std::abs(derived - o.alpha) > 1e-9 * std::max(scale, 1.0))
        throw CLI::ValidationError("--alpha", "inconsistent with the physical parameters (m a^2 v0 / hbar^2 = " +
                                                  std::to_string(derived) + ")");
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stepped infinite well: exact vs perturbative vs periodic-orbit spectra"};
    CliOptions o;

    auto* opt_a = app.add_option("--a", o.a, "half-width of the well (> 0)");
    auto* opt_v0 = app.add_option("--v0", o.v0, "step height (>= 0)");
    auto* opt_m = app.add_option("--mass", o.mass, "particle mass (> 0)");
    auto* opt_hbar = app.add_option("--hbar", o.hbar, "reduced Planck constant (> 0)");
    auto* opt_alpha =
        app.add_option("--alpha", o.alpha,
                       "dimensionless step strength; alone it implies a = m = hbar = 1, v0 = alpha");
    app.add_option("--n-min", o.n_min, "first level index (>= 1)");
    app.add_option("--n-max", o.n_max, "last level index");
    app.add_option("--out-csv", o.out_csv, "write the comparison table as CSV");
    app.add_option("--out-json", o.out_json, "write the comparison table as JSON");
    app.add_option("--out-svg", o.out_svg, "write the scatter plot as SVG");
    app.add_option("--out-dat", o.out_dat, "write a gnuplot-ready data file");
    app.add_flag("--oracle", o.oracle, "cross-check the closed-form omega against quadrature");
    app.add_option("--orbit-max-len", o.orbit_max_len, "longest orbit word used by --oracle");
    app.add_option("--nu-max", o.nu_max, "repetition cutoff for the quadrature oracle");
    app.add_option("--tol-bisect", o.tol_bisect, "relative width target of the bisection");
    app.add_option("--tol-sum", o.tol_sum, "relative tail target of the perturbation sum");
    app.add_flag("--verbose", o.verbose, "per-orbit oracle breakdown on stdout");
    app.set_config("--config", "", "flat key = value file mirroring the long options");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 1;
    }

    aisw::RunConfig run;
    try {
        run.well = resolve_well(o, opt_alpha->count() > 0, opt_a->count() > 0,
                                opt_v0->count() > 0, opt_m->count() > 0, opt_hbar->count() > 0);
        run.n_min = o.n_min;
        run.n_max = o.n_max;
        run.tol_bisect = o.tol_bisect;
        run.tol_sum = o.tol_sum;
        run.oracle_checks = o.oracle;
        run.orbit_max_len = o.orbit_max_len;
        run.nu_max = o.nu_max;
        run.verbose = o.verbose;
        if (run.n_min < 1 || run.n_min > run.n_max)
            throw std::invalid_argument("requires 1 <= n-min <= n-max");
    } catch (const std::exception& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 1;
    }

    try {
        const auto rows = aisw::run_comparison(run);

        std::printf("# alpha = %.6g, levels %d..%d\n", run.well.alpha(), run.n_min, run.n_max);
        std::printf("%4s %16s %16s %16s %12s %12s %6s\n", "n", "E_exact", "E_pt2", "E_po",
                    "rel_err_pt", "rel_err_po", "below");
        for (const auto& r : rows) {
            if (r.ok)
                std::printf("%4d %16.8e %16.8e %16.8e %12.3e %12.3e %6s\n", r.n, r.e_exact,
                            r.e_pt2, r.e_po, r.rel_err_pt, r.rel_err_po,
                            r.below_step ? "yes" : "no");
            else
                std::printf("%4d solver failed: %s\n", r.n, r.error.c_str());
        }

        if (!o.out_csv.empty()) aisw::emit_csv(rows, o.out_csv);
        if (!o.out_json.empty()) aisw::emit_json(run, rows, o.out_json);
        if (!o.out_svg.empty()) aisw::emit_svg(rows, o.out_svg);
        if (!o.out_dat.empty()) aisw::emit_dat(rows, o.out_dat);
        if (run.oracle_checks) aisw::run_oracle_checks(run, std::cout);

        for (const auto& r : rows)
            if (!r.ok) return 2;
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
