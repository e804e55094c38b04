#include "aisw/comparison.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "aisw/orbits.hpp"
#include "aisw/perturbation.hpp"
#include "aisw/trace_formula.hpp"

namespace aisw {

namespace {

std::string fmt_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.16e", x);
    return buf;
}

std::ofstream open_or_throw(const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    return os;
}

BracketSource source_from_string(const std::string& s) {
    if (s == "ActionInterval") return BracketSource::ActionInterval;
    if (s == "GridScan") return BracketSource::GridScan;
    throw std::runtime_error("parse_csv: unknown bracket source '" + s + "'");
}

}  // namespace

const char* const kCsvHeader =
    "n,E_exact,E_pt2,E_po,abs_err_pt,abs_err_po,rel_err_pt,rel_err_po,"
    "below_step,pt_convergent,bracket_source";

std::vector<SpectrumRow> run_comparison(const RunConfig& run) {
    if (run.n_min < 1 || run.n_min > run.n_max)
        throw std::invalid_argument("run_comparison: requires 1 <= n_min <= n_max");
    std::vector<SpectrumRow> rows;
    rows.reserve(static_cast<size_t>(run.n_max - run.n_min + 1));
    for (int n = run.n_min; n <= run.n_max; ++n) {
        SpectrumRow row;
        row.n = n;
        row.e_pt2 = pt_energy(run.well, n);
        row.e_po = po_energy(run.well, n);
        row.pt_convergent = pt_convergence(run.well, n, run.pt_threshold).convergent;
        try {
            const ExactLevel level = exact_eigenvalue(run.well, n, run.tol_bisect);
            row.e_exact = level.energy;
            row.bracket_source = level.bracket.source;
            row.below_step = level.energy < run.well.v0;
            row.abs_err_pt = std::abs(row.e_pt2 - row.e_exact);
            row.abs_err_po = std::abs(row.e_po - row.e_exact);
            row.rel_err_pt = row.abs_err_pt / row.e_exact;
            row.rel_err_po = row.abs_err_po / row.e_exact;
        } catch (const std::exception& ex) {
            row.ok = false;
            row.error = ex.what();
            row.e_exact = std::numeric_limits<double>::quiet_NaN();
            row.abs_err_pt = row.abs_err_po = std::numeric_limits<double>::quiet_NaN();
            row.rel_err_pt = row.rel_err_po = std::numeric_limits<double>::quiet_NaN();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void emit_csv(const std::vector<SpectrumRow>& rows, std::ostream& os) {
    os << kCsvHeader << '\n';
    for (const auto& r : rows) {
        os << r.n << ',' << fmt_double(r.e_exact) << ',' << fmt_double(r.e_pt2) << ','
           << fmt_double(r.e_po) << ',' << fmt_double(r.abs_err_pt) << ','
           << fmt_double(r.abs_err_po) << ',' << fmt_double(r.rel_err_pt) << ','
           << fmt_double(r.rel_err_po) << ',' << (r.below_step ? 1 : 0) << ','
           << (r.pt_convergent ? 1 : 0) << ','
           << (r.ok ? to_string(r.bracket_source) : "SolverError") << '\n';
    }
}

void emit_csv(const std::vector<SpectrumRow>& rows, const std::string& path) {
    auto os = open_or_throw(path);
    emit_csv(rows, os);
}

std::vector<SpectrumRow> parse_csv(std::istream& is) {
    std::vector<SpectrumRow> rows;
    std::string line;
    if (!std::getline(is, line) || line != kCsvHeader)
        throw std::runtime_error("parse_csv: missing or unexpected header");
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (fields.size() != 11) throw std::runtime_error("parse_csv: bad column count");
        SpectrumRow r;
        r.n = std::stoi(fields[0]);
        r.e_exact = std::strtod(fields[1].c_str(), nullptr);
        r.e_pt2 = std::strtod(fields[2].c_str(), nullptr);
        r.e_po = std::strtod(fields[3].c_str(), nullptr);
        r.abs_err_pt = std::strtod(fields[4].c_str(), nullptr);
        r.abs_err_po = std::strtod(fields[5].c_str(), nullptr);
        r.rel_err_pt = std::strtod(fields[6].c_str(), nullptr);
        r.rel_err_po = std::strtod(fields[7].c_str(), nullptr);
        r.below_step = fields[8] == "1";
        r.pt_convergent = fields[9] == "1";
        if (fields[10] == "SolverError") {
            r.ok = false;
        } else {
            r.bracket_source = source_from_string(fields[10]);
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

void emit_json(const RunConfig& run, const std::vector<SpectrumRow>& rows, std::ostream& os) {
    nlohmann::json j;
    j["config"] = {{"a", run.well.a},       {"v0", run.well.v0}, {"m", run.well.m},
                   {"hbar", run.well.hbar}, {"alpha", run.well.alpha()},
                   {"n_min", run.n_min},    {"n_max", run.n_max}};
    nlohmann::json jrows = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json jr = {{"n", r.n},
                             {"E_exact", r.e_exact},
                             {"E_pt2", r.e_pt2},
                             {"E_po", r.e_po},
                             {"abs_err_pt", r.abs_err_pt},
                             {"abs_err_po", r.abs_err_po},
                             {"rel_err_pt", r.rel_err_pt},
                             {"rel_err_po", r.rel_err_po},
                             {"below_step", r.below_step},
                             {"pt_convergent", r.pt_convergent},
                             {"bracket_source",
                              r.ok ? to_string(r.bracket_source) : "SolverError"}};
        if (!r.ok) jr["error"] = r.error;
        jrows.push_back(std::move(jr));
    }
    j["rows"] = std::move(jrows);
    os << j.dump(2) << '\n';
}

void emit_json(const RunConfig& run, const std::vector<SpectrumRow>& rows,
               const std::string& path) {
    auto os = open_or_throw(path);
    emit_json(run, rows, os);
}

void emit_dat(const std::vector<SpectrumRow>& rows, std::ostream& os) {
    os << "# n E_exact E_pt2 E_po abs_err_pt abs_err_po rel_err_pt rel_err_po"
          " below_step pt_convergent\n";
    for (const auto& r : rows) {
        os << r.n << ' ' << fmt_double(r.e_exact) << ' ' << fmt_double(r.e_pt2) << ' '
           << fmt_double(r.e_po) << ' ' << fmt_double(r.abs_err_pt) << ' '
           << fmt_double(r.abs_err_po) << ' ' << fmt_double(r.rel_err_pt) << ' '
           << fmt_double(r.rel_err_po) << ' ' << (r.below_step ? 1 : 0) << ' '
           << (r.pt_convergent ? 1 : 0) << '\n';
    }
}

void emit_dat(const std::vector<SpectrumRow>& rows, const std::string& path) {
    auto os = open_or_throw(path);
    emit_dat(rows, os);
}

namespace {

struct PlotScale {
    double x0, x1, y0, y1;  // data ranges after the 5% margin
    double px(double x) const { return 70.0 + (x - x0) / (x1 - x0) * 660.0; }
    double py(double y) const { return 510.0 - (y - y0) / (y1 - y0) * 460.0; }
};

std::string svg_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

void emit_svg(const std::vector<SpectrumRow>& rows, std::ostream& os) {
    double xmin = std::numeric_limits<double>::max(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& r : rows) {
        xmin = std::min(xmin, static_cast<double>(r.n));
        xmax = std::max(xmax, static_cast<double>(r.n));
        for (double e : {r.e_exact, r.e_pt2, r.e_po}) {
            if (!std::isfinite(e)) continue;
            ymin = std::min(ymin, e);
            ymax = std::max(ymax, e);
        }
    }
    if (!(xmin <= xmax) || !(ymin <= ymax))
        throw std::runtime_error("emit_svg: no finite data to plot");
    const double xpad = std::max(0.05 * (xmax - xmin), 0.5);
    const double ypad = std::max(0.05 * (ymax - ymin), 0.5);
    const PlotScale sc{xmin - xpad, xmax + xpad, ymin - ypad, ymax + ypad};

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"780\" height=\"560\" "
          "viewBox=\"0 0 780 560\">\n";
    os << "<rect x=\"70\" y=\"50\" width=\"660\" height=\"460\" fill=\"none\" "
          "stroke=\"black\"/>\n";
    // Ticks: five per axis, value labels underneath/left.
    for (int i = 0; i <= 4; ++i) {
        const double xv = sc.x0 + (sc.x1 - sc.x0) * i / 4.0;
        const double yv = sc.y0 + (sc.y1 - sc.y0) * i / 4.0;
        os << "<line x1=\"" << svg_num(sc.px(xv)) << "\" y1=\"510\" x2=\"" << svg_num(sc.px(xv))
           << "\" y2=\"516\" stroke=\"black\"/>\n";
        os << "<text x=\"" << svg_num(sc.px(xv))
           << "\" y=\"532\" font-size=\"12\" text-anchor=\"middle\">" << svg_num(xv)
           << "</text>\n";
        os << "<line x1=\"64\" y1=\"" << svg_num(sc.py(yv)) << "\" x2=\"70\" y2=\""
           << svg_num(sc.py(yv)) << "\" stroke=\"black\"/>\n";
        os << "<text x=\"58\" y=\"" << svg_num(sc.py(yv) + 4.0)
           << "\" font-size=\"12\" text-anchor=\"end\">" << svg_num(yv) << "</text>\n";
    }
    os << "<text x=\"400\" y=\"552\" font-size=\"14\" text-anchor=\"middle\">n</text>\n";
    os << "<text x=\"16\" y=\"280\" font-size=\"14\" text-anchor=\"middle\" "
          "transform=\"rotate(-90 16 280)\">E</text>\n";
    // Legend, echoing the marker styles.
    os << "<rect class=\"legend\" x=\"90\" y=\"62\" width=\"9\" height=\"9\" fill=\"none\" "
          "stroke=\"black\"/><text x=\"106\" y=\"71\" font-size=\"12\">exact</text>\n";
    os << "<circle class=\"legend\" cx=\"94\" cy=\"88\" r=\"5\" fill=\"none\" "
          "stroke=\"blue\"/><text x=\"106\" y=\"92\" font-size=\"12\">perturbation "
          "(2nd order)</text>\n";
    os << "<path class=\"legend\" d=\"M 94 104 l 5 6 l -5 6 l -5 -6 z\" fill=\"red\"/>"
          "<text x=\"106\" y=\"114\" font-size=\"12\">periodic orbit</text>\n";

    for (const auto& r : rows) {
        const double x = sc.px(r.n);
        if (std::isfinite(r.e_exact)) {
            const double y = sc.py(r.e_exact);
            os << "<rect class=\"mark-exact\" x=\"" << svg_num(x - 4.5) << "\" y=\""
               << svg_num(y - 4.5) << "\" width=\"9\" height=\"9\" fill=\"none\" "
               << "stroke=\"black\"/>\n";
        }
        if (std::isfinite(r.e_pt2)) {
            os << "<circle class=\"mark-pt\" cx=\"" << svg_num(x) << "\" cy=\""
               << svg_num(sc.py(r.e_pt2)) << "\" r=\"5\" fill=\"none\" stroke=\"blue\"/>\n";
        }
        if (std::isfinite(r.e_po)) {
            const double y = sc.py(r.e_po);
            os << "<path class=\"mark-po\" d=\"M " << svg_num(x) << ' ' << svg_num(y - 6.0)
               << " l 5 6 l -5 6 l -5 -6 z\" fill=\"red\"/>\n";
        }
    }
    os << "</svg>\n";
}

void emit_svg(const std::vector<SpectrumRow>& rows, const std::string& path) {
    auto os = open_or_throw(path);
    emit_svg(rows, os);
}

std::vector<OracleReport> run_oracle_checks(const RunConfig& run, std::ostream& os) {
    const double alpha = run.well.alpha();
    const int j_max = std::max(1, (run.orbit_max_len + 1) / 2);
    QuadratureSpec spec;
    spec.nu_max = run.nu_max;
    spec.reflection_class = 1;  // single-reflection class: nu = 1 on these orbits
    for (int j = 1; j <= j_max; ++j) {
        spec.orbit_set.push_back(single_reflection_family(ReflectionSide::LeftGroup, j));
        spec.orbit_set.push_back(single_reflection_family(ReflectionSide::RightGroup, j));
    }

    std::vector<OracleReport> reports;
    os << "# oracle cross-check: closed-form single-reflection omega vs quadrature\n";
    os << "# n omega_closed omega_quadrature rel_diff\n";
    for (int n = run.n_min; n <= run.n_max; ++n) {
        OracleReport rep;
        rep.n = n;
        const double s_lo = M_PI * (n - 0.5);
        rep.window_valid = s_lo * s_lo > 2.0 * alpha;
        rep.omega_closed = omega_single(alpha, n);
        if (!rep.window_valid) {
            os << n << " " << fmt_double(rep.omega_closed) << " - (window below sqrt(2 alpha); skipped)\n";
            reports.push_back(rep);
            continue;
        }
        const OmegaQuadrature q = omega_quadrature_oracle(run.well, n, spec);
        rep.omega_quadrature = q.omega;
        rep.rel_diff = std::abs(q.omega - rep.omega_closed) /
                       std::max(std::abs(rep.omega_closed), 1e-300);
        os << n << " " << fmt_double(rep.omega_closed) << " " << fmt_double(rep.omega_quadrature)
           << " " << fmt_double(rep.rel_diff) << "\n";
        if (run.verbose) {
            for (const auto& c : q.breakdown)
                os << c.word << ',' << c.nu << ',' << fmt_double(c.real_part) << ','
                   << fmt_double(c.imag_part) << '\n';
        }
        reports.push_back(rep);
    }
    return reports;
}

}  // namespace aisw
