#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "aisw/exact_spectrum.hpp"
#include "aisw/well.hpp"

namespace aisw {

struct SpectrumRow {
    int n = 0;
    double e_exact = 0.0;
    double e_pt2 = 0.0;
    double e_po = 0.0;
    double abs_err_pt = 0.0;
    double abs_err_po = 0.0;
    double rel_err_pt = 0.0;
    double rel_err_po = 0.0;
    bool below_step = false;
    bool pt_convergent = false;
    BracketSource bracket_source = BracketSource::ActionInterval;
    bool ok = true;           // false when the exact solver failed for this row
    std::string error;        // failure message when !ok
};

struct RunConfig {
    WellConfig well;
    int n_min = 1;
    int n_max = 30;
    double tol_bisect = 1e-13;
    double tol_sum = 1e-12;
    double pt_threshold = 0.1;
    bool oracle_checks = false;
    int orbit_max_len = 79;  // single-reflection words up to this length (j <= 40)
    int nu_max = 40;
    bool verbose = false;
    std::string out_csv;
    std::string out_json;
    std::string out_svg;
    std::string out_dat;
};

// Exact, perturbative, and orbit-sum energies for every level in the range,
// with error columns and regime flags. Solver failures mark the row and the
// run continues.
std::vector<SpectrumRow> run_comparison(const RunConfig& run);

extern const char* const kCsvHeader;

void emit_csv(const std::vector<SpectrumRow>& rows, std::ostream& os);
void emit_csv(const std::vector<SpectrumRow>& rows, const std::string& path);
std::vector<SpectrumRow> parse_csv(std::istream& is);

void emit_json(const RunConfig& run, const std::vector<SpectrumRow>& rows, std::ostream& os);
void emit_json(const RunConfig& run, const std::vector<SpectrumRow>& rows,
               const std::string& path);

// Whitespace-separated table for gnuplot, one commented header line.
void emit_dat(const std::vector<SpectrumRow>& rows, std::ostream& os);
void emit_dat(const std::vector<SpectrumRow>& rows, const std::string& path);

// Static scatter of the three spectra: open squares (exact), open circles
// (perturbation), filled diamonds (orbit sum). Linear axes, 5% margins.
void emit_svg(const std::vector<SpectrumRow>& rows, std::ostream& os);
void emit_svg(const std::vector<SpectrumRow>& rows, const std::string& path);

struct OracleReport {
    int n = 0;
    bool window_valid = false;  // false when the window dips below sqrt(2 alpha)
    double omega_closed = 0.0;
    double omega_quadrature = 0.0;
    double rel_diff = 0.0;
};

// Per-level cross-check of the closed-form single-reflection correction
// against the quadrature oracle over both families (word length bounded by
// run.orbit_max_len).
std::vector<OracleReport> run_oracle_checks(const RunConfig& run, std::ostream& os);

}  // namespace aisw
