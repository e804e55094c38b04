#include "aisw/exact_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace aisw {

namespace {

// Relative half-width of the band around E = v0 where the series form of
// sin(qa)/q and cos(qa) is used instead of the trig/hyperbolic expressions.
constexpr double kThresholdBand = 1e-10;
constexpr double kEndpointNudge = 1e-12;
constexpr int kVerifySubdivisions = 64;
constexpr int kMaxBisectIterations = 200;

struct MatchPieces {
    double big_q;  // Q = sqrt(2mE)/hbar
    double g;      // sin(qa)/q, continued through the step
    double h;      // cos(qa), continued through the step
};

MatchPieces match_pieces(const WellConfig& cfg, double energy) {
    if (!(energy > 0.0) || !std::isfinite(energy))
        throw std::domain_error("residual: requires finite E > 0");
    MatchPieces p{};
    p.big_q = std::sqrt(2.0 * cfg.m * energy) / cfg.hbar;
    const double w = 2.0 * cfg.m * (energy - cfg.v0) * cfg.a * cfg.a / (cfg.hbar * cfg.hbar);
    if (std::abs(energy - cfg.v0) < kThresholdBand * cfg.v0) {
        // (qa)^2 = w is tiny here; three series terms carry ~1e-24 error.
        p.g = cfg.a * (1.0 - w / 6.0 + w * w / 120.0);
        p.h = 1.0 - w / 2.0 + w * w / 24.0;
    } else if (energy > cfg.v0) {
        const double q = std::sqrt(2.0 * cfg.m * (energy - cfg.v0)) / cfg.hbar;
        p.g = std::sin(q * cfg.a) / q;
        p.h = std::cos(q * cfg.a);
    } else {
        const double k = std::sqrt(2.0 * cfg.m * (cfg.v0 - energy)) / cfg.hbar;
        p.g = std::sinh(k * cfg.a) / k;
        p.h = std::cosh(k * cfg.a);
    }
    return p;
}

// Sign-change subintervals of [lo, hi] on an m-point subdivision. An exact
// zero at a node is folded into the interval to its left.
std::vector<std::pair<double, double>> sign_change_cells(const WellConfig& cfg, double lo,
                                                         double hi, int m) {
    std::vector<std::pair<double, double>> cells;
    double x_prev = lo;
    double f_prev = residual(cfg, lo);
    for (int i = 1; i <= m; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / m;
        const double f = residual(cfg, x);
        if (f == 0.0) {
            const double nudged = std::min(x * (1.0 + 1e-14), hi);
            cells.emplace_back(x_prev, nudged);
            x_prev = nudged;
            f_prev = residual(cfg, x_prev);
            continue;
        }
        if (f_prev != 0.0 && std::signbit(f) != std::signbit(f_prev))
            cells.emplace_back(x_prev, x);
        x_prev = x;
        f_prev = f;
    }
    return cells;
}

// All roots of the residual strictly below the step, bracketed and ordered.
// The scan runs uniformly in Q (roots are ~pi/a-spaced there) at eight points
// per expected root, with a floor of 64 cells.
std::vector<std::pair<double, double>> substep_brackets(const WellConfig& cfg) {
    std::vector<std::pair<double, double>> out;
    if (!(cfg.v0 > 0.0)) return out;
    const double e_min = 1e-9 * cfg.v0;
    const double e_max = cfg.v0 * (1.0 - 1e-12);
    if (!(e_min < e_max)) return out;
    const double q_lo = std::sqrt(2.0 * cfg.m * e_min) / cfg.hbar;
    const double q_hi = std::sqrt(2.0 * cfg.m * e_max) / cfg.hbar;
    const int cells = std::max(64, 8 * static_cast<int>(std::ceil(q_hi * cfg.a / M_PI)));

    double e_prev = e_min;
    double f_prev = residual(cfg, e_min);
    for (int i = 1; i <= cells; ++i) {
        const double q = q_lo + (q_hi - q_lo) * static_cast<double>(i) / cells;
        const double e = cfg.hbar * cfg.hbar * q * q / (2.0 * cfg.m);
        const double f = residual(cfg, e);
        if (f_prev != 0.0 && f != 0.0 && std::signbit(f) != std::signbit(f_prev)) {
            // A coarse cell may straddle more than one root; split it.
            auto sub = sign_change_cells(cfg, e_prev, e, kVerifySubdivisions);
            out.insert(out.end(), sub.begin(), sub.end());
        }
        e_prev = e;
        f_prev = f;
    }
    return out;
}

// Roots above the step located by a scan uniform in reduced action, used when
// the action-interval bracket fails its single-sign-change verification.
std::vector<std::pair<double, double>> abovestep_brackets(const WellConfig& cfg, int count,
                                                          double s_end) {
    const double s_star = std::sqrt(2.0 * std::max(cfg.alpha(), 0.0));
    const double s_start = std::max(s_star * (1.0 + 1e-9), 1e-9);
    std::vector<std::pair<double, double>> out;
    if (!(s_start < s_end)) return out;
    const int cells = std::max(64, static_cast<int>(std::ceil((s_end - s_start) / M_PI * 8.0)));
    double e_prev = energy_of_action(cfg, cfg.hbar * s_start).energy * (1.0 + 1e-13);
    double f_prev = residual(cfg, e_prev);
    for (int i = 1; i <= cells; ++i) {
        const double s = s_start + (s_end - s_start) * static_cast<double>(i) / cells;
        const double e = energy_of_action(cfg, cfg.hbar * s).energy;
        const double f = residual(cfg, e);
        if (f_prev != 0.0 && f != 0.0 && std::signbit(f) != std::signbit(f_prev)) {
            auto sub = sign_change_cells(cfg, e_prev, e, kVerifySubdivisions);
            out.insert(out.end(), sub.begin(), sub.end());
            if (static_cast<int>(out.size()) >= count) return out;
        }
        e_prev = e;
        f_prev = f;
    }
    return out;
}

}  // namespace

const char* to_string(BracketSource source) {
    return source == BracketSource::ActionInterval ? "ActionInterval" : "GridScan";
}

ResidualBranch residual_branch(const WellConfig& cfg, double energy) {
    if (std::abs(energy - cfg.v0) < kThresholdBand * cfg.v0) return ResidualBranch::Threshold;
    return energy > cfg.v0 ? ResidualBranch::Trigonometric : ResidualBranch::Hyperbolic;
}

double residual(const WellConfig& cfg, double energy) {
    const MatchPieces p = match_pieces(cfg, energy);
    return p.big_q * std::cos(p.big_q * cfg.a) * p.g + p.h * std::sin(p.big_q * cfg.a);
}

EigenBracket eigen_bracket(const WellConfig& cfg, int n) {
    if (n < 1) throw std::domain_error("eigen_bracket: requires n >= 1");
    const auto below = substep_brackets(cfg);
    const int n_below = static_cast<int>(below.size());

    if (n <= n_below) {
        return {n, below[n - 1].first, below[n - 1].second, BracketSource::GridScan};
    }

    const double s_star = std::sqrt(2.0 * std::max(cfg.alpha(), 0.0));
    const double s_lo = M_PI * (n - 0.5);
    const double s_hi = M_PI * (n + 0.5);
    if (s_lo > s_star * (1.0 + 1e-12)) {
        double e_lo = energy_of_action(cfg, cfg.hbar * s_lo).energy * (1.0 + kEndpointNudge);
        double e_hi = energy_of_action(cfg, cfg.hbar * s_hi).energy * (1.0 - kEndpointNudge);
        if (e_lo < e_hi &&
            sign_change_cells(cfg, e_lo, e_hi, kVerifySubdivisions).size() == 1) {
            return {n, e_lo, e_hi, BracketSource::ActionInterval};
        }
    }

    // Action interval unavailable or ambiguous (possible just above the step):
    // fall back to an ordered scan for root #(n - n_below) above v0.
    const double s_end = M_PI * (n + 2.0);
    const auto above = abovestep_brackets(cfg, n - n_below, s_end);
    if (static_cast<int>(above.size()) < n - n_below) {
        std::ostringstream msg;
        msg << "eigen_bracket: level " << n << " not found below scan ceiling E = "
            << energy_of_action(cfg, cfg.hbar * s_end).energy << " (" << n_below
            << " sub-step roots, " << above.size() << " above-step roots)";
        throw std::runtime_error(msg.str());
    }
    const auto& cell = above[n - n_below - 1];
    return {n, cell.first, cell.second, BracketSource::GridScan};
}

ExactLevel exact_eigenvalue(const WellConfig& cfg, int n, double rel_tol) {
    if (!(rel_tol > 0.0)) throw std::domain_error("exact_eigenvalue: requires rel_tol > 0");
    const EigenBracket bracket = eigen_bracket(cfg, n);

    double lo = bracket.e_lo;
    double hi = bracket.e_hi;
    double f_lo = residual(cfg, lo);
    const double f_hi = residual(cfg, hi);
    if (f_lo == 0.0) return {n, lo, 0.0, 0, bracket};
    if (f_hi == 0.0) return {n, hi, 0.0, 0, bracket};
    if (std::signbit(f_lo) == std::signbit(f_hi)) {
        std::ostringstream msg;
        msg << "exact_eigenvalue: bracket (" << lo << ", " << hi << ") for level " << n
            << " lost its sign change";
        throw std::runtime_error(msg.str());
    }
    const double f_scale = std::max(1.0, std::max(std::abs(f_lo), std::abs(f_hi)));

    int iterations = 0;
    double mid = 0.5 * (lo + hi);
    while (iterations < kMaxBisectIterations) {
        mid = 0.5 * (lo + hi);
        ++iterations;
        const double f_mid = residual(cfg, mid);
        if (f_mid == 0.0) break;
        if (std::signbit(f_mid) == std::signbit(f_lo)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
        if (hi - lo < rel_tol * std::abs(mid)) {
            mid = 0.5 * (lo + hi);
            break;
        }
    }
    if (iterations >= kMaxBisectIterations && hi - lo >= rel_tol * std::abs(mid)) {
        std::ostringstream msg;
        msg << "exact_eigenvalue: bisection for level " << n << " stalled on ["
            << lo << ", " << hi << "]";
        throw std::runtime_error(msg.str());
    }

    const double f_root = residual(cfg, mid);
    if (std::abs(f_root) >= 1e-9 * f_scale) {
        std::ostringstream msg;
        msg << "exact_eigenvalue: residual " << f_root << " at level " << n
            << " exceeds 1e-9 of bracket scale " << f_scale;
        throw std::runtime_error(msg.str());
    }
    return {n, mid, f_root, iterations, bracket};
}

double eigenstate_continuity_mismatch(const WellConfig& cfg, const ExactLevel& level) {
    const MatchPieces p = match_pieces(cfg, level.energy);
    // Left: A sin(Q(x+a)). Right: B sin(q(x-a))/q (hyperbolic below the step);
    // the 1/q scaling keeps the amplitude finite through E = v0. Matching psi
    // at x = 0 exactly fixes B against A.
    const double amp_left = p.g;
    const double amp_right = -std::sin(p.big_q * cfg.a);
    const double dpsi_left = amp_left * p.big_q * std::cos(p.big_q * cfg.a);
    const double dpsi_right = amp_right * p.h;
    const double scale = p.big_q * std::max(std::abs(amp_left), std::abs(amp_right));
    if (scale == 0.0) return 0.0;
    return std::abs(dpsi_left - dpsi_right) / scale;
}

}  // namespace aisw
