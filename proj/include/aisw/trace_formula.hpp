#pragma once

#include <string>
#include <vector>

#include "aisw/orbits.hpp"
#include "aisw/well.hpp"

namespace aisw {

// Catalan's constant, stored well past double precision.
inline constexpr double kCatalan = 0.91596559417721901505;

// Smooth part of the counting staircase: N(s) = s/pi - 1/2.
double weyl_count(double s);

// Newtonian-orbit (word LR) contribution with all repetitions:
// 8 log(2) alpha^2 / (pi^6 n^5).
double omega_newtonian_asymptotic(double alpha, int n);

// Single-reflection family contributions. The left group carries
//   (2 alpha (-1)^(n+1) / (n^2 pi^4)) [ (pi/2) sin(2a/(n pi))
//                                       - (4G/(n pi)) cos(2a/(n pi)) ]
// and the right group is the same expression under alpha -> -alpha, so the
// Catalan terms cancel in the sum.
double omega_single_left(double alpha, int n);
double omega_single_right(double alpha, int n);

// Total single-reflection correction:
// (-1)^(n+1) (2 alpha/(n^2 pi^3)) sin(2 alpha/(n pi)).
double omega_single(double alpha, int n);

struct OmegaBreakdown {
    int n = 0;
    double newtonian = 0.0;
    double single_left = 0.0;
    double single_right = 0.0;
    double single_total = 0.0;
    double used = 0.0;  // the value the orbit-sum energy formula consumes
};
OmegaBreakdown omega_breakdown(double alpha, int n);

// E(hbar pi (n - omega)) through the exact action-energy map; every term of
// the assembled energy is kept. Requires |omega| < 1/2.
double po_energy_general(const WellConfig& cfg, int n, double omega);

// Orbit-sum energy with the single-reflection correction folded in:
// E_1 [ n^2 + 4a/pi^2 + (-1)^n (4a/(n pi^3)) sin(2a/(n pi)) + 4a^2/(n^2 pi^4) ].
double po_energy(const WellConfig& cfg, int n);

struct QuadratureSpec {
    std::vector<OrbitNecklace> orbit_set;
    int nu_max = 40;
    int panels_per_oscillation = 8;
    double rel_tol = 1e-9;
    // When >= 0, keep only (orbit, nu) pairs with nu * sigma == this value,
    // i.e. the fixed-reflection-count class of the correction.
    int reflection_class = -1;
};

struct OrbitContribution {
    std::string word;
    int nu = 0;
    double real_part = 0.0;
    double imag_part = 0.0;
};

struct OmegaQuadrature {
    double omega = 0.0;                  // (1/pi^2) Im of the (orbit, nu) sum
    double repetition_tail_bound = 0.0;  // geometric bound on nu > nu_max
    std::vector<OrbitContribution> breakdown;
};

// Direct numerical evaluation of the oscillatory orbit sum over the window
// [pi(n-1/2), pi(n+1/2)], composite Gauss-Legendre with the panel count tied
// to the fastest phase and doubled until stable. Requires the whole window to
// sit above sqrt(2 alpha); throws if the panel budget is exhausted.
OmegaQuadrature omega_quadrature_oracle(const WellConfig& cfg, int n,
                                        const QuadratureSpec& spec);

}  // namespace aisw
