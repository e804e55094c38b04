#pragma once

#include <string>

#include "aisw/well.hpp"

namespace aisw {

enum class ResidualBranch { Trigonometric, Hyperbolic, Threshold };
enum class BracketSource { ActionInterval, GridScan };

const char* to_string(BracketSource source);

// Continuous matching residual whose roots are the exact eigenvalues:
//   E > v0:  f(E) = Q cos(Qa) sin(qa)/q + cos(qa) sin(Qa)
//   E < v0:  f(E) = Q cos(Qa) sinh(ka)/k + cosh(ka) sin(Qa)
// with Q = sqrt(2mE)/hbar, q = sqrt(2m(E-v0))/hbar, k = sqrt(2m(v0-E))/hbar.
// The 1/q (resp. 1/k) scaling makes f continuous through E = v0, where both
// branches limit to a Q cos(Qa) + sin(Qa); a narrow band around the step uses
// the series form of sin(qa)/q to avoid 0/0 cancellation.
double residual(const WellConfig& cfg, double energy);
ResidualBranch residual_branch(const WellConfig& cfg, double energy);

struct EigenBracket {
    int n = 0;
    double e_lo = 0.0;
    double e_hi = 0.0;
    BracketSource source = BracketSource::ActionInterval;
};

struct ExactLevel {
    int n = 0;
    double energy = 0.0;
    double residual_at_root = 0.0;
    int iterations = 0;
    EigenBracket bracket;
};

// Bracket containing exactly the n-th eigenvalue. Levels above the step use
// the action interval (E(S) at S = hbar pi (n -+ 1/2), nudged inward by 1e-12
// relative); levels at or below the step come from a grid scan over (0, v0),
// because the action interval never dips below v0. Every bracket is verified
// to hold a single sign change before it is returned.
EigenBracket eigen_bracket(const WellConfig& cfg, int n);

// Bisection on eigen_bracket(n) until the relative width drops under rel_tol
// (or 200 iterations). Throws on bracket failures and non-convergence.
ExactLevel exact_eigenvalue(const WellConfig& cfg, int n, double rel_tol = 1e-13);

// Builds the eigenstate at the level's energy (sine left of the step, sine or
// hyperbolic sine right of it, with the right amplitude scaled by 1/q so the
// construction stays finite through E = v0), matches psi at x = 0 exactly,
// and returns the derivative mismatch normalized by Q max(|A|, |B|).
double eigenstate_continuity_mismatch(const WellConfig& cfg, const ExactLevel& level);

}  // namespace aisw
