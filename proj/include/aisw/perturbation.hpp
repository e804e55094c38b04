#pragma once

#include "aisw/well.hpp"

namespace aisw {

// Parity-dependent constant in the second-order correction: +3 for even n,
// -1 for odd n.
inline int gamma_parity(int n) { return n % 2 == 0 ? 3 : -1; }

struct PtCorrection {
    int n = 0;
    double e0 = 0.0;             // pi^2 hbar^2 n^2 / (8 m a^2)
    double e1 = 0.0;             // v0 / 2
    double e2_exact_sum = 0.0;   // truncated matrix-element sum
    double e2_asymptotic = 0.0;  // gamma_n m a^2 v0^2 / (2 pi^2 hbar^2 n^2)
    long terms_used = 0;
    double tail_estimate = 0.0;  // analytic bound on the dropped terms
    bool tail_converged = true;  // false when the window cap stopped growth first
};

struct ConvergenceDiag {
    int n = 0;
    double ratio = 0.0;  // 4 alpha / (pi^3 n)
    bool convergent = false;
};

// |<k|V|n>|^2: zero when k and n share parity, else
// 4 v0^2 (even index)^2 / (pi^2 (k^2 - n^2)^2). Throws for k == n.
double pt_matrix_element_sq(const WellConfig& cfg, int k, int n);

// Second-order correction as the sum over opposite-parity k, accumulated over
// a symmetric window around n that grows until the 1/k^3-comparison tail
// bound drops below rel_tol relative, or the hard cap K = max(1e4, 100 n) is
// reached (tail_converged = false, tail_estimate still reported).
PtCorrection pt_second_order(const WellConfig& cfg, int n, double rel_tol = 1e-12);

double pt_second_order_asymptotic(const WellConfig& cfg, int n);

// E_1 (n^2 + 4 alpha/pi^2 + 4 gamma_n alpha^2/(pi^4 n^2)); identical to
// e0 + e1 + e2_asymptotic.
double pt_energy(const WellConfig& cfg, int n);

// Leading convergence ratio 4 alpha/(pi^3 n) from the k = n+-1 term; the
// threshold for "<< 1" defaults to 0.1 and is always reported back.
ConvergenceDiag pt_convergence(const WellConfig& cfg, int n, double threshold = 0.1);

}  // namespace aisw
