#include "aisw/perturbation.hpp"

#include <cmath>

namespace aisw {

namespace {

// Neumaier-compensated accumulator; the window terms alternate in magnitude
// around k = n and the 1e-12 target needs the compensation.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

// One term of the second-order sum for opposite-parity k:
//   C (even index)^2 / (n^2 - k^2)^3,  C = 32 m a^2 v0^2 / (pi^4 hbar^2).
double sum_term(double c_pref, int k, int n) {
    const double even_idx = (n % 2 == 0) ? n : k;
    const double d = static_cast<double>(n) * n - static_cast<double>(k) * k;
    return c_pref * even_idx * even_idx / (d * d * d);
}

}  // namespace

double pt_matrix_element_sq(const WellConfig& cfg, int k, int n) {
    if (k == n) throw std::domain_error("pt_matrix_element_sq: requires k != n");
    if (k < 1 || n < 1) throw std::domain_error("pt_matrix_element_sq: indices start at 1");
    if (k % 2 == n % 2) return 0.0;
    const double even_idx = (n % 2 == 0) ? n : k;
    const double d = static_cast<double>(k) * k - static_cast<double>(n) * n;
    return 4.0 * cfg.v0 * cfg.v0 * even_idx * even_idx / (M_PI * M_PI * d * d);
}

PtCorrection pt_second_order(const WellConfig& cfg, int n, double rel_tol) {
    if (n < 1) throw std::domain_error("pt_second_order: requires n >= 1");
    if (!(rel_tol > 0.0)) throw std::domain_error("pt_second_order: requires rel_tol > 0");

    PtCorrection out;
    out.n = n;
    out.e0 = cfg.ground_energy() * n * n;
    out.e1 = cfg.v0 / 2.0;
    out.e2_asymptotic = pt_second_order_asymptotic(cfg, n);

    if (cfg.v0 == 0.0) return out;

    const double c_pref =
        32.0 * cfg.m * cfg.a * cfg.a * cfg.v0 * cfg.v0 / (std::pow(M_PI, 4) * cfg.hbar * cfg.hbar);
    const long cap = std::max(10000L, 100L * n);

    CompensatedSum acc;
    long terms = 0;
    double tail = 0.0;
    bool converged = false;

    // Opposite-parity offsets j = 1, 3, 5, ... on both sides of n; terms decay
    // like 1/j^3, so the window grows until the comparison tail bound is in.
    for (long j = 1;; j += 2) {
        if (j > cap) break;
        const long k_hi = n + j;
        const long k_lo = n - j;
        acc.add(sum_term(c_pref, static_cast<int>(k_hi), n));
        ++terms;
        if (k_lo >= 1) {
            acc.add(sum_term(c_pref, static_cast<int>(k_lo), n));
            ++terms;
        }
        const double jn = static_cast<double>(j) + 2.0;  // first dropped offset
        const double per_side = c_pref / n * (1.0 / (jn * jn * jn) + 1.0 / (4.0 * jn * jn));
        tail = (k_lo - 2 >= 1 ? 2.0 : 1.0) * per_side;
        if (tail <= rel_tol * std::abs(acc.value()) && acc.value() != 0.0) {
            converged = true;
            break;
        }
    }

    out.e2_exact_sum = acc.value();
    out.terms_used = terms;
    out.tail_estimate = tail;
    out.tail_converged = converged;
    return out;
}

double pt_second_order_asymptotic(const WellConfig& cfg, int n) {
    if (n < 1) throw std::domain_error("pt_second_order_asymptotic: requires n >= 1");
    return gamma_parity(n) * cfg.m * cfg.a * cfg.a * cfg.v0 * cfg.v0 /
           (2.0 * M_PI * M_PI * cfg.hbar * cfg.hbar * static_cast<double>(n) * n);
}

double pt_energy(const WellConfig& cfg, int n) {
    if (n < 1) throw std::domain_error("pt_energy: requires n >= 1");
    const double alpha = cfg.alpha();
    const double pi2 = M_PI * M_PI;
    const double nn = static_cast<double>(n) * n;
    return cfg.ground_energy() *
           (nn + 4.0 * alpha / pi2 + 4.0 * gamma_parity(n) * alpha * alpha / (pi2 * pi2 * nn));
}

ConvergenceDiag pt_convergence(const WellConfig& cfg, int n, double threshold) {
    if (n < 1) throw std::domain_error("pt_convergence: requires n >= 1");
    const double ratio = 4.0 * cfg.alpha() / (std::pow(M_PI, 3) * n);
    return {n, ratio, ratio < threshold};
}

}  // namespace aisw
