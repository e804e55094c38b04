#include "aisw/trace_formula.hpp"

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

namespace aisw {

namespace {

// 10-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr int kGaussPoints = 10;
constexpr double kGaussNode[kGaussPoints] = {
    -0.97390652851717172008, -0.86506336668898451073, -0.67940956829902440623,
    -0.43339539412924719080, -0.14887433898163121088, 0.14887433898163121088,
    0.43339539412924719080,  0.67940956829902440623,  0.86506336668898451073,
    0.97390652851717172008};
constexpr double kGaussWeight[kGaussPoints] = {
    0.06667134430868813759, 0.14945134915058059315, 0.21908636251598204400,
    0.26926671930999635509, 0.29552422471475287017, 0.29552422471475287017,
    0.26926671930999635509, 0.21908636251598204400, 0.14945134915058059315,
    0.06667134430868813759};

constexpr long kPanelBudget = 1L << 22;

struct OrbitKernel {
    int length = 0;    // n_L + n_R
    int delta = 0;     // n_L - n_R
    int sigma = 0;
    int tau = 0;
    int chi_sign = 1;  // (-1)^chi
};

std::complex<double> integrand(const OrbitKernel& k, double alpha, int nu, double s) {
    const double r = 2.0 * alpha / (s * s);
    const double t2 = 1.0 - 4.0 * alpha * alpha / (s * s * s * s);
    double amp = (k.chi_sign == 1 || nu % 2 == 0) ? 1.0 : -1.0;
    amp *= std::pow(r, k.sigma * nu) * std::pow(t2, 0.5 * k.tau * nu);
    const double phase = nu * (k.length * s + 2.0 * alpha * k.delta / s);
    return (amp / nu) * std::complex<double>(std::cos(phase), std::sin(phase));
}

std::complex<double> integrate_panels(const OrbitKernel& k, double alpha, int nu, double lo,
                                      double hi, long panels) {
    std::complex<double> total{0.0, 0.0};
    const double width = (hi - lo) / static_cast<double>(panels);
    for (long p = 0; p < panels; ++p) {
        const double mid = lo + (p + 0.5) * width;
        const double half = 0.5 * width;
        std::complex<double> panel{0.0, 0.0};
        for (int i = 0; i < kGaussPoints; ++i)
            panel += kGaussWeight[i] * integrand(k, alpha, nu, mid + half * kGaussNode[i]);
        total += half * panel;
    }
    return total;
}

std::complex<double> integrate_oscillatory(const OrbitKernel& k, double alpha, int nu,
                                           double lo, double hi, int panels_per_osc,
                                           double rel_tol, double amp_bound) {
    // Fastest phase rate over the window bounds the oscillation count.
    const double rate = nu * (k.length + 2.0 * alpha * std::abs(k.delta) / (lo * lo));
    const double cycles = rate * (hi - lo) / (2.0 * M_PI);
    long panels = std::max(1L, static_cast<long>(std::ceil(panels_per_osc * cycles)));
    // Roundoff floor: the panel sums carry ~eps * width * max|integrand|, so
    // a pure relative criterion would never terminate on near-zero integrals.
    const double abs_floor = 1e-14 * (hi - lo) * amp_bound;
    std::complex<double> prev = integrate_panels(k, alpha, nu, lo, hi, panels);
    while (true) {
        if (2 * panels > kPanelBudget) {
            std::ostringstream msg;
            msg << "omega_quadrature_oracle: unresolved oscillation (panel budget " << kPanelBudget
                << " exceeded at rel_tol " << rel_tol << ", length " << k.length << ", nu " << nu
                << ")";
            throw std::runtime_error(msg.str());
        }
        panels *= 2;
        const std::complex<double> next = integrate_panels(k, alpha, nu, lo, hi, panels);
        if (std::abs(next - prev) <= rel_tol * std::abs(next) + abs_floor) return next;
        prev = next;
    }
}

}  // namespace

double weyl_count(double s) {
    if (!(s > 0.0)) throw std::domain_error("weyl_count: requires s > 0");
    return s / M_PI - 0.5;
}

double omega_newtonian_asymptotic(double alpha, int n) {
    if (n < 1) throw std::domain_error("omega_newtonian_asymptotic: requires n >= 1");
    if (alpha < 0.0) throw std::domain_error("omega_newtonian_asymptotic: requires alpha >= 0");
    const double n_ = n;
    return 8.0 * std::log(2.0) * alpha * alpha / (std::pow(M_PI, 6) * std::pow(n_, 5));
}

double omega_single_left(double alpha, int n) {
    if (n < 1) throw std::domain_error("omega_single_left: requires n >= 1");
    const double theta = 2.0 * alpha / (n * M_PI);
    const double sign = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^(n+1)
    const double pref = 2.0 * alpha * sign / (static_cast<double>(n) * n * std::pow(M_PI, 4));
    return pref * (M_PI / 2.0 * std::sin(theta) -
                   4.0 * kCatalan / (n * M_PI) * std::cos(theta));
}

double omega_single_right(double alpha, int n) {
    return omega_single_left(-alpha, n);
}

double omega_single(double alpha, int n) {
    if (n < 1) throw std::domain_error("omega_single: requires n >= 1");
    const double sign = (n % 2 == 0) ? -1.0 : 1.0;
    return sign * 2.0 * alpha / (static_cast<double>(n) * n * std::pow(M_PI, 3)) *
           std::sin(2.0 * alpha / (n * M_PI));
}

OmegaBreakdown omega_breakdown(double alpha, int n) {
    OmegaBreakdown b;
    b.n = n;
    b.newtonian = omega_newtonian_asymptotic(alpha, n);
    b.single_left = omega_single_left(alpha, n);
    b.single_right = omega_single_right(alpha, n);
    b.single_total = omega_single(alpha, n);
    // Newtonian and multi-reflection parts sit below the retained order of the
    // energy formula; only the single-reflection correction is consumed.
    b.used = b.single_total;
    return b;
}

double po_energy_general(const WellConfig& cfg, int n, double omega) {
    if (n < 1) throw std::domain_error("po_energy_general: requires n >= 1");
    if (!(std::abs(omega) < 0.5))
        throw std::domain_error("po_energy_general: requires |omega| < 1/2");
    return energy_of_action(cfg, cfg.hbar * M_PI * (n - omega)).energy;
}

double po_energy(const WellConfig& cfg, int n) {
    if (n < 1) throw std::domain_error("po_energy: requires n >= 1");
    const double alpha = cfg.alpha();
    const double pi2 = M_PI * M_PI;
    const double nn = static_cast<double>(n) * n;
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;  // (-1)^n
    return cfg.ground_energy() *
           (nn + 4.0 * alpha / pi2 +
            sign * 4.0 * alpha / (n * pi2 * M_PI) * std::sin(2.0 * alpha / (n * M_PI)) +
            4.0 * alpha * alpha / (nn * pi2 * pi2));
}

OmegaQuadrature omega_quadrature_oracle(const WellConfig& cfg, int n,
                                        const QuadratureSpec& spec) {
    if (n < 1) throw std::domain_error("omega_quadrature_oracle: requires n >= 1");
    if (spec.nu_max < 1)
        throw std::domain_error("omega_quadrature_oracle: requires nu_max >= 1");
    if (spec.panels_per_oscillation < 8)
        throw std::domain_error("omega_quadrature_oracle: requires panels_per_oscillation >= 8");
    const double alpha = cfg.alpha();
    const double lo = M_PI * (n - 0.5);
    const double hi = M_PI * (n + 0.5);
    if (!(lo * lo > 2.0 * alpha))
        throw std::domain_error(
            "omega_quadrature_oracle: window dips below sqrt(2 alpha); amplitudes undefined");

    OmegaQuadrature result;
    std::complex<double> sum{0.0, 0.0};
    for (const auto& orbit : spec.orbit_set) {
        OrbitKernel k;
        k.length = orbit.n_left + orbit.n_right;
        k.delta = orbit.n_left - orbit.n_right;
        k.sigma = orbit.sigma;
        k.tau = orbit.tau;
        k.chi_sign = (orbit.chi % 2 == 0) ? 1 : -1;
        const double amp_max = std::abs(amplitude(alpha, orbit, lo));
        for (int nu = 1; nu <= spec.nu_max; ++nu) {
            if (spec.reflection_class >= 0 && nu * orbit.sigma != spec.reflection_class)
                continue;
            const double amp_bound = std::pow(amp_max, nu) / nu;
            std::complex<double> integral{0.0, 0.0};
            if (amp_bound > 0.0)
                integral = integrate_oscillatory(k, alpha, nu, lo, hi,
                                                 spec.panels_per_oscillation, spec.rel_tol,
                                                 amp_bound);
            sum += integral;
            result.breakdown.push_back(
                {orbit.word, nu, integral.real() / (M_PI * M_PI), integral.imag() / (M_PI * M_PI)});
        }
        // Geometric bound on the dropped repetitions: |A|^nu / nu decays with
        // ratio max|A| < 1 over the window (|A| peaks at the left edge).
        if (spec.reflection_class < 0 && amp_max < 1.0 && amp_max > 0.0) {
            const int v = spec.nu_max + 1;
            result.repetition_tail_bound += (hi - lo) / (M_PI * M_PI) *
                                            std::pow(amp_max, v) / (v * (1.0 - amp_max));
        }
    }
    result.omega = sum.imag() / (M_PI * M_PI);
    return result;
}

}  // namespace aisw
