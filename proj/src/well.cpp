#include "aisw/well.hpp"

#include <cmath>

namespace aisw {

WellConfig::WellConfig(double a_, double v0_, double m_, double hbar_)
    : a(a_), v0(v0_), m(m_), hbar(hbar_) {
    if (!(a > 0.0) || !std::isfinite(a))
        throw std::invalid_argument("WellConfig: half-width a must be > 0");
    if (!(v0 >= 0.0) || !std::isfinite(v0))
        throw std::invalid_argument("WellConfig: step height v0 must be >= 0");
    if (!(m > 0.0) || !std::isfinite(m))
        throw std::invalid_argument("WellConfig: mass m must be > 0");
    if (!(hbar > 0.0) || !std::isfinite(hbar))
        throw std::invalid_argument("WellConfig: hbar must be > 0");
    if (!std::isfinite(alpha()))
        throw std::invalid_argument("WellConfig: derived alpha is not finite");
}

WellConfig WellConfig::from_alpha(double alpha) {
    return WellConfig(1.0, alpha, 1.0, 1.0);
}

double WellConfig::ground_energy() const {
    return M_PI * M_PI * hbar * hbar / (8.0 * m * a * a);
}

double action_of_energy(const WellConfig& cfg, double energy) {
    if (energy < cfg.v0)
        throw std::domain_error("action_of_energy: requires E >= v0");
    return cfg.a * std::sqrt(2.0 * cfg.m * energy) +
           cfg.a * std::sqrt(2.0 * cfg.m * (energy - cfg.v0));
}

EnergyFromAction energy_of_action(const WellConfig& cfg, double action) {
    if (!(action > 0.0))
        throw std::domain_error("energy_of_action: requires S > 0");
    const double c = 2.0 * cfg.m * cfg.a * cfg.a * cfg.v0;
    const double s2 = action * action;
    const double num = s2 + c;
    return {num * num / (8.0 * cfg.m * cfg.a * cfg.a * s2), s2 >= c};
}

double reflection_coeff_energy(const WellConfig& cfg, double energy) {
    if (!(energy > cfg.v0))
        throw std::domain_error("reflection_coeff_energy: requires E > v0");
    const double root = std::sqrt(1.0 - cfg.v0 / energy);
    return (1.0 - root) / (1.0 + root);
}

double reflection_coeff_action(double alpha, double s) {
    if (!(s * s > 2.0 * alpha))
        throw std::domain_error("reflection_coeff_action: requires s > sqrt(2 alpha)");
    return 2.0 * alpha / (s * s);
}

double transmission_coeff(double alpha, double s) {
    const double r = reflection_coeff_action(alpha, s);
    return std::sqrt(1.0 - r * r);
}

}  // namespace aisw
