#pragma once

#include <stdexcept>

namespace aisw {

// Physical parameters of the stepped infinite well: hard walls at x = +-a,
// potential 0 on the left half and v0 on the right half. All quantities are
// in caller-chosen consistent units.
struct WellConfig {
    double a = 1.0;
    double v0 = 0.0;
    double m = 1.0;
    double hbar = 1.0;

    WellConfig() = default;
    WellConfig(double a_, double v0_, double m_, double hbar_);

    // Dimensionless mode: a = m = hbar = 1, v0 = alpha.
    static WellConfig from_alpha(double alpha);

    // alpha = m a^2 v0 / hbar^2, the dimensionless step strength.
    double alpha() const { return m * a * a * v0 / (hbar * hbar); }

    // E_1 of the unstepped well, pi^2 hbar^2 / (8 m a^2).
    double ground_energy() const;
};

// S(E) = a sqrt(2mE) + a sqrt(2m(E - v0)); strictly increasing on [v0, inf).
// Throws std::domain_error for E < v0 (the imaginary branch is not taken).
double action_of_energy(const WellConfig& cfg, double energy);

// E(S) = (S^2 + 2 m a^2 v0)^2 / (8 m a^2 S^2). The map attains its minimum
// v0 at S* = sqrt(2 m a^2 v0); increasing_branch tells the caller which side
// of the fold the input landed on (S >= S*).
struct EnergyFromAction {
    double energy;
    bool increasing_branch;
};
EnergyFromAction energy_of_action(const WellConfig& cfg, double action);

// r = (1 - sqrt(1 - v0/E)) / (1 + sqrt(1 - v0/E)) for E > v0.
// Independent of hbar.
double reflection_coeff_energy(const WellConfig& cfg, double energy);

// Same coefficient on the reduced-action side: r = 2 alpha / s^2,
// valid for s > sqrt(2 alpha) (so that r < 1).
double reflection_coeff_action(double alpha, double s);

// t = sqrt(1 - 4 alpha^2 / s^4); satisfies r^2 + t^2 = 1.
double transmission_coeff(double alpha, double s);

}  // namespace aisw
