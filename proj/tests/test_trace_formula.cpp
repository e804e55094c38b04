#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "aisw/perturbation.hpp"
#include "aisw/trace_formula.hpp"
#include "oracle_helpers.hpp"

using aisw::QuadratureSpec;
using aisw::ReflectionSide;
using aisw::WellConfig;
using doctest::Approx;

namespace {

const WellConfig kFig2(3.0, 100.0, 0.5, 1.0);  // alpha = 450

QuadratureSpec family_spec(int j_max, int nu_max = 1) {
    QuadratureSpec spec;
    spec.nu_max = nu_max;
    spec.reflection_class = 1;
    for (int j = 1; j <= j_max; ++j) {
        spec.orbit_set.push_back(aisw::single_reflection_family(ReflectionSide::LeftGroup, j));
        spec.orbit_set.push_back(aisw::single_reflection_family(ReflectionSide::RightGroup, j));
    }
    return spec;
}

QuadratureSpec group_spec(ReflectionSide side, int j_max) {
    QuadratureSpec spec;
    spec.nu_max = 1;
    spec.reflection_class = 1;
    for (int j = 1; j <= j_max; ++j)
        spec.orbit_set.push_back(aisw::single_reflection_family(side, j));
    return spec;
}

}  // namespace

TEST_SUITE("trace-formula") {

TEST_CASE("weyl count") {
    CHECK(aisw::weyl_count(M_PI / 2.0) == Approx(0.0).epsilon(1e-14));
    for (int n = 1; n <= 12; ++n)
        CHECK(aisw::weyl_count(M_PI * (n + 0.5)) == Approx(n).epsilon(1e-13));
    CHECK_THROWS_AS(aisw::weyl_count(0.0), std::domain_error);

    // Integral over one bracket window equals pi n - pi/2.
    const int n = 9;
    const double integral = oracle::adaptive_simpson(
        [](double s) { return aisw::weyl_count(s); }, M_PI * (n - 0.5), M_PI * (n + 0.5), 1e-13);
    CHECK(integral == Approx(M_PI * n - M_PI / 2.0).epsilon(1e-12));
}

TEST_CASE("newtonian correction") {
    CHECK(aisw::omega_newtonian_asymptotic(0.0, 7) == 0.0);
    CHECK(aisw::omega_newtonian_asymptotic(2.0, 100) ==
          Approx(aisw::omega_newtonian_asymptotic(2.0, 50) / 32.0).epsilon(1e-14));

    // Quadrature over the LR orbit and its repetitions.
    const WellConfig cfg = WellConfig::from_alpha(2.0);
    QuadratureSpec spec;
    spec.nu_max = 40;
    spec.orbit_set.push_back(aisw::classify("LR"));
    const auto q = aisw::omega_quadrature_oracle(cfg, 50, spec);
    CHECK(q.omega == Approx(aisw::omega_newtonian_asymptotic(2.0, 50)).epsilon(0.2));
    // First-order window integrals vanish; the nu = 1 contribution is already
    // dominated by the 1/s^4 correction.
    REQUIRE(!q.breakdown.empty());
    CHECK(q.breakdown[0].nu == 1);
    CHECK(std::abs(q.breakdown[0].imag_part) < 1e-6);
    // The geometric certificate is honest but loose here: |A| -> 1 for the
    // Newtonian orbit at high energy, so only positivity and finiteness hold.
    CHECK(q.repetition_tail_bound > 0.0);
    CHECK(std::isfinite(q.repetition_tail_bound));

    // Family specs fix the reflection class, so no repetitions are dropped.
    const auto fam = aisw::omega_quadrature_oracle(kFig2, 20, family_spec(5));
    CHECK(fam.repetition_tail_bound == 0.0);
}

TEST_CASE("single-reflection family corrections against quadrature") {
    // Regime with alpha/n small, where the dropped orders are genuinely small.
    const WellConfig cfg2 = WellConfig::from_alpha(2.0);
    const auto left = aisw::omega_quadrature_oracle(cfg2, 50, group_spec(ReflectionSide::LeftGroup, 40));
    CHECK(aisw::omega_single_left(2.0, 50) == Approx(left.omega).epsilon(0.05));
    const auto right = aisw::omega_quadrature_oracle(cfg2, 50, group_spec(ReflectionSide::RightGroup, 40));
    CHECK(aisw::omega_single_right(2.0, 50) == Approx(right.omega).epsilon(0.05));

    // The Catalan term splits the two families; with the wrong sign the left
    // family would be off by a factor ~4 here.
    CHECK(std::abs(aisw::omega_single_left(2.0, 50) - left.omega) <
          0.1 * std::abs(aisw::omega_single_right(2.0, 50) - left.omega));

    const WellConfig cfg10 = WellConfig::from_alpha(10.0);
    const auto left10 = aisw::omega_quadrature_oracle(cfg10, 40, group_spec(ReflectionSide::LeftGroup, 40));
    CHECK(aisw::omega_single_left(10.0, 40) == Approx(left10.omega).epsilon(0.05));
    const auto right10 = aisw::omega_quadrature_oracle(cfg10, 40, group_spec(ReflectionSide::RightGroup, 40));
    CHECK(aisw::omega_single_right(10.0, 40) == Approx(right10.omega).epsilon(0.05));
}

TEST_CASE("single-reflection total against quadrature at alpha = 450") {
    const auto q20 = aisw::omega_quadrature_oracle(kFig2, 20, family_spec(40));
    CHECK(aisw::omega_single(450.0, 20) == Approx(q20.omega).epsilon(0.05));
    const auto q60 = aisw::omega_quadrature_oracle(kFig2, 60, family_spec(40));
    CHECK(aisw::omega_single(450.0, 60) == Approx(q60.omega).epsilon(0.02));
}

TEST_CASE("single-reflection closed forms") {
    CHECK(aisw::omega_single(450.0, 20) == Approx(-0.0713038601670992).epsilon(1e-12));
    CHECK(aisw::omega_single(0.0, 9) == 0.0);
    CHECK(aisw::omega_single_left(0.0, 9) == 0.0);
    CHECK(aisw::omega_single_right(0.0, 9) == 0.0);

    // Parity alternation at fixed alpha.
    for (int n = 10; n <= 13; ++n) {
        CHECK(std::signbit(aisw::omega_single_left(2.0, n)) !=
              std::signbit(aisw::omega_single_left(2.0, n + 1)));
        CHECK(std::signbit(aisw::omega_single_right(2.0, n)) !=
              std::signbit(aisw::omega_single_right(2.0, n + 1)));
    }

    // Small-alpha limit of the sine.
    const double approx_small = 4.0 * 1e-6 / (343.0 * std::pow(M_PI, 4));
    CHECK(aisw::omega_single(1e-3, 7) == Approx(approx_small).epsilon(1e-6));
}

TEST_CASE("catalan terms cancel in the family sum") {
    std::mt19937 rng(271828);
    std::uniform_int_distribution<int> un(1, 400);
    std::uniform_real_distribution<double> ua(0.0, 5.0);
    for (int i = 0; i < 100; ++i) {
        const int n = un(rng);
        const double alpha = ua(rng) * n;
        const double split = aisw::omega_single_left(alpha, n) + aisw::omega_single_right(alpha, n);
        CHECK(std::abs(split - aisw::omega_single(alpha, n)) < 1e-13);
    }
}

TEST_CASE("series identities behind the closed forms") {
    const double leibniz =
        oracle::alternating_series([](long k) { return 1.0 / (2.0 * k + 1.0); });
    CHECK(leibniz == Approx(M_PI / 4.0).epsilon(1e-12));

    const double catalan = oracle::alternating_series(
        [](long k) { return 1.0 / ((2.0 * k + 1.0) * (2.0 * k + 1.0)); });
    CHECK(catalan == Approx(aisw::kCatalan).epsilon(1e-12));

    const double log2 = oracle::alternating_series([](long k) { return 1.0 / (k + 1.0); });
    CHECK(log2 == Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("omega breakdown record") {
    const auto b = aisw::omega_breakdown(450.0, 20);
    CHECK(b.n == 20);
    CHECK(b.newtonian == Approx(aisw::omega_newtonian_asymptotic(450.0, 20)));
    CHECK(b.single_left + b.single_right == Approx(b.single_total).epsilon(1e-12));
    CHECK(b.used == b.single_total);
    CHECK(b.single_total == Approx(aisw::omega_single(450.0, 20)));
}

TEST_CASE("orbit-sum energy, exact assembly") {
    // omega = 0 keeps every term of the action-energy composition.
    for (int n : {1, 5, 20}) {
        const double e1 = kFig2.ground_energy();
        const double alpha = kFig2.alpha();
        const double expect =
            e1 * (static_cast<double>(n) * n + 4.0 * alpha / (M_PI * M_PI) +
                  4.0 * alpha * alpha / (std::pow(M_PI, 4) * n * n));
        CHECK(aisw::po_energy_general(kFig2, n, 0.0) == Approx(expect).epsilon(1e-13));
    }
    const WellConfig flat(1.0, 0.0, 1.0, 1.0);
    CHECK(aisw::po_energy_general(flat, 4, 0.0) ==
          Approx(16.0 * flat.ground_energy()).epsilon(1e-14));
    CHECK_THROWS_AS(aisw::po_energy_general(kFig2, 3, 0.5), std::domain_error);
    CHECK_THROWS_AS(aisw::po_energy_general(kFig2, 3, -0.7), std::domain_error);
}

TEST_CASE("expansion consistency of the two orbit-sum energies") {
    // n^3 |general - expanded| / E_1 stays bounded and does not grow.
    std::vector<double> small_n, large_n;
    for (int n : {20, 40, 80, 120, 160, 200}) {
        const double omega = aisw::omega_single(450.0, n);
        const double diff =
            std::abs(aisw::po_energy_general(kFig2, n, omega) - aisw::po_energy(kFig2, n));
        const double scaled = std::pow(n, 3) * diff / kFig2.ground_energy();
        (n <= 80 ? small_n : large_n).push_back(scaled);
        CHECK(scaled < 1250.0);
    }
    CHECK(*std::max_element(large_n.begin(), large_n.end()) <=
          *std::max_element(small_n.begin(), small_n.end()));
}

TEST_CASE("orbit-sum energy against exact and perturbative values") {
    const double e15 = 1.215556813069776e+02;  // frozen exact level
    const double po = aisw::po_energy(kFig2, 15);
    const double e1_0 = kFig2.ground_energy();
    const double pt = e1_0 * (225.0 + 4.0 * 450.0 / (M_PI * M_PI) +
                              4.0 * (-1.0) * 450.0 * 450.0 / (std::pow(M_PI, 4) * 225.0));
    CHECK(std::abs(po - e15) < std::abs(pt - e15));

    const WellConfig flat(1.0, 0.0, 2.0, 1.0);
    CHECK(aisw::po_energy(flat, 6) == Approx(36.0 * flat.ground_energy()).epsilon(1e-15));
}

TEST_CASE("orbit-sum and perturbative energies agree when alpha/n is small") {
    const WellConfig cfg = WellConfig::from_alpha(0.5);
    const double e1 = cfg.ground_energy();
    for (int n : {50, 100, 200, 400}) {
        const double diff = std::abs(aisw::po_energy(cfg, n) - aisw::pt_energy(cfg, n));
        CHECK(std::pow(n, 3) * diff / e1 <= 1e-5);
    }
}

TEST_CASE("quadrature oracle preconditions and edge cases") {
    CHECK_THROWS_AS(aisw::omega_quadrature_oracle(kFig2, 9, family_spec(5)), std::domain_error);
    CHECK_THROWS_AS(aisw::omega_quadrature_oracle(kFig2, 10, family_spec(5)), std::domain_error);
    CHECK_NOTHROW(aisw::omega_quadrature_oracle(kFig2, 11, family_spec(5)));

    QuadratureSpec bad = family_spec(3);
    bad.nu_max = 0;
    CHECK_THROWS_AS(aisw::omega_quadrature_oracle(kFig2, 20, bad), std::domain_error);
    bad = family_spec(3);
    bad.panels_per_oscillation = 4;
    CHECK_THROWS_AS(aisw::omega_quadrature_oracle(kFig2, 20, bad), std::domain_error);

    // alpha = 0: every reflected amplitude vanishes and the Newtonian window
    // integral is exactly zero.
    const WellConfig flat(1.0, 0.0, 1.0, 1.0);
    QuadratureSpec spec = family_spec(5, 3);
    spec.reflection_class = -1;
    spec.orbit_set.push_back(aisw::classify("LR"));
    const auto q = aisw::omega_quadrature_oracle(flat, 12, spec);
    CHECK(std::abs(q.omega) < 1e-10);

    // Deterministic breakdown: one entry per (orbit, nu) pair that passes the
    // class filter, in orbit order.
    const auto fam = aisw::omega_quadrature_oracle(kFig2, 20, family_spec(7));
    CHECK(fam.breakdown.size() == 14);
    CHECK(fam.breakdown[0].word == "L");
    CHECK(fam.breakdown[1].word == "R");
}

TEST_CASE("two-reflection class decays faster than 1/n^3.5") {
    const WellConfig cfg = WellConfig::from_alpha(10.0);
    QuadratureSpec spec;
    spec.orbit_set = aisw::enumerate_necklaces(12, true);
    spec.nu_max = 2;
    spec.reflection_class = 2;

    std::vector<double> ns = {20.0, 40.0, 80.0};
    std::vector<double> omegas;
    for (double n : ns)
        omegas.push_back(aisw::omega_quadrature_oracle(cfg, static_cast<int>(n), spec).omega);
    CHECK(oracle::loglog_slope(ns, omegas) <= -3.5);
}

}  // TEST_SUITE
