#include "vdl/constants.hpp"
#include "vdl/errors.hpp"
#include "vdl/kernel.hpp"
#include "vdl/modesum.hpp"
#include "vdl/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace vdl;
using namespace vdl::modesum;

TEST_SUITE("modesum")
{
    TEST_CASE("radial integral basics")
    {
        CHECK(radial_integral_m(1, 50.0, 0.0) == 0.0);
        const double a = 0.1;
        const double closed = kernel_term(1, {a, 50.0, 0.4, 2});
        CHECK(2.0 * a * a / constants::pi * radial_integral_m(1, 50.0, 0.4) == doctest::Approx(closed).epsilon(1e-6));
    }

    TEST_CASE("per-m identity on a reduced grid")
    {
        for (std::int64_t m : {1, 4})
            for (double kappa : {50.0, 200.0})
                for (double tau : {0.3, 1.7})
                {
                    const double closed = kernel_term(m, {1.0, kappa, tau, 2});
                    const double quad = 2.0 / constants::pi * radial_integral_m(m, kappa, tau);
                    CHECK(quad == doctest::Approx(closed).epsilon(1e-6));
                }
    }

    TEST_CASE("quadrature is smooth through tau = 1")
    {
        const double a = radial_integral_m(3, 200.0, 0.999);
        const double b = radial_integral_m(3, 200.0, 1.0);
        const double c = radial_integral_m(3, 200.0, 1.001);
        REQUIRE(std::isfinite(b));
        // The spread is the slope of I_3 (about 5e-3 here), not a jump.
        CHECK(std::min(a, c) < b);
        CHECK(b < std::max(a, c));
        const double spread = std::max({std::abs(a - b), std::abs(b - c), std::abs(a - c)}) / std::abs(b);
        MESSAGE("I_3(kappa = 200) pairwise spread over tau in {0.999, 1, 1.001}: " << spread);
        for (double tau : {0.999, 1.0, 1.001})
            CHECK(2.0 / constants::pi * radial_integral_m(3, 200.0, tau) ==
                  doctest::Approx(kernel_term(3, {1.0, 200.0, tau, 2})).epsilon(1e-10));
    }

    TEST_CASE("I_m decays at least like m^-2")
    {
        const double i4 = std::abs(radial_integral_m(4, 50.0, 0.4));
        const double i8 = std::abs(radial_integral_m(8, 50.0, 0.4));
        const double i16 = std::abs(radial_integral_m(16, 50.0, 0.4));
        CHECK(std::log(i8 / i4) / std::log(2.0) <= -2.0);
        CHECK(std::log(i16 / i8) / std::log(2.0) <= -2.0);
    }

    TEST_CASE("m = 0 term")
    {
        CHECK(m0_term(100.0, 0.0) == 0.0);
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> uk(1.0, 1e3), ut(0.0, 3.0);
        for (int i = 0; i < 20; ++i)
        {
            const double kappa = uk(rng), tau = ut(rng);
            auto f = [tau](double q) {
                const double s = std::sin(q * tau / 2.0);
                return 4.0 / 3.0 * q * s * s;
            };
            const int panels = int(std::ceil(kappa * tau / (2.0 * constants::pi) * 8.0)) + 1;
            const auto quad = quadrature::integrate(f, 0.0, kappa, panels, 1e-13, 0.0, 1'000'000);
            CAPTURE(kappa);
            CAPTURE(tau);
            CHECK(m0_term(kappa, tau) == doctest::Approx(quad.value).epsilon(1e-10));
        }
        // kappa^2 / 3 growth
        const double s1 = m0_term(2e3, 0.7) - m0_term(1e3, 0.7);
        const double s2 = m0_term(4e3, 0.7) - m0_term(2e3, 0.7);
        CHECK(s1 / (3e6 / 3.0) == doctest::Approx(1.0).epsilon(1e-2));
        CHECK(s2 / (12e6 / 3.0) == doctest::Approx(1.0).epsilon(1e-2));
    }

    TEST_CASE("switching spectrum")
    {
        const double pi = constants::pi;
        CHECK(switching_spectrum(0.0, 2) == 0.0);
        CHECK(switching_spectrum(pi / 2.0, 2) == doctest::Approx(2.0).epsilon(1e-15));
        CHECK(switching_spectrum(pi / 4.0, 2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
        for (int n : {2, 4, 6, 10})
            for (double t = 0.01; t < 6.0; t += 0.037)
                if (std::abs(std::cos(t)) > 1e-6)
                    CHECK(switching_spectrum(t, n) == doctest::Approx(std::abs(std::sin(n * t) / std::cos(t))).epsilon(1e-9));
        for (double d : {1e-3, 1e-6, 0.0})
        {
            const double s = switching_ratio(pi / 2.0 + d, 4);
            CHECK(s * s <= 16.0 + 1e-6);
        }
        CHECK_THROWS_AS(switching_spectrum(0.3, 3), DomainError);
        CHECK_THROWS_AS(switching_spectrum(0.3, 0), DomainError);
    }

    TEST_CASE("general-N exponent")
    {
        QuadratureSpec q;
        q.abs_tol = 3e-12;
        const DimensionlessParams p{0.1, 50.0, 0.4, 2};
        const auto g2 = exponent_general_n(p, q);
        CHECK(g2.gamma == doctest::Approx(decoherence_kernel(p).gamma).epsilon(1e-6));

        // With the stopping threshold scaled by alpha^2 the sums are term-for-term
        // identical up to the prefactor.
        QuadratureSpec qa, qb;
        qa.abs_tol = 1e-8 * 0.1 * 0.1;
        qb.abs_tol = 1e-8 * 0.37 * 0.37;
        const auto ga = exponent_general_n({0.1, 50.0, 0.4, 2}, qa);
        const auto gb = exponent_general_n({0.37, 50.0, 0.4, 2}, qb);
        CHECK(ga.m_max == gb.m_max);
        CHECK(gb.gamma / (0.37 * 0.37) == doctest::Approx(ga.gamma / (0.1 * 0.1)).epsilon(1e-14));

        CHECK(exponent_general_n({0.1, 50.0, 0.0, 4}, q).gamma == 0.0);
        const auto g4 = exponent_general_n({0.1, 50.0, 0.4, 4}, q);
        CHECK(std::isfinite(g4.gamma));
        CHECK(g4.gamma > 0.0);
        CHECK_THROWS_AS(exponent_general_n({0.1, 50.0, 0.4, 3}), DomainError);
    }

    TEST_CASE("feasibility bound and validation")
    {
        CHECK_THROWS_AS(radial_integral_m(1, 1e7, 0.4), CapabilityError);
        CHECK_THROWS_AS(radial_integral_m(0, 50.0, 0.4), DomainError);
        CHECK_THROWS_AS(radial_integral_m(1, 50.0, -0.1), DomainError);
        QuadratureSpec bad;
        bad.panels_per_oscillation = 2;
        CHECK_THROWS_AS(radial_integral_m(1, 50.0, 0.4, bad), DomainError);
        QuadratureSpec impossible;
        impossible.rel_tol = 1e-18;
        impossible.abs_tol = 1e-300;
        impossible.max_subdivisions = 64;
        CHECK_THROWS_AS(radial_integral_m(2, 200.0, 1.3, impossible), NumericalError);
    }
}
