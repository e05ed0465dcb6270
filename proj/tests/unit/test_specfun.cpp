#include "support/oracles.hpp"

#include "vdl/constants.hpp"
#include "vdl/errors.hpp"
#include "vdl/specfun.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace vdl::specfun;

TEST_SUITE("specfun")
{
    TEST_CASE("cin at zero and one")
    {
        CHECK(cin(0.0) == 0.0);
        CHECK(std::abs(cin(1.0) - oracle::cin_1) <= 1e-15);
        CHECK(std::abs(cin(1.0) - double(oracle::cin_series(1.0L))) <= 1e-15);
    }

    TEST_CASE("ci matches extended-precision values")
    {
        CHECK(std::abs(ci(1.0) - oracle::ci_1) <= 1e-15);
        for (const auto &p : oracle::ci_table)
        {
            CAPTURE(p.x);
            const double got = ci(p.x);
            CHECK(std::abs(got - p.ci) <= std::max(1e-12, 1e-10 * std::abs(p.ci)));
        }
    }

    TEST_CASE("cin at large argument")
    {
        const double x = 1e6;
        const double c = ci(x);
        CHECK(std::abs(c) <= 2.0 / x);
        CHECK(cin(x) == doctest::Approx(vdl::constants::euler_gamma + std::log(x) - c).epsilon(1e-15));
    }

    TEST_CASE("series and auxiliary branches agree where both are accurate")
    {
        const EvalAccuracy acc{};
        for (double x = 1.0; x <= 8.0; x += 0.0625)
        {
            CAPTURE(x);
            const double from_aux = vdl::constants::euler_gamma + std::log(x) - detail::ci_auxiliary(x, acc);
            CHECK(std::abs(detail::cin_series(x, acc) - from_aux) <= 1e-13);
        }
    }

    TEST_CASE("Ci = gamma + ln x - Cin across both branches")
    {
        double worst = 0.0;
        for (int i = 0; i <= 2000; ++i)
        {
            const double x = std::pow(10.0, -6.0 + 10.0 * i / 2000.0);
            const double lhs = ci(x);
            const double rhs = vdl::constants::euler_gamma + std::log(x) - cin(x);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        CHECK(worst <= 1e-10);
        // straddling the switch point
        for (double x : {4.0 - 1e-12, 4.0, 4.0 + 1e-12})
            CHECK(std::abs(ci(x) - double(oracle::ci_series(x))) <= 1e-12);
    }

    TEST_CASE("Ci small-argument limit and large-argument envelope")
    {
        CHECK(ci(1e-8) - std::log(1e-8) == doctest::Approx(vdl::constants::euler_gamma).epsilon(1e-12));
        for (double x = 10.0; x <= 1e4; x *= 1.07)
            CHECK(std::abs(ci(x)) <= 2.0 / x);
    }

    TEST_CASE("cin is nondecreasing on [0, pi]")
    {
        double prev = cin(0.0);
        for (int i = 1; i <= 1000; ++i)
        {
            const double v = cin(vdl::constants::pi * i / 1000.0);
            CHECK(v >= prev);
            prev = v;
        }
    }

    TEST_CASE("angular kernel J")
    {
        CHECK(angular_kernel_j(0.0) == doctest::Approx(4.0 / 3.0).epsilon(1e-16));
        CHECK(angular_kernel_j(vdl::constants::pi) == doctest::Approx(oracle::j_pi).epsilon(1e-15));
        for (double x : {0.1, 1.0, 10.0})
            CHECK(angular_kernel_j(-x) == angular_kernel_j(x));

        // both sides of the Taylor switch; the closed form loses about
        // eps / x^2 there to cancellation
        const double s = j_taylor_switch;
        CHECK(angular_kernel_j(std::nextafter(s, 0.0)) == doctest::Approx(angular_kernel_j(s)).epsilon(1e-10));

        double worst = 0.0;
        for (double x = s; x <= 1e3; x *= 1.01)
        {
            const double j = angular_kernel_j(x);
            worst = std::max(worst, std::abs(j * x * x * x / 4.0 + x * std::cos(x) - std::sin(x)));
        }
        CHECK(worst <= 1e-12);
    }

    TEST_CASE("trig of large products")
    {
        CHECK(std::abs(sin_of_product(1e6, 1e8) - oracle::sin_1e14) <= 1e-10);
        CHECK(std::abs(sin_half_product_squared(1e6, 1e8) - oracle::sin2_half_1e14) <= 1e-10);
        CHECK(std::abs(sin_of_product(12345678.0, 1e8) - 0.4678717739688368009) <= 1e-10);
        CHECK(sin_of_product(0.5, 0.25) == doctest::Approx(std::sin(0.125)).epsilon(1e-16));
    }

    TEST_CASE("domain errors")
    {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        const double inf = std::numeric_limits<double>::infinity();
        CHECK_THROWS_AS(cin(-1.0), vdl::DomainError);
        CHECK_THROWS_AS(cin(nan), vdl::DomainError);
        CHECK_THROWS_AS(cin(inf), vdl::DomainError);
        CHECK_THROWS_AS(ci(0.0), vdl::DomainError);
        CHECK_THROWS_AS(ci(-2.0), vdl::DomainError);
        CHECK_THROWS_AS(angular_kernel_j(inf), vdl::DomainError);
        CHECK_THROWS_AS((EvalAccuracy{0.0, 10}.validate()), vdl::DomainError);
        CHECK_THROWS_AS((EvalAccuracy{1e-17, 0}.validate()), vdl::DomainError);
    }
}
