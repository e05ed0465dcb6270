#include "vdl/specfun.hpp"

#include "vdl/constants.hpp"
#include "vdl/errors.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <string>

namespace vdl::specfun
{
    void EvalAccuracy::validate() const
    {
        if (!(abs_tol > 0.0))
            throw DomainError("EvalAccuracy: abs_tol must be positive");
        if (max_terms < 1)
            throw DomainError("EvalAccuracy: max_terms must be >= 1");
    }

    namespace detail
    {
        double cin_series(double x, const EvalAccuracy &acc)
        {
            const double x2 = x * x;
            double power = 1.0; // x^{2k} / (2k)!
            double sum = 0.0;
            for (int k = 1; k <= acc.max_terms; ++k)
            {
                power *= x2 / ((2.0 * k - 1.0) * (2.0 * k));
                const double term = power / (2.0 * k);
                sum += (k % 2 == 1) ? term : -term;
                if (term < acc.abs_tol)
                    return sum;
            }
            throw NumericalError("cin: power series did not converge at x = " + std::to_string(x),
                                 sum, power);
        }

        Auxiliary auxiliary_fg(double x, const EvalAccuracy &acc)
        {
            // Modified Lentz evaluation of
            //   exp(z) E1(z) = 1/(z+1- 1/(z+3- 4/(z+5- ...))),  z = ix.
            constexpr double tiny = 1e-300;
            const double eps = std::numeric_limits<double>::epsilon();

            std::complex<double> b(1.0, x);
            std::complex<double> c(1.0 / tiny, 0.0);
            std::complex<double> d = 1.0 / b;
            std::complex<double> h = d;
            for (int i = 2; i <= acc.max_terms + 1; ++i)
            {
                const double a = -double(i - 1) * double(i - 1);
                b += 2.0;
                d = 1.0 / (a * d + b);
                c = b + a / c;
                const std::complex<double> del = c * d;
                h *= del;
                if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < eps)
                    return {-h.imag(), h.real()};
            }
            throw NumericalError("ci: continued fraction did not converge at x = " + std::to_string(x),
                                 h.real(), std::abs(h));
        }

        double ci_auxiliary(double x, const EvalAccuracy &acc)
        {
            const auto [f, g] = auxiliary_fg(x, acc);
            return f * std::sin(x) - g * std::cos(x);
        }
    }

    double cin(double x, const EvalAccuracy &acc)
    {
        if (!std::isfinite(x) || x < 0.0)
            throw DomainError("cin: argument must be finite and >= 0, got " + std::to_string(x));
        acc.validate();
        if (x == 0.0)
            return 0.0;
        if (x <= ci_branch_switch)
            return detail::cin_series(x, acc);
        return constants::euler_gamma + std::log(x) - detail::ci_auxiliary(x, acc);
    }

    double ci(double x, const EvalAccuracy &acc)
    {
        if (!std::isfinite(x) || x <= 0.0)
            throw DomainError("ci: argument must be finite and > 0, got " + std::to_string(x));
        acc.validate();
        if (x <= ci_branch_switch)
            return constants::euler_gamma + std::log(x) - detail::cin_series(x, acc);
        return detail::ci_auxiliary(x, acc);
    }

    double angular_kernel_j(double x)
    {
        if (!std::isfinite(x))
            throw DomainError("angular_kernel_j: non-finite argument");
        const double ax = std::abs(x);
        if (ax < j_taylor_switch)
        {
            const double x2 = x * x;
            return 4.0 / 3.0 + x2 * (-2.0 / 15.0 + x2 * (1.0 / 210.0 - x2 / 11340.0));
        }
        return 4.0 * (std::sin(ax) - ax * std::cos(ax)) / (ax * ax * ax);
    }

    double sin_of_product(double a, double b)
    {
        const double hi = a * b;
        const double lo = std::fma(a, b, -hi);
        return std::sin(hi) * std::cos(lo) + std::cos(hi) * std::sin(lo);
    }

    double sin_half_product_squared(double a, double b)
    {
        const double hi = a * b;
        const double lo = std::fma(a, b, -hi);
        const double s = std::sin(0.5 * hi) * std::cos(0.5 * lo) + std::cos(0.5 * hi) * std::sin(0.5 * lo);
        return s * s;
    }
}
