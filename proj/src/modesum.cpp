#include "vdl/modesum.hpp"

#include "vdl/constants.hpp"
#include "vdl/errors.hpp"
#include "vdl/quadrature.hpp"
#include "vdl/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace vdl::modesum
{
    namespace
    {
        void check_even(int n_switches)
        {
            if (n_switches < 2 || n_switches % 2 != 0)
                throw DomainError("number of switches must be even and >= 2 (the dipole must vanish after the "
                                  "last switch), got " +
                                  std::to_string(n_switches));
        }

        void check_budget(double kappa, double frequency)
        {
            if (kappa * frequency > oscillation_budget)
                throw CapabilityError("mode-sum quadrature: kappa * max(m, tau) = " + std::to_string(kappa * frequency) +
                                      " exceeds the oscillatory budget " + std::to_string(oscillation_budget) +
                                      "; use the closed-form kernel instead");
        }

        std::size_t initial_panels(double kappa, double frequency, int per_oscillation)
        {
            const double oscillations = kappa * frequency / (2.0 * constants::pi);
            return std::size_t(std::ceil(std::max(1.0, oscillations * per_oscillation)));
        }

        template <class Func>
        quadrature::Estimate integrate_q(const Func &f, double kappa, double frequency, const QuadratureSpec &q)
        {
            return quadrature::integrate(f, 0.0, kappa, initial_panels(kappa, frequency, q.panels_per_oscillation),
                                         q.rel_tol, q.abs_tol, std::size_t(q.max_subdivisions));
        }
    }

    void QuadratureSpec::validate() const
    {
        if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
            throw DomainError("QuadratureSpec: tolerances must be > 0");
        if (max_subdivisions < 1)
            throw DomainError("QuadratureSpec: max_subdivisions must be >= 1");
        if (panels_per_oscillation < 4)
            throw DomainError("QuadratureSpec: panels_per_oscillation must be >= 4");
    }

    double radial_integral_m(std::int64_t m, double kappa, double tau, const QuadratureSpec &q)
    {
        if (m < 1)
            throw DomainError("radial_integral_m: m must be >= 1");
        if (!(kappa > 0.0) || !std::isfinite(kappa))
            throw DomainError("radial_integral_m: kappa must be finite and > 0");
        if (!(tau >= 0.0) || !std::isfinite(tau))
            throw DomainError("radial_integral_m: tau must be finite and >= 0");
        q.validate();
        const double md = double(m);
        const double frequency = std::max(md, tau);
        check_budget(kappa, frequency);
        if (tau == 0.0)
            return 0.0;

        auto integrand = [md, tau](double x) {
            const double s = std::sin(0.5 * x * tau);
            return x * s * s * specfun::angular_kernel_j(md * x);
        };
        return integrate_q(integrand, kappa, frequency, q).value;
    }

    double m0_term(double kappa, double tau)
    {
        if (!(kappa > 0.0) || !std::isfinite(kappa))
            throw DomainError("m0_term: kappa must be finite and > 0");
        if (!(tau >= 0.0) || !std::isfinite(tau))
            throw DomainError("m0_term: tau must be finite and >= 0");
        if (tau == 0.0)
            return 0.0;

        // (4/3) * kappa^2 / (2 x^2) * g(x), x = kappa tau,
        // g(x) = x^2/2 + 1 - cos x - x sin x = sum_{k>=2} (-1)^k (2k-1) x^{2k} / (2k)!
        const double x = kappa * tau;
        double g;
        if (x < 1.0)
        {
            const double x2 = x * x;
            double power = x2 / 2.0; // x^{2k} / (2k)! at k = 1
            g = 0.0;
            for (int k = 2; k < 40; ++k)
            {
                power *= x2 / ((2.0 * k - 1.0) * (2.0 * k));
                const double term = (2.0 * k - 1.0) * power;
                g += (k % 2 == 0) ? term : -term;
                if (term < 1e-18 * std::abs(g))
                    break;
            }
        }
        else
        {
            g = 0.5 * x * x + 1.0 - std::cos(x) - x * std::sin(x);
        }
        return (4.0 / 3.0) * kappa * kappa / (2.0 * x * x) * g;
    }

    double switching_ratio(double theta, int n_switches)
    {
        check_even(n_switches);
        double sum = 0.0;
        for (int j = 0; j < n_switches / 2; ++j)
        {
            const double term = std::sin(double(n_switches - 1 - 2 * j) * theta);
            sum += (j % 2 == 0) ? term : -term;
        }
        return 2.0 * sum;
    }

    double switching_spectrum(double theta, int n_switches)
    {
        return std::abs(switching_ratio(theta, n_switches));
    }

    GeneralExponent exponent_general_n(const DimensionlessParams &p, const QuadratureSpec &q)
    {
        p.validate();
        check_even(p.n_switches);
        q.validate();

        GeneralExponent out;
        if (p.alpha == 0.0 || p.tau == 0.0)
            return out;

        const int n = p.n_switches;
        const double tau = p.tau;
        const double prefactor = 2.0 * p.alpha * p.alpha / constants::pi; // m and -m together
        int small_in_a_row = 0;
        for (std::int64_t m = 1;; ++m)
        {
            const double md = double(m);
            const double frequency = std::max(md, double(n - 1) * tau);
            check_budget(p.kappa, frequency);
            auto integrand = [md, tau, n](double x) {
                const double s = switching_ratio(0.5 * x * tau, n);
                return 0.25 * x * s * s * specfun::angular_kernel_j(md * x);
            };
            const auto est = integrate_q(integrand, p.kappa, frequency, q);
            const double contribution = prefactor * est.value;
            out.gamma += contribution;
            out.quadrature_error += prefactor * est.error;
            out.m_max = m;
            small_in_a_row = std::abs(contribution) < q.abs_tol ? small_in_a_row + 1 : 0;
            if (small_in_a_row == 2)
                break;
        }
        return out;
    }
}
