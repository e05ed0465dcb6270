#pragma once

// Brute-force quadrature of the mode-sum exponent in dimensionless variables
// (q = k L). Independent of the closed-form series in kernel.hpp and used to
// validate it:
//
//   Gamma = (alpha^2 / pi) * sum_{m != 0} int_0^kappa dq q (1/4) S_N(q tau / 2)^2 J(m q)
//
// with S_N(theta) = sin(N theta) / cos(theta). For N = 2 the integrand
// reduces to q sin^2(q tau / 2) J(m q).

#include "vdl/kernel.hpp"

#include <cstdint>

namespace vdl::modesum
{
    struct QuadratureSpec
    {
        double rel_tol = 1e-10;
        double abs_tol = 1e-14;
        std::int64_t max_subdivisions = 400'000;
        int panels_per_oscillation = 4;

        void validate() const;
    };

    /// Largest kappa * (fastest q-frequency) the oracle accepts.
    inline constexpr double oscillation_budget = 1e6;

    /// I_m = int_0^kappa dq q sin^2(q tau / 2) J(m q).
    double radial_integral_m(std::int64_t m, double kappa, double tau, const QuadratureSpec &q = {});

    /// The free-space term I_0 = (4/3) int_0^kappa dq q sin^2(q tau / 2), in
    /// closed form. Never part of any kernel.
    double m0_term(double kappa, double tau);

    /// Signed sin(N theta) / cos(theta) for even N via the finite expansion
    ///   2 sum_{j=0}^{N/2-1} (-1)^j sin((N - 1 - 2j) theta),
    /// which has no removable 0/0 at cos(theta) = 0.
    double switching_ratio(double theta, int n_switches);

    /// |sin(N theta) / cos(theta)|.
    double switching_spectrum(double theta, int n_switches);

    struct GeneralExponent
    {
        double gamma = 0.0;
        std::int64_t m_max = 0;
        double quadrature_error = 0.0;
    };

    /// Gamma for general even N by direct quadrature, summing m = +-1, +-2, ...
    /// until two consecutive |m| contributions fall below q.abs_tol.
    GeneralExponent exponent_general_n(const DimensionlessParams &p, const QuadratureSpec &q = {});
}
