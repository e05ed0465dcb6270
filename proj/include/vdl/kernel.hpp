#pragma once

#include <cstdint>
#include <vector>

namespace vdl
{
    /// The dimensionless triple that fixes the kernel, plus the number of
    /// switching events (on/off pairs; the closed form needs exactly two).
    struct DimensionlessParams
    {
        double alpha = 0.0; // |delta d| / (L sqrt(4 pi eps0 hbar c))
        double kappa = 1e8; // k_max * L
        double tau = 0.0;   // c T / L
        int n_switches = 2;

        void validate() const;
    };

    /// Truncation controls for the m-sum.
    struct SeriesPolicy
    {
        double tail_bound = 1e-12;
        std::int64_t min_terms = 0; // raised to ceil(tau) + 10 at evaluation time
        std::int64_t max_terms = 1'000'000;
        double resonance_width = 1e-3;

        void validate() const;
        std::int64_t effective_min_terms(double tau) const;
    };

    struct TermContribution
    {
        std::int64_t m;
        double value;
    };

    struct DecoherenceResult
    {
        double gamma = 0.0;
        double kernel = 1.0; // exp(-gamma)
        std::int64_t terms_used = 0;
        std::vector<TermContribution> per_term;
        double truncation_estimate = 0.0;
    };

    /// alpha for a dipole difference delta_d (C m) across plates separated by L (m).
    double coupling_alpha(double delta_d, double plate_separation);

    /// Dipole difference that yields coupling alpha at plate separation L.
    double dipole_for_alpha(double alpha, double plate_separation);

    /// m-th summand Gamma_m of the kernel exponent with UV cutoff kappa:
    ///
    ///   Gamma_m = 2 alpha^2 / (m^3 pi kappa) * ( kappa tau B_m - 4 sin^2(kappa tau / 2) sin(m kappa) ),
    ///   B_m     = ln|(m+tau)/(m-tau)| + Ci(kappa|m-tau|) - Ci(kappa(m+tau))
    ///           = ln(kappa(m+tau)) + gamma_E - Cin(kappa|m-tau|) - Ci(kappa(m+tau)).
    ///
    /// The second form of B_m is finite at tau = m and is used whenever
    /// |m - tau| < policy.resonance_width or kappa|m - tau| is in the series
    /// range of Cin; otherwise the logarithmic form is used.
    double kernel_term(std::int64_t m, const DimensionlessParams &p, const SeriesPolicy &policy = {});

    /// Gamma = sum_{m>=1} Gamma_m and D = exp(-Gamma). The free-space m = 0
    /// contribution is never included. Truncation is decided on the alpha = 1
    /// series (times max(alpha^2, 1)), so for alpha <= 1 the term count is
    /// alpha-independent. Throws NumericalError if the tail bound is not
    /// reached within policy.max_terms.
    DecoherenceResult decoherence_kernel(const DimensionlessParams &p, const SeriesPolicy &policy = {});

    /// Kernel without a UV cutoff:
    ///   Gamma = sum_m 2 alpha^2 tau / (pi m^3) ln|(m+tau)/(m-tau)|.
    /// Diverges at integer tau, which is rejected with DomainError.
    DecoherenceResult kernel_no_cutoff_tau(double alpha, double tau, std::int64_t max_terms = 1'000'000);

    /// Same, from plate separation L (m) and switched-on duration T (s).
    DecoherenceResult kernel_no_cutoff(double alpha, double plate_separation, double duration,
                                       std::int64_t max_terms = 1'000'000);

    /// Kernel for a superposition of the two plate positions x = -L/2 and
    /// x = +L/2, valid for the antisymmetric profile d_left = -d_right only.
    DecoherenceResult kernel_at_plates(double d_left, double d_right, double plate_separation, double kappa,
                                       double tau, const SeriesPolicy &policy = {});
}
