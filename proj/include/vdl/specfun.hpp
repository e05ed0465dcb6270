#pragma once

// Special functions for the decoherence kernel series: the cosine integral Ci,
// its entire companion Cin, and the angular kernel J produced by integrating
// (1 - u^2) exp(i x u) over u in [-1, 1].

namespace vdl::specfun
{
    /// Series/continued-fraction controls shared by Ci and Cin.
    struct EvalAccuracy
    {
        double abs_tol = 1e-17;
        int max_terms = 200;

        void validate() const;
    };

    /// Ci/Cin evaluate the power series below this argument and the
    /// auxiliary-function form above it.
    inline constexpr double ci_branch_switch = 4.0;

    /// J uses its Taylor expansion for |x| below this threshold.
    inline constexpr double j_taylor_switch = 1e-2;

    /// Cin(x) = sum_{k>=1} (-1)^{k+1} x^{2k} / (2k (2k)!), entire, Cin(0) = 0.
    /// Throws DomainError for negative or non-finite x.
    double cin(double x, const EvalAccuracy &acc = {});

    /// Cosine integral Ci(x) = gamma + ln x - Cin(x) for x > 0.
    double ci(double x, const EvalAccuracy &acc = {});

    /// J(x) = 4 (sin x - x cos x) / x^3, with J(0) = 4/3.
    double angular_kernel_j(double x);

    /// sin(a*b) using the exact double-double product, so large products such
    /// as m*kappa = 1e14 keep their low-order bits through argument reduction.
    double sin_of_product(double a, double b);

    /// sin^2(a*b/2), again evaluated from the exact product.
    double sin_half_product_squared(double a, double b);

    namespace detail
    {
        // Branch kernels, exposed for cross-branch tests.
        double cin_series(double x, const EvalAccuracy &acc);

        // Auxiliary functions f, g of the cosine/sine integrals, from the
        // continued fraction of exp(ix) E1(ix) = g(x) - i f(x). Valid for x >= 1.
        struct Auxiliary
        {
            double f;
            double g;
        };
        Auxiliary auxiliary_fg(double x, const EvalAccuracy &acc);

        double ci_auxiliary(double x, const EvalAccuracy &acc);
    }
}
