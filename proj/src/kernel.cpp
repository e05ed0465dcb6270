#include "vdl/kernel.hpp"

#include "vdl/constants.hpp"
#include "vdl/errors.hpp"
#include "vdl/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace vdl
{
    namespace
    {
        // Neumaier-compensated running sum.
        class CompensatedSum
        {
        public:
            void add(double x)
            {
                const double t = sum_ + x;
                if (std::abs(sum_) >= std::abs(x))
                    comp_ += (sum_ - t) + x;
                else
                    comp_ += (x - t) + sum_;
                sum_ = t;
            }
            double value() const { return sum_ + comp_; }

        private:
            double sum_ = 0.0;
            double comp_ = 0.0;
        };

        // ln|(a+b)/(a-b)| for a, b >= 0, a != b.
        double log_ratio(double a, double b)
        {
            const double lo = std::min(a, b);
            return std::log1p(2.0 * lo / std::abs(a - b));
        }

        // Upper bound on sum_{m > M} |Gamma_m| / alpha^2 for M + 1 > tau.
        double unit_tail_estimate(std::int64_t M, double kappa, double tau)
        {
            const double Md = double(M);
            const double gap = Md + 1.0 - tau;
            const double envelope = 2.0 * tau * tau / gap + 4.0 * tau / (kappa * gap) + 4.0 / kappa;
            return 2.0 / constants::pi * envelope / (2.0 * Md * Md);
        }

        bool is_integral(double x) { return std::floor(x) == x; }
    }

    void DimensionlessParams::validate() const
    {
        if (!std::isfinite(alpha) || alpha < 0.0)
            throw DomainError("alpha must be finite and >= 0");
        if (!std::isfinite(kappa) || kappa <= 0.0)
            throw DomainError("kappa must be finite and > 0");
        if (!std::isfinite(tau) || tau < 0.0)
            throw DomainError("tau must be finite and >= 0");
        if (n_switches < 2 || n_switches % 2 != 0)
            throw DomainError("n_switches must be even and >= 2, got " + std::to_string(n_switches));
    }

    void SeriesPolicy::validate() const
    {
        if (!(tail_bound > 0.0))
            throw DomainError("tail_bound must be > 0");
        if (min_terms < 0 || max_terms < 1)
            throw DomainError("invalid term limits");
        if (!(resonance_width >= 0.0))
            throw DomainError("resonance_width must be >= 0");
    }

    std::int64_t SeriesPolicy::effective_min_terms(double tau) const
    {
        return std::max<std::int64_t>(min_terms, std::int64_t(std::ceil(tau)) + 10);
    }

    double coupling_alpha(double delta_d, double plate_separation)
    {
        if (!(plate_separation > 0.0) || !std::isfinite(plate_separation))
            throw DomainError("plate separation must be finite and > 0");
        const double unit = std::sqrt(4.0 * constants::pi * constants::vacuum_permittivity * constants::hbar *
                                      constants::speed_of_light);
        return std::abs(delta_d) / (plate_separation * unit);
    }

    double dipole_for_alpha(double alpha, double plate_separation)
    {
        if (!(plate_separation > 0.0) || !std::isfinite(plate_separation))
            throw DomainError("plate separation must be finite and > 0");
        const double unit = std::sqrt(4.0 * constants::pi * constants::vacuum_permittivity * constants::hbar *
                                      constants::speed_of_light);
        return alpha * plate_separation * unit;
    }

    double kernel_term(std::int64_t m, const DimensionlessParams &p, const SeriesPolicy &policy)
    {
        if (m <= 0)
            throw DomainError("kernel_term: m must be >= 1, got " + std::to_string(m));
        p.validate();
        if (p.n_switches != 2)
            throw DomainError("kernel_term: closed form is only available for n_switches = 2");
        if (p.tau == 0.0 || p.alpha == 0.0)
            return 0.0;

        const double md = double(m);
        const double kappa = p.kappa;
        const double tau = p.tau;
        const double detuning = std::abs(md - tau);
        const double kd = kappa * detuning;
        const double ks = kappa * (md + tau);

        double bracket;
        if (detuning < policy.resonance_width || kd <= specfun::ci_branch_switch)
            bracket = std::log(ks) + constants::euler_gamma - specfun::cin(kd) - specfun::ci(ks);
        else
            bracket = log_ratio(md, tau) + specfun::ci(kd) - specfun::ci(ks);

        const double oscillatory = 4.0 * specfun::sin_half_product_squared(kappa, tau) * specfun::sin_of_product(md, kappa);
        const double pref = 2.0 * p.alpha * p.alpha / (md * md * md * constants::pi * kappa);
        const double value = pref * (kappa * tau * bracket - oscillatory);
        if (!std::isfinite(value))
            throw NumericalError("kernel_term: non-finite value at m = " + std::to_string(m), value,
                                 std::numeric_limits<double>::infinity());
        return value;
    }

    DecoherenceResult decoherence_kernel(const DimensionlessParams &p, const SeriesPolicy &policy)
    {
        p.validate();
        policy.validate();
        if (p.n_switches != 2)
            throw DomainError("decoherence_kernel: closed form is only available for n_switches = 2");

        const std::int64_t min_terms = policy.effective_min_terms(p.tau);
        if (min_terms > policy.max_terms)
            throw DomainError("decoherence_kernel: max_terms is below the mandatory minimum " +
                              std::to_string(min_terms));

        // The series is summed at alpha = 1 and scaled afterwards, so the
        // number of terms does not depend on alpha for alpha <= 1 and
        // Gamma(c alpha) = c^2 Gamma(alpha) holds to rounding there.
        DimensionlessParams unit = p;
        unit.alpha = 1.0;
        const double a2 = p.alpha * p.alpha;
        const double tail_weight = std::max(a2, 1.0);

        DecoherenceResult result;
        CompensatedSum sum;
        double tail = std::numeric_limits<double>::infinity();
        for (std::int64_t m = 1; m <= policy.max_terms; ++m)
        {
            const double term = kernel_term(m, unit, policy);
            sum.add(term);
            result.per_term.push_back({m, a2 * term});
            result.terms_used = m;
            if (m >= min_terms)
            {
                tail = tail_weight * unit_tail_estimate(m, p.kappa, p.tau);
                if (tail < policy.tail_bound)
                    break;
            }
        }
        result.gamma = a2 * sum.value();
        result.truncation_estimate = a2 * tail / tail_weight;
        if (!(tail < policy.tail_bound))
            throw NumericalError("decoherence_kernel: tail bound not reached within " +
                                     std::to_string(policy.max_terms) + " terms",
                                 result.gamma, result.truncation_estimate);
        result.kernel = std::exp(-result.gamma);
        return result;
    }

    DecoherenceResult kernel_no_cutoff_tau(double alpha, double tau, std::int64_t max_terms)
    {
        if (!std::isfinite(alpha) || alpha < 0.0)
            throw DomainError("alpha must be finite and >= 0");
        if (!std::isfinite(tau) || tau < 0.0)
            throw DomainError("tau must be finite and >= 0");
        if (max_terms < 1)
            throw DomainError("max_terms must be >= 1");
        if (tau > 0.0 && is_integral(tau) && tau <= double(max_terms))
            throw DomainError("kernel_no_cutoff: tau = " + std::to_string(tau) +
                              " is integral; the series diverges without a cutoff");

        DecoherenceResult result;
        if (tau == 0.0 || alpha == 0.0)
            return result;

        const double pref = 2.0 * alpha * alpha * tau / constants::pi;
        const double eps = std::numeric_limits<double>::epsilon();
        CompensatedSum sum;
        double tail = 0.0;
        for (std::int64_t m = 1; m <= max_terms; ++m)
        {
            const double md = double(m);
            const double term = pref / (md * md * md) * log_ratio(md, tau);
            sum.add(term);
            result.per_term.push_back({m, term});
            result.terms_used = m;
            if (md > tau)
            {
                // sum_{j>m} pref/j^3 * 2 tau/(j - tau)
                tail = pref * 2.0 * tau / (md + 1.0 - tau) / (2.0 * md * md);
                if (tail <= eps * sum.value())
                    break;
            }
            else
            {
                tail = std::numeric_limits<double>::infinity();
            }
        }
        result.gamma = sum.value();
        result.truncation_estimate = tail;
        result.kernel = std::exp(-result.gamma);
        return result;
    }

    DecoherenceResult kernel_no_cutoff(double alpha, double plate_separation, double duration, std::int64_t max_terms)
    {
        if (!(plate_separation > 0.0) || !std::isfinite(plate_separation))
            throw DomainError("plate separation must be finite and > 0");
        if (!(duration >= 0.0) || !std::isfinite(duration))
            throw DomainError("duration must be finite and >= 0");
        return kernel_no_cutoff_tau(alpha, constants::speed_of_light * duration / plate_separation, max_terms);
    }

    DecoherenceResult kernel_at_plates(double d_left, double d_right, double plate_separation, double kappa, double tau,
                                       const SeriesPolicy &policy)
    {
        if (!std::isfinite(d_left) || !std::isfinite(d_right))
            throw DomainError("kernel_at_plates: dipoles must be finite");
        if (std::abs(d_left + d_right) > 1e-9 * std::abs(d_right - d_left))
            throw PreconditionError("kernel_at_plates: closed form requires d_left = -d_right");
        DimensionlessParams p;
        p.alpha = coupling_alpha(d_right - d_left, plate_separation);
        p.kappa = kappa;
        p.tau = tau;
        return decoherence_kernel(p, policy);
    }
}
