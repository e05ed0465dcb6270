#include "vdl/cavityfield.hpp"

#include "vdl/constants.hpp"
#include "vdl/errors.hpp"
#include "vdl/modesum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace vdl::cavity
{
    namespace
    {
        double position_factor(Position position, int n)
        {
            switch (position)
            {
            case Position::center:
                // cos(n pi / 2), exactly
                if (n % 2 != 0)
                    return 0.0;
                return (n % 4 == 0) ? 1.0 : -1.0;
            case Position::left_plate:
                return 1.0;
            case Position::right_plate:
                return (n % 2 == 0) ? 1.0 : -1.0;
            }
            return 0.0;
        }

        bool is_plate(Position p) { return p != Position::center; }

        void check_switches(int n_switches)
        {
            if (n_switches < 2 || n_switches % 2 != 0)
                throw DomainError("number of switches must be even and >= 2, got " + std::to_string(n_switches));
        }

        // Real displacement with the common phase exp(-i phi) stripped off.
        double signed_amplitude(int n, double k_par, const DipoleProfile &profile, double duration, int n_switches,
                                double plate_separation)
        {
            using namespace constants;
            const double kn = double(n) * pi / plate_separation;
            const double omega = speed_of_light * std::sqrt(k_par * k_par + kn * kn);
            if (omega == 0.0)
                return 0.0;
            const double weight = (n == 0) ? 1.0 / std::sqrt(2.0) : 1.0;
            const double denom = 2.0 * pi * std::sqrt(omega * omega * omega * hbar * vacuum_permittivity * plate_separation);
            const double ratio = modesum::switching_ratio(0.5 * omega * duration, n_switches);
            return profile.dipole * weight * k_par * speed_of_light * position_factor(profile.position, n) / denom * ratio;
        }
    }

    void ModeGrid::validate() const
    {
        if (n_max < 1)
            throw DomainError("ModeGrid: n_max must be >= 1");
        if (k_par_points < 2)
            throw DomainError("ModeGrid: k_par_points must be >= 2");
        if (!(k_par_max > 0.0) || !std::isfinite(k_par_max))
            throw DomainError("ModeGrid: k_par_max must be finite and > 0");
        if (!(plate_separation > 0.0) || !std::isfinite(plate_separation))
            throw DomainError("ModeGrid: plate separation must be finite and > 0");
        if (!(k_max > 0.0) || !std::isfinite(k_max))
            throw DomainError("ModeGrid: cutoff k_max must be finite and > 0");
        if (k_par_max < k_max)
            throw DomainError("ModeGrid: k_par_max must cover the cutoff k_max");
    }

    ModeGrid ModeGrid::for_kappa(double kappa, double plate_separation, int n_max, int k_par_points)
    {
        ModeGrid g;
        g.n_max = n_max;
        g.k_par_points = k_par_points;
        g.plate_separation = plate_separation;
        g.k_max = kappa / plate_separation;
        g.k_par_max = g.k_max;
        g.validate();
        return g;
    }

    CoherentAmplitude amplitude(int n, double k_par, const DipoleProfile &profile, double duration, int n_switches,
                                const ModeGrid &grid)
    {
        grid.validate();
        check_switches(n_switches);
        if (n < 0 || n > grid.n_max)
            throw DomainError("amplitude: mode n = " + std::to_string(n) + " is not on the grid");
        if (!(k_par >= 0.0) || k_par > grid.k_par_max)
            throw DomainError("amplitude: k_par is outside the grid range");
        if (!std::isfinite(profile.dipole))
            throw DomainError("amplitude: dipole must be finite");
        if (!(duration >= 0.0) || !std::isfinite(duration))
            throw DomainError("amplitude: duration must be finite and >= 0");

        const double real = signed_amplitude(n, k_par, profile, duration, n_switches, grid.plate_separation);
        const double kn = double(n) * constants::pi / grid.plate_separation;
        const double omega = constants::speed_of_light * std::sqrt(k_par * k_par + kn * kn);

        double phase = constants::pi + double(n_switches + 1) * omega * duration / 2.0;
        if (real < 0.0)
            phase += constants::pi;
        phase = std::fmod(phase, 2.0 * constants::pi);

        CoherentAmplitude out;
        out.modulus = std::abs(real);
        out.phase = phase;
        out.n = n;
        out.k_par = k_par;
        return out;
    }

    double overlap_exponent(const DipoleProfile &a, const DipoleProfile &b, double duration, int n_switches,
                            const ModeGrid &grid)
    {
        grid.validate();
        check_switches(n_switches);
        if (is_plate(a.position) != is_plate(b.position))
            throw DomainError("overlap: profiles must both be at the center or both at the plates");
        if (!std::isfinite(a.dipole) || !std::isfinite(b.dipole))
            throw DomainError("overlap: dipoles must be finite");
        if (!(duration >= 0.0) || !std::isfinite(duration))
            throw DomainError("overlap: duration must be finite and >= 0");

        const double L = grid.plate_separation;
        double total = 0.0;
        for (int n = 0; n <= grid.n_max; ++n)
        {
            const double kn = double(n) * constants::pi / L;
            if (kn > grid.k_max)
                break;
            const double upper = std::min(std::sqrt(grid.k_max * grid.k_max - kn * kn), grid.k_par_max);

            // Uniform nodes strictly inside the cutoff, closed by one node on
            // the cutoff surface itself; trapezoid weights on that sequence.
            auto integrand = [&](double k) {
                const double diff = signed_amplitude(n, k, a, duration, n_switches, L) -
                                    signed_amplitude(n, k, b, duration, n_switches, L);
                return 2.0 * constants::pi * k * diff * diff;
            };
            double row = 0.0;
            double prev_k = 0.0;
            double prev_f = integrand(0.0);
            for (int j = 1; j < grid.k_par_points; ++j)
            {
                const double k = grid.k_par_at(j);
                if (k >= upper)
                    break;
                const double f = integrand(k);
                row += 0.5 * (k - prev_k) * (f + prev_f);
                prev_k = k;
                prev_f = f;
            }
            if (upper > prev_k)
                row += 0.5 * (upper - prev_k) * (integrand(upper) + prev_f);
            total += row;
        }
        return 0.5 * total;
    }

    double overlap(const DipoleProfile &a, const DipoleProfile &b, double duration, int n_switches,
                   const ModeGrid &grid)
    {
        return std::exp(-overlap_exponent(a, b, duration, n_switches, grid));
    }
}
