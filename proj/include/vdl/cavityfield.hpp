#pragma once

// Discrete-mode simulator for the field between two conducting plates at
// x = -L/2 and x = +L/2. Each cavity mode (n, k_par) of the a_2 polarization
// is displaced into a coherent state by the switched dipole; the decoherence
// kernel is the product of single-mode coherent-state overlaps.

#include <complex>
#include <cstdint>

namespace vdl::cavity
{
    /// Integer modes n = 0..n_max times a uniform |k_par| grid on
    /// [0, k_par_max]. Modes with k_par^2 + (n pi / L)^2 > k_max^2 are outside
    /// the spherical cutoff and excluded.
    struct ModeGrid
    {
        int n_max = 1;
        double k_par_max = 0.0;  // 1/m
        int k_par_points = 2;
        double plate_separation = 0.0; // m
        double k_max = 0.0;      // spherical cutoff, 1/m

        void validate() const;
        double k_par_step() const { return k_par_max / double(k_par_points - 1); }
        double k_par_at(int j) const { return k_par_step() * double(j); }

        /// Grid whose k_par range and cutoff both correspond to kappa = k_max L.
        static ModeGrid for_kappa(double kappa, double plate_separation, int n_max, int k_par_points);
    };

    enum class Position
    {
        center,
        left_plate,
        right_plate,
    };

    struct DipoleProfile
    {
        Position position = Position::center;
        double dipole = 0.0; // C m, x component while switched on
    };

    struct CoherentAmplitude
    {
        double modulus = 0.0;
        double phase = 0.0; // radians, in [0, 2 pi)
        int n = 0;
        double k_par = 0.0;

        std::complex<double> value() const { return std::polar(modulus, phase); }
    };

    /// Displacement of mode (n, k_par) after N switching events of duration T:
    ///
    ///   alpha = d f(n) k_par c P_n / (2 pi sqrt(omega^3 hbar eps0 L))
    ///           * sin(N omega T / 2) / cos(omega T / 2) * exp(-i phi),
    ///   phi   = pi + (N + 1) omega T / 2,
    ///
    /// with f(0) = 1/sqrt(2), f(n > 0) = 1 and the position factor P_n equal
    /// to cos(n pi / 2) at the center, 1 at x = -L/2 and (-1)^n at x = +L/2.
    CoherentAmplitude amplitude(int n, double k_par, const DipoleProfile &profile, double duration, int n_switches,
                                const ModeGrid &grid);

    /// -ln <alpha_b | alpha_a>| summed over the grid:
    ///   (1/2) sum_n sum_j w_j 2 pi k_j |alpha_a - alpha_b|^2.
    double overlap_exponent(const DipoleProfile &a, const DipoleProfile &b, double duration, int n_switches,
                            const ModeGrid &grid);

    /// |D_grid| = exp(-overlap_exponent).
    double overlap(const DipoleProfile &a, const DipoleProfile &b, double duration, int n_switches,
                   const ModeGrid &grid);
}
