#pragma once

// Experimental feasibility estimates: laser grating field, induced dipole,
// coupling alpha, switching suddenness, competing image-charge decoherence.
// All inputs and outputs are SI.

#include "vdl/kernel.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vdl::feasibility
{
    struct MoleculeSpec
    {
        std::string name;
        double polarizability = 0.0; // C m^2 / V
        double size = 0.0;           // m
        double mass = 0.0;           // kg
        double velocity = 0.0;       // m/s, along the beam

        void validate() const;
    };

    struct LaserConfig
    {
        double power = 0.0;          // W
        double sigma_y = 0.0;        // m
        double sigma_z = 0.0;        // m
        double grating_period = 0.0; // m

        void validate() const;
        /// False when sigma_z is below the diffraction limit sigma_z ~ period.
        bool respects_diffraction_limit() const;
    };

    struct CavityConfig
    {
        double plate_separation = 0.0;                // m
        std::optional<double> cutoff_wavenumber;      // 1/m; defaults to 1/molecule size

        void validate() const;
        double kappa(const MoleculeSpec &molecule) const;
        double cutoff(const MoleculeSpec &molecule) const;
    };

    enum class TransitConvention
    {
        half_width, // T = sigma_z / v_z
        full_width, // T = 2 sigma_z / v_z
    };

    struct Verdict
    {
        std::string name;
        bool passed = false;
        std::string detail;
    };

    struct SuddennessCheck
    {
        double size_ratio = 0.0;     // a / L
        double velocity_ratio = 0.0; // v_z / c
        bool passed = false;
    };

    struct ImageChargeAssessment
    {
        double charge = 0.0;           // C
        double decoherence_time = 0.0; // s
        double time_ratio = 0.0;       // transit / decoherence_time
        bool passed = false;
    };

    struct FeasibilityOptions
    {
        double alpha_crit = 0.1;
        TransitConvention transit = TransitConvention::half_width;
        SeriesPolicy series{};
    };

    struct FeasibilityReport
    {
        double efield = 0.0;
        double dipole = 0.0;
        double alpha = 0.0;
        double kappa = 0.0;
        double tau = 0.0;
        double transit_time = 0.0;
        SuddennessCheck suddenness;
        double phase_amplitude = 0.0;
        double threshold_dipole = 0.0;
        double threshold_shortfall_orders = 0.0; // log10(threshold / dipole)
        ImageChargeAssessment image;
        double gamma = 0.0;
        double visibility_loss_proxy = 0.0; // 1 - D
        std::vector<Verdict> verdicts;

        bool all_passed() const;
    };

    /// Passing ratio for transit / image-decoherence time.
    inline constexpr double image_time_ratio_limit = 1e-2;

    /// A dipole within this many decades of the threshold counts as reaching it.
    inline constexpr double threshold_tolerance_orders = 1.0;

    /// I(x, y, z) = 8P / (pi sigma_z sigma_y) exp(-2y^2/sigma_y^2 - 2z^2/sigma_z^2) sin^2(pi x / l)
    double laser_intensity(double x, double y, double z, const LaserConfig &laser);

    /// Peak field amplitude sqrt(16 P / (pi sigma_z sigma_y eps0 c)).
    double efield_amplitude(const LaserConfig &laser);

    double induced_dipole(const MoleculeSpec &molecule, double efield);

    double alpha_from_dipole(double d_on, double d_off, const CavityConfig &cavity);

    /// alpha_crit L sqrt(4 pi eps0 hbar c)
    double dipole_threshold(double alpha_crit, const CavityConfig &cavity);

    /// phi_0 = 8 sqrt(2 pi) alpha_p / (hbar c) * P / (sigma_y v_z), independent of sigma_z.
    double grating_phase_amplitude(const MoleculeSpec &molecule, const LaserConfig &laser);

    /// phi_0 sin^2(pi x / l)
    double grating_phase(double x, const MoleculeSpec &molecule, const LaserConfig &laser);

    /// Sudden switching requires a / L <= v_z / c.
    SuddennessCheck suddenness_check(const MoleculeSpec &molecule, const CavityConfig &cavity);

    /// Image charge Q = d / L and the single-ion image-current decoherence
    /// time (1e4 L / m)^3 * 1e-5 s at distance L from the plates.
    ImageChargeAssessment image_charge_assessment(double dipole, const CavityConfig &cavity, double transit_time);

    double transit_time(const MoleculeSpec &molecule, const LaserConfig &laser, TransitConvention convention);

    FeasibilityReport full_report(const MoleculeSpec &molecule, const LaserConfig &laser, const CavityConfig &cavity,
                                  const FeasibilityOptions &options = {});
}
