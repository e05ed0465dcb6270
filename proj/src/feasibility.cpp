#include "vdl/feasibility.hpp"

#include "vdl/constants.hpp"
#include "vdl/errors.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace vdl::feasibility
{
    using namespace constants;

    namespace
    {
        void require_positive(double v, const char *what)
        {
            if (!(v > 0.0) || !std::isfinite(v))
                throw DomainError(std::string(what) + " must be finite and > 0");
        }

        std::string fmt(double v)
        {
            std::ostringstream os;
            os.precision(3);
            os << v;
            return os.str();
        }
    }

    void MoleculeSpec::validate() const
    {
        require_positive(polarizability, "molecule polarizability");
        require_positive(size, "molecule size");
        require_positive(mass, "molecule mass");
        require_positive(velocity, "molecule velocity");
    }

    void LaserConfig::validate() const
    {
        if (!(power >= 0.0) || !std::isfinite(power))
            throw DomainError("laser power must be finite and >= 0");
        require_positive(sigma_y, "laser sigma_y");
        require_positive(sigma_z, "laser sigma_z");
        require_positive(grating_period, "laser grating period");
    }

    bool LaserConfig::respects_diffraction_limit() const
    {
        return sigma_z >= grating_period * (1.0 - 1e-12);
    }

    void CavityConfig::validate() const
    {
        require_positive(plate_separation, "cavity plate separation");
        if (cutoff_wavenumber)
            require_positive(*cutoff_wavenumber, "cavity cutoff wavenumber");
    }

    double CavityConfig::cutoff(const MoleculeSpec &molecule) const
    {
        return cutoff_wavenumber ? *cutoff_wavenumber : 1.0 / molecule.size;
    }

    double CavityConfig::kappa(const MoleculeSpec &molecule) const
    {
        return cutoff(molecule) * plate_separation;
    }

    bool FeasibilityReport::all_passed() const
    {
        for (const auto &v : verdicts)
            if (!v.passed)
                return false;
        return true;
    }

    double laser_intensity(double x, double y, double z, const LaserConfig &laser)
    {
        laser.validate();
        const double peak = 8.0 * laser.power / (pi * laser.sigma_z * laser.sigma_y);
        const double s = std::sin(pi * x / laser.grating_period);
        const double gy = y / laser.sigma_y;
        const double gz = z / laser.sigma_z;
        return peak * std::exp(-2.0 * gy * gy - 2.0 * gz * gz) * s * s;
    }

    double efield_amplitude(const LaserConfig &laser)
    {
        laser.validate();
        return std::sqrt(16.0 * laser.power /
                         (pi * laser.sigma_z * laser.sigma_y * vacuum_permittivity * speed_of_light));
    }

    double induced_dipole(const MoleculeSpec &molecule, double efield)
    {
        if (!(efield >= 0.0) || !std::isfinite(efield))
            throw DomainError("field amplitude must be finite and >= 0");
        require_positive(molecule.polarizability, "molecule polarizability");
        return molecule.polarizability * efield;
    }

    double alpha_from_dipole(double d_on, double d_off, const CavityConfig &cavity)
    {
        cavity.validate();
        return coupling_alpha(d_on - d_off, cavity.plate_separation);
    }

    double dipole_threshold(double alpha_crit, const CavityConfig &cavity)
    {
        if (!(alpha_crit >= 0.0) || !std::isfinite(alpha_crit))
            throw DomainError("alpha_crit must be finite and >= 0");
        cavity.validate();
        return dipole_for_alpha(alpha_crit, cavity.plate_separation);
    }

    double grating_phase_amplitude(const MoleculeSpec &molecule, const LaserConfig &laser)
    {
        laser.validate();
        require_positive(molecule.polarizability, "molecule polarizability");
        require_positive(molecule.velocity, "molecule velocity");
        return 8.0 * std::sqrt(2.0 * pi) * molecule.polarizability / (hbar * speed_of_light) * laser.power /
               (laser.sigma_y * molecule.velocity);
    }

    double grating_phase(double x, const MoleculeSpec &molecule, const LaserConfig &laser)
    {
        const double s = std::sin(pi * x / laser.grating_period);
        return grating_phase_amplitude(molecule, laser) * s * s;
    }

    SuddennessCheck suddenness_check(const MoleculeSpec &molecule, const CavityConfig &cavity)
    {
        cavity.validate();
        if (!(molecule.size >= 0.0))
            throw DomainError("molecule size must be >= 0");
        require_positive(molecule.velocity, "molecule velocity");
        SuddennessCheck out;
        out.size_ratio = molecule.size / cavity.plate_separation;
        out.velocity_ratio = molecule.velocity / speed_of_light;
        // the boundary a/L = v_z/c counts as sudden
        out.passed = out.size_ratio <= out.velocity_ratio * (1.0 + 1e-12);
        return out;
    }

    ImageChargeAssessment image_charge_assessment(double dipole, const CavityConfig &cavity, double transit)
    {
        cavity.validate();
        if (!std::isfinite(dipole))
            throw DomainError("dipole must be finite");
        if (!(transit >= 0.0) || !std::isfinite(transit))
            throw DomainError("transit time must be finite and >= 0");
        ImageChargeAssessment out;
        out.charge = std::abs(dipole) / cavity.plate_separation;
        const double scaled = 1e4 * cavity.plate_separation;
        out.decoherence_time = scaled * scaled * scaled * 1e-5;
        out.time_ratio = transit / out.decoherence_time;
        out.passed = out.time_ratio <= image_time_ratio_limit;
        return out;
    }

    double transit_time(const MoleculeSpec &molecule, const LaserConfig &laser, TransitConvention convention)
    {
        require_positive(molecule.velocity, "molecule velocity");
        laser.validate();
        const double half = laser.sigma_z / molecule.velocity;
        return convention == TransitConvention::half_width ? half : 2.0 * half;
    }

    FeasibilityReport full_report(const MoleculeSpec &molecule, const LaserConfig &laser, const CavityConfig &cavity,
                                  const FeasibilityOptions &options)
    {
        molecule.validate();
        laser.validate();
        cavity.validate();

        FeasibilityReport r;
        r.efield = efield_amplitude(laser);
        r.dipole = induced_dipole(molecule, r.efield);
        // switched-off arm carries no dipole
        r.alpha = alpha_from_dipole(r.dipole, 0.0, cavity);
        r.kappa = cavity.kappa(molecule);
        r.transit_time = transit_time(molecule, laser, options.transit);
        r.tau = speed_of_light * r.transit_time / cavity.plate_separation;
        r.suddenness = suddenness_check(molecule, cavity);
        r.phase_amplitude = grating_phase_amplitude(molecule, laser);
        r.threshold_dipole = dipole_threshold(options.alpha_crit, cavity);
        r.threshold_shortfall_orders = r.dipole > 0.0 ? std::log10(r.threshold_dipole / r.dipole)
                                                      : std::numeric_limits<double>::infinity();
        r.image = image_charge_assessment(r.dipole, cavity, r.transit_time);

        DimensionlessParams p;
        p.alpha = r.alpha;
        p.kappa = r.kappa;
        p.tau = r.tau;
        const DecoherenceResult kernel = decoherence_kernel(p, options.series);
        r.gamma = kernel.gamma;
        r.visibility_loss_proxy = -std::expm1(-kernel.gamma);

        r.verdicts.push_back({"sudden_switching", r.suddenness.passed,
                              "a/L = " + fmt(r.suddenness.size_ratio) + " vs v_z/c = " + fmt(r.suddenness.velocity_ratio)});
        r.verdicts.push_back({"diffraction_limit", laser.respects_diffraction_limit(),
                              "sigma_z = " + fmt(laser.sigma_z) + " m vs period = " + fmt(laser.grating_period) + " m"});
        r.verdicts.push_back({"dipole_threshold", r.threshold_shortfall_orders < threshold_tolerance_orders,
                              "|d| = " + fmt(r.dipole) + " C m vs threshold " + fmt(r.threshold_dipole) +
                                  " C m (shortfall " + fmt(r.threshold_shortfall_orders) + " decades)"});
        r.verdicts.push_back({"image_charge", r.image.passed,
                              "T / tau_d = " + fmt(r.image.time_ratio) + ", Q = " +
                                  fmt(r.image.charge / elementary_charge) + " e"});
        return r;
    }
}
