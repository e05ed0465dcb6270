#pragma once

#include "vdl/kernel.hpp"
#include "vdl/modesum.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace vdl::cli
{
    struct GlobalOptions
    {
        std::optional<std::string> config_path;
        std::string out_path; // empty: stdout (or a default directory for figure2)
        int threads = 1;
        double tail_bound = SeriesPolicy{}.tail_bound;

        SeriesPolicy series_policy() const;
    };

    enum class SweepVariable
    {
        tau,
        alpha,
        kappa,
    };

    enum class SweepScale
    {
        linear,
        log,
    };

    struct SweepSpec
    {
        SweepVariable variable = SweepVariable::tau;
        double start = 0.0;
        double stop = 5.0;
        int points = 1001;
        SweepScale scale = SweepScale::linear;

        void validate() const;
        std::vector<double> values() const;
    };

    struct KernelSweepOptions
    {
        SweepSpec sweep;
        DimensionlessParams base{0.5, 1e8, 0.0, 2};
    };

    struct OracleCheckOptions
    {
        int m_max = 6;
        std::vector<double> kappas{50.0, 200.0, 1000.0};
        std::vector<double> taus{0.3, 0.9, 1.7, 2.5};
        double tolerance = 1e-6;
        double alpha = 0.1;
        modesum::QuadratureSpec quadrature{1e-10, 1e-16, 400'000, 4};
    };

    struct FeasibilityCliOptions
    {
        std::vector<std::pair<std::string, std::string>> overrides; // key, value
        double alpha_crit = 0.1;
    };

    struct Figure2Options
    {
        std::vector<double> alphas{0.1, 0.3, 0.5};
        double kappa = 1e8;
        double tau_max = 5.0;
        int points = 1001;
    };

    struct ModesDemoOptions
    {
        double kappa = 50.0;
        double tau = 0.4;
        double dipole = 1e-22;          // C m
        double plate_separation = 1e-3; // m
        std::vector<int> grids{50, 100, 200, 400};
        bool plates = false;
    };

    /// Largest kappa and grid size modes-demo accepts.
    inline constexpr double modes_demo_max_kappa = 100.0;
    inline constexpr int modes_demo_max_grid = 4096;

    int cmd_kernel_sweep(const GlobalOptions &g, const KernelSweepOptions &o, std::ostream &out, std::ostream &err);
    int cmd_oracle_check(const GlobalOptions &g, const OracleCheckOptions &o, std::ostream &out, std::ostream &err);
    int cmd_feasibility(const GlobalOptions &g, const FeasibilityCliOptions &o, std::ostream &out, std::ostream &err);
    int cmd_figure2(const GlobalOptions &g, const Figure2Options &o, std::ostream &out, std::ostream &err);
    int cmd_modes_demo(const GlobalOptions &g, const ModesDemoOptions &o, std::ostream &out, std::ostream &err);
}
