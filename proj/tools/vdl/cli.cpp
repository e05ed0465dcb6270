#include "vdl/cli.hpp"

#include "vdl/commands.hpp"
#include "vdl/config.hpp"
#include "vdl/errors.hpp"

#include <CLI11.hpp>

#include <map>
#include <ostream>

namespace vdl::cli
{
    int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
    {
        CLI::App app{"vdl: decoherence kernel for a dipole suddenly coupled to cavity zero-point modes"};
        app.require_subcommand(1);
        app.fallthrough();

        GlobalOptions g;
        std::string config_path;
        app.add_option("--config", config_path, "key = value configuration file");
        app.add_option("--out", g.out_path, "output file (directory for figure2); stdout when omitted");
        app.add_option("--threads", g.threads, "worker threads for sweeps")->check(CLI::Range(1, 1024));
        app.add_option("--tail-bound", g.tail_bound, "series truncation tail bound")->check(CLI::PositiveNumber);

        // kernel-sweep
        KernelSweepOptions sweep;
        std::string var = "tau";
        std::string scale = "linear";
        auto *ks = app.add_subcommand("kernel-sweep", "sweep the kernel over tau, alpha or kappa; CSV output");
        ks->add_option("--var", var, "tau | alpha | kappa")->check(CLI::IsMember({"tau", "alpha", "kappa"}));
        ks->add_option("--start", sweep.sweep.start);
        ks->add_option("--stop", sweep.sweep.stop);
        ks->add_option("--points", sweep.sweep.points);
        ks->add_option("--scale", scale, "linear | log")->check(CLI::IsMember({"linear", "log"}));
        ks->add_option("--alpha", sweep.base.alpha, "fixed alpha")->capture_default_str();
        ks->add_option("--kappa", sweep.base.kappa, "fixed kappa")->capture_default_str();
        ks->add_option("--tau", sweep.base.tau, "fixed tau")->capture_default_str();

        // oracle-check
        OracleCheckOptions oracle;
        auto *oc = app.add_subcommand("oracle-check", "closed-form terms vs direct quadrature");
        oc->add_option("--m-max", oracle.m_max)->capture_default_str();
        oc->add_option("--kappas", oracle.kappas)->delimiter(',');
        oc->add_option("--taus", oracle.taus)->delimiter(',');
        oc->add_option("--tol", oracle.tolerance, "relative tolerance")->capture_default_str();
        oc->add_option("--alpha", oracle.alpha)->capture_default_str();

        // feasibility
        FeasibilityCliOptions feas;
        std::map<std::string, std::string> feas_flags;
        auto *fe = app.add_subcommand("feasibility", "experimental feasibility report");
        for (const auto *keys : {&required_feasibility_keys(), &optional_feasibility_keys()})
            for (const auto &key : *keys)
                fe->add_option_function<std::string>(
                    "--" + key, [&feas_flags, key](const std::string &v) { feas_flags[key] = v; }, "overrides " + key);
        fe->add_option("--alpha-crit", feas.alpha_crit)->capture_default_str();

        // figure2
        Figure2Options fig;
        auto *f2 = app.add_subcommand("figure2", "D versus tau curves at kappa = 1e8, one CSV per alpha");
        f2->add_option("--alphas", fig.alphas)->delimiter(',');
        f2->add_option("--points", fig.points)->capture_default_str();
        f2->add_option("--kappa", fig.kappa)->capture_default_str();
        f2->add_option("--tau-max", fig.tau_max)->capture_default_str();

        // modes-demo
        ModesDemoOptions demo;
        auto *md = app.add_subcommand("modes-demo", "discrete-mode simulator grid convergence");
        md->add_option("--kappa", demo.kappa)->capture_default_str();
        md->add_option("--tau", demo.tau)->capture_default_str();
        md->add_option("--dipole", demo.dipole, "C m")->capture_default_str();
        md->add_option("--L", demo.plate_separation, "plate separation, m")->capture_default_str();
        md->add_option("--grids", demo.grids)->delimiter(',');
        md->add_flag("--plates", demo.plates, "antisymmetric dipoles at the two plates");

        std::vector<const char *> argv{"vdl"};
        for (const auto &a : args)
            argv.push_back(a.c_str());
        try
        {
            app.parse(int(argv.size()), argv.data());
        }
        catch (const CLI::ParseError &e)
        {
            const int code = app.exit(e, out, err);
            return code == 0 ? exit_ok : exit_usage;
        }

        if (!config_path.empty())
            g.config_path = config_path;
        sweep.sweep.variable = var == "alpha" ? SweepVariable::alpha : var == "kappa" ? SweepVariable::kappa : SweepVariable::tau;
        sweep.sweep.scale = scale == "log" ? SweepScale::log : SweepScale::linear;
        for (const auto &[k, v] : feas_flags)
            feas.overrides.emplace_back(k, v);

        try
        {
            if (*ks)
                return cmd_kernel_sweep(g, sweep, out, err);
            if (*oc)
                return cmd_oracle_check(g, oracle, out, err);
            if (*fe)
                return cmd_feasibility(g, feas, out, err);
            if (*f2)
                return cmd_figure2(g, fig, out, err);
            if (*md)
                return cmd_modes_demo(g, demo, out, err);
        }
        catch (const UsageError &e)
        {
            err << "usage error: " << e.what() << "\n";
            return exit_usage;
        }
        catch (const ValidationError &e)
        {
            err << "validation error: " << e.what() << "\n";
            return exit_usage;
        }
        catch (const DomainError &e)
        {
            err << "validation error: " << e.what() << "\n";
            return exit_usage;
        }
        catch (const CapabilityError &e)
        {
            err << "capability error: " << e.what() << "\n";
            return exit_usage;
        }
        catch (const NumericalError &e)
        {
            err << "numerical error: " << e.what() << "\n";
            return exit_numerical;
        }
        catch (const IoError &e)
        {
            err << "i/o error: " << e.what() << "\n";
            return exit_io;
        }
        return exit_usage;
    }
}
