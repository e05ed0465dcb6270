#include "vdl/commands.hpp"

#include "vdl/cavityfield.hpp"
#include "vdl/cli.hpp"
#include "vdl/config.hpp"
#include "vdl/constants.hpp"
#include "vdl/errors.hpp"
#include "vdl/feasibility.hpp"
#include "vdl/output.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <ostream>
#include <sstream>
#include <thread>

namespace vdl::cli
{
    namespace
    {
        // Run fn(i) for i in [0, n) on up to `threads` workers. Results must be
        // written to per-index slots so the output order is independent of scheduling.
        template <class Fn>
        void parallel_for(std::size_t n, int threads, Fn fn)
        {
            const std::size_t workers = std::clamp<std::size_t>(std::size_t(std::max(threads, 1)), 1, std::max<std::size_t>(n, 1));
            if (workers == 1)
            {
                for (std::size_t i = 0; i < n; ++i)
                    fn(i);
                return;
            }
            std::vector<std::thread> pool;
            pool.reserve(workers);
            for (std::size_t w = 0; w < workers; ++w)
                pool.emplace_back([=, &fn] {
                    for (std::size_t i = w; i < n; i += workers)
                        fn(i);
                });
            for (auto &t : pool)
                t.join();
        }

        const char *variable_name(SweepVariable v)
        {
            switch (v)
            {
            case SweepVariable::tau:
                return "tau";
            case SweepVariable::alpha:
                return "alpha";
            case SweepVariable::kappa:
                return "kappa";
            }
            return "?";
        }

        struct SweepRow
        {
            DimensionlessParams params;
            double gamma = 0.0;
            double kernel = 1.0;
            std::string status = "ok";
        };

        SweepRow evaluate(const DimensionlessParams &p, const SeriesPolicy &policy)
        {
            SweepRow row;
            row.params = p;
            try
            {
                const auto r = decoherence_kernel(p, policy);
                row.gamma = r.gamma;
                row.kernel = r.kernel;
            }
            catch (const NumericalError &e)
            {
                row.gamma = e.partial();
                row.kernel = std::exp(-e.partial());
                row.status = "nonconverged";
            }
            return row;
        }

        std::vector<SweepRow> evaluate_all(const std::vector<DimensionlessParams> &points, const GlobalOptions &g)
        {
            const SeriesPolicy policy = g.series_policy();
            for (const auto &p : points)
                p.validate();
            std::vector<SweepRow> rows(points.size());
            parallel_for(points.size(), g.threads, [&](std::size_t i) { rows[i] = evaluate(points[i], policy); });
            return rows;
        }

        std::string render_sweep(const RunManifest &manifest, const std::vector<SweepRow> &rows)
        {
            std::ostringstream os;
            os << manifest.render();
            os << "tau,alpha,kappa,gamma,D,status\n";
            for (const auto &r : rows)
                os << format_number(r.params.tau) << ',' << format_number(r.params.alpha) << ','
                   << format_number(r.params.kappa) << ',' << format_number(r.gamma) << ','
                   << format_number(r.kernel) << ',' << r.status << '\n';
            return os.str();
        }

        bool any_nonconverged(const std::vector<SweepRow> &rows)
        {
            return std::any_of(rows.begin(), rows.end(), [](const SweepRow &r) { return r.status != "ok"; });
        }

        void add_globals(RunManifest &m, const GlobalOptions &g)
        {
            m.add("tail_bound", g.tail_bound);
            m.add("threads", std::to_string(g.threads));
        }

        std::string join(const std::vector<double> &v)
        {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i)
                s += (i ? ";" : "") + format_number(v[i]);
            return s;
        }
    }

    SeriesPolicy GlobalOptions::series_policy() const
    {
        SeriesPolicy p;
        p.tail_bound = tail_bound;
        p.validate();
        return p;
    }

    void SweepSpec::validate() const
    {
        if (!(start < stop))
            throw ValidationError("sweep: start must be < stop");
        if (points < 2)
            throw ValidationError("sweep: points must be >= 2");
        if (scale == SweepScale::log && !(start > 0.0))
            throw ValidationError("sweep: log scale requires start > 0");
    }

    std::vector<double> SweepSpec::values() const
    {
        validate();
        std::vector<double> v(static_cast<std::size_t>(points));
        for (int i = 0; i < points; ++i)
        {
            const double t = double(i) / double(points - 1);
            if (scale == SweepScale::linear)
                v[i] = (i == points - 1) ? stop : start + (stop - start) * t;
            else
                v[i] = (i == points - 1) ? stop : start * std::pow(stop / start, t);
        }
        return v;
    }

    int cmd_kernel_sweep(const GlobalOptions &g, const KernelSweepOptions &o, std::ostream &out, std::ostream &err)
    {
        std::vector<DimensionlessParams> points;
        for (double x : o.sweep.values())
        {
            DimensionlessParams p = o.base;
            switch (o.sweep.variable)
            {
            case SweepVariable::tau:
                p.tau = x;
                break;
            case SweepVariable::alpha:
                p.alpha = x;
                break;
            case SweepVariable::kappa:
                p.kappa = x;
                break;
            }
            points.push_back(p);
        }

        RunManifest m;
        m.command = "kernel-sweep";
        m.add("var", variable_name(o.sweep.variable));
        m.add("start", o.sweep.start);
        m.add("stop", o.sweep.stop);
        m.add("points", std::to_string(o.sweep.points));
        m.add("scale", o.sweep.scale == SweepScale::linear ? "linear" : "log");
        m.add("alpha", o.base.alpha);
        m.add("kappa", o.base.kappa);
        m.add("tau", o.base.tau);
        add_globals(m, g);

        const auto rows = evaluate_all(points, g);
        write_output(g.out_path, render_sweep(m, rows), out);
        if (any_nonconverged(rows))
        {
            err << "kernel-sweep: some rows did not converge (status column)\n";
            return exit_numerical;
        }
        return exit_ok;
    }

    int cmd_oracle_check(const GlobalOptions &g, const OracleCheckOptions &o, std::ostream &out, std::ostream &err)
    {
        if (o.m_max < 1)
            throw ValidationError("oracle-check: m-max must be >= 1");
        if (!(o.tolerance > 0.0))
            throw ValidationError("oracle-check: tolerance must be > 0");

        struct Cell
        {
            int m;
            double kappa;
            double tau;
            double closed = 0.0;
            double quad = 0.0;
            double rel_err = 0.0;
            std::string status = "ok";
        };
        std::vector<Cell> cells;
        for (double kappa : o.kappas)
            for (double tau : o.taus)
                for (int m = 1; m <= o.m_max; ++m)
                    cells.push_back({m, kappa, tau});

        const SeriesPolicy policy = g.series_policy();
        const double scale = 2.0 * o.alpha * o.alpha / constants::pi;
        parallel_for(cells.size(), g.threads, [&](std::size_t i) {
            Cell &c = cells[i];
            try
            {
                c.closed = kernel_term(c.m, {o.alpha, c.kappa, c.tau, 2}, policy);
                c.quad = scale * modesum::radial_integral_m(c.m, c.kappa, c.tau, o.quadrature);
                const double denom = std::max(std::abs(c.closed), std::abs(c.quad));
                c.rel_err = denom == 0.0 ? 0.0 : std::abs(c.closed - c.quad) / denom;
                if (!(c.rel_err <= o.tolerance))
                    c.status = "fail";
            }
            catch (const CapabilityError &)
            {
                c.status = "capability";
            }
            catch (const NumericalError &e)
            {
                c.quad = scale * e.partial();
                c.rel_err = std::abs(c.closed - c.quad) / std::max(std::abs(c.closed), 1e-300);
                c.status = "fail";
            }
        });

        RunManifest man;
        man.command = "oracle-check";
        man.add("m_max", std::to_string(o.m_max));
        man.add("kappas", join(o.kappas));
        man.add("taus", join(o.taus));
        man.add("tolerance", o.tolerance);
        man.add("alpha", o.alpha);
        man.add("quad_rel_tol", o.quadrature.rel_tol);
        man.add("quad_abs_tol", o.quadrature.abs_tol);
        add_globals(man, g);

        std::ostringstream os;
        os << man.render();
        os << "m,kappa,tau,closed,quadrature,rel_err,status\n";
        int failures = 0;
        double worst = 0.0;
        for (const Cell &c : cells)
        {
            os << c.m << ',' << format_number(c.kappa) << ',' << format_number(c.tau) << ',' << format_number(c.closed)
               << ',' << format_number(c.quad) << ',' << format_number(c.rel_err) << ',' << c.status << '\n';
            if (c.status == "fail")
                ++failures;
            if (c.status != "capability")
                worst = std::max(worst, c.rel_err);
        }
        write_output(g.out_path, os.str(), out);
        err << "oracle-check: " << cells.size() << " cells, worst rel_err " << format_number(worst) << ", "
            << failures << " above tolerance " << format_number(o.tolerance) << "\n";
        return failures == 0 ? exit_ok : exit_numerical;
    }

    int cmd_feasibility(const GlobalOptions &g, const FeasibilityCliOptions &o, std::ostream &out, std::ostream &)
    {
        Config config;
        if (g.config_path)
            config = Config::load(*g.config_path);
        for (const auto &[k, v] : o.overrides)
            config.set(k, v);
        const FeasibilityInputs in = feasibility_inputs(config);

        feasibility::FeasibilityOptions opts;
        opts.alpha_crit = o.alpha_crit;
        opts.transit = in.transit;
        opts.series = g.series_policy();
        const auto r = feasibility::full_report(in.molecule, in.laser, in.cavity, opts);

        std::ostringstream human;
        human << "Feasibility report: " << in.molecule.name << "\n";
        human << "  laser field amplitude |E|   " << format_number(r.efield) << " V/m\n";
        human << "  induced dipole |d|          " << format_number(r.dipole) << " C m\n";
        human << "  coupling alpha              " << format_number(r.alpha) << "\n";
        human << "  kappa = k_max L             " << format_number(r.kappa) << "\n";
        human << "  transit time T              " << format_number(r.transit_time) << " s\n";
        human << "  tau = c T / L               " << format_number(r.tau) << "\n";
        human << "  grating phase phi_0         " << format_number(r.phase_amplitude) << " rad\n";
        human << "  dipole threshold            " << format_number(r.threshold_dipole) << " C m (alpha_crit "
              << format_number(o.alpha_crit) << ")\n";
        human << "  image charge Q              " << format_number(r.image.charge) << " C\n";
        human << "  image decoherence time      " << format_number(r.image.decoherence_time) << " s\n";
        human << "  Gamma                       " << format_number(r.gamma) << "\n";
        human << "  visibility loss proxy 1-D   " << format_number(r.visibility_loss_proxy) << "\n";
        for (const auto &v : r.verdicts)
            human << "  [" << (v.passed ? "PASS" : "FAIL") << "] " << v.name << ": " << v.detail << "\n";
        out << human.str();

        RunManifest man;
        man.command = "feasibility";
        for (const auto &[k, v] : config.values())
            man.add(k, v);
        man.add("alpha_crit", o.alpha_crit);
        add_globals(man, g);

        std::ostringstream csv;
        csv << man.render();
        csv << "key,value\n";
        auto row = [&](const char *k, double v) { csv << k << ',' << format_number(v) << '\n'; };
        row("efield", r.efield);
        row("dipole", r.dipole);
        row("alpha", r.alpha);
        row("kappa", r.kappa);
        row("tau", r.tau);
        row("transit_time", r.transit_time);
        row("size_ratio", r.suddenness.size_ratio);
        row("velocity_ratio", r.suddenness.velocity_ratio);
        row("phase_amplitude", r.phase_amplitude);
        row("threshold_dipole", r.threshold_dipole);
        row("threshold_shortfall_orders", r.threshold_shortfall_orders);
        row("image_charge", r.image.charge);
        row("image_decoherence_time", r.image.decoherence_time);
        row("gamma", r.gamma);
        row("visibility_loss_proxy", r.visibility_loss_proxy);
        for (const auto &v : r.verdicts)
            csv << "verdict." << v.name << ',' << (v.passed ? "pass" : "fail") << '\n';
        write_output(g.out_path, csv.str(), out);
        return exit_ok;
    }

    int cmd_figure2(const GlobalOptions &g, const Figure2Options &o, std::ostream &out, std::ostream &err)
    {
        if (o.alphas.empty())
            throw ValidationError("figure2: at least one alpha is required");
        if (o.points < 2)
            throw ValidationError("figure2: points must be >= 2");
        const std::filesystem::path dir = g.out_path.empty() ? std::filesystem::path("figure2") : std::filesystem::path(g.out_path);
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec)
            throw IoError("cannot create directory '" + dir.string() + "': " + ec.message());

        SweepSpec sweep;
        sweep.start = 0.0;
        sweep.stop = o.tau_max;
        sweep.points = o.points;

        bool nonconverged = false;
        for (double alpha : o.alphas)
        {
            std::vector<DimensionlessParams> points;
            for (double tau : sweep.values())
                points.push_back({alpha, o.kappa, tau, 2});
            RunManifest m;
            m.command = "figure2";
            m.add("alpha", alpha);
            m.add("kappa", o.kappa);
            m.add("tau_max", o.tau_max);
            m.add("points", std::to_string(o.points));
            add_globals(m, g);
            const auto rows = evaluate_all(points, g);
            nonconverged = nonconverged || any_nonconverged(rows);
            const auto path = dir / ("figure2_alpha_" + format_label(alpha) + ".csv");
            write_output(path.string(), render_sweep(m, rows), out);
            out << "wrote " << path.string() << "\n";
        }
        if (nonconverged)
        {
            err << "figure2: some rows did not converge (status column)\n";
            return exit_numerical;
        }
        return exit_ok;
    }

    int cmd_modes_demo(const GlobalOptions &g, const ModesDemoOptions &o, std::ostream &out, std::ostream &)
    {
        if (!(o.kappa > 0.0) || o.kappa > modes_demo_max_kappa)
            throw CapabilityError("modes-demo: kappa must be in (0, " + format_number(modes_demo_max_kappa) + "]");
        if (o.grids.empty())
            throw ValidationError("modes-demo: at least one grid size is required");
        for (int n : o.grids)
            if (n < 2 || n > modes_demo_max_grid)
                throw CapabilityError("modes-demo: grid size " + std::to_string(n) + " outside [2, " +
                                      std::to_string(modes_demo_max_grid) + "]");
        if (!(o.tau >= 0.0) || !(o.plate_separation > 0.0) || !std::isfinite(o.dipole))
            throw ValidationError("modes-demo: need tau >= 0, L > 0 and a finite dipole");

        const double L = o.plate_separation;
        const double duration = o.tau * L / constants::speed_of_light;

        cavity::DipoleProfile a;
        cavity::DipoleProfile b;
        double gamma_closed_or_oracle;
        double alpha;
        if (o.plates)
        {
            a = {cavity::Position::left_plate, -o.dipole};
            b = {cavity::Position::right_plate, o.dipole};
            alpha = coupling_alpha(2.0 * o.dipole, L);
            gamma_closed_or_oracle = kernel_at_plates(-o.dipole, o.dipole, L, o.kappa, o.tau, g.series_policy()).gamma;
        }
        else
        {
            a = {cavity::Position::center, 0.0};
            b = {cavity::Position::center, o.dipole};
            alpha = coupling_alpha(o.dipole, L);
            modesum::QuadratureSpec q;
            q.abs_tol = 1e-12;
            gamma_closed_or_oracle = modesum::exponent_general_n({alpha, o.kappa, o.tau, 2}, q).gamma;
        }
        // The grid cannot separate the free-space m = 0 part, so the
        // reference carries it too.
        const double gamma_free = alpha * alpha / constants::pi * modesum::m0_term(o.kappa, o.tau);
        const double reference = std::exp(-(gamma_closed_or_oracle + gamma_free));

        RunManifest m;
        m.command = "modes-demo";
        m.add("kappa", o.kappa);
        m.add("tau", o.tau);
        m.add("dipole", o.dipole);
        m.add("L", L);
        m.add("plates", o.plates ? "true" : "false");
        m.add("alpha", alpha);
        m.add("gamma_m0", gamma_free);
        add_globals(m, g);

        std::vector<double> overlaps(o.grids.size());
        parallel_for(o.grids.size(), g.threads, [&](std::size_t i) {
            const auto grid = cavity::ModeGrid::for_kappa(o.kappa, L, o.grids[i], o.grids[i]);
            overlaps[i] = cavity::overlap(a, b, duration, 2, grid);
        });

        std::ostringstream os;
        os << m.render();
        os << "grid_size,overlap_grid,overlap_reference,rel_dev\n";
        for (std::size_t i = 0; i < o.grids.size(); ++i)
            os << o.grids[i] << ',' << format_number(overlaps[i]) << ',' << format_number(reference) << ','
               << format_number(std::abs(overlaps[i] - reference) / reference) << '\n';
        write_output(g.out_path, os.str(), out);
        return exit_ok;
    }
}
