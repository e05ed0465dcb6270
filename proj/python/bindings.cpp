#include "vdl/cavityfield.hpp"
#include "vdl/errors.hpp"
#include "vdl/feasibility.hpp"
#include "vdl/kernel.hpp"
#include "vdl/modesum.hpp"
#include "vdl/specfun.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace py::literals;

PYBIND11_MODULE(_vdl, m)
{
    m.doc() = "Decoherence kernel for a switched dipole between conducting plates";
    m.attr("__version__") = VDL_VERSION;

    // Exceptions. DomainError derives from ValueError so plain Python code
    // can catch it idiomatically.
    static py::exception<vdl::DomainError> domain_error(m, "DomainError", PyExc_ValueError);
    static py::exception<vdl::PreconditionError> precondition_error(m, "PreconditionError", domain_error.ptr());
    static py::exception<vdl::CapabilityError> capability_error(m, "CapabilityError", PyExc_RuntimeError);
    static py::exception<vdl::NumericalError> numerical_error(m, "NumericalError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try
        {
            if (p)
                std::rethrow_exception(p);
        }
        catch (const vdl::PreconditionError &e)
        {
            py::set_error(precondition_error, e.what());
        }
        catch (const vdl::DomainError &e)
        {
            py::set_error(domain_error, e.what());
        }
        catch (const vdl::CapabilityError &e)
        {
            py::set_error(capability_error, e.what());
        }
        catch (const vdl::NumericalError &e)
        {
            py::set_error(numerical_error, e.what());
        }
    });

    // specfun
    m.def("ci", [](double x) { return vdl::specfun::ci(x); }, "x"_a, "Cosine integral Ci(x), x > 0.");
    m.def("cin", [](double x) { return vdl::specfun::cin(x); }, "x"_a, "Entire cosine integral Cin(x), x >= 0.");
    m.def("angular_kernel_j", &vdl::specfun::angular_kernel_j, "x"_a, "J(x) = 4 (sin x - x cos x) / x^3.");

    // kernel
    py::class_<vdl::DimensionlessParams>(m, "DimensionlessParams")
        .def(py::init([](double alpha, double kappa, double tau, int n_switches) {
                 return vdl::DimensionlessParams{alpha, kappa, tau, n_switches};
             }),
             "alpha"_a = 0.0, "kappa"_a = 1e8, "tau"_a = 0.0, "n_switches"_a = 2)
        .def_readwrite("alpha", &vdl::DimensionlessParams::alpha)
        .def_readwrite("kappa", &vdl::DimensionlessParams::kappa)
        .def_readwrite("tau", &vdl::DimensionlessParams::tau)
        .def_readwrite("n_switches", &vdl::DimensionlessParams::n_switches)
        .def("__repr__", [](const vdl::DimensionlessParams &p) {
            return "DimensionlessParams(alpha=" + std::to_string(p.alpha) + ", kappa=" + std::to_string(p.kappa) +
                   ", tau=" + std::to_string(p.tau) + ", n_switches=" + std::to_string(p.n_switches) + ")";
        });

    py::class_<vdl::SeriesPolicy>(m, "SeriesPolicy")
        .def(py::init<>())
        .def_readwrite("tail_bound", &vdl::SeriesPolicy::tail_bound)
        .def_readwrite("min_terms", &vdl::SeriesPolicy::min_terms)
        .def_readwrite("max_terms", &vdl::SeriesPolicy::max_terms)
        .def_readwrite("resonance_width", &vdl::SeriesPolicy::resonance_width);

    py::class_<vdl::DecoherenceResult>(m, "DecoherenceResult")
        .def_readonly("gamma", &vdl::DecoherenceResult::gamma)
        .def_readonly("kernel", &vdl::DecoherenceResult::kernel)
        .def_readonly("terms_used", &vdl::DecoherenceResult::terms_used)
        .def_readonly("truncation_estimate", &vdl::DecoherenceResult::truncation_estimate)
        .def_property_readonly("per_term", [](const vdl::DecoherenceResult &r) {
            py::list out;
            for (const auto &t : r.per_term)
                out.append(py::make_tuple(t.m, t.value));
            return out;
        });

    m.def("coupling_alpha", &vdl::coupling_alpha, "delta_d"_a, "plate_separation"_a);
    m.def("dipole_for_alpha", &vdl::dipole_for_alpha, "alpha"_a, "plate_separation"_a);
    m.def("kernel_term", &vdl::kernel_term, "m"_a, "params"_a, "policy"_a = vdl::SeriesPolicy{});
    m.def("decoherence_kernel", &vdl::decoherence_kernel, "params"_a, "policy"_a = vdl::SeriesPolicy{},
          py::call_guard<py::gil_scoped_release>());
    m.def("kernel_no_cutoff", &vdl::kernel_no_cutoff_tau, "alpha"_a, "tau"_a, "max_terms"_a = 1'000'000,
          py::call_guard<py::gil_scoped_release>());
    m.def("kernel_at_plates", &vdl::kernel_at_plates, "d_left"_a, "d_right"_a, "plate_separation"_a, "kappa"_a,
          "tau"_a, "policy"_a = vdl::SeriesPolicy{}, py::call_guard<py::gil_scoped_release>());

    // modesum
    py::class_<vdl::modesum::QuadratureSpec>(m, "QuadratureSpec")
        .def(py::init<>())
        .def_readwrite("rel_tol", &vdl::modesum::QuadratureSpec::rel_tol)
        .def_readwrite("abs_tol", &vdl::modesum::QuadratureSpec::abs_tol)
        .def_readwrite("max_subdivisions", &vdl::modesum::QuadratureSpec::max_subdivisions)
        .def_readwrite("panels_per_oscillation", &vdl::modesum::QuadratureSpec::panels_per_oscillation);

    m.def("radial_integral_m", &vdl::modesum::radial_integral_m, "m"_a, "kappa"_a, "tau"_a,
          "quadrature"_a = vdl::modesum::QuadratureSpec{}, py::call_guard<py::gil_scoped_release>());
    m.def("m0_term", &vdl::modesum::m0_term, "kappa"_a, "tau"_a);
    m.def("switching_spectrum", &vdl::modesum::switching_spectrum, "theta"_a, "n_switches"_a);
    m.def(
        "exponent_general_n",
        [](const vdl::DimensionlessParams &p, const vdl::modesum::QuadratureSpec &q) {
            const auto r = vdl::modesum::exponent_general_n(p, q);
            return py::make_tuple(r.gamma, r.m_max, r.quadrature_error);
        },
        "params"_a, "quadrature"_a = vdl::modesum::QuadratureSpec{},
        "Returns (gamma, m_max, quadrature_error).");

    // cavity simulator
    py::enum_<vdl::cavity::Position>(m, "Position")
        .value("center", vdl::cavity::Position::center)
        .value("left_plate", vdl::cavity::Position::left_plate)
        .value("right_plate", vdl::cavity::Position::right_plate);

    m.def(
        "cavity_overlap",
        [](vdl::cavity::Position pa, double da, vdl::cavity::Position pb, double db, double duration, int n_switches,
           double kappa, double plate_separation, int grid) {
            const auto g = vdl::cavity::ModeGrid::for_kappa(kappa, plate_separation, grid, grid);
            return vdl::cavity::overlap({pa, da}, {pb, db}, duration, n_switches, g);
        },
        "position_a"_a, "dipole_a"_a, "position_b"_a, "dipole_b"_a, "duration"_a, "n_switches"_a, "kappa"_a,
        "plate_separation"_a, "grid"_a, py::call_guard<py::gil_scoped_release>(),
        "Grid overlap |D| with n_max = k_par_points = grid.");

    // feasibility
    m.def(
        "feasibility_report",
        [](double polarizability, double size, double mass, double velocity, double power, double sigma_y,
           double sigma_z, double period, double plate_separation, std::optional<double> k_max, double alpha_crit,
           bool full_width) {
            using namespace vdl::feasibility;
            FeasibilityOptions opts;
            opts.alpha_crit = alpha_crit;
            opts.transit = full_width ? TransitConvention::full_width : TransitConvention::half_width;
            const auto r = full_report({"", polarizability, size, mass, velocity}, {power, sigma_y, sigma_z, period},
                                       {plate_separation, k_max}, opts);
            py::dict d;
            d["efield"] = r.efield;
            d["dipole"] = r.dipole;
            d["alpha"] = r.alpha;
            d["kappa"] = r.kappa;
            d["tau"] = r.tau;
            d["transit_time"] = r.transit_time;
            d["phase_amplitude"] = r.phase_amplitude;
            d["threshold_dipole"] = r.threshold_dipole;
            d["threshold_shortfall_orders"] = r.threshold_shortfall_orders;
            d["image_charge"] = r.image.charge;
            d["image_decoherence_time"] = r.image.decoherence_time;
            d["gamma"] = r.gamma;
            d["visibility_loss_proxy"] = r.visibility_loss_proxy;
            py::dict verdicts;
            for (const auto &v : r.verdicts)
                verdicts[py::str(v.name)] = v.passed;
            d["verdicts"] = verdicts;
            return d;
        },
        py::kw_only(), "polarizability"_a, "size"_a, "mass"_a, "velocity"_a, "power"_a, "sigma_y"_a, "sigma_z"_a,
        "period"_a, "plate_separation"_a, "k_max"_a = py::none(), "alpha_crit"_a = 0.1, "full_width"_a = false,
        "SI inputs; returns a dict of derived quantities and verdicts.");
}
