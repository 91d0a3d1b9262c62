#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "diskspec/eigenfunctions.hpp"
#include "diskspec/errors.hpp"
#include "diskspec/geodesics.hpp"
#include "diskspec/io.hpp"
#include "diskspec/oracle.hpp"
#include "diskspec/scattering.hpp"
#include "diskspec/special_functions.hpp"
#include "diskspec/verify.hpp"

namespace py = pybind11;
using namespace diskspec;

namespace {

// Rationals cross the boundary as fractions.Fraction.
py::object to_fraction(const Rational& r) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py::int_(py::str(r.get_num().get_str())), py::int_(py::str(r.get_den().get_str())));
}

Rational from_python(const py::handle& obj) { return parse_rational(py::str(obj).cast<std::string>()); }

std::vector<Rational> rational_list(const py::sequence& seq) {
    std::vector<Rational> out;
    for (const auto& v : seq) out.push_back(from_python(v));
    return out;
}

// {(dz, dzbar): Fraction}
py::dict poly_to_dict(const BivarPoly& p) {
    py::dict d;
    for (const auto& [e, c] : p.terms()) d[py::make_tuple(e.dz, e.dzbar)] = to_fraction(c);
    return d;
}

py::list spikes_to_list(const SpikeTrain& train) {
    py::list out;
    for (const auto& s : train.spikes()) out.append(py::make_tuple(to_fraction(s.time), to_fraction(s.amplitude)));
    return out;
}

}  // namespace

PYBIND11_MODULE(_diskspec, m) {
    m.doc() = "Exact eigenfunctions, geodesics and layered-medium Green's functions of the disk metric 4/(1-r^2)|dz|^2";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<GuardExceeded>(m, "GuardExceeded", PyExc_RuntimeError);
    py::register_exception<NonConvergence>(m, "NonConvergence", PyExc_ArithmeticError);
    py::register_exception<ScanResolutionError>(m, "ScanResolutionError", PyExc_RuntimeError);

    m.def("eigenfunction", [](std::uint32_t p, std::uint32_t q) { return poly_to_dict(eigenfunction(p, q)); },
          py::arg("p"), py::arg("q"), "u^(p,q) as {(dz, dzbar): Fraction}");
    m.def("eigenfunction_json", [](std::uint32_t p, std::uint32_t q) { return to_json(eigenfunction(p, q)).dump(); },
          py::arg("p"), py::arg("q"));
    m.def("check_eigen_equation", &check_eigen_equation, py::arg("p"), py::arg("q"));
    m.def(
        "laplacian_json",
        [](const std::string& poly_json) {
            return to_json(apply_laplacian(poly_from_json(nlohmann::json::parse(poly_json)))).dump();
        },
        py::arg("poly_json"));
    m.def(
        "polar_form",
        [](std::uint32_t p, std::uint32_t q) {
            const PolarForm f = polar_form(p, q);
            py::list radial;
            for (const auto& c : f.radial) radial.append(to_fraction(c));
            return py::make_tuple(f.angular, radial);
        },
        py::arg("p"), py::arg("q"));
    m.def("hypergeometric_2f1", [](double a, double b, double c, double x) { return hypergeometric_2f1(a, b, c, x); },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("x"));
    m.def("boundary_value", &boundary_value, py::arg("n"), py::arg("lam"));
    m.def(
        "locate_spectrum",
        [](std::uint32_t n, double lambda_max, double step) { return locate_spectrum(n, lambda_max, {step}); },
        py::arg("n"), py::arg("lambda_max"), py::arg("step") = 0.01);
    m.def("divisor_count", &divisor_count, py::arg("n"));
    m.def(
        "eigenspace_indices",
        [](std::uint64_t lambda) {
            std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
            for (const auto& member : eigenspace_basis(lambda)) out.emplace_back(member.index.p, member.index.q);
            return out;
        },
        py::arg("lam"));
    m.def("spectral_zeta_partial", &spectral_zeta_partial, py::arg("s"), py::arg("terms"));
    m.def(
        "spectral_zeta_partial_exact",
        [](std::uint32_t s, std::uint64_t terms) { return to_fraction(spectral_zeta_partial_exact(s, terms)); },
        py::arg("s"), py::arg("terms"));
    m.def("harmonic_closure", &harmonic_closure, py::arg("n"), py::arg("m"));

    m.def(
        "curve_state",
        [](double a, double t) {
            const CurveState s = curve_state(a, t);
            return py::make_tuple(s.position, s.velocity, s.acceleration);
        },
        py::arg("a"), py::arg("t"));
    m.def("geodesic_residual", py::overload_cast<double, double>(&geodesic_residual), py::arg("a"), py::arg("t"));
    m.def("g_speed", py::overload_cast<double, double>(&g_speed), py::arg("a"), py::arg("t"));
    m.def("psi", &psi, py::arg("n"));
    m.def(
        "closed_geodesics_of_length",
        [](std::uint64_t n) {
            py::list out;
            for (const auto& g : closed_geodesics_of_length(n)) {
                out.append(py::make_tuple(g.p, g.q, to_fraction(g.a()), g.length(), g.boundary_visits()));
            }
            return out;
        },
        py::arg("n"));
    m.def(
        "integrate_geodesic",
        [](std::complex<double> z0, std::complex<double> v0, double duration, double step) {
            IntegratorOptions opts;
            opts.step = step;
            const Trajectory tr = integrate_geodesic(z0, v0, duration, opts);
            const auto& last = tr.samples.back();
            return py::make_tuple(last.position, last.velocity, tr.time_reached, tr.halted_at_boundary);
        },
        py::arg("z0"), py::arg("v0"), py::arg("duration"), py::arg("step") = 1e-4,
        "final (z, v, time_reached, halted) of an RK4 run");

    m.def(
        "greens_function",
        [](const py::sequence& L, const py::sequence& R, const py::object& horizon) {
            return spikes_to_list(greens_function(LayeredMedium(rational_list(L), rational_list(R)), from_python(horizon)));
        },
        py::arg("L"), py::arg("R"), py::arg("horizon"), "[(time, amplitude)] as Fractions");
    m.def(
        "greens_function_json",
        [](const std::string& medium_json, const py::object& horizon) {
            return spikes_to_list(greens_function(io::medium_from_json(nlohmann::json::parse(medium_json)),
                                                  from_python(horizon)));
        },
        py::arg("medium_json"), py::arg("horizon"));
    m.def(
        "oracle_profile_amplitude",
        [](const std::vector<std::uint32_t>& k, const py::sequence& R) {
            return to_fraction(oracle::oracle_profile_amplitude(k, rational_list(R)));
        },
        py::arg("k"), py::arg("R"));
    m.def(
        "goupillaud_simulate",
        [](const py::sequence& R, std::uint64_t steps) {
            py::list out;
            for (const auto& s : oracle::goupillaud_simulate(rational_list(R), steps)) {
                out.append(py::make_tuple(s.time_index, to_fraction(s.amplitude)));
            }
            return out;
        },
        py::arg("R"), py::arg("steps"));
    m.def(
        "verify",
        [](const std::string& suite) {
            py::dict out;
            for (const auto& r : verify::run(suite)) out[py::str(r.name)] = py::make_tuple(r.passed, r.total);
            return out;
        },
        py::arg("suite") = "all", "{suite: (passed, total)}");
}
