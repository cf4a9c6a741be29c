// Python bindings. Matrices cross the boundary as ((a, b), (c, d)) and
// vectors as (x1, x2); library errors become planeop.PlaneopError.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "planeop/angles.hpp"
#include "planeop/meanangle.hpp"
#include "planeop/polar.hpp"
#include "planeop/trajectory.hpp"

namespace py = pybind11;

namespace pybind11::detail {

template <>
struct type_caster<planeop::Vec2> {
    PYBIND11_TYPE_CASTER(planeop::Vec2, const_name("tuple[float, float]"));

    bool load(handle src, bool convert) {
        if (!isinstance<sequence>(src) || isinstance<str>(src)) return false;
        const auto seq = reinterpret_borrow<sequence>(src);
        if (seq.size() != 2) return false;
        make_caster<double> x1;
        make_caster<double> x2;
        if (!x1.load(seq[0], convert) || !x2.load(seq[1], convert)) return false;
        value = {cast_op<double>(x1), cast_op<double>(x2)};
        return true;
    }

    static handle cast(const planeop::Vec2& v, return_value_policy, handle) {
        return py::make_tuple(v.x1, v.x2).release();
    }
};

template <>
struct type_caster<planeop::Mat2> {
    PYBIND11_TYPE_CASTER(planeop::Mat2, const_name("tuple[tuple[float, float], tuple[float, float]]"));

    bool load(handle src, bool convert) {
        if (!isinstance<sequence>(src) || isinstance<str>(src)) return false;
        const auto rows = reinterpret_borrow<sequence>(src);
        if (rows.size() != 2) return false;
        make_caster<planeop::Vec2> top;
        make_caster<planeop::Vec2> bottom;
        if (!top.load(rows[0], convert) || !bottom.load(rows[1], convert)) return false;
        const planeop::Vec2 r0 = cast_op<planeop::Vec2>(top);
        const planeop::Vec2 r1 = cast_op<planeop::Vec2>(bottom);
        value = {r0.x1, r0.x2, r1.x1, r1.x2};
        return true;
    }

    static handle cast(const planeop::Mat2& m, return_value_policy, handle) {
        return py::make_tuple(py::make_tuple(m.a, m.b), py::make_tuple(m.c, m.d)).release();
    }
};

}  // namespace pybind11::detail

namespace {

py::handle g_error;

py::dict spectrum_dict(const planeop::SpectrumClass& s) {
    py::dict d;
    if (const auto* c = std::get_if<planeop::ComplexPair>(&s)) {
        d["kind"] = "complex";
        d["re"] = c->re;
        d["im"] = c->im;
    } else {
        const auto& r = std::get<planeop::RealDistinct>(s);
        d["kind"] = "real";
        d["lambda1"] = r.lambda1;
        d["lambda2"] = r.lambda2;
        d["u1"] = py::cast(r.u1);
        d["u2"] = py::cast(r.u2);
        d["beta"] = r.beta;
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_planeop, m) {
    using namespace planeop;
    m.doc() = "Geometry of invertible linear operators of the plane";

    // The module attribute keeps the exception type alive for the translator.
    g_error = py::exception<Error>(m, "PlaneopError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::reinterpret_borrow<py::object>(g_error)(py::str(e.what()));
            exc.attr("code") = py::str(std::string(to_string(e.code())));
            PyErr_SetObject(g_error.ptr(), exc.ptr());
        }
    });

    py::enum_<RangeMode>(m, "RangeMode")
        .value("ONE_DIRECTIONAL", RangeMode::OneDirectional)
        .value("BIDIRECTIONAL", RangeMode::Bidirectional)
        .value("CENTRAL_SYMMETRIC", RangeMode::CentralSymmetric)
        .value("ADJACENT_CONES", RangeMode::AdjacentCones);

    py::enum_<IsometryKind>(m, "IsometryKind")
        .value("NONE", IsometryKind::None)
        .value("PAIR", IsometryKind::Pair)
        .value("SINGLE", IsometryKind::Single)
        .value("ALL_DIRECTIONS", IsometryKind::AllDirections);

    py::class_<PolarForm>(m, "PolarForm")
        .def_readonly("alpha", &PolarForm::alpha)
        .def_readonly("O", &PolarForm::O)
        .def_readonly("B", &PolarForm::B)
        .def_readonly("sqrt_lambda", &PolarForm::sqrt_lambda)
        .def_readonly("sqrt_mu", &PolarForm::sqrt_mu)
        .def_readonly("e1", &PolarForm::e1)
        .def_readonly("e2", &PolarForm::e2);

    py::class_<RotationRange>(m, "RotationRange")
        .def_readonly("gamma_min", &RotationRange::gamma_min)
        .def_readonly("gamma_max", &RotationRange::gamma_max)
        .def_readonly("mode", &RotationRange::mode)
        .def("contains", &RotationRange::contains, py::arg("gamma"), py::arg("tolerance") = 0.0);

    py::class_<McEstimate>(m, "McEstimate")
        .def_readonly("mean", &McEstimate::mean)
        .def_readonly("std_error", &McEstimate::std_error)
        .def_readonly("n_samples", &McEstimate::n_samples)
        .def_readonly("n_accepted", &McEstimate::n_accepted)
        .def_readonly("seed", &McEstimate::seed);

    py::class_<EllipseReport>(m, "EllipseReport")
        .def_readonly("Af", &EllipseReport::Af)
        .def_readonly("S", &EllipseReport::S)
        .def_readonly("delta", &EllipseReport::delta)
        .def_readonly("Delta", &EllipseReport::Delta)
        .def_readonly("semi_major", &EllipseReport::semi_major)
        .def_readonly("semi_minor", &EllipseReport::semi_minor)
        .def_readonly("r2", &EllipseReport::r2)
        .def_readonly("major_axis", &EllipseReport::major_axis)
        .def_readonly("minor_axis", &EllipseReport::minor_axis)
        .def("form", &EllipseReport::form)
        .def("eccentricity", &EllipseReport::eccentricity);

    py::class_<OrbitReport>(m, "OrbitReport")
        .def_readonly("points", &OrbitReport::points)
        .def_readonly("period", &OrbitReport::period)
        .def_readonly("theta_over_2pi", &OrbitReport::theta_over_2pi);

    m.def("classify", [](const Mat2& a) { return spectrum_dict(classify(a)); }, py::arg("matrix"));
    m.def("signed_angle", &signed_angle, py::arg("x"), py::arg("y"));
    m.def("polar_decompose", &polar_decompose, py::arg("matrix"));
    m.def("operator_norm", &operator_norm, py::arg("matrix"));
    m.def(
        "length_ratio_bounds",
        [](const Mat2& a) {
            const auto b = length_ratio_bounds(a);
            return py::make_tuple(b.lo, b.hi);
        },
        py::arg("matrix"));
    m.def(
        "isometric_directions",
        [](const Mat2& a) {
            const auto d = isometric_directions(a);
            return py::make_tuple(d.kind, d.directions);
        },
        py::arg("matrix"));
    m.def("gamma_max_real", &gamma_max_real, py::arg("lambda1"), py::arg("lambda2"), py::arg("beta"));
    m.def("gamma_prime_max", &gamma_prime_max, py::arg("sqrt_lambda"), py::arg("sqrt_mu"));
    m.def("rotation_range", &rotation_range, py::arg("matrix"));
    m.def("gamma_of", &gamma_of, py::arg("matrix"), py::arg("x"));
    m.def("estimate_mean_gamma_prime", &estimate_mean_gamma_prime, py::arg("seed"), py::arg("n"),
          py::arg("workers") = 0, py::call_guard<py::gil_scoped_release>());
    m.def("estimate_mean_alpha", &estimate_mean_alpha, py::arg("seed"), py::arg("n"), py::arg("workers") = 0,
          py::call_guard<py::gil_scoped_release>());
    m.def("ellipse_through", &ellipse_through, py::arg("matrix"), py::arg("x0"),
          py::arg("rescale") = std::complex<double>(1.0));
    m.def("orbit", &orbit, py::arg("matrix"), py::arg("x0"), py::arg("n"));
}
