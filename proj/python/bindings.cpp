#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zetascope/contour.hpp"
#include "zetascope/field.hpp"
#include "zetascope/parse.hpp"
#include "zetascope/render.hpp"
#include "zetascope/verify.hpp"
#include "zetascope/zfn.hpp"

namespace py = pybind11;
using namespace zetascope;

namespace {

py::array_t<double> phase_array(const PhaseField& f) {
  py::array_t<double> a({f.window.ny, f.window.nx});
  std::copy(f.phase.begin(), f.phase.end(), a.mutable_data());
  return a;
}

py::array_t<bool> valid_array(const PhaseField& f) {
  py::array_t<bool> a({f.window.ny, f.window.nx});
  bool* out = a.mutable_data();
  for (size_t i = 0; i < f.valid.size(); ++i) out[i] = f.valid[i] != 0;
  return a;
}

py::array_t<uint8_t> image_array(const Image& img) {
  py::array_t<uint8_t> a({img.height, img.width, 3});
  std::copy(img.rgb.begin(), img.rgb.end(), a.mutable_data());
  return a;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Level curves of the completed zeta function "
            "Z(s) = pi^(-s/2) Gamma(s/2) zeta(s)";

  static py::exception<PoleError> pole_error(m, "PoleError", PyExc_ArithmeticError);
  static py::exception<RealityViolation> reality_error(m, "RealityViolation",
                                                       PyExc_ArithmeticError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const PoleError& e) {
      PyErr_SetString(pole_error.ptr(), e.what());
    } catch (const RealityViolation& e) {
      PyErr_SetString(reality_error.ptr(), e.what());
    } catch (const DomainError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const NonFiniteError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<EvalConfig>(m, "EvalConfig")
      .def(py::init<>())
      .def(py::init([](int series_terms, double rel_tol, double pole_radius) {
             EvalConfig cfg{series_terms, rel_tol, pole_radius};
             cfg.validate();
             return cfg;
           }),
           py::arg("series_terms") = 32, py::arg("rel_tol") = 1e-12,
           py::arg("pole_radius") = 0.05)
      .def_readwrite("series_terms", &EvalConfig::series_terms)
      .def_readwrite("rel_tol", &EvalConfig::rel_tol)
      .def_readwrite("pole_radius", &EvalConfig::pole_radius);

  py::class_<Window>(m, "Window")
      .def(py::init([](double sigma_min, double sigma_max, double t_min,
                       double t_max, int nx, int ny) {
             Window w{sigma_min, sigma_max, t_min, t_max, nx, ny};
             w.validate();
             return w;
           }),
           py::arg("sigma_min"), py::arg("sigma_max"), py::arg("t_min"),
           py::arg("t_max"), py::arg("nx"), py::arg("ny"))
      .def_readonly("sigma_min", &Window::sigma_min)
      .def_readonly("sigma_max", &Window::sigma_max)
      .def_readonly("t_min", &Window::t_min)
      .def_readonly("t_max", &Window::t_max)
      .def_readonly("nx", &Window::nx)
      .def_readonly("ny", &Window::ny);

  py::class_<LogComplex>(m, "LogComplex")
      .def_readonly("log_modulus", &LogComplex::log_modulus)
      .def_readonly("phase", &LogComplex::phase)
      .def("to_complex", &LogComplex::to_complex)
      .def("__repr__", [](const LogComplex& lz) {
        return "LogComplex(log_modulus=" + std::to_string(lz.log_modulus) +
               ", phase=" + std::to_string(lz.phase) + ")";
      });

  py::class_<PhaseField>(m, "PhaseField")
      .def_readonly("window", &PhaseField::window)
      .def_property_readonly("phase", &phase_array)
      .def_property_readonly("valid", &valid_array);

  py::enum_<CurveColor>(m, "CurveColor")
      .value("Blue", CurveColor::Blue)
      .value("Green", CurveColor::Green);

  py::enum_<CurveClass>(m, "CurveClass")
      .value("None_", CurveClass::None)
      .value("Eyes", CurveClass::Eyes)
      .value("NonEyes", CurveClass::NonEyes)
      .value("Boundary", CurveClass::Boundary);

  py::class_<Curve>(m, "Curve")
      .def_readonly("color", &Curve::color)
      .def_readonly("points", &Curve::points)
      .def_readonly("closed", &Curve::closed)
      .def_readonly("classification", &Curve::classification)
      .def("__len__", [](const Curve& c) { return c.points.size(); });

  py::class_<CurveSet>(m, "CurveSet")
      .def_readonly("window", &CurveSet::window)
      .def_readonly("blue", &CurveSet::blue)
      .def_readonly("green", &CurveSet::green)
      .def("to_json", &curve_set_to_json);

  py::class_<ZeroRecord>(m, "ZeroRecord")
      .def_readonly("t", &ZeroRecord::t)
      .def_readonly("refined_tol", &ZeroRecord::refined_tol)
      .def_readonly("simple", &ZeroRecord::simple)
      .def("__repr__", [](const ZeroRecord& z) {
        return "ZeroRecord(t=" + std::to_string(z.t) + ")";
      });

  py::class_<Violation>(m, "Violation")
      .def_readonly("curve_id", &Violation::curve_id)
      .def_readonly("crossing_count", &Violation::crossing_count)
      .def_readonly("reason", &Violation::reason);

  py::class_<TopologyReport>(m, "TopologyReport")
      .def_readonly("window", &TopologyReport::window)
      .def_readonly("zeros", &TopologyReport::zeros)
      .def_readonly("green_noneyes_curves", &TopologyReport::green_noneyes_curves)
      .def_readonly("curves_with_one_crossing",
                    &TopologyReport::curves_with_one_crossing)
      .def_readonly("eyes_curves", &TopologyReport::eyes_curves)
      .def_readonly("boundary_curves", &TopologyReport::boundary_curves)
      .def_readonly("violations", &TopologyReport::violations)
      .def_readonly("zeros_in_window", &TopologyReport::zeros_in_window)
      .def_readonly("crossings_total", &TopologyReport::crossings_total)
      .def_readonly("crossings_matched", &TopologyReport::crossings_matched)
      .def_readonly("bijection_ok", &TopologyReport::bijection_ok)
      .def_readonly("summary", &TopologyReport::summary)
      .def("claims_hold", &TopologyReport::claims_hold)
      .def("to_json", &report_to_json);

  // zfn
  m.def("log_gamma", &log_gamma, py::arg("s"));
  m.def("zeta_right", &zeta_right, py::arg("s"), py::arg("cfg") = EvalConfig{});
  m.def("zeta", &zeta, py::arg("s"), py::arg("cfg") = EvalConfig{});
  m.def("completed_zeta", &completed_zeta, py::arg("s"),
        py::arg("cfg") = EvalConfig{});
  m.def("log_completed_zeta", &log_completed_zeta, py::arg("s"),
        py::arg("cfg") = EvalConfig{});
  m.def("zeta_series_oracle", &zeta_series_oracle, py::arg("s"),
        py::arg("n_terms"));
  m.def("euler_product_oracle", &euler_product_oracle, py::arg("s"),
        py::arg("prime_bound"));
  m.def("parse_complex", [](const std::string& text) -> py::object {
    const auto v = parse_complex(text);
    return v ? py::cast(*v) : py::none();
  });

  // field
  m.def("sample_phase_field", &sample_phase_field, py::arg("window"),
        py::arg("cfg") = EvalConfig{}, py::arg("threads") = 0,
        py::call_guard<py::gil_scoped_release>());
  m.def("save_phase_field", &save_phase_field, py::arg("field"), py::arg("path"));
  m.def("load_phase_field", &load_phase_field, py::arg("path"));

  // contour
  m.def("extract_level_curves",
        py::overload_cast<const PhaseField&, CurveColor, const EvalConfig&>(
            &extract_level_curves),
        py::arg("field"), py::arg("color"), py::arg("cfg") = EvalConfig{});
  m.def("extract_curve_set", &extract_curve_set, py::arg("field"),
        py::arg("cfg") = EvalConfig{}, py::call_guard<py::gil_scoped_release>());
  m.def("classify_green_curve", &classify_green_curve, py::arg("curve"),
        py::arg("window"), py::arg("pole_radius"));
  m.def("count_critical_line_crossings", &count_critical_line_crossings,
        py::arg("curve"));
  m.def("curve_pair_intersections", &curve_pair_intersections, py::arg("a"),
        py::arg("b"), py::arg("tol"));

  // verify
  m.def("hardy_real", &hardy_real, py::arg("t"), py::arg("cfg") = EvalConfig{});
  m.def("scan_zeros", &scan_zeros, py::arg("t_max"), py::arg("step") = 0.05,
        py::arg("cfg") = EvalConfig{}, py::arg("threads") = 0,
        py::call_guard<py::gil_scoped_release>());
  m.def("zero_count_estimate", &zero_count_estimate, py::arg("T"));
  m.def("topology_report", &topology_report, py::arg("window"),
        py::arg("cfg") = EvalConfig{}, py::arg("threads") = 0,
        py::call_guard<py::gil_scoped_release>());

  // render
  m.def(
      "render_raster",
      [](const PhaseField& field, int line_px, int threads) {
        RenderStyle style;
        style.width = field.window.nx;
        style.height = field.window.ny;
        style.line_px = line_px;
        return image_array(render_raster(field, style, threads));
      },
      py::arg("field"), py::arg("line_px") = 1, py::arg("threads") = 0);
  m.def(
      "render_png_bytes",
      [](const PhaseField& field, int line_px, int threads) {
        RenderStyle style;
        style.width = field.window.nx;
        style.height = field.window.ny;
        style.line_px = line_px;
        const Image img = render_raster(field, style, threads);
        const auto png = encode_png(
            img, render_metadata_text(field.window, style.width, style.height));
        return py::bytes(reinterpret_cast<const char*>(png.data()), png.size());
      },
      py::arg("field"), py::arg("line_px") = 1, py::arg("threads") = 0);
  m.def(
      "render_vector",
      [](const CurveSet& curves, int width, int height) {
        RenderStyle style;
        style.width = width;
        style.height = height;
        return render_vector(curves, style);
      },
      py::arg("curves"), py::arg("width") = 1600, py::arg("height") = 1000);

  m.attr("__version__") = kVersionString;
}
