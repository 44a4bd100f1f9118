#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mgdiag/cli/commands.hpp"
#include "mgdiag/cli/figure.hpp"
#include "mgdiag/cli/poly_parser.hpp"
#include "mgdiag/errors.hpp"
#include "mgdiag/frobenius.hpp"
#include "mgdiag/hypersurface.hpp"
#include "mgdiag/rees.hpp"

namespace py = pybind11;
using namespace mgdiag;

namespace {

py::object from_json(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::int_ to_py(const gradedcomb::BigInt& v) { return py::int_(py::str(v.str())); }

py::object opt(const std::optional<std::int64_t>& v) { return v ? py::object(py::int_(*v)) : py::object(py::none()); }

py::dict classify_dict(int m, int n, std::int64_t d, std::int64_t e, std::int64_t g, std::int64_t h) {
  const auto r = hypersurface::classify({m, n, d, e}, {g, h});
  py::dict out;
  out["cohen_macaulay"] = r.cohen_macaulay;
  out["gorenstein"] = r.gorenstein;
  out["rational_singularities_generic"] = r.rational_singularities_generic;
  out["f_regular_type_generic"] = r.f_regular_type_generic;
  out["generic_normal"] = r.generic_normal;
  out["canonical_shift"] = py::make_tuple(r.canonical_shift.first, r.canonical_shift.second);
  out["a_invariant"] = r.a_invariant;
  out["cm_obstruction"] = opt(r.cm_obstruction);
  out["dim2_rational"] = r.dim2_rational ? py::object(py::bool_(*r.dim2_rational)) : py::object(py::none());
  out["caveats"] = r.caveats;
  return out;
}

py::object window_tuple(const gradedcomb::Window& w) {
  if (w.empty()) return py::none();
  return py::make_tuple(w.unbounded_below ? py::object(py::none()) : py::object(py::int_(w.lo)), w.hi);
}

py::dict certificate(const std::string& poly, int m, int n, int d, int e, std::uint32_t p, int e_max) {
  const auto f = cli::parse_polynomial(poly, m, n, p).poly;
  const auto cert = n == 0 ? frobenius::f_regular_certificate_graded(f, d, m, p, e_max)
                           : frobenius::f_regular_certificate_bigraded(f, d, e, m, n, p, e_max);
  return from_json(frobenius::to_json(cert));
}

}  // namespace

PYBIND11_MODULE(_mgdiag, mod) {
  mod.doc() = "Diagonal subalgebras of bigraded hypersurfaces";

  py::register_exception<ParseError>(mod, "ParseError", PyExc_ValueError);
  py::register_exception<ResourceLimitError>(mod, "ResourceLimitError", PyExc_ValueError);

  mod.def("classify", &classify_dict, py::arg("m"), py::arg("n"), py::arg("d"), py::arg("e"), py::arg("g") = 1,
          py::arg("h") = 1);
  mod.def(
      "dim_piece",
      [](int m, int n, std::int64_t d, std::int64_t e, std::int64_t g, std::int64_t h, std::int64_t k) {
        return to_py(hypersurface::dim_R_delta_piece({m, n, d, e}, {g, h}, k));
      },
      py::arg("m"), py::arg("n"), py::arg("d"), py::arg("e"), py::arg("g"), py::arg("h"), py::arg("k"));
  mod.def(
      "dim_lc",
      [](int m, int n, std::int64_t d, std::int64_t e, std::int64_t g, std::int64_t h, int q, std::int64_t k) {
        return to_py(hypersurface::dim_lc_R_delta({m, n, d, e}, {g, h}, q, k));
      },
      py::arg("m"), py::arg("n"), py::arg("d"), py::arg("e"), py::arg("g"), py::arg("h"), py::arg("q"),
      py::arg("k"));
  mod.def(
      "figure",
      [](int m, int n, int d_max, int e_max) { return cli::figure_ascii(cli::figure_table(m, n, d_max, e_max)); },
      py::arg("m") = 3, py::arg("n") = 3, py::arg("d_max") = 12, py::arg("e_max") = 12);

  mod.def(
      "parse",
      [](const std::string& text, int m, int n, std::uint32_t p) {
        return cli::parse_polynomial(text, m, n, p).poly.to_string();
      },
      py::arg("text"), py::arg("m"), py::arg("n") = 0, py::arg("p") = 101);
  mod.def(
      "fedder_is_f_pure",
      [](const std::string& poly, int m, int n, std::uint32_t p) {
        return frobenius::fedder_is_f_pure(cli::parse_polynomial(poly, m, n, p).poly, p);
      },
      py::arg("poly"), py::arg("m"), py::arg("n"), py::arg("p"));
  mod.def("f_regular_certificate", &certificate, py::arg("poly"), py::arg("m"), py::arg("n"), py::arg("d"),
          py::arg("e"), py::arg("p"), py::arg("e_max") = 4);

  mod.def("a_inv_quotient_power", &rees::a_inv_quotient_power, py::arg("a"), py::arg("k"), py::arg("s"),
          py::arg("r"));
  mod.def(
      "rigidity_window",
      [](std::int64_t a, std::int64_t k, int s, std::int64_t g) { return window_tuple(rees::rigidity_window(a, k, s, g)); },
      py::arg("a"), py::arg("k"), py::arg("s"), py::arg("g") = 1);
  mod.def("rigidity_is_cm", &rees::rigidity_is_cm, py::arg("a"), py::arg("k"), py::arg("s"), py::arg("g") = 1);

  mod.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
