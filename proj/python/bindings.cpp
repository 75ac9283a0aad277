#include "hilbdim/chow_ring.hpp"
#include "hilbdim/cli.hpp"
#include "hilbdim/determinantal.hpp"
#include "hilbdim/families.hpp"
#include "hilbdim/hilbert_dim.hpp"
#include "hilbdim/p1_bundles.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace hilbdim;

namespace {

py::object to_py(const Integer& z) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(z.str().c_str(), nullptr, 10));
}

py::object to_py(const Rational& q) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(boost::multiprecision::numerator(q)), to_py(boost::multiprecision::denominator(q)));
}

py::dict to_py(const InvariantSet& inv) {
  py::dict d;
  d["L3"] = to_py(inv.L3);
  d["KL2"] = to_py(inv.KL2);
  d["K2L"] = to_py(inv.K2L);
  d["K3"] = to_py(inv.K3);
  d["c2L"] = to_py(inv.c2L);
  d["Kc2"] = to_py(inv.Kc2);
  d["c3"] = to_py(inv.c3);
  d["chi_OX"] = to_py(inv.chi_OX);
  d["chi_OS"] = to_py(inv.chi_OS);
  d["h1L"] = to_py(inv.h1L);
  return d;
}

using Opt = std::optional<long long>;

FamilyDescriptor descriptor(const std::string& name, long long d, long long g, long long n, Opt e1, Opt e2,
                            Opt e11, Opt e12, Opt b, long long pg) {
  const auto family = parse_family(name);
  if (!family) throw InvalidArgument("unknown family '" + name + "'");
  FamilyDescriptor f{*family, d, g, n, {}, pg};
  auto need = [](const Opt& v, const char* what) {
    if (!v) throw InvalidArgument(std::string("missing parameter ") + what);
    return *v;
  };
  switch (*family) {
    case Family::scroll_p2:
      f.params = ScrollP2Preset{need(e1, "e1"), need(e2, "e2")};
      break;
    case Family::scroll_q:
      f.params = ScrollQPreset{need(e11, "e11"), need(e12, "e12"), need(e2, "e2")};
      break;
    default:
      f.params = FibrationParams{b, std::nullopt};
  }
  require_valid(f);
  return f;
}

#define FAMILY_ARGS                                                                                   \
  py::arg("family"), py::arg("d"), py::arg("g"), py::arg("n"), py::kw_only(), py::arg("e1") = py::none(), \
      py::arg("e2") = py::none(), py::arg("e11") = py::none(), py::arg("e12") = py::none(),            \
      py::arg("b") = py::none(), py::arg("pg") = 0

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact invariants and Hilbert-scheme dimensions of scrolls and fibrations";
  m.attr("__version__") = HILBDIM_VERSION;

  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<NonIntegral>(m, "NonIntegral", PyExc_ArithmeticError);

  m.def(
      "invariants",
      [](const std::string& fam, long long d, long long g, long long n, Opt e1, Opt e2, Opt e11, Opt e12,
         Opt b, long long pg) { return to_py(invariant_set(descriptor(fam, d, g, n, e1, e2, e11, e12, b, pg))); },
      FAMILY_ARGS);
  m.def(
      "ring_invariants",
      [](const std::string& fam, long long d, long long g, long long n, Opt e1, Opt e2, Opt e11, Opt e12,
         Opt b, long long pg) {
        return to_py(invariants_from_ring(ambient_preset(descriptor(fam, d, g, n, e1, e2, e11, e12, b, pg))));
      },
      FAMILY_ARGS);
  m.def(
      "chi_normal",
      [](const std::string& fam, long long d, long long g, long long n, Opt e1, Opt e2, Opt e11, Opt e12,
         Opt b, long long pg) { return to_py(chi_normal(descriptor(fam, d, g, n, e1, e2, e11, e12, b, pg))); },
      FAMILY_ARGS);
  m.def(
      "dim_closed_form",
      [](const std::string& fam, long long d, long long g, long long n, Opt e1, Opt e2, Opt e11, Opt e12,
         Opt b, long long pg) {
        return to_py(dim_closed_form(descriptor(fam, d, g, n, e1, e2, e11, e12, b, pg)));
      },
      FAMILY_ARGS);

  m.def(
      "hilbert_polynomial",
      [](const std::vector<long long>& b, const std::vector<long long>& a, long long N) {
        const RationalPolynomial p = hilbert_polynomial(DegreeMatrix::from_twists(b, a, N));
        py::list out;
        for (int k = 0; k <= p.degree(); ++k) out.append(to_py(p.coefficient(k)));
        return out;
      },
      py::arg("b"), py::arg("a"), py::arg("ambient_dim"),
      "Coefficients in ascending powers of t, as fractions.Fraction.");

  m.def(
      "derive_eb",
      [](long long d, long long g, int alpha) {
        const FibrationDegrees eb = derive_eb(d, g, alpha);
        return py::make_tuple(eb.e, eb.b);
      },
      py::arg("d"), py::arg("g"), py::arg("alpha"));

  m.def(
      "sym", [](const std::vector<long long>& degrees, int k) { return sym(SplitBundle(degrees), k).degrees(); },
      py::arg("degrees"), py::arg("k"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool in-process; returns (exit code, stdout, stderr).");
}
