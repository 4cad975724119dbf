#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "srf/bounds.hpp"
#include "srf/decoder.hpp"
#include "srf/error_models.hpp"
#include "srf/experiments.hpp"
#include "srf/pole_code.hpp"

namespace py = pybind11;
using namespace srf;

namespace {

// Polynomials cross the boundary as coefficient lists, lowest degree first.
using Coeffs = std::vector<Elem>;
using Column = std::vector<Coeffs>;

Poly to_poly(const Field& F, const Coeffs& c) {
  Coeffs r(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) r[k] = F.reduce(c[k]);
  return Poly(r);
}

Coeffs from_poly(const Poly& p) { return p.coeffs(); }

CodeParams make_code(std::uint64_t p, const std::vector<unsigned>& lambdas, unsigned d_f, unsigned d_g,
                     unsigned ell, const std::optional<std::vector<Elem>>& alphas) {
  const Field F(p);
  std::vector<Point> pts;
  for (std::size_t j = 0; j < lambdas.size(); ++j) {
    const Elem a = alphas ? F.reduce(alphas->at(j)) : static_cast<Elem>(j);
    pts.push_back({a, lambdas[j]});
  }
  if (alphas && alphas->size() != lambdas.size()) throw std::invalid_argument("alphas and lambdas differ in length");
  return CodeParams(PointSystem(F, std::move(pts)), d_f, d_g, ell);
}

FractionVector to_fraction(const CodeParams& cp, const std::vector<Coeffs>& f, const Coeffs& g) {
  FractionVector fv;
  for (const auto& fi : f) fv.f.push_back(to_poly(cp.field(), fi));
  fv.g = to_poly(cp.field(), g);
  return fv;
}

py::object to_py_fraction(const Rational& r) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(py::int_(py::str(numerator(r).str())), py::int_(py::str(denominator(r).str())));
}

Rational from_py_fraction(py::handle h) {
  py::object fr = py::module_::import("fractions").attr("Fraction")(h);
  return Rational(BigInt(py::str(fr.attr("numerator")).cast<std::string>()),
                  BigInt(py::str(fr.attr("denominator")).cast<std::string>()));
}

ReceivedWord to_word(const CodeParams& cp, const std::vector<Column>& cols) {
  if (cols.size() != cp.n()) throw std::invalid_argument("word has the wrong number of columns");
  ReceivedWord R(cp.ell(), cp.n());
  for (std::size_t j = 0; j < cp.n(); ++j) {
    if (cols[j].size() != cp.ell()) throw std::invalid_argument("column has the wrong number of rows");
    for (std::size_t i = 0; i < cp.ell(); ++i) R.at(i, j) = to_poly(cp.field(), cols[j][i]);
  }
  check_word(R, cp);
  return R;
}

std::vector<Column> from_word(const ReceivedWord& R) {
  std::vector<Column> out(R.n());
  for (std::size_t j = 0; j < R.n(); ++j)
    for (const auto& p : R.column(j)) out[j].push_back(from_poly(p));
  return out;
}

using PyPoleColumn = std::pair<unsigned, Column>;

PoleWord to_pole_word(const CodeParams& cp, const std::vector<PyPoleColumn>& cols) {
  std::vector<PoleColumn> pc;
  for (const auto& [vr, rows] : cols) {
    PoleColumn c{vr, {}};
    for (const auto& r : rows) c.r.push_back(to_poly(cp.field(), r));
    pc.push_back(std::move(c));
  }
  PoleWord w(std::move(pc));
  check_pole_word(w, cp);
  return w;
}

std::vector<PyPoleColumn> from_pole_word(const PoleWord& w) {
  std::vector<PyPoleColumn> out;
  for (const auto& c : w.columns()) {
    Column rows;
    for (const auto& r : c.r) rows.push_back(from_poly(r));
    out.emplace_back(c.vr, std::move(rows));
  }
  return out;
}

py::object outcome(const DecodeOutcome& o) {
  py::dict d;
  d["success"] = o.success();
  d["reason"] = to_string(o.reason);
  if (o.success()) {
    std::vector<Coeffs> f;
    for (const auto& p : o.fraction->f) f.push_back(from_poly(p));
    d["f"] = f;
    d["g"] = from_poly(o.fraction->g);
  } else {
    d["f"] = py::none();
    d["g"] = py::none();
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_srf, m) {
  m.doc() = "Simultaneous rational function codes over prime fields";

  py::register_exception<FieldError>(m, "FieldError", PyExc_ValueError);
  py::register_exception<ModelError>(m, "ModelError", PyExc_ValueError);
  py::register_exception<CodeError>(m, "CodeError", PyExc_ValueError);
  py::register_exception<DecodeError>(m, "DecodeError", PyExc_ValueError);
  py::register_exception<BoundError>(m, "BoundError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::class_<CodeParams>(m, "Code")
      .def(py::init(&make_code), py::arg("p"), py::arg("lambdas"), py::arg("d_f"), py::arg("d_g"),
           py::arg("ell") = 1, py::arg("alphas") = py::none())
      .def_property_readonly("p", [](const CodeParams& c) { return c.field().prime(); })
      .def_property_readonly("n", &CodeParams::n)
      .def_property_readonly("L", &CodeParams::L)
      .def_property_readonly("d_f", &CodeParams::d_f)
      .def_property_readonly("d_g", &CodeParams::d_g)
      .def_property_readonly("ell", &CodeParams::ell)
      .def_property_readonly("alphas",
                             [](const CodeParams& c) {
                               std::vector<Elem> a;
                               for (std::size_t j = 0; j < c.n(); ++j) a.push_back(c.points().alpha(j));
                               return a;
                             })
      .def_property_readonly("lambdas", [](const CodeParams& c) { return c.points().lambdas(); })
      .def_property_readonly("unique_radius", &CodeParams::unique_radius)
      .def_property_readonly("t_max",
                             [](const CodeParams& c) { return to_py_fraction(t_max(c.ell(), c.L(), c.d_f(), c.d_g())); })
      .def("__repr__", [](const CodeParams& c) {
        return "Code(p=" + std::to_string(c.field().prime()) + ", L=" + std::to_string(c.L()) +
               ", d_f=" + std::to_string(c.d_f()) + ", d_g=" + std::to_string(c.d_g()) +
               ", ell=" + std::to_string(c.ell()) + ")";
      });

  m.def(
      "encode",
      [](const CodeParams& cp, const std::vector<Coeffs>& f, const Coeffs& g) {
        return from_word(encode(to_fraction(cp, f, g), cp));
      },
      py::arg("code"), py::arg("f"), py::arg("g"),
      "Residues of f_i/g, as columns[j][i] = coefficient list mod (x - alpha_j)^lambda_j.");

  m.def(
      "decode",
      [](const CodeParams& cp, const std::vector<Column>& word, unsigned t, const std::string& solver) {
        if (solver != "implicit" && solver != "explicit") throw std::invalid_argument("solver must be implicit or explicit");
        const ReceivedWord R = to_word(cp, word);
        DecodeOutcome o;
        {
          py::gil_scoped_release release;
          o = decode(R, cp, t, solver == "explicit" ? KeySolver::Explicit : KeySolver::Implicit);
        }
        return outcome(o);
      },
      py::arg("code"), py::arg("word"), py::arg("t"), py::arg("solver") = "implicit");

  m.def(
      "distance",
      [](const CodeParams& cp, const std::vector<Column>& a, const std::vector<Column>& b) {
        return distance(to_word(cp, a), to_word(cp, b), cp);
      },
      py::arg("code"), py::arg("a"), py::arg("b"));

  m.def(
      "encode_poles",
      [](const CodeParams& cp, const std::vector<Coeffs>& f, const Coeffs& g) {
        return from_pole_word(encode_multiprecision(to_fraction(cp, f, g), cp));
      },
      py::arg("code"), py::arg("f"), py::arg("g"),
      "Multi-precision encoding: a list of (vr_j, rows) pairs.");

  m.def(
      "reduce",
      [](const CodeParams& cp, const std::vector<PyPoleColumn>& w) {
        return from_pole_word(reduce_representative(to_pole_word(cp, w), cp));
      },
      py::arg("code"), py::arg("word"));

  m.def(
      "pole_distance",
      [](const CodeParams& cp, const std::vector<PyPoleColumn>& a, const std::vector<PyPoleColumn>& b) {
        return pole_distance(reduce_representative(to_pole_word(cp, a), cp),
                             reduce_representative(to_pole_word(cp, b), cp), cp);
      },
      py::arg("code"), py::arg("a"), py::arg("b"));

  m.def(
      "decode_poles",
      [](const CodeParams& cp, const std::vector<PyPoleColumn>& w, unsigned t, const std::string& system) {
        if (system != "reduced" && system != "unreduced") throw std::invalid_argument("system must be reduced or unreduced");
        const PoleWord R = reduce_representative(to_pole_word(cp, w), cp);
        return outcome(
            decode_poles(R, cp, t, system == "unreduced" ? PoleKeySystem::Unreduced : PoleKeySystem::Reduced));
      },
      py::arg("code"), py::arg("word"), py::arg("t"), py::arg("system") = "reduced");

  m.def(
      "min_distance",
      [](const CodeParams& cp, bool poles) {
        return (poles ? min_distance_bruteforce_poles(cp) : min_distance_bruteforce(cp)).min_distance;
      },
      py::arg("code"), py::arg("poles") = false);

  m.def(
      "subset_sum_witness",
      [](const std::vector<unsigned>& lambdas, unsigned d_f, unsigned d_g) -> py::object {
        const auto w = check_subset_sum_constraint(lambdas, d_f, d_g);
        if (!w) return py::none();
        py::dict d;
        d["s0"] = w->s0;
        d["s_inf"] = w->s_inf;
        d["eta"] = w->eta;
        d["gamma"] = w->gamma;
        d["delta0"] = w->delta0;
        d["delta_inf"] = w->delta_inf;
        return d;
      },
      py::arg("lambdas"), py::arg("d_f"), py::arg("d_g"), "Point indices are 0-based.");

  m.def(
      "omega_count",
      [](std::uint64_t q, const std::vector<unsigned>& lambda, const std::vector<unsigned>& eta, unsigned ell) {
        return py::int_(py::str(omega_count(q, lambda, eta, ell).str()));
      },
      py::arg("q"), py::arg("lam"), py::arg("eta"), py::arg("ell"));

  m.def(
      "t_max", [](unsigned ell, unsigned L, unsigned d_f, unsigned d_g) { return to_py_fraction(t_max(ell, L, d_f, d_g)); },
      py::arg("ell"), py::arg("L"), py::arg("d_f"), py::arg("d_g"));
  m.def(
      "t_bar",
      [](unsigned ell, unsigned L, unsigned d_f, unsigned d_g, unsigned t_fixed) {
        return to_py_fraction(t_bar_i(ell, L, d_f, d_g, t_fixed));
      },
      py::arg("ell"), py::arg("L"), py::arg("d_f"), py::arg("d_g"), py::arg("t_fixed"));

  m.def(
      "bound",
      [](const std::string& kind, std::uint64_t q, unsigned ell, unsigned t, py::handle radius,
         const std::vector<unsigned>& nu, bool prefactored) {
        const Rational r = from_py_fraction(radius);
        BoundValue v;
        if (kind == "E1") v = bound_thm1(q, ell, t, r, nu);
        else if (kind == "E2") v = bound_thm2(q, ell, t, r, nu);
        else if (kind == "H1") v = bound_thm1_hybrid(q, ell, t, r, nu);
        else if (kind == "H2") v = bound_thm2_hybrid(q, ell, t, r, nu);
        else if (kind == "B1") v = bound_thm1_poles(q, ell, t, r, nu, prefactored);
        else if (kind == "B2") v = bound_thm2_poles(q, ell, t, r, nu, prefactored);
        else throw std::invalid_argument("kind must be one of E1, E2, H1, H2, B1, B2");
        return to_py_fraction(v.value);
      },
      py::arg("kind"), py::arg("q"), py::arg("ell"), py::arg("t"), py::arg("radius"), py::arg("nu"),
      py::arg("prefactored") = false,
      "Exact failure probability bound. `t` counts the random errors and `radius` is t_max or t_bar.");

  m.def(
      "run_campaign",
      [](const std::string& config_text, unsigned threads) {
        const Campaign c = prepare_campaign(parse_config(config_text));
        CampaignReport rep;
        {
          py::gil_scoped_release release;
          rep = run_campaign(c, threads);
        }
        py::dict d;
        d["trials"] = rep.gate.trials;
        d["failures"] = rep.failures;
        d["allowed"] = rep.gate.allowed;
        d["passed"] = rep.gate.pass;
        d["bound"] = to_py_fraction(c.bound.value);
        d["csv"] = csv_header() + csv_rows(c, rep);
        d["summary"] = summary(c, rep);
        return d;
      },
      py::arg("config"), py::arg("threads") = 0, "Runs a campaign described in the key = value config format.");
}
