#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "kostant/alternation.hpp"
#include "kostant/cli.hpp"
#include "kostant/combinatorics.hpp"
#include "kostant/errors.hpp"
#include "kostant/multiplicity.hpp"
#include "kostant/partition.hpp"
#include "kostant/weights.hpp"
#include "kostant/weyl.hpp"

namespace py = pybind11;
using namespace kostant;

namespace {

using Coords = std::vector<Coeff>;

Coords coords_of(const Weight& w) { return {w.coords().begin(), w.coords().end()}; }

std::vector<QPolynomial::Coefficient> coeffs_of(const QPolynomial& p) {
  return {p.coeffs().begin(), p.coeffs().end()};
}

BoundarySide side_from(const std::string& s) {
  if (s == "left") return BoundarySide::Left;
  if (s == "right") return BoundarySide::Right;
  throw ArgumentError("side must be 'left' or 'right', got '" + s + "'");
}

Method method_from(const std::string& s) {
  auto m = method_from_string(s);
  if (!m) throw ArgumentError("unknown method '" + s + "'");
  return *m;
}

int cap_or_default(std::optional<int> cap) { return cap.value_or(default_brute_cap()); }

py::dict report_dict(const MultiplicityReport& r) {
  py::dict d;
  d["rank"] = r.rank;
  d["lambda"] = coords_of(r.lambda);
  d["mu"] = coords_of(r.mu);
  d["coeffs"] = coeffs_of(r.q_multiplicity);
  d["pretty"] = r.q_multiplicity.to_string();
  d["multiplicity_at_one"] = r.multiplicity_at_one;
  d["method"] = std::string(to_string(r.method));
  d["term_count"] = r.term_count;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Weyl alternation sets, Kostant partition functions and q-multiplicities for sl_{r+1}";

  static py::exception<CapacityError> capacity_error(m, "CapacityError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ArgumentError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const CapacityError& e) {
      capacity_error(e.what());
    } catch (const OverflowError& e) {
      PyErr_SetString(PyExc_OverflowError, e.what());
    }
  });

  // weights
  m.def("simple_root", [](int r, int i) { return coords_of(simple_root(r, i)); });
  m.def("interval_root", [](int r, int i, int j) { return coords_of(interval_root(RootInterval(r, i, j))); });
  m.def("height", [](const Coords& c) { return height(Weight(c)); });
  m.def("two_rho", [](int r) { return coords_of(two_rho(r)); });

  // weyl
  py::class_<WeylElement>(m, "WeylElement")
      .def_static("identity", &WeylElement::identity)
      .def_static("from_word", [](int r, const std::vector<int>& w) { return WeylElement::from_word(r, w); })
      .def_static("from_perm", &WeylElement::from_perm)
      .def_property_readonly("rank", &WeylElement::rank)
      .def_property_readonly("perm", [](const WeylElement& s) {
        return std::vector<int>(s.perm().begin(), s.perm().end());
      })
      .def("length", &WeylElement::length)
      .def("reduced_word", &WeylElement::reduced_word)
      .def("support", &WeylElement::support)
      .def("inverse", &WeylElement::inverse)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__hash__", [](const WeylElement& s) {
        return py::hash(py::tuple(py::cast(std::vector<int>(s.perm().begin(), s.perm().end()))));
      })
      .def("__repr__", [](const WeylElement& s) { return "<WeylElement " + s.to_string() + ">"; });
  m.def("apply", [](const WeylElement& s, const Coords& c) { return coords_of(apply(s, Weight(c))); });
  m.def("shifted_action",
        [](const WeylElement& s, const Coords& c) { return coords_of(shifted_action(s, Weight(c))); });
  m.def("weyl_group_order", [](int r, std::optional<int> cap) {
    std::int64_t n = 0;
    for (const auto& s : enumerate_all(r, cap_or_default(cap))) { (void)s; ++n; }
    return n;
  }, py::arg("r"), py::arg("cap") = py::none());

  // partition
  m.def("kostant_q", [](int r, const Coords& c) { return coeffs_of(kostant_q(r, Weight(c))); });
  m.def("kostant_count", [](int r, const Coords& c) { return kostant_count(r, Weight(c)); });
  m.def("kostant_q_oracle", [](int r, const Coords& c, int cap) {
    return coeffs_of(kostant_q_oracle(r, Weight(c), cap));
  }, py::arg("r"), py::arg("xi"), py::arg("height_cap") = kDefaultOracleHeightCap);
  m.def("consecutive_closed_form", [](int s) { return coeffs_of(consecutive_closed_form(s)); });
  m.def("format_polynomial", [](const std::vector<QPolynomial::Coefficient>& c) {
    return QPolynomial(c).to_string();
  });

  // combinatorics
  m.def("fibonacci", &fibonacci);
  m.def("binomial_safe", &binomial_safe);
  m.def("nonconsecutive_subsets", [](int n) { return nonconsecutive_subsets(n); });
  m.def("nonconsecutive_count_k", &nonconsecutive_count_k);
  m.def("fib_identity_check", &fib_identity_check);

  // alternation
  m.def("alt_set_bruteforce", [](int r, int i, int j, std::optional<int> cap) {
    RootInterval iv(r, i, j);
    return alt_set_bruteforce(highest_root(r), interval_root(iv), cap_or_default(cap)).elements();
  }, py::arg("r"), py::arg("i"), py::arg("j"), py::arg("cap") = py::none());
  m.def("alt_set_characterized",
        [](int r, int i, int j) { return alt_set_characterized(RootInterval(r, i, j)).elements(); });
  m.def("alt_cardinality", [](int r, int i, int j) { return alt_cardinality(RootInterval(r, i, j)); });
  m.def("count_by_length", [](int r, int i, int j, int k, const std::string& side, bool contains) {
    return count_by_length(RootInterval(r, i, j), k, side_from(side), contains);
  }, py::arg("r"), py::arg("i"), py::arg("j"), py::arg("k"), py::arg("side"), py::arg("contains"));
  m.def("max_length", [](int r, int i, int j, const std::string& side, bool contains) {
    return max_length(RootInterval(r, i, j), side_from(side), contains);
  }, py::arg("r"), py::arg("i"), py::arg("j"), py::arg("side"), py::arg("contains"));

  // multiplicity
  m.def("q_multiplicity", [](const Coords& lambda, const Coords& mu, const std::string& method,
                             std::optional<int> cap) {
    return report_dict(q_multiplicity(Weight(lambda), Weight(mu), method_from(method), cap_or_default(cap)));
  }, py::arg("lambda_"), py::arg("mu"), py::arg("method") = "kwmf_full", py::arg("cap") = py::none());
  m.def("multiplicity_at_one", [](const Coords& lambda, const Coords& mu, std::optional<int> cap) {
    return multiplicity_at_one(Weight(lambda), Weight(mu), cap_or_default(cap));
  }, py::arg("lambda_"), py::arg("mu"), py::arg("cap") = py::none());
  m.def("closed_form_term", [](int r, int i, int j, const WeylElement& s) {
    return coeffs_of(closed_form_term(RootInterval(r, i, j), s));
  });
  m.def("q_multiplicity_closed",
        [](int r, int i, int j) { return coeffs_of(q_multiplicity_closed(RootInterval(r, i, j))); });
  m.def("predicted_q_multiplicity",
        [](int r, int i, int j) { return coeffs_of(predicted_q_multiplicity(RootInterval(r, i, j))); });

  // cli
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code;
    {
      py::gil_scoped_release release;
      code = cli::run(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  });
}
