// Python module _peakfn. Expressions cross the boundary as JSON text; the
// peakfn package decodes them.

#include "peakfn/cli.hpp"
#include "peakfn/insertion.hpp"
#include "peakfn/pattern_peak.hpp"
#include "peakfn/text.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace peakfn;

namespace {

std::string expansion_json(const ExpandResult& r) {
  return std::visit([](const auto& x) { return to_json(x).dump(); }, r);
}

QsymExpr in_basis(const QsymExpr& k, const std::string& basis) {
  switch (parse_basis(basis)) {
    case Basis::K:
      return k;
    case Basis::F:
      return k_to_f(k);
    case Basis::M:
      return to_m(k);
  }
  return k;
}

py::tuple rows_with_marks(const MarkedShiftedTableau& t) {
  return py::make_tuple(t.base().rows(), std::vector<int>(t.marks().begin(), t.marks().end()));
}

}  // namespace

PYBIND11_MODULE(_peakfn, m) {
  m.doc() = "Pattern-avoiding peak functions and Schur Q expansions";

  m.def(
      "r_n",
      [](const std::string& patterns, int n, const std::string& basis, int jobs) {
        if (n < 0) throw std::invalid_argument("n must be non-negative");
        return to_json(in_basis(r_n(parse_pattern_set(patterns), n, jobs), basis)).dump();
      },
      py::arg("patterns"), py::arg("n"), py::arg("basis") = "K", py::arg("jobs") = 1);
  m.def(
      "expand",
      [](const std::string& patterns, int n) {
        if (n < 0) throw std::invalid_argument("n must be non-negative");
        return expansion_json(expand_in_schurq(r_n(parse_pattern_set(patterns), n)));
      },
      py::arg("patterns"), py::arg("n"));
  m.def(
      "is_symmetric", [](const std::string& patterns, int n) { return is_symmetric(r_n(parse_pattern_set(patterns), n)); },
      py::arg("patterns"), py::arg("n"));
  m.def(
      "schur_q", [](const std::string& parts) { return to_json(schur_q(parse_strict_partition(parts))).dump(); },
      py::arg("partition"));
  m.def(
      "peaks",
      [](const std::string& perm) {
        const Permutation p = parse_permutation(perm);
        return py::make_tuple(descent_set(p).elements(), peak_set(p).elements());
      },
      py::arg("perm"));
  m.def(
      "rsk",
      [](const std::string& perm) {
        const RskResult r = rsk(parse_permutation(perm));
        return py::make_tuple(r.insertion.rows(), r.recording.rows());
      },
      py::arg("perm"));
  m.def(
      "sagan_worley",
      [](const std::string& perm) {
        const SwResult r = sagan_worley(parse_permutation(perm));
        return py::make_tuple(r.insertion.rows(), rows_with_marks(r.recording));
      },
      py::arg("perm"));
  m.def(
      "phi", [](const std::string& perm) { return phi(parse_permutation(perm)).rows(); }, py::arg("perm"));
  m.def(
      "phi_preimage",
      [](const std::string& tableau) {
        std::vector<std::string> out;
        for (const auto& p : phi_preimage(parse_shifted_tableau(tableau))) out.push_back(format_permutation(p));
        return out;
      },
      py::arg("tableau"));
  m.def(
      "nonsymmetric_witness",
      [](const std::string& patterns, int n_max) { return find_nonsymmetric_witness(parse_pattern_set(patterns), n_max); },
      py::arg("patterns"), py::arg("n_max"));
  m.def(
      "conjecture_check", [](int k, int n) { return to_json(conjecture_check(k, n)).dump(); }, py::arg("k"),
      py::arg("n"));
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        int code = 0;
        {
          py::gil_scoped_release release;
          code = peakfn::run_cli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
