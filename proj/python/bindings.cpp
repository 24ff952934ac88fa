#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cohnl/coherence.hpp"
#include "cohnl/incoherent_ops.hpp"
#include "cohnl/json_io.hpp"
#include "cohnl/nonlocality.hpp"
#include "cohnl/theorem_lab.hpp"

namespace py = pybind11;
using namespace cohnl;

namespace {

py::object to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& e : j) out.append(to_py(e));
      return out;
    }
    default: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_py(v);
      return out;
    }
  }
}

DensityMatrix state(const ComplexMatrix& m, const Dims& dims) { return DensityMatrix(m, dims); }

OracleOptions oracle(int resolution, std::uint64_t seed) {
  OracleOptions o;
  o.resolution = resolution;
  o.seed = seed;
  return o;
}

CampaignOptions campaign(int trials, std::uint64_t seed, int resolution) {
  CampaignOptions o;
  o.trials = trials;
  o.seed = seed;
  o.oracle.resolution = resolution;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Coherence measures, incoherent conversions and nonlocality certificates";

  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);

  const auto rho_arg = py::arg("rho");
  const auto dims_arg = py::arg("dims") = Dims{};

  m.def("validate", [](const ComplexMatrix& r, const Dims& d) { return state(r, d).matrix(); }, rho_arg, dims_arg,
        "Return the matrix if it is a valid density matrix, raise InvalidArgument otherwise.");
  m.def("c_l1", [](const ComplexMatrix& r) { return c_l1(state(r, {})); }, rho_arg);
  m.def("c_rel_entropy", [](const ComplexMatrix& r) { return c_rel_entropy(state(r, {})); }, rho_arg);
  m.def("dephase", [](const ComplexMatrix& r) { return dephase(state(r, {})).matrix(); }, rho_arg);
  m.def("coherence_report", [](const ComplexMatrix& r) { return to_py(to_json(coherence_report(state(r, {})))); },
        rho_arg);
  m.def("is_incoherent_kraus",
        [](const std::vector<ComplexMatrix>& ops) { return is_incoherent_kraus(KrausSet(ops)); }, py::arg("operators"));

  m.def("cnot", &cnot);
  m.def("fanout_unitary", [](int d, int n) { return fanout_unitary({d, n}); }, py::arg("d"), py::arg("n"));
  m.def("convert", [](const ComplexMatrix& r, int n) { return convert(state(r, {}), {static_cast<int>(r.rows()), n}).matrix(); },
        rho_arg, py::arg("n") = 2, "Fan-out image of a source qudit on n parties (ancillas in |0>).");

  m.def("horodecki_M", [](const ComplexMatrix& r) { return horodecki_M(state(r, {2, 2})); }, rho_arg);
  m.def("chsh_max", [](const ComplexMatrix& r) { return chsh_max(state(r, {2, 2})); }, rho_arg);
  m.def("chsh_oracle",
        [](const ComplexMatrix& r, int res, std::uint64_t seed) {
          return to_py(to_json(chsh_grid_oracle(state(r, {2, 2}), oracle(res, seed))));
        },
        rho_arg, py::arg("resolution") = 16, py::arg("seed") = 7);
  m.def("projected_chsh",
        [](const ComplexMatrix& r, int d, int alpha, int beta, int gamma, int lambda) {
          return to_py(to_json(projected_chsh(state(r, {d, d}), {alpha, beta, gamma, lambda, d})));
        },
        rho_arg, py::arg("d"), py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("lambda_"));
  m.def("pair_witness",
        [](const ComplexMatrix& r) {
          const auto w = theorem2_witness(state(r, {}));
          py::dict out;
          out["i"] = w.i;
          out["j"] = w.j;
          out["coherence"] = w.coherence;
          out["threshold"] = w.threshold;
          out["holds"] = w.holds;
          out["report"] = to_py(to_json(w.report));
          return out;
        },
        rho_arg);

  m.def("svetlichny_lambda1", [](const ComplexMatrix& r) { return svetlichny_lambda1(state(r, {2, 2, 2})); }, rho_arg);
  m.def("svetlichny_oracle",
        [](const ComplexMatrix& r, int res, std::uint64_t seed) {
          return to_py(to_json(svetlichny_oracle(state(r, {2, 2, 2}), oracle(res, seed))));
        },
        rho_arg, py::arg("resolution") = 16, py::arg("seed") = 7);
  m.def("t_value",
        [](const ComplexMatrix& r, bool swap_z) { return t_value(state(r, {2, 2, 2}), reference_t_settings(swap_z)); },
        rho_arg, py::arg("swap_z") = false);
  m.def("ns_oracle",
        [](const ComplexMatrix& r, int res, std::uint64_t seed) {
          return to_py(to_json(ns_oracle(state(r, {2, 2, 2}), oracle(res, seed))));
        },
        rho_arg, py::arg("resolution") = 16, py::arg("seed") = 7);

  m.def("c_gme_pure", [](const ComplexMatrix& r, const Dims& d) { return c_gme_pure(state(r, d)); }, rho_arg,
        py::arg("dims"));
  m.def("c_gme_converted", [](const ComplexMatrix& r, int n) { return c_gme_converted(state(r, {}), n); }, rho_arg,
        py::arg("n"));

  m.def("pair_threshold", &pair_threshold, py::arg("diag_sum"));
  m.def("coherence_thresholds", &coherence_thresholds);
  m.def("verify",
        [](const std::string& which, int trials, std::uint64_t seed, int resolution) {
          const auto o = campaign(trials, seed, resolution);
          std::vector<CampaignResult> results;
          if (which == "all") results = verify_all(o);
          else if (which == "chsh-conversion") results.push_back(verify_chsh_conversion(o));
          else if (which == "projected-chsh") results.push_back(verify_projected_chsh(o, 3));
          else if (which == "relative-entropy-chain") results.push_back(verify_relative_entropy_chain(o));
          else if (which == "gme-conversion") results.push_back(verify_gme_conversion(o, 3));
          else if (which == "tripartite-thresholds") results.push_back(verify_tripartite_thresholds(o));
          else throw InvalidArgument("verify: unknown campaign " + which);
          py::list out;
          for (const auto& r : results) out.append(to_py(to_json(r)));
          return out;
        },
        py::arg("which") = "all", py::arg("trials") = 1000, py::arg("seed") = 7, py::arg("resolution") = 16);
}
