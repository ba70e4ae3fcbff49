// This code is part of q422.
//
// (C) Copyright 2026 q422 contributors.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "q422/analysis.hpp"
#include "q422/experiments.hpp"

namespace py = pybind11;
using namespace q422;

namespace {

NoiseModel noise_from_object(const py::object& spec) {
  if (py::isinstance<py::str>(spec)) {
    const auto name = spec.cast<std::string>();
    if (name == "zero") return NoiseModel::zero();
    if (name == "fitted") return NoiseModel::fitted();
    throw py::value_error("noise must be 'zero', 'fitted' or a dict");
  }
  if (py::isinstance<py::dict>(spec)) {
    auto d = spec.cast<py::dict>();
    NoiseModel m;
    std::string spam = "identity";
    double p01 = 0.003, p10 = 0.009, crosstalk = 0.0055;
    for (auto item : d) {
      const auto key = item.first.cast<std::string>();
      if (key == "eps1") m.eps1 = item.second.cast<double>();
      else if (key == "eps2") m.eps2 = item.second.cast<double>();
      else if (key == "eps_stark") m.eps_stark = item.second.cast<double>();
      else if (key == "spam") spam = item.second.cast<std::string>();
      else if (key == "spam_p01") p01 = item.second.cast<double>();
      else if (key == "spam_p10") p10 = item.second.cast<double>();
      else if (key == "spam_crosstalk") crosstalk = item.second.cast<double>();
      else throw py::value_error("unknown noise key: " + key);
    }
    if (spam == "synthesized") m.spam = TransferMatrix::synthesized(p01, p10, crosstalk);
    else if (spam != "identity") throw py::value_error("spam must be identity or synthesized");
    m.validate();
    return m;
  }
  throw py::value_error("noise must be 'zero', 'fitted' or a dict");
}

py::dict report_to_dict(const SelectionReport& rep) {
  py::dict out;
  out["yield"] = rep.yield;
  out["pops"] = std::vector<double>{rep.logical_pops[0], rep.logical_pops[1],
                                    rep.logical_pops[2], rep.logical_pops[3]};
  out["pops_defined"] = rep.pops_defined;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "[[4,2,2]] error-detection code simulator and analysis toolkit";

  m.def(
      "pauli_multiply",
      [](const std::string& a, const std::string& b) {
        return pauli_multiply(PauliString::parse(a), PauliString::parse(b)).str();
      },
      py::arg("a"), py::arg("b"));

  m.def(
      "commutes",
      [](const std::string& a, const std::string& b) {
        return commutes(PauliString::parse(a), PauliString::parse(b));
      },
      py::arg("a"), py::arg("b"));

  m.def(
      "decode_logical",
      [](const std::string& bits, const std::string& basis) -> py::object {
        auto out = decode_logical(bits, basis_from_char(basis.at(0)));
        if (!out) return py::none();
        return py::make_tuple(out->la, out->lb);
      },
      py::arg("bits"), py::arg("basis") = "Z",
      "Returns (la, lb), or None for an odd-parity (rejected) string.");

  m.def(
      "build_prep", [](const std::string& label) { return build_prep(label).to_text(); },
      py::arg("label"));
  m.def(
      "build_stabilizer",
      [](const std::string& kind) { return build_stabilizer(stab_from_name(kind)).to_text(); },
      py::arg("kind"));

  m.def(
      "codeword", [](const std::string& label) { return codeword_full(label); },
      py::arg("label"), "Exact 32-amplitude codeword with the ancilla in |0>.");

  m.def(
      "simulate_plan",
      [](const std::string& plan, const py::object& noise) {
        return simulate_plan(ExperimentPlan::parse(plan), noise_from_object(noise));
      },
      py::arg("plan"), py::arg("noise") = "zero",
      "plan: 'state=00L;stab=Sz;basis=Z[;inject=XYII][;alpha=0.02]'. Returns the "
      "32-outcome distribution after SPAM.");

  m.def(
      "postselect",
      [](const Eigen::VectorXd& dist, const std::string& basis, bool used_stabilizer) {
        return report_to_dict(postselect(dist, basis_from_char(basis.at(0)), used_stabilizer));
      },
      py::arg("dist"), py::arg("basis") = "Z", py::arg("used_stabilizer") = false);

  m.def(
      "enumerate_single_faults",
      [](const std::string& label, const std::string& stab) {
        auto rep = enumerate_single_faults(label, stab_from_name(stab));
        py::dict out;
        out["construction"] = rep.construction;
        out["la_error"] = rep.count(FaultClass::LaError);
        out["lb_error"] = rep.count(FaultClass::LbError);
        out["detected"] = rep.count(FaultClass::Detected);
        out["benign"] = rep.count(FaultClass::Benign);
        out["max_la_mass"] = rep.max_la_mass;
        py::list hooks;
        for (const auto& h : rep.hooks())
          hooks.append(py::make_tuple(h.slot, h.qubit, std::string(1, pauli_char(h.pauli))));
        out["hooks"] = hooks;
        return out;
      },
      py::arg("label"), py::arg("stabilizer") = "none");

  m.def("ft_certified", [] {
    for (const auto& rep : ft_certification_suite())
      if (!rep.la_fault_tolerant()) return false;
    return true;
  });

  m.def("statistical_importance", &statistical_importance, py::arg("weight"), py::arg("p"));
  m.def("analytic_no_intrinsic", &analytic_no_intrinsic, py::arg("p"));
  m.def("brute_force_oracle", &brute_force_oracle, py::arg("p"));
  m.def("physical_baseline", &physical_baseline, py::arg("p"), py::arg("r") = 0.003,
        py::arg("f_x") = 0.997);

  m.def(
      "sweep_error_curves",
      [](const std::vector<double>& p_grid, const std::string& scheme, std::uint64_t seed,
         const py::object& noise) {
        auto curve = sweep_error_curves(p_grid, ConfigScheme::make(scheme_from_name(scheme), seed),
                                        noise_from_object(noise));
        Eigen::MatrixXd out(curve.size(), 5);
        for (std::size_t i = 0; i < curve.size(); ++i)
          out.row(i) << curve[i].p, curve[i].pl_a, curve[i].pl_b, curve[i].pl_analytic,
              curve[i].p_physical;
        return out;
      },
      py::arg("p_grid"), py::arg("scheme") = "orbit", py::arg("seed") = 12345,
      py::arg("noise") = "zero",
      "Rows of (p, pL_a, pL_b, pL_analytic, p_physical).");

  m.def(
      "run_miscal_sweep",
      [](const std::vector<double>& alphas, const py::object& noise) {
        py::list out;
        for (const auto& pt : run_miscal_sweep(alphas, noise_from_object(noise))) {
          py::dict d;
          d["alpha"] = pt.alpha;
          d["yield_sx"] = pt.yield_sx;
          d["yield_sz"] = pt.yield_sz;
          d["pops_sx"] = std::vector<double>{pt.pops_sx[0], pt.pops_sx[1], pt.pops_sx[2],
                                             pt.pops_sx[3]};
          d["pops_sz"] = std::vector<double>{pt.pops_sz[0], pt.pops_sz[1], pt.pops_sz[2],
                                             pt.pops_sz[3]};
          out.append(d);
        }
        return out;
      },
      py::arg("alphas"), py::arg("noise") = "fitted");

  m.def(
      "fit_noise_params",
      [](const std::vector<double>& truth, const py::object& base) {
        if (truth.size() != 3) throw py::value_error("truth must have 3 entries");
        NoiseModel truth_model = noise_from_object(base);
        truth_model.eps1 = truth[0];
        truth_model.eps2 = truth[1];
        truth_model.eps_stark = truth[2];
        truth_model.validate();
        auto result = fit_noise_params(make_fit_targets(truth_model), truth_model);
        py::dict out;
        out["params"] = std::vector<double>{result.params[0], result.params[1], result.params[2]};
        out["objective"] = result.objective;
        out["iterations"] = result.iterations;
        out["converged"] = result.converged;
        out["warnings"] = result.warnings;
        return out;
      },
      py::arg("truth"), py::arg("noise") = "fitted",
      "Round-trip fit: synthesize targets at `truth` and recover the parameters.");
}
