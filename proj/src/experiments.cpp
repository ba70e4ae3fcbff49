// This code is part of q422.
//
// (C) Copyright 2026 q422 contributors.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "q422/experiments.hpp"

#include <sstream>
#include <stdexcept>

#include "q422/detail/parallel.hpp"

namespace q422 {

const char* stab_name(StabKind s) {
  switch (s) {
    case StabKind::None: return "none";
    case StabKind::Sx: return "Sx";
    case StabKind::Sz: return "Sz";
  }
  return "?";
}

StabKind stab_from_name(std::string_view name) {
  if (name == "none" || name == "None") return StabKind::None;
  if (name == "Sx" || name == "sx" || name == "SX") return StabKind::Sx;
  if (name == "Sz" || name == "sz" || name == "SZ") return StabKind::Sz;
  throw std::invalid_argument("unknown stabilizer: " + std::string(name));
}

Circuit build_prep(std::string_view label) {
  const std::string name(label);
  Circuit c(5);
  if (name == "00L" || name == "01L" || name == "10L" || name == "11L") {
    c.append(GateOp::h(2))
        .append(GateOp::cnot(2, 3))
        .append(GateOp::cnot(2, 1))
        .append(GateOp::cnot(3, 4));
    if (name == "01L") c.append(GateOp::x(1)).append(GateOp::x(2));  // X_b
    if (name == "10L") c.append(GateOp::x(1)).append(GateOp::x(3));  // X_a
    if (name == "11L") c.append(GateOp::x(2)).append(GateOp::x(3));  // X_a X_b
    return c;
  }
  if (name == "++L" || name == "+-L" || name == "-+L" || name == "--L") {
    c.append(GateOp::h(1))
        .append(GateOp::h(2))
        .append(GateOp::h(4))
        .append(GateOp::cnot(2, 3))
        .append(GateOp::cnot(1, 3))
        .append(GateOp::cnot(4, 2));
    if (name == "+-L") c.append(GateOp::z(1)).append(GateOp::z(3));  // Z_b
    if (name == "-+L") c.append(GateOp::z(1)).append(GateOp::z(2));  // Z_a
    if (name == "--L") c.append(GateOp::z(2)).append(GateOp::z(3));  // Z_a Z_b
    return c;
  }
  if (name == "0+L") {
    return c.append(GateOp::h(1))
        .append(GateOp::cnot(1, 2))
        .append(GateOp::h(3))
        .append(GateOp::cnot(3, 4));
  }
  if (name == "-1L") {
    return c.append(GateOp::x(3))
        .append(GateOp::h(1))
        .append(GateOp::cnot(1, 3))
        .append(GateOp::z(1))
        .append(GateOp::x(4))
        .append(GateOp::h(2))
        .append(GateOp::cnot(2, 4))
        .append(GateOp::z(2));
  }
  throw std::invalid_argument("unknown logical state label: " + name);
}

Circuit build_stabilizer(StabKind kind) {
  Circuit c(5);
  switch (kind) {
    case StabKind::None:
      return c;
    case StabKind::Sx:
      return c.append(GateOp::h(5))
          .append(GateOp::cnot(5, 1))
          .append(GateOp::cnot(5, 2))
          .append(GateOp::cnot(5, 3))
          .append(GateOp::cnot(5, 4))
          .append(GateOp::h(5));
    case StabKind::Sz:
      // control order (2,4,1,3): an ancilla Z fault after two CNOTs
      // propagates to Z1 Z3 = Z_b, never an L_a operator
      return c.append(GateOp::cnot(2, 5))
          .append(GateOp::cnot(4, 5))
          .append(GateOp::cnot(1, 5))
          .append(GateOp::cnot(3, 5));
  }
  return c;
}

std::string ExperimentPlan::key() const {
  std::string k = "state=" + state;
  k += ";stab=";
  k += stab_name(stabilizer);
  k += ";basis=";
  k += basis_char(basis);
  if (injected) k += ";inject=" + injected->str().substr(injected->phase_pow() == 0 ? 1 : 0);
  if (decompose_cnot) {
    char buf[32];
    std::snprintf(buf, sizeof buf, ";alpha=%.12g", alpha);
    k += buf;
  }
  return k;
}

ExperimentPlan ExperimentPlan::parse(std::string_view text) {
  ExperimentPlan plan;
  std::string item;
  std::istringstream in{std::string(text)};
  bool basis_given = false;
  while (std::getline(in, item, ';')) {
    std::istringstream lines(item);
    std::string kv;
    while (lines >> kv) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("expected key=value: " + kv);
      std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
      if (key == "state") plan.state = value;
      else if (key == "stab" || key == "stabilizer") plan.stabilizer = stab_from_name(value);
      else if (key == "basis") { plan.basis = basis_from_char(value.at(0)); basis_given = true; }
      else if (key == "inject") plan.injected = PauliString::parse(value);
      else if (key == "alpha") { plan.alpha = std::stod(value); plan.decompose_cnot = true; }
      else throw std::invalid_argument("unknown plan key: " + key);
    }
  }
  if (!basis_given) plan.basis = find_label(plan.state).def_basis;
  return plan;
}

Eigen::VectorXd simulate_plan(const ExperimentPlan& plan, const NoiseModel& noise) {
  RunOptions opt{plan.decompose_cnot, plan.alpha};
  DensityMatrix rho = run(build_prep(plan.state), noise, zero_state(5), opt);
  if (plan.injected) {
    if (plan.injected->size() != 4)
      throw std::invalid_argument("injected error must act on the 4 data qubits");
    apply_pauli(rho, *plan.injected);
  }
  if (plan.stabilizer != StabKind::None)
    rho = run(build_stabilizer(plan.stabilizer), noise, std::move(rho), opt);
  Eigen::VectorXd dist = measure_distribution(rho, uniform_bases(5, plan.basis));
  return noise.spam.apply(dist);
}

double SelectionReport::la_error(int la_true) const {
  return la_true == 0 ? logical_pops[2] + logical_pops[3] : logical_pops[0] + logical_pops[1];
}

double SelectionReport::lb_error(int lb_true) const {
  return lb_true == 0 ? logical_pops[1] + logical_pops[3] : logical_pops[0] + logical_pops[2];
}

SelectionReport postselect(const Eigen::VectorXd& dist, Basis meas_basis, bool used_stabilizer) {
  if (dist.size() != 32) throw std::invalid_argument("expected a 32-outcome distribution");
  SelectionReport rep;
  rep.raw_dist = dist;
  Eigen::Vector4d pops = Eigen::Vector4d::Zero();
  for (int s = 0; s < 32; ++s) {
    if (used_stabilizer && (s & 1)) continue;  // ancilla read |1>
    const std::array<int, 4> bits = {(s >> 4) & 1, (s >> 3) & 1, (s >> 2) & 1, (s >> 1) & 1};
    auto outcome = decode_logical(bits, meas_basis);
    if (!outcome) continue;  // odd parity
    rep.yield += dist[s];
    pops[(outcome->la << 1) | outcome->lb] += dist[s];
  }
  rep.pops_defined = rep.yield > 1e-15;
  if (rep.pops_defined) rep.logical_pops = pops / rep.yield;
  return rep;
}

const char* fault_class_name(FaultClass c) {
  switch (c) {
    case FaultClass::Detected: return "detected";
    case FaultClass::Benign: return "benign";
    case FaultClass::LbError: return "lb_error";
    case FaultClass::LaError: return "la_error";
  }
  return "?";
}

int FaultReport::count(FaultClass c) const {
  int n = 0;
  for (const auto& s : sites)
    if (s.cls == c) ++n;
  return n;
}

std::vector<FaultSite> FaultReport::hooks() const {
  std::vector<FaultSite> out;
  for (const auto& s : sites)
    if (s.cls == FaultClass::LbError) out.push_back(s);
  return out;
}

FaultReport enumerate_single_faults(const Circuit& prep, const Circuit* stabilizer,
                                    Basis meas_basis, int la0, int lb0,
                                    std::string_view construction_name) {
  Circuit full = prep;
  if (stabilizer) full.append(*stabilizer);
  const bool use_anc = stabilizer != nullptr;
  const int max_qubit = use_anc ? 5 : 4;
  const auto bases = uniform_bases(5, meas_basis);
  constexpr double kTol = 1e-12;

  FaultReport report;
  report.construction = construction_name;
  for (std::size_t slot = 0; slot <= full.ops.size(); ++slot) {
    for (int q = 1; q <= max_qubit; ++q) {
      for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
        StateVector psi = zero_state(5);
        for (std::size_t i = 0; i < slot; ++i) apply_gate(psi, full.ops[i]);
        std::vector<Pauli> letters(5, Pauli::I);
        letters[q - 1] = p;
        apply_pauli(psi, PauliString(std::move(letters)));
        for (std::size_t i = slot; i < full.ops.size(); ++i) apply_gate(psi, full.ops[i]);

        auto rep = postselect(measure_distribution(psi, bases), meas_basis, use_anc);
        FaultSite site{slot, q, p, FaultClass::Detected, rep.yield, 0.0, 0.0};
        if (rep.pops_defined) {
          site.la_wrong = rep.yield * rep.la_error(la0);
          if (lb0 >= 0) site.lb_wrong = rep.yield * rep.lb_error(lb0);
          if (site.la_wrong > kTol) site.cls = FaultClass::LaError;
          else if (site.lb_wrong > kTol) site.cls = FaultClass::LbError;
          else site.cls = FaultClass::Benign;
        }
        report.max_la_mass = std::max(report.max_la_mass, site.la_wrong);
        report.sites.push_back(site);
      }
    }
  }
  return report;
}

FaultReport enumerate_single_faults(std::string_view label, StabKind stab) {
  const LogicalLabel& info = find_label(label);
  const Basis basis = info.def_basis;
  Circuit prep = build_prep(label);
  std::string name = std::string(label);
  if (stab != StabKind::None) name += std::string("+") + stab_name(stab);
  if (stab == StabKind::None)
    return enumerate_single_faults(prep, nullptr, basis, info.la(basis), info.lb(basis), name);
  Circuit st = build_stabilizer(stab);
  return enumerate_single_faults(prep, &st, basis, info.la(basis), info.lb(basis), name);
}

std::vector<FaultReport> ft_certification_suite() {
  std::vector<FaultReport> reports;
  const char* preps[] = {"00L", "++L", "0+L", "-1L"};
  for (const char* p : preps) reports.push_back(enumerate_single_faults(p, StabKind::None));
  for (StabKind st : {StabKind::Sx, StabKind::Sz})
    for (const char* p : preps) reports.push_back(enumerate_single_faults(p, st));
  return reports;
}

std::vector<CampaignRow> run_injection_campaign(
    const std::vector<std::pair<PauliString, double>>& configs, const NoiseModel& noise) {
  std::vector<CampaignRow> rows(configs.size());
  detail::parallel_for(configs.size(), [&](std::size_t i) {
    const auto& [pauli, mult] = configs[i];
    ExperimentPlan plan;
    plan.state = "00L";
    plan.stabilizer = StabKind::Sz;
    plan.basis = Basis::Z;
    plan.injected = pauli;
    auto rep = postselect(simulate_plan(plan, noise), Basis::Z, true);
    CampaignRow row;
    row.config = pauli;
    row.multiplicity = mult;
    row.weight = pauli.weight();
    row.p_a = rep.yield;
    if (rep.pops_defined) {
      row.pf_la = rep.la_error(0);
      row.pf_lb = rep.lb_error(0);
      row.pf_any = 1.0 - rep.logical_pops[0];
      row.pops = rep.logical_pops;
    }
    rows[i] = row;
  });
  return rows;
}

bool Table1Row::definite() const {
  const auto& info = find_label(label);
  return info.la(basis) >= 0 && info.lb(basis) >= 0;
}

const std::vector<Table1Row>& table1_rows() {
  static const std::vector<Table1Row> rows = {
      {"00L", StabKind::None, Basis::Z, 91.1, {98.0, 1.7, 0.1, 0.2}},
      {"00L", StabKind::Sz, Basis::Z, 77.8, {97.8, 1.7, 0.2, 0.3}},
      {"00L", StabKind::Sx, Basis::Z, 65.2, {97.1, 2.4, 0.2, 0.3}},
      {"++L", StabKind::None, Basis::X, 91.1, {94.8, 3.9, 0.2, 0.2}},
      {"++L", StabKind::Sz, Basis::X, 68.2, {93.0, 4.2, 1.3, 1.5}},
      {"++L", StabKind::Sx, Basis::X, 72.1, {94.3, 4.5, 0.5, 0.7}},
      {"-1L", StabKind::None, Basis::Z, 90.1, {0.2, 50.5, 0.1, 49.2}},
      {"-1L", StabKind::None, Basis::X, 87.0, {0.3, 0.3, 50.4, 48.9}},
      {"-1L", StabKind::Sz, Basis::Z, 79.9, {0.2, 50.0, 0.1, 49.7}},
      {"-1L", StabKind::Sz, Basis::X, 75.5, {0.4, 0.3, 50.0, 49.2}},
      {"-1L", StabKind::Sx, Basis::Z, 72.1, {0.6, 50.2, 0.5, 48.7}},
      {"-1L", StabKind::Sx, Basis::X, 76.2, {0.4, 0.4, 50.0, 49.2}},
      {"0+L", StabKind::None, Basis::Z, 93.2, {47.4, 52.5, 0.06, 0.05}},
      {"0+L", StabKind::None, Basis::X, 92.4, {50.0, 0.04, 49.8, 0.09}},
      {"0+L", StabKind::Sz, Basis::Z, 81.6, {48.3, 51.3, 0.2, 0.2}},
      {"0+L", StabKind::Sz, Basis::X, 68.5, {47.1, 2.4, 47.4, 3.1}},
      {"0+L", StabKind::Sx, Basis::Z, 72.0, {48.3, 51.5, 0.2, 0.1}},
      {"0+L", StabKind::Sx, Basis::X, 70.9, {49.4, 0.4, 49.7, 0.5}},
      {"11L", StabKind::Sz, Basis::Z, 73.3, {0.4, 0.3, 2.8, 96.5}},
  };
  return rows;
}

std::vector<MiscalPoint> run_miscal_sweep(const std::vector<double>& alphas,
                                          const NoiseModel& noise) {
  std::vector<MiscalPoint> points(alphas.size());
  detail::parallel_for(alphas.size(), [&](std::size_t i) {
    MiscalPoint pt;
    pt.alpha = alphas[i];
    for (StabKind st : {StabKind::Sx, StabKind::Sz}) {
      ExperimentPlan plan;
      plan.state = "00L";
      plan.stabilizer = st;
      plan.basis = Basis::Z;
      plan.decompose_cnot = true;
      plan.alpha = alphas[i];
      auto rep = postselect(simulate_plan(plan, noise), Basis::Z, true);
      if (st == StabKind::Sx) {
        pt.yield_sx = rep.yield;
        pt.pops_sx = rep.logical_pops;
      } else {
        pt.yield_sz = rep.yield;
        pt.pops_sz = rep.logical_pops;
      }
    }
    points[i] = pt;
  });
  return points;
}

}  // namespace q422
