// This code is part of q422.
//
// (C) Copyright 2026 q422 contributors.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "q422/circuit.hpp"
#include "q422/code.hpp"
#include "q422/noise.hpp"
#include "q422/simulator.hpp"

namespace q422 {

enum class StabKind { None, Sx, Sz };
const char* stab_name(StabKind s);
StabKind stab_from_name(std::string_view name);

/// Encoding circuit for a logical state label. Native circuits exist for
/// |00>, |++>, |0+>, |-1>; the other labels compose a native circuit with
/// transversal logical operators. Gate order is a frozen fixture: it cannot
/// change the ideal output but it defines the fault-slot enumeration.
Circuit build_prep(std::string_view label);

/// Syndrome-extraction circuit on the bare ancilla (qubit 5). The CNOT order
/// is chosen so that every single ancilla fault propagates to a benign or
/// L_b-type data error, never an L_a error.
Circuit build_stabilizer(StabKind kind);

struct ExperimentPlan {
  std::string state = "00L";
  StabKind stabilizer = StabKind::None;
  Basis basis = Basis::Z;
  std::optional<PauliString> injected;  // exact Pauli on the data qubits
  bool decompose_cnot = false;
  double alpha = 0.0;

  std::string key() const;
  /// Parse "state=00L;stab=Sz;basis=Z;alpha=0.02;inject=XYII" (';' or newline
  /// separated key=value pairs).
  static ExperimentPlan parse(std::string_view text);
};

/// Simulate prep [+ injected Pauli] [+ stabilizer], measure in plan.basis and
/// apply the model's SPAM matrix. Returns the 32-outcome distribution.
Eigen::VectorXd simulate_plan(const ExperimentPlan& plan, const NoiseModel& noise);

struct SelectionReport {
  double yield = 0.0;
  Eigen::Vector4d logical_pops = Eigen::Vector4d::Zero();  // {00,01,10,11}, conditioned
  bool pops_defined = false;  // false when nothing was accepted
  Eigen::VectorXd raw_dist;

  double la_error(int la_true) const;
  double lb_error(int lb_true) const;
};

/// Keep outcomes with even data parity, and ancilla = 0 when a stabilizer was
/// used. Populations are decoded in meas_basis and conditioned on acceptance.
SelectionReport postselect(const Eigen::VectorXd& dist, Basis meas_basis, bool used_stabilizer);

enum class FaultClass { Detected, Benign, LbError, LaError };
const char* fault_class_name(FaultClass c);

struct FaultSite {
  std::size_t slot;
  int qubit;
  Pauli pauli;
  FaultClass cls;
  double accepted;
  double la_wrong;  // accepted mass with L_a decoded wrong
  double lb_wrong;
};

struct FaultReport {
  std::string construction;
  std::vector<FaultSite> sites;
  double max_la_mass = 0.0;  // largest accepted L_a-error mass over all sites

  int count(FaultClass c) const;
  std::vector<FaultSite> hooks() const;  // the LbError sites
  bool la_fault_tolerant(double tol = 1e-12) const { return max_la_mass <= tol; }
};

/// Insert every Pauli in {X,Y,Z} at every fault slot on every active qubit,
/// simulate with ideal gates, post-select and classify the accepted mass.
/// la0 is the definite L_a value in meas_basis; lb0 = -1 when L_b has no
/// definite value there.
FaultReport enumerate_single_faults(const Circuit& prep, const Circuit* stabilizer,
                                    Basis meas_basis, int la0, int lb0,
                                    std::string_view construction_name);
FaultReport enumerate_single_faults(std::string_view label, StabKind stab);

/// The certification suite: the four encoders alone plus each stabilizer
/// appended to each encoder, every one measured in its L_a-definite basis.
std::vector<FaultReport> ft_certification_suite();

struct CampaignRow {
  PauliString config;
  double multiplicity = 1.0;
  int weight = 0;
  double p_a = 0.0;    // yield
  double pf_la = 0.0;  // P(L_a wrong | accepted)
  double pf_lb = 0.0;
  double pf_any = 0.0;
  Eigen::Vector4d pops = Eigen::Vector4d::Zero();  // conditional {00,01,10,11}
};

/// Fixed protocol: prep |00>_L, insert the configuration Pauli on the data
/// qubits, apply S_z, measure in Z. One row per configuration.
std::vector<CampaignRow> run_injection_campaign(
    const std::vector<std::pair<PauliString, double>>& configs, const NoiseModel& noise);

struct MiscalPoint {
  double alpha = 0.0;
  double yield_sx = 0.0, yield_sz = 0.0;
  Eigen::Vector4d pops_sx = Eigen::Vector4d::Zero();
  Eigen::Vector4d pops_sz = Eigen::Vector4d::Zero();
};

/// Prep |00>_L with CNOTs decomposed through XX(alpha), then S_x or S_z.
std::vector<MiscalPoint> run_miscal_sweep(const std::vector<double>& alphas,
                                          const NoiseModel& noise);

/// The 19 published (state, stabilizer, basis) rows with their reported yield
/// and logical populations in percent, kept as golden trend targets.
struct Table1Row {
  const char* label;
  StabKind stab;
  Basis basis;
  double published_yield;
  std::array<double, 4> published_pops;
  /// true when both logical values are definite in the row's basis
  bool definite() const;
};
const std::vector<Table1Row>& table1_rows();

}  // namespace q422
