// This code is part of q422.
//
// (C) Copyright 2026 q422 contributors.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <vector>

#include "q422/circuit.hpp"
#include "q422/code.hpp"
#include "q422/noise.hpp"
#include "q422/pauli.hpp"
#include "q422/state.hpp"

namespace q422 {

/// 2x2 matrix of a single-qubit gate (param = theta for RZ).
Eigen::Matrix2cd gate1_matrix(GateKind kind, double param = 0.0);
/// 4x4 matrix of a two-qubit gate, first qubit = control/left factor.
/// XX(alpha) = exp(i phi X(x)X) with phi = asin(sqrt(0.5 + alpha)), so that
/// XX(alpha)|00> = sqrt(0.5-alpha)|00> + i sqrt(0.5+alpha)|11>.
Eigen::Matrix4cd gate2_matrix(GateKind kind, double param = 0.0);
Eigen::Matrix4cd xx_matrix(double alpha);

void apply_1q(StateVector& psi, const Eigen::Matrix2cd& u, int q);
void apply_2q(StateVector& psi, const Eigen::Matrix4cd& u, int qa, int qb);
void apply_1q(DensityMatrix& rho, const Eigen::Matrix2cd& u, int q);
void apply_2q(DensityMatrix& rho, const Eigen::Matrix4cd& u, int qa, int qb);

void apply_gate(StateVector& psi, const GateOp& op);
void apply_gate(DensityMatrix& rho, const GateOp& op);

/// Apply a Pauli unitary (phase included). A string of length n acts on all
/// qubits; length n-1 acts on the data qubits, leaving the ancilla alone.
void apply_pauli(StateVector& psi, const PauliString& p);
void apply_pauli(DensityMatrix& rho, const PauliString& p);

struct RunOptions {
  /// Replace every CNOT by its XX-gate decomposition with miscalibration
  /// alpha (the Molmer-Sorensen realization). Noise still attaches once per
  /// CNOT, after the completed macro, so alpha = 0 reproduces the native
  /// pipeline exactly.
  bool decompose_cnot = false;
  double alpha = 0.0;
};

/// Ideal-gate evolution (no noise), state-vector backend.
StateVector run_pure(const Circuit& c, StateVector input, const RunOptions& opt = {});

/// Full density-matrix evolution with the coherent noise model applied after
/// each computational gate:
///   - single-qubit gate with rotation angle phi: extra rotation about the
///     gate's own axis by 2*asin(sqrt(eps1)) * phi/pi;
///   - two-qubit gate: extra rotation exp(i * asin(sqrt(eps2)) * G) about the
///     gate's effective entangling generator G (CNOT -> Z(x)X, CZ -> Z(x)Z,
///     XX -> X(x)X), then RZ(2*asin(sqrt(eps_stark))) on both participants.
/// Each eps is thereby the per-gate error probability. SPAM is not applied
/// here; it acts on measured distributions.
DensityMatrix run(const Circuit& c, const NoiseModel& noise, const StateVector& input,
                  const RunOptions& opt = {});
DensityMatrix run(const Circuit& c, const NoiseModel& noise, DensityMatrix rho,
                  const RunOptions& opt = {});

/// Born-rule outcome distribution; X-basis qubits are read through an ideal
/// Hadamard before the computational-basis measurement.
Eigen::VectorXd measure_distribution(const DensityMatrix& rho, const std::vector<Basis>& bases);
Eigen::VectorXd measure_distribution(const StateVector& psi, const std::vector<Basis>& bases);
/// All data qubits in `data_basis`, ancilla in Z.
std::vector<Basis> uniform_bases(int n_qubits, Basis data_basis);

}  // namespace q422
