// This code is part of q422.
//
// (C) Copyright 2026 q422 contributors.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace q422 {

enum class GateKind { H, X, Y, Z, S, RZ, CNOT, CZ, XX };

const char* gate_name(GateKind k);
bool is_two_qubit(GateKind k);

/// One gate. q1/q2 are 1-based; q2 is 0 for single-qubit gates. param holds
/// theta for RZ and the miscalibration alpha (in [-0.5, 0.5]) for XX.
struct GateOp {
  GateKind kind = GateKind::H;
  int q1 = 1;
  int q2 = 0;
  double param = 0.0;

  static GateOp h(int q) { return {GateKind::H, q}; }
  static GateOp x(int q) { return {GateKind::X, q}; }
  static GateOp y(int q) { return {GateKind::Y, q}; }
  static GateOp z(int q) { return {GateKind::Z, q}; }
  static GateOp s(int q) { return {GateKind::S, q}; }
  static GateOp rz(int q, double theta) { return {GateKind::RZ, q, 0, theta}; }
  static GateOp cnot(int c, int t) { return {GateKind::CNOT, c, t}; }
  static GateOp cz(int a, int b) { return {GateKind::CZ, a, b}; }
  static GateOp xx(int a, int b, double alpha = 0.0) { return {GateKind::XX, a, b, alpha}; }

  bool two_qubit() const { return is_two_qubit(kind); }
  std::string str() const;
  bool operator==(const GateOp&) const = default;
};

/// Ordered gate list over n qubits. Fault slots are the len(ops)+1 positions
/// before the circuit and after each op.
struct Circuit {
  int n_qubits = 5;
  std::vector<GateOp> ops;

  Circuit() = default;
  explicit Circuit(int n) : n_qubits(n) {}

  std::size_t fault_slots() const { return ops.size() + 1; }
  Circuit& append(const GateOp& op);
  Circuit& append(const Circuit& other);

  /// One op per line ("H 1", "CNOT 1 2", "XX 1 2 alpha=0.02", "RZ 1 theta=0.5");
  /// '#' starts a comment.
  std::string to_text() const;
  static Circuit parse(std::string_view text, int n_qubits = 5);
};

}  // namespace q422
