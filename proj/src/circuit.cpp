// This code is part of q422.
//
// (C) Copyright 2026 q422 contributors.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "q422/circuit.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace q422 {

const char* gate_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::S: return "S";
    case GateKind::RZ: return "RZ";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CZ: return "CZ";
    case GateKind::XX: return "XX";
  }
  return "?";
}

bool is_two_qubit(GateKind k) {
  return k == GateKind::CNOT || k == GateKind::CZ || k == GateKind::XX;
}

namespace {
std::string fmt_param(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void validate_op(const GateOp& op, int n_qubits) {
  auto check_q = [&](int q) {
    if (q < 1 || q > n_qubits) throw std::invalid_argument("qubit index out of range");
  };
  check_q(op.q1);
  if (op.two_qubit()) {
    check_q(op.q2);
    if (op.q1 == op.q2) throw std::invalid_argument("two-qubit gate targets must be distinct");
  }
  if (op.kind == GateKind::XX && (op.param < -0.5 || op.param > 0.5))
    throw std::invalid_argument("XX miscalibration alpha must lie in [-0.5, 0.5]");
}
}  // namespace

std::string GateOp::str() const {
  std::string out = gate_name(kind);
  out += " " + std::to_string(q1);
  if (two_qubit()) out += " " + std::to_string(q2);
  if (kind == GateKind::RZ) out += " theta=" + fmt_param(param);
  if (kind == GateKind::XX) out += " alpha=" + fmt_param(param);
  return out;
}

Circuit& Circuit::append(const GateOp& op) {
  validate_op(op, n_qubits);
  ops.push_back(op);
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  for (const auto& op : other.ops) append(op);
  return *this;
}

std::string Circuit::to_text() const {
  std::string out;
  for (const auto& op : ops) out += op.str() + "\n";
  return out;
}

Circuit Circuit::parse(std::string_view text, int n_qubits) {
  Circuit c(n_qubits);
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string name;
    if (!(ls >> name)) continue;  // blank line
    GateKind kind;
    if (name == "H") kind = GateKind::H;
    else if (name == "X") kind = GateKind::X;
    else if (name == "Y") kind = GateKind::Y;
    else if (name == "Z") kind = GateKind::Z;
    else if (name == "S") kind = GateKind::S;
    else if (name == "RZ") kind = GateKind::RZ;
    else if (name == "CNOT") kind = GateKind::CNOT;
    else if (name == "CZ") kind = GateKind::CZ;
    else if (name == "XX") kind = GateKind::XX;
    else throw std::invalid_argument("unknown gate: " + name);

    GateOp op;
    op.kind = kind;
    if (!(ls >> op.q1)) throw std::invalid_argument("missing qubit index: " + line);
    if (is_two_qubit(kind) && !(ls >> op.q2))
      throw std::invalid_argument("missing second qubit: " + line);
    std::string kv;
    if (ls >> kv) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("bad parameter: " + kv);
      std::string key = kv.substr(0, eq);
      double value = std::stod(kv.substr(eq + 1));
      if ((kind == GateKind::RZ && key == "theta") || (kind == GateKind::XX && key == "alpha"))
        op.param = value;
      else
        throw std::invalid_argument("unexpected parameter '" + key + "' for " + name);
    }
    c.append(op);
  }
  return c;
}

}  // namespace q422
