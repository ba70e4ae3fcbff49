// This code is part of q422.
//
// (C) Copyright 2026 q422 contributors.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "q422/pauli.hpp"

namespace q422 {

enum class Basis { Z, X };
char basis_char(Basis b);
Basis basis_from_char(char c);

/// Measured logical state of the two encoded qubits in a given basis.
struct LogicalOutcome {
  int la = 0;
  int lb = 0;
  Basis basis = Basis::Z;
  bool operator==(const LogicalOutcome&) const = default;
};

/// The [[4,2,2]] code: stabilizers XXXX/ZZZZ and the four logical operators.
struct CodeSpec {
  static constexpr int n_data = 4;
  PauliString s_x = PauliString::parse("XXXX");
  PauliString s_z = PauliString::parse("ZZZZ");
  PauliString z_a = PauliString::parse("ZZII");
  PauliString z_b = PauliString::parse("ZIZI");
  PauliString x_a = PauliString::parse("XIXI");
  PauliString x_b = PauliString::parse("XXII");
  static const CodeSpec& instance();
};

/// Decode a 4-bit data outcome (bit i = measurement of data qubit i; for the
/// X basis, 0 means |+>). Returns nullopt on odd parity (rejected shot).
std::optional<LogicalOutcome> decode_logical(const std::array<int, 4>& bits, Basis basis);
std::optional<LogicalOutcome> decode_logical(std::string_view bits, Basis basis);

/// A preparable logical state. Eigenvalue fields are 0/1 when the logical
/// qubit is definite in that measurement basis and -1 when it is not.
struct LogicalLabel {
  const char* name;
  int la_z, lb_z;   // Z-basis values
  int la_x, lb_x;   // X-basis values
  Basis def_basis;  // basis in which L_a is definite
  int la(Basis b) const { return b == Basis::Z ? la_z : la_x; }
  int lb(Basis b) const { return b == Basis::Z ? lb_z : lb_x; }
};

const std::vector<LogicalLabel>& logical_labels();
/// Throws std::invalid_argument for unknown labels.
const LogicalLabel& find_label(std::string_view name);

/// Exact codeword amplitudes on the 4 data qubits (dim 16, qubit 1 = MSB).
Eigen::VectorXcd codeword_data(std::string_view label);
/// Codeword tensored with the ancilla in |0> (dim 32, ancilla = LSB).
Eigen::VectorXcd codeword_full(std::string_view label);

}  // namespace q422
