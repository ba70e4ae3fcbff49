// This code is part of q422.
//
// (C) Copyright 2026 q422 contributors.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "q422/code.hpp"

#include <cmath>
#include <stdexcept>

namespace q422 {

char basis_char(Basis b) { return b == Basis::Z ? 'Z' : 'X'; }

Basis basis_from_char(char c) {
  if (c == 'Z' || c == 'z') return Basis::Z;
  if (c == 'X' || c == 'x') return Basis::X;
  throw std::invalid_argument(std::string("unknown basis: ") + c);
}

const CodeSpec& CodeSpec::instance() {
  static const CodeSpec spec;
  return spec;
}

namespace {
// Frozen decode tables over the 8 even-parity strings, index = b1b2b3b4.
// Entry {la, lb}; odd-parity indices hold {-1, -1}.
constexpr std::array<std::array<int, 2>, 16> kDecodeZ = {{
    {0, 0}, {-1, -1}, {-1, -1}, {0, 1},    // 0000 .. 0011
    {-1, -1}, {1, 0}, {1, 1}, {-1, -1},    // 0100 .. 0111
    {-1, -1}, {1, 1}, {1, 0}, {-1, -1},    // 1000 .. 1011
    {0, 1}, {-1, -1}, {-1, -1}, {0, 0},    // 1100 .. 1111
}};
constexpr std::array<std::array<int, 2>, 16> kDecodeX = {{
    {0, 0}, {-1, -1}, {-1, -1}, {1, 0},
    {-1, -1}, {0, 1}, {1, 1}, {-1, -1},
    {-1, -1}, {1, 1}, {0, 1}, {-1, -1},
    {1, 0}, {-1, -1}, {-1, -1}, {0, 0},
}};
}  // namespace

std::optional<LogicalOutcome> decode_logical(const std::array<int, 4>& bits, Basis basis) {
  int idx = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) throw std::invalid_argument("bits must be 0/1");
    idx = (idx << 1) | b;
  }
  const auto& table = basis == Basis::Z ? kDecodeZ : kDecodeX;
  if (table[idx][0] < 0) return std::nullopt;  // odd parity: rejected shot
  return LogicalOutcome{table[idx][0], table[idx][1], basis};
}

std::optional<LogicalOutcome> decode_logical(std::string_view bits, Basis basis) {
  if (bits.size() != 4) throw std::invalid_argument("expected 4 bits");
  std::array<int, 4> b{};
  for (int i = 0; i < 4; ++i) {
    if (bits[i] != '0' && bits[i] != '1') throw std::invalid_argument("bits must be 0/1");
    b[i] = bits[i] - '0';
  }
  return decode_logical(b, basis);
}

const std::vector<LogicalLabel>& logical_labels() {
  static const std::vector<LogicalLabel> labels = {
      {"00L", 0, 0, -1, -1, Basis::Z},
      {"01L", 0, 1, -1, -1, Basis::Z},
      {"10L", 1, 0, -1, -1, Basis::Z},
      {"11L", 1, 1, -1, -1, Basis::Z},
      {"++L", -1, -1, 0, 0, Basis::X},
      {"+-L", -1, -1, 0, 1, Basis::X},
      {"-+L", -1, -1, 1, 0, Basis::X},
      {"--L", -1, -1, 1, 1, Basis::X},
      {"0+L", 0, -1, -1, 0, Basis::Z},
      {"-1L", -1, 1, 1, -1, Basis::X},
  };
  return labels;
}

const LogicalLabel& find_label(std::string_view name) {
  for (const auto& l : logical_labels())
    if (name == l.name) return l;
  throw std::invalid_argument("unknown logical state label: " + std::string(name));
}

namespace {
Eigen::VectorXcd from_z_strings(std::initializer_list<std::pair<int, double>> terms) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(16);
  for (auto [s, c] : terms) v[s] = c;
  v.normalize();
  return v;
}

// product state over +/- characters, e.g. "+-+-"; qubit 1 = MSB
Eigen::VectorXcd x_string(std::string_view s) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(1);
  for (char c : s) {
    Eigen::Vector2cd q;
    q << 1.0 / std::sqrt(2.0), (c == '+' ? 1.0 : -1.0) / std::sqrt(2.0);
    Eigen::VectorXcd next(v.size() * 2);
    for (int i = 0; i < v.size(); ++i) {
      next[2 * i] = v[i] * q[0];
      next[2 * i + 1] = v[i] * q[1];
    }
    v = next;
  }
  return v;
}

Eigen::VectorXcd from_x_strings(std::string_view a, std::string_view b) {
  Eigen::VectorXcd v = x_string(a) + x_string(b);
  v.normalize();
  return v;
}
}  // namespace

Eigen::VectorXcd codeword_data(std::string_view label) {
  const std::string name(label);
  if (name == "00L") return from_z_strings({{0b0000, 1}, {0b1111, 1}});
  if (name == "01L") return from_z_strings({{0b0011, 1}, {0b1100, 1}});
  if (name == "10L") return from_z_strings({{0b0101, 1}, {0b1010, 1}});
  if (name == "11L") return from_z_strings({{0b0110, 1}, {0b1001, 1}});
  if (name == "0+L") return from_z_strings({{0b0000, 1}, {0b1111, 1}, {0b0011, 1}, {0b1100, 1}});
  if (name == "-1L")
    return from_z_strings({{0b0011, 1}, {0b1100, 1}, {0b0110, -1}, {0b1001, -1}});
  if (name == "++L") return from_x_strings("++++", "----");
  if (name == "+-L") return from_x_strings("+-+-", "-+-+");
  if (name == "-+L") return from_x_strings("++--", "--++");
  if (name == "--L") return from_x_strings("+--+", "-++-");
  throw std::invalid_argument("unknown logical state label: " + name);
}

Eigen::VectorXcd codeword_full(std::string_view label) {
  Eigen::VectorXcd data = codeword_data(label);
  Eigen::VectorXcd full = Eigen::VectorXcd::Zero(32);
  for (int i = 0; i < 16; ++i) full[i << 1] = data[i];  // ancilla |0> is the LSB
  return full;
}

}  // namespace q422
