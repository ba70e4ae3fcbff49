// This code is part of q422.
//
// (C) Copyright 2026 q422 contributors.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace q422 {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

/// An n-qubit Pauli operator with an exact unit phase i^k (k in 0..3).
/// Immutable value type; qubit indices are 1-based with qubit 1 leftmost.
class PauliString {
public:
  PauliString() = default;
  explicit PauliString(std::vector<Pauli> letters, int phase_pow = 0);

  static PauliString identity(std::size_t n);
  /// Parse "XXII", "-YZII", "+iXZ", ... (optional leading +, -, +i, -i).
  static PauliString parse(std::string_view text);

  std::size_t size() const { return letters_.size(); }
  Pauli letter(std::size_t q) const;  // 1-based
  const std::vector<Pauli>& letters() const { return letters_; }
  int phase_pow() const { return phase_pow_; }
  std::complex<double> phase() const;

  /// Number of non-identity letters.
  int weight() const;

  std::string str() const;

  bool operator==(const PauliString&) const = default;

private:
  std::vector<Pauli> letters_;
  int phase_pow_ = 0;  // i^phase_pow
};

/// Exact group product a*b. Throws std::invalid_argument on length mismatch.
PauliString pauli_multiply(const PauliString& a, const PauliString& b);

/// True iff a and b commute (even number of anticommuting positions).
bool commutes(const PauliString& a, const PauliString& b);

}  // namespace q422
