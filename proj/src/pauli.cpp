// This code is part of q422.
//
// (C) Copyright 2026 q422 contributors.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "q422/pauli.hpp"

#include <array>
#include <stdexcept>

namespace q422 {

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': case 'i': return Pauli::I;
    case 'X': case 'x': return Pauli::X;
    case 'Y': case 'y': return Pauli::Y;
    case 'Z': case 'z': return Pauli::Z;
  }
  throw std::invalid_argument(std::string("not a Pauli letter: ") + c);
}

PauliString::PauliString(std::vector<Pauli> letters, int phase_pow)
    : letters_(std::move(letters)), phase_pow_(((phase_pow % 4) + 4) % 4) {}

PauliString PauliString::identity(std::size_t n) {
  return PauliString(std::vector<Pauli>(n, Pauli::I));
}

PauliString PauliString::parse(std::string_view text) {
  int phase = 0;
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    bool neg = text[pos] == '-';
    ++pos;
    if (pos < text.size() && text[pos] == 'i' &&
        !(text.size() - pos == 1)) {  // lone trailing 'i' is a letter, e.g. "+I"
      // "+i" / "-i" prefix only when followed by at least one letter
      phase = neg ? 3 : 1;
      ++pos;
    } else if (pos < text.size() && text[pos] == 'i' && text.size() - pos == 1) {
      // ambiguous "i": treat as identity letter
      phase = neg ? 2 : 0;
    } else {
      phase = neg ? 2 : 0;
    }
  }
  std::vector<Pauli> letters;
  letters.reserve(text.size() - pos);
  for (; pos < text.size(); ++pos) letters.push_back(pauli_from_char(text[pos]));
  if (letters.empty()) throw std::invalid_argument("empty Pauli string");
  return PauliString(std::move(letters), phase);
}

Pauli PauliString::letter(std::size_t q) const {
  if (q < 1 || q > letters_.size()) throw std::invalid_argument("qubit index out of range");
  return letters_[q - 1];
}

std::complex<double> PauliString::phase() const {
  static const std::array<std::complex<double>, 4> units = {
      std::complex<double>(1, 0), std::complex<double>(0, 1),
      std::complex<double>(-1, 0), std::complex<double>(0, -1)};
  return units[phase_pow_];
}

int PauliString::weight() const {
  int w = 0;
  for (Pauli p : letters_)
    if (p != Pauli::I) ++w;
  return w;
}

std::string PauliString::str() const {
  static const char* prefix[4] = {"+", "+i", "-", "-i"};
  std::string out = prefix[phase_pow_];
  for (Pauli p : letters_) out += pauli_char(p);
  return out;
}

namespace {
// single-letter product: (a, b) -> (letter of a*b, power of i)
struct LetterProduct { Pauli letter; int phase_pow; };

LetterProduct letter_multiply(Pauli a, Pauli b) {
  if (a == Pauli::I) return {b, 0};
  if (b == Pauli::I) return {a, 0};
  if (a == b) return {Pauli::I, 0};
  // cyclic: XY=iZ, YZ=iX, ZX=iY; reversed order picks up -i
  auto cyc = [](Pauli u, Pauli v) {
    return (u == Pauli::X && v == Pauli::Y) || (u == Pauli::Y && v == Pauli::Z) ||
           (u == Pauli::Z && v == Pauli::X);
  };
  Pauli third = static_cast<Pauli>(6 - static_cast<int>(a) - static_cast<int>(b));
  return {third, cyc(a, b) ? 1 : 3};
}
}  // namespace

PauliString pauli_multiply(const PauliString& a, const PauliString& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Pauli length mismatch");
  std::vector<Pauli> letters(a.size());
  int phase = a.phase_pow() + b.phase_pow();
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto [l, k] = letter_multiply(a.letters()[i], b.letters()[i]);
    letters[i] = l;
    phase += k;
  }
  return PauliString(std::move(letters), phase);
}

bool commutes(const PauliString& a, const PauliString& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Pauli length mismatch");
  int anti = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Pauli u = a.letters()[i], v = b.letters()[i];
    if (u != Pauli::I && v != Pauli::I && u != v) ++anti;
  }
  return anti % 2 == 0;
}

}  // namespace q422
