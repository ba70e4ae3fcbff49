#include <stdexcept>

#include "doctest.h"
#include "q422/code.hpp"
#include "q422/simulator.hpp"

using namespace q422;

TEST_CASE("code operators") {
  const auto& code = CodeSpec::instance();
  // every logical operator commutes with both stabilizers
  for (const auto& op : {code.z_a, code.z_b, code.x_a, code.x_b}) {
    CHECK(commutes(op, code.s_x));
    CHECK(commutes(op, code.s_z));
  }
  CHECK(commutes(code.s_x, code.s_z));
  // anticommutation pairing
  CHECK_FALSE(commutes(code.x_a, code.z_a));
  CHECK_FALSE(commutes(code.x_b, code.z_b));
  CHECK(commutes(code.x_a, code.z_b));
  CHECK(commutes(code.x_b, code.z_a));
}

TEST_CASE("decode examples") {
  auto r = decode_logical("0000", Basis::Z);
  REQUIRE(r.has_value());
  CHECK(r->la == 0);
  CHECK(r->lb == 0);

  r = decode_logical("0011", Basis::Z);
  REQUIRE(r.has_value());
  CHECK(r->la == 0);
  CHECK(r->lb == 1);

  // "0101" in the X basis means |+-+->
  r = decode_logical("0101", Basis::X);
  REQUIRE(r.has_value());
  CHECK(r->la == 0);
  CHECK(r->lb == 1);

  CHECK_FALSE(decode_logical("0001", Basis::Z).has_value());  // odd parity: rejected shot
  CHECK_THROWS_AS(decode_logical("00a1", Basis::Z), std::invalid_argument);
}

TEST_CASE("decode table matches the operator formulas") {
  for (int s = 0; s < 16; ++s) {
    std::array<int, 4> b = {(s >> 3) & 1, (s >> 2) & 1, (s >> 1) & 1, s & 1};
    const bool even = (b[0] + b[1] + b[2] + b[3]) % 2 == 0;
    auto z = decode_logical(b, Basis::Z);
    auto x = decode_logical(b, Basis::X);
    CHECK(z.has_value() == even);
    CHECK(x.has_value() == even);
    if (!even) continue;
    // eigenvalues of Z_a=ZZII, Z_b=ZIZI and X_a=XIXI, X_b=XXII
    CHECK(z->la == (b[0] ^ b[1]));
    CHECK(z->lb == (b[0] ^ b[2]));
    CHECK(x->la == (b[0] ^ b[2]));
    CHECK(x->lb == (b[0] ^ b[1]));
  }
}

TEST_CASE("decode is complement-invariant") {
  for (int s = 0; s < 16; ++s) {
    std::array<int, 4> b = {(s >> 3) & 1, (s >> 2) & 1, (s >> 1) & 1, s & 1};
    std::array<int, 4> bc = {1 - b[0], 1 - b[1], 1 - b[2], 1 - b[3]};
    for (Basis basis : {Basis::Z, Basis::X}) {
      auto r = decode_logical(b, basis), rc = decode_logical(bc, basis);
      CHECK(r.has_value() == rc.has_value());
      if (r) {
        CHECK(r->la == rc->la);
        CHECK(r->lb == rc->lb);
      }
    }
  }
}

TEST_CASE("codewords are stabilized") {
  const auto& code = CodeSpec::instance();
  for (const char* label : {"00L", "01L", "10L", "11L", "++L", "+-L", "-+L", "--L", "0+L", "-1L"}) {
    StateVector psi = codeword_data(label);
    for (const auto& stab : {code.s_x, code.s_z}) {
      StateVector fixed = psi;
      apply_pauli(fixed, stab);
      CHECK((fixed - psi).norm() < 1e-12);  // +1 eigenstate, phase included
    }
  }
}

TEST_CASE("stabilizer bit patterns keep a string in its logical class") {
  // flipping all four bits (the S_x action on Z strings) never changes the decode
  for (int s = 0; s < 16; ++s) {
    std::array<int, 4> b = {(s >> 3) & 1, (s >> 2) & 1, (s >> 1) & 1, s & 1};
    std::array<int, 4> flipped = {1 - b[0], 1 - b[1], 1 - b[2], 1 - b[3]};
    for (Basis basis : {Basis::Z, Basis::X}) {
      auto r0 = decode_logical(b, basis), r1 = decode_logical(flipped, basis);
      if (r0) {
        CHECK(r0->la == r1->la);
        CHECK(r0->lb == r1->lb);
      }
    }
  }
}

TEST_CASE("codeword amplitudes") {
  StateVector zz = codeword_data("00L");
  CHECK(std::abs(zz[0b0000] - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(zz[0b1111] - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(zz.cwiseAbs2().sum() == doctest::Approx(1.0));

  // |++>_L is uniform over the eight even-parity strings
  StateVector pp = codeword_data("++L");
  for (int s = 0; s < 16; ++s) {
    const int parity = ((s >> 3) ^ (s >> 2) ^ (s >> 1) ^ s) & 1;
    if (parity == 0) CHECK(std::abs(pp[s] - 1.0 / std::sqrt(8.0)) < 1e-15);
    else CHECK(std::abs(pp[s]) < 1e-15);
  }

  // |0+>_L = (|00>_L + |01>_L)/sqrt(2)
  StateVector zp = codeword_data("0+L");
  StateVector sum = (codeword_data("00L") + codeword_data("01L")) / std::sqrt(2.0);
  CHECK((zp - sum).norm() < 1e-14);

  CHECK_THROWS_AS(codeword_data("banana"), std::invalid_argument);
}

TEST_CASE("labels carry their definite bases") {
  const auto& l = find_label("-1L");
  CHECK(l.def_basis == Basis::X);
  CHECK(l.la(Basis::X) == 1);
  CHECK(l.lb(Basis::X) == -1);
  CHECK(l.lb(Basis::Z) == 1);
  CHECK_THROWS_AS(find_label("nope"), std::invalid_argument);
}

TEST_CASE("codeword_full places the ancilla in |0>") {
  StateVector full = codeword_full("00L");
  CHECK(full.size() == 32);
  CHECK(std::abs(full[0] - 1.0 / std::sqrt(2.0)) < 1e-15);   // |00000>
  CHECK(std::abs(full[30] - 1.0 / std::sqrt(2.0)) < 1e-15);  // |11110>
  for (int s = 1; s < 32; s += 2) CHECK(std::abs(full[s]) < 1e-15);
}
