// This code is part of q422.
//
// (C) Copyright 2026 q422 contributors.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "q422/simulator.hpp"

#include <cmath>
#include <stdexcept>

namespace q422 {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Eigen::Matrix2cd rot_axis(double theta, double nx, double ny, double nz) {
  // exp(-i theta/2 n.sigma)
  Eigen::Matrix2cd sigma;
  sigma << nz, std::complex<double>(nx, -ny), std::complex<double>(nx, ny), -nz;
  return std::cos(theta / 2) * Eigen::Matrix2cd::Identity() - kI * std::sin(theta / 2) * sigma;
}
}  // namespace

int num_qubits(Eigen::Index dim) {
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if ((Eigen::Index{1} << n) != dim) throw std::invalid_argument("dimension is not a power of 2");
  return n;
}

StateVector zero_state(int n_qubits) { return basis_state(n_qubits, 0); }

StateVector basis_state(int n_qubits, int index) {
  StateVector psi = StateVector::Zero(Eigen::Index{1} << n_qubits);
  psi[index] = 1.0;
  return psi;
}

DensityMatrix to_density(const StateVector& psi) { return psi * psi.adjoint(); }

double purity(const DensityMatrix& rho) { return (rho * rho).trace().real(); }

double fidelity(const StateVector& a, const StateVector& b) {
  return std::norm(a.dot(b));
}

bool is_valid_density(const DensityMatrix& rho, double tol, double eig_tol) {
  if (rho.rows() != rho.cols()) return false;
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  if (std::abs(rho.trace().real() - 1.0) > tol || std::abs(rho.trace().imag()) > tol) return false;
  Eigen::SelfAdjointEigenSolver<DensityMatrix> es(rho, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -eig_tol;
}

Eigen::Matrix2cd gate1_matrix(GateKind kind, double param) {
  Eigen::Matrix2cd m;
  switch (kind) {
    case GateKind::H:
      m << kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2;
      return m;
    case GateKind::X:
      m << 0, 1, 1, 0;
      return m;
    case GateKind::Y:
      m << 0, -kI, kI, 0;
      return m;
    case GateKind::Z:
      m << 1, 0, 0, -1;
      return m;
    case GateKind::S:
      m << 1, 0, 0, kI;
      return m;
    case GateKind::RZ:
      m << std::exp(-kI * param / 2.0), 0, 0, std::exp(kI * param / 2.0);
      return m;
    default:
      throw std::invalid_argument("not a single-qubit gate");
  }
}

Eigen::Matrix4cd xx_matrix(double alpha) {
  if (alpha < -0.5 || alpha > 0.5) throw std::invalid_argument("alpha out of [-0.5, 0.5]");
  const double phi = std::asin(std::sqrt(0.5 + alpha));
  const double c = std::cos(phi);
  const std::complex<double> is = kI * std::sin(phi);
  Eigen::Matrix4cd m;
  m << c, 0, 0, is,
       0, c, is, 0,
       0, is, c, 0,
       is, 0, 0, c;
  return m;
}

Eigen::Matrix4cd gate2_matrix(GateKind kind, double param) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  switch (kind) {
    case GateKind::CNOT:
      m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
      return m;
    case GateKind::CZ:
      m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
      m(3, 3) = -1.0;
      return m;
    case GateKind::XX:
      return xx_matrix(param);
    default:
      throw std::invalid_argument("not a two-qubit gate");
  }
}

namespace {
void apply_1q_vec(Eigen::Ref<Eigen::VectorXcd> v, const Eigen::Matrix2cd& u, int q, int n) {
  const Eigen::Index stride = Eigen::Index{1} << (n - q);
  const Eigen::Index dim = v.size();
  for (Eigen::Index base = 0; base < dim; base += 2 * stride)
    for (Eigen::Index off = 0; off < stride; ++off) {
      const auto a = v[base + off];
      const auto b = v[base + off + stride];
      v[base + off] = u(0, 0) * a + u(0, 1) * b;
      v[base + off + stride] = u(1, 0) * a + u(1, 1) * b;
    }
}

void apply_2q_vec(Eigen::Ref<Eigen::VectorXcd> v, const Eigen::Matrix4cd& u, int qa, int qb,
                  int n) {
  const Eigen::Index ma = Eigen::Index{1} << (n - qa);
  const Eigen::Index mb = Eigen::Index{1} << (n - qb);
  const Eigen::Index dim = v.size();
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (i & (ma | mb)) continue;
    const Eigen::Index idx[4] = {i, i | mb, i | ma, i | ma | mb};
    Eigen::Vector4cd amp{v[idx[0]], v[idx[1]], v[idx[2]], v[idx[3]]};
    Eigen::Vector4cd out = u * amp;
    for (int k = 0; k < 4; ++k) v[idx[k]] = out[k];
  }
}

template <typename Kernel>
void apply_to_density(DensityMatrix& rho, Kernel&& kernel) {
  // rho -> U rho U^dagger via two column passes separated by adjoints
  for (Eigen::Index j = 0; j < rho.cols(); ++j) kernel(rho.col(j));
  rho.adjointInPlace();
  for (Eigen::Index j = 0; j < rho.cols(); ++j) kernel(rho.col(j));
  rho.adjointInPlace();
}
}  // namespace

void apply_1q(StateVector& psi, const Eigen::Matrix2cd& u, int q) {
  apply_1q_vec(psi, u, q, num_qubits(psi.size()));
}

void apply_2q(StateVector& psi, const Eigen::Matrix4cd& u, int qa, int qb) {
  apply_2q_vec(psi, u, qa, qb, num_qubits(psi.size()));
}

void apply_1q(DensityMatrix& rho, const Eigen::Matrix2cd& u, int q) {
  const int n = num_qubits(rho.rows());
  apply_to_density(rho, [&](Eigen::Ref<Eigen::VectorXcd> col) { apply_1q_vec(col, u, q, n); });
}

void apply_2q(DensityMatrix& rho, const Eigen::Matrix4cd& u, int qa, int qb) {
  const int n = num_qubits(rho.rows());
  apply_to_density(rho,
                   [&](Eigen::Ref<Eigen::VectorXcd> col) { apply_2q_vec(col, u, qa, qb, n); });
}

void apply_gate(StateVector& psi, const GateOp& op) {
  if (op.two_qubit())
    apply_2q(psi, gate2_matrix(op.kind, op.param), op.q1, op.q2);
  else
    apply_1q(psi, gate1_matrix(op.kind, op.param), op.q1);
}

void apply_gate(DensityMatrix& rho, const GateOp& op) {
  if (op.two_qubit())
    apply_2q(rho, gate2_matrix(op.kind, op.param), op.q1, op.q2);
  else
    apply_1q(rho, gate1_matrix(op.kind, op.param), op.q1);
}

namespace {
template <typename State>
void apply_pauli_impl(State& state, const PauliString& p) {
  const int n = num_qubits(state.rows());
  if (p.size() != static_cast<std::size_t>(n) && p.size() != static_cast<std::size_t>(n - 1))
    throw std::invalid_argument("Pauli length must match qubit count or data-qubit count");
  for (std::size_t q = 1; q <= p.size(); ++q) {
    switch (p.letter(q)) {
      case Pauli::I: break;
      case Pauli::X: apply_1q(state, gate1_matrix(GateKind::X), static_cast<int>(q)); break;
      case Pauli::Y: apply_1q(state, gate1_matrix(GateKind::Y), static_cast<int>(q)); break;
      case Pauli::Z: apply_1q(state, gate1_matrix(GateKind::Z), static_cast<int>(q)); break;
    }
  }
}
}  // namespace

void apply_pauli(StateVector& psi, const PauliString& p) {
  apply_pauli_impl(psi, p);
  psi *= p.phase();
}

void apply_pauli(DensityMatrix& rho, const PauliString& p) {
  apply_pauli_impl(rho, p);  // global phase cancels in rho
}

namespace {
// CNOT through the maximally entangling XX gate:
//   CNOT(c,t) = e^{i pi/4} RZ(pi/2)_c RX(pi/2)_t RY(-pi/2)_c XX(0) RY(pi/2)_c
// Unit-tested against the ideal CNOT at alpha = 0.
template <typename State>
void apply_cnot_macro(State& state, int c, int t, double alpha) {
  apply_1q(state, rot_axis(M_PI / 2, 0, 1, 0), c);
  apply_2q(state, xx_matrix(alpha), c, t);
  apply_1q(state, rot_axis(-M_PI / 2, 0, 1, 0), c);
  apply_1q(state, rot_axis(M_PI / 2, 0, 0, 1), c);
  apply_1q(state, rot_axis(M_PI / 2, 1, 0, 0), t);
}

template <typename State>
void apply_computational_gate(State& state, const GateOp& op, const RunOptions& opt) {
  if (op.kind == GateKind::CNOT && opt.decompose_cnot)
    apply_cnot_macro(state, op.q1, op.q2, opt.alpha);
  else
    apply_gate(state, op);
}

template <typename State>
void apply_gate_noise(State& state, const GateOp& op, const NoiseModel& noise) {
  if (op.two_qubit()) {
    if (noise.eps2 > 0) {
      const double theta = std::asin(std::sqrt(noise.eps2));
      // generator of the gate in the computational frame
      Eigen::Matrix4cd g = Eigen::Matrix4cd::Zero();
      switch (op.kind) {
        case GateKind::CNOT:
          g(0, 1) = g(1, 0) = 1.0;
          g(2, 3) = g(3, 2) = -1.0;  // Z (x) X
          break;
        case GateKind::CZ:
          g.diagonal() << 1, -1, -1, 1;  // Z (x) Z
          break;
        default:
          g(0, 3) = g(3, 0) = g(1, 2) = g(2, 1) = 1.0;  // X (x) X
          break;
      }
      const Eigen::Matrix4cd extra =
          std::cos(theta) * Eigen::Matrix4cd::Identity() + kI * std::sin(theta) * g;
      apply_2q(state, extra, op.q1, op.q2);
    }
    if (noise.eps_stark > 0) {
      const double delta = 2.0 * std::asin(std::sqrt(noise.eps_stark));
      const Eigen::Matrix2cd rz = gate1_matrix(GateKind::RZ, delta);
      apply_1q(state, rz, op.q1);
      apply_1q(state, rz, op.q2);
    }
  } else if (noise.eps1 > 0) {
    double phi = M_PI;
    double nx = 0, ny = 0, nz = 0;
    switch (op.kind) {
      case GateKind::H: nx = kInvSqrt2; nz = kInvSqrt2; break;
      case GateKind::X: nx = 1; break;
      case GateKind::Y: ny = 1; break;
      case GateKind::Z: nz = 1; break;
      case GateKind::S: nz = 1; phi = M_PI / 2; break;
      case GateKind::RZ: nz = 1; phi = std::abs(op.param); break;
      default: break;
    }
    const double angle = 2.0 * std::asin(std::sqrt(noise.eps1)) * (phi / M_PI);
    if (angle != 0.0) apply_1q(state, rot_axis(angle, nx, ny, nz), op.q1);
  }
}
}  // namespace

StateVector run_pure(const Circuit& c, StateVector input, const RunOptions& opt) {
  for (const auto& op : c.ops) apply_computational_gate(input, op, opt);
  return input;
}

DensityMatrix run(const Circuit& c, const NoiseModel& noise, const StateVector& input,
                  const RunOptions& opt) {
  return run(c, noise, to_density(input), opt);
}

DensityMatrix run(const Circuit& c, const NoiseModel& noise, DensityMatrix rho,
                  const RunOptions& opt) {
  noise.validate();
  for (const auto& op : c.ops) {
    apply_computational_gate(rho, op, opt);
    apply_gate_noise(rho, op, noise);
  }
  return rho;
}

std::vector<Basis> uniform_bases(int n_qubits, Basis data_basis) {
  std::vector<Basis> bases(n_qubits, data_basis);
  bases.back() = Basis::Z;  // ancilla
  return bases;
}

namespace {
template <typename State>
void rotate_to_bases(State& state, const std::vector<Basis>& bases) {
  const Eigen::Matrix2cd h = gate1_matrix(GateKind::H);
  for (std::size_t q = 0; q < bases.size(); ++q)
    if (bases[q] == Basis::X) apply_1q(state, h, static_cast<int>(q) + 1);
}
}  // namespace

Eigen::VectorXd measure_distribution(const DensityMatrix& rho, const std::vector<Basis>& bases) {
  if (static_cast<Eigen::Index>(1) << bases.size() != rho.rows())
    throw std::invalid_argument("basis list does not match state size");
  DensityMatrix rotated = rho;
  rotate_to_bases(rotated, bases);
  return rotated.diagonal().real();
}

Eigen::VectorXd measure_distribution(const StateVector& psi, const std::vector<Basis>& bases) {
  if (static_cast<Eigen::Index>(1) << bases.size() != psi.size())
    throw std::invalid_argument("basis list does not match state size");
  StateVector rotated = psi;
  rotate_to_bases(rotated, bases);
  return rotated.cwiseAbs2();
}

}  // namespace q422
