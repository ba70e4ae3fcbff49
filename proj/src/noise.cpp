// This code is part of q422.
//
// (C) Copyright 2026 q422 contributors.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "q422/noise.hpp"

#include <stdexcept>

namespace q422 {

TransferMatrix::TransferMatrix(Eigen::MatrixXd m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw std::invalid_argument("transfer matrix must be square");
  for (Eigen::Index r = 0; r < m_.rows(); ++r) {
    if (std::abs(m_.row(r).sum() - 1.0) > 1e-12)
      throw std::invalid_argument("transfer matrix rows must sum to 1");
    if ((m_.row(r).array() < -1e-15).any() || (m_.row(r).array() > 1.0 + 1e-15).any())
      throw std::invalid_argument("transfer matrix entries must lie in [0, 1]");
  }
}

TransferMatrix TransferMatrix::identity(int n_states) {
  return TransferMatrix(Eigen::MatrixXd::Identity(n_states, n_states));
}

TransferMatrix TransferMatrix::synthesized(double p01, double p10, double crosstalk,
                                           int n_qubits) {
  const int dim = 1 << n_qubits;
  Eigen::MatrixXd m(dim, dim);
  for (int t = 0; t < dim; ++t) {
    // effective flip probability per qubit given the true word
    Eigen::VectorXd flip(n_qubits);
    for (int q = 0; q < n_qubits; ++q) {
      const int bit = (t >> (n_qubits - 1 - q)) & 1;
      double f = bit == 0 ? p01 : p10;
      int diff = 0;
      if (q > 0 && (((t >> (n_qubits - q)) & 1) != bit)) ++diff;
      if (q + 1 < n_qubits && (((t >> (n_qubits - 2 - q)) & 1) != bit)) ++diff;
      for (int d = 0; d < diff; ++d) f = 1.0 - (1.0 - f) * (1.0 - crosstalk);
      flip[q] = f;
    }
    for (int o = 0; o < dim; ++o) {
      double pr = 1.0;
      for (int q = 0; q < n_qubits; ++q) {
        const bool flipped = (((t ^ o) >> (n_qubits - 1 - q)) & 1) != 0;
        pr *= flipped ? flip[q] : 1.0 - flip[q];
      }
      m(t, o) = pr;
    }
  }
  return TransferMatrix(std::move(m));
}

Eigen::VectorXd TransferMatrix::apply(const Eigen::VectorXd& dist) const {
  if (dist.size() != m_.rows()) throw std::invalid_argument("distribution dimension mismatch");
  return m_.transpose() * dist;
}

Eigen::VectorXd TransferMatrix::correct(const Eigen::VectorXd& dist) const {
  if (dist.size() != m_.rows()) throw std::invalid_argument("distribution dimension mismatch");
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m_.transpose());
  if (!lu.isInvertible()) throw std::runtime_error("transfer matrix is singular");
  Eigen::VectorXd x = lu.solve(dist);
  x = x.cwiseMax(0.0);
  const double total = x.sum();
  if (total <= 0.0) throw std::runtime_error("corrected distribution vanished");
  return x / total;
}

TransferMatrix TransferMatrix::compose(const TransferMatrix& then) const {
  return TransferMatrix(m_ * then.m_);
}

double TransferMatrix::condition_number() const {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m_);
  const auto& s = svd.singularValues();
  return s(0) / s(s.size() - 1);
}

void NoiseModel::validate() const {
  for (double e : {eps1, eps2, eps_stark})
    if (e < 0.0 || e > 0.2)
      throw std::invalid_argument("noise fractions must lie in [0, 0.2]");
}

NoiseModel NoiseModel::fitted() {
  NoiseModel m;
  m.eps1 = 0.005;
  m.eps2 = 0.010;
  m.eps_stark = 0.014;
  m.spam = TransferMatrix::synthesized();
  return m;
}

}  // namespace q422
