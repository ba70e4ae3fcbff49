// This code is part of q422.
//
// (C) Copyright 2026 q422 contributors.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <Eigen/Dense>

namespace q422 {

/// Classical readout transfer matrix M with M(true, observed) = P(obs | true).
/// Rows sum to 1.
class TransferMatrix {
public:
  TransferMatrix() : TransferMatrix(identity(32)) {}
  explicit TransferMatrix(Eigen::MatrixXd m);

  static TransferMatrix identity(int n_states = 32);
  /// Tensor product of per-qubit flip matrices, P(read 1 | true 0) = p01 and
  /// P(read 0 | true 1) = p10, plus a uniform crosstalk term: each qubit picks
  /// up an extra independent flip chance `crosstalk` per neighbouring qubit
  /// whose true bit differs (qubits form a chain 1..n).
  static TransferMatrix synthesized(double p01 = 0.003, double p10 = 0.009,
                                    double crosstalk = 0.0055, int n_qubits = 5);

  const Eigen::MatrixXd& matrix() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }

  /// dist -> dist . M
  Eigen::VectorXd apply(const Eigen::VectorXd& dist) const;
  /// Solve corrected . M = dist; negatives clipped to 0, result renormalized.
  /// Throws std::runtime_error when M is singular.
  Eigen::VectorXd correct(const Eigen::VectorXd& dist) const;

  TransferMatrix compose(const TransferMatrix& then) const;  // this, then `then`
  double condition_number() const;

private:
  Eigen::MatrixXd m_;
};

/// Three coherent error parameters plus the SPAM transfer matrix.
/// Each eps is a per-gate error probability in [0, 0.2]; see simulator.hpp
/// for the exact rotations they generate.
struct NoiseModel {
  double eps1 = 0.0;       // single-qubit over/under-rotation
  double eps2 = 0.0;       // two-qubit over/under-rotation
  double eps_stark = 0.0;  // Stark-shift phase error per two-qubit gate
  TransferMatrix spam = TransferMatrix::identity();

  bool is_zero() const { return eps1 == 0 && eps2 == 0 && eps_stark == 0; }
  void validate() const;

  static NoiseModel zero() { return {}; }
  /// The fitted device model: rates 0.50%, 1.0%, 1.4% and synthesized SPAM.
  static NoiseModel fitted();
};

}  // namespace q422
