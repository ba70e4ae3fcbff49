// This code is part of q422.
//
// (C) Copyright 2026 q422 contributors.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <Eigen/Dense>

namespace q422 {

// Exact state representations. Qubit q (1-based) maps to bit position
// n_qubits - q, so qubit 1 is the most significant bit and the ancilla
// (qubit 5) the least significant: |11110> has index 30.
using StateVector = Eigen::VectorXcd;
using DensityMatrix = Eigen::MatrixXcd;

int num_qubits(Eigen::Index dim);

StateVector zero_state(int n_qubits);
StateVector basis_state(int n_qubits, int index);
DensityMatrix to_density(const StateVector& psi);

double purity(const DensityMatrix& rho);
/// |<a|b>|^2 for state vectors.
double fidelity(const StateVector& a, const StateVector& b);

/// Hermitian within tol, trace 1 within tol, eigenvalues >= -eig_tol.
bool is_valid_density(const DensityMatrix& rho, double tol = 1e-10, double eig_tol = 1e-9);

}  // namespace q422
