// This code is part of q422.
//
// (C) Copyright 2026 q422 contributors.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "q422/experiments.hpp"

namespace q422 {

/// One Pauli assignment to the four data qubits plus its statistical
/// multiplicity within a sampling scheme.
struct ErrorConfiguration {
  PauliString pauli;
  int weight = 0;
  double multiplicity = 1.0;
};

enum class SchemeKind { Orbit, Random27, Full54 };
const char* scheme_name(SchemeKind k);
SchemeKind scheme_from_name(std::string_view name);

/// Which configurations enter the importance-weighted estimator. Weights 0
/// and 1 are always exhaustive; weight 2 is either the full 54, one
/// representative per orbit of the code-preserving qubit relabelings
/// {e,(12)(34),(13)(24),(14)(23)} weighted by orbit size (exact), or 27
/// seeded uniform draws with multiplicity 2. Weights 3 and 4 are excluded
/// (their logical error rates are set to zero).
struct ConfigScheme {
  SchemeKind kind = SchemeKind::Full54;
  std::vector<ErrorConfiguration> entries;

  static ConfigScheme full54();
  static ConfigScheme orbit();
  static ConfigScheme random27(std::uint64_t seed);
  static ConfigScheme make(SchemeKind kind, std::uint64_t seed);

  std::vector<std::pair<PauliString, double>> campaign_configs() const;
  /// Multiplicity-weighted configuration count per weight must equal 1/12/54.
  void validate() const;
};

/// p_o = (p/3)^w (1-p)^(4-w)
double statistical_importance(int weight, double p);

enum class ErrorKind { La, Lb, Combined };

/// Importance-weighted estimator sum(p_o m p_a p_f) / sum(p_o m p_a) over
/// the table rows. Throws std::domain_error when the denominator vanishes.
double logical_error_rate(const std::vector<CampaignRow>& table, double p, ErrorKind which);

/// Closed form of the intrinsic-error-free limit:
/// 16(1-p)^2(p/3)^2 / [(1-p)^4 + 4(1-p)^3(p/3) + 30(1-p)^2(p/3)^2].
double analytic_no_intrinsic(double p);

/// Independent route to the same limit: enumerate every configuration of
/// weight <= 2, simulate the ideal prep + S_z + measurement, and assemble
/// the estimator from the counts. Agrees with analytic_no_intrinsic to 1e-12.
double brute_force_oracle(double p);

struct OracleCoefficients {
  double w1_accepted;  // 4
  double w2_accepted;  // 30
  double w2_la_error;  // 16
  double w2_lb_error;  // 16
};
OracleCoefficients oracle_coefficients();

/// p_p = r + (2/3) F_x p
double physical_baseline(double p, double r = 0.003, double f_x = 0.997);

struct CurvePoint {
  double p;
  double pl_a;
  double pl_b;
  double pl_analytic;
  double p_physical;
};

std::vector<CurvePoint> sweep_error_curves(const std::vector<double>& p_grid,
                                           const ConfigScheme& scheme, const NoiseModel& noise);

struct FitTarget {
  ExperimentPlan plan;
  Eigen::VectorXd observed;
};

struct FitOptions {
  int max_iterations = 400;
  double xtol = 1e-10;
  double ftol = 1e-14;
  double lo = 0.0, hi = 0.2;
};

struct FitResult {
  std::array<double, 3> params{};  // eps1, eps2, eps_stark
  double objective = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<std::string> warnings;
};

/// Derivative-free simplex fit of (eps1, eps2, eps_stark) against observed
/// distributions; the SPAM matrix is taken from `base` and held fixed.
/// Restarts run from a fixed 5-point start lattice in [0, 0.05]^3, so the
/// result is deterministic. Flat directions at the optimum are reported as
/// warnings ("flat_eps1", ...).
FitResult fit_noise_params(const std::vector<FitTarget>& targets, const NoiseModel& base,
                           const FitOptions& options = {});

/// The three standard plans used to pin all three parameters:
/// (|00>_L, S_z, Z), (|00>_L, S_x, Z), (|++>_L, S_z, X).
std::vector<ExperimentPlan> default_fit_plans();
/// Simulate the default plans under `truth` to produce synthetic targets.
std::vector<FitTarget> make_fit_targets(const NoiseModel& truth);

}  // namespace q422
