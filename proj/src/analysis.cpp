// This code is part of q422.
//
// (C) Copyright 2026 q422 contributors.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "q422/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

namespace q422 {

const char* scheme_name(SchemeKind k) {
  switch (k) {
    case SchemeKind::Orbit: return "orbit";
    case SchemeKind::Random27: return "random27";
    case SchemeKind::Full54: return "full54";
  }
  return "?";
}

SchemeKind scheme_from_name(std::string_view name) {
  if (name == "orbit") return SchemeKind::Orbit;
  if (name == "random27") return SchemeKind::Random27;
  if (name == "full54") return SchemeKind::Full54;
  throw std::invalid_argument("unknown scheme: " + std::string(name));
}

namespace {
std::vector<PauliString> all_configs_of_weight(int w) {
  static const Pauli kErr[3] = {Pauli::X, Pauli::Y, Pauli::Z};
  std::vector<PauliString> out;
  if (w == 0) {
    out.push_back(PauliString::identity(4));
    return out;
  }
  if (w == 1) {
    for (int q = 0; q < 4; ++q)
      for (Pauli p : kErr) {
        std::vector<Pauli> letters(4, Pauli::I);
        letters[q] = p;
        out.emplace_back(std::move(letters));
      }
    return out;
  }
  if (w == 2) {
    for (int qa = 0; qa < 4; ++qa)
      for (int qb = qa + 1; qb < 4; ++qb)
        for (Pauli pa : kErr)
          for (Pauli pb : kErr) {
            std::vector<Pauli> letters(4, Pauli::I);
            letters[qa] = pa;
            letters[qb] = pb;
            out.emplace_back(std::move(letters));
          }
    return out;
  }
  throw std::invalid_argument("only weights 0..2 are enumerated");
}

std::vector<ErrorConfiguration> base_entries() {
  std::vector<ErrorConfiguration> entries;
  for (int w : {0, 1})
    for (auto& p : all_configs_of_weight(w)) entries.push_back({p, w, 1.0});
  return entries;
}

// the code-structure-preserving qubit relabelings (Klein four-group)
constexpr std::array<std::array<int, 4>, 4> kRelabelings = {{
    {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};

PauliString relabel(const PauliString& p, const std::array<int, 4>& perm) {
  std::vector<Pauli> letters(4, Pauli::I);
  for (int i = 0; i < 4; ++i) letters[perm[i]] = p.letters()[i];
  return PauliString(std::move(letters));
}
}  // namespace

ConfigScheme ConfigScheme::full54() {
  ConfigScheme s;
  s.kind = SchemeKind::Full54;
  s.entries = base_entries();
  for (auto& p : all_configs_of_weight(2)) s.entries.push_back({p, 2, 1.0});
  s.validate();
  return s;
}

ConfigScheme ConfigScheme::orbit() {
  ConfigScheme s;
  s.kind = SchemeKind::Orbit;
  s.entries = base_entries();
  std::map<std::string, int> orbit_size;  // keyed by lexicographically least member
  for (auto& p : all_configs_of_weight(2)) {
    std::string least = p.str();
    for (const auto& perm : kRelabelings) least = std::min(least, relabel(p, perm).str());
    ++orbit_size[least];
  }
  for (const auto& [rep, size] : orbit_size)
    s.entries.push_back({PauliString::parse(rep), 2, static_cast<double>(size)});
  s.validate();
  return s;
}

ConfigScheme ConfigScheme::random27(std::uint64_t seed) {
  ConfigScheme s;
  s.kind = SchemeKind::Random27;
  s.entries = base_entries();
  auto w2 = all_configs_of_weight(2);
  std::mt19937_64 rng(seed);
  std::shuffle(w2.begin(), w2.end(), rng);
  w2.resize(27);
  std::sort(w2.begin(), w2.end(),
            [](const PauliString& a, const PauliString& b) { return a.str() < b.str(); });
  for (auto& p : w2) s.entries.push_back({p, 2, 2.0});
  s.validate();
  return s;
}

ConfigScheme ConfigScheme::make(SchemeKind kind, std::uint64_t seed) {
  switch (kind) {
    case SchemeKind::Orbit: return orbit();
    case SchemeKind::Random27: return random27(seed);
    case SchemeKind::Full54: return full54();
  }
  throw std::invalid_argument("unknown scheme");
}

std::vector<std::pair<PauliString, double>> ConfigScheme::campaign_configs() const {
  std::vector<std::pair<PauliString, double>> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.emplace_back(e.pauli, e.multiplicity);
  return out;
}

void ConfigScheme::validate() const {
  std::array<double, 3> totals{};
  for (const auto& e : entries) {
    if (e.weight < 0 || e.weight > 2)
      throw std::invalid_argument("scheme must only contain weights 0..2");
    if (e.pauli.weight() != e.weight) throw std::invalid_argument("weight field mismatch");
    totals[e.weight] += e.multiplicity;
  }
  const std::array<double, 3> expected = {1.0, 12.0, 54.0};
  for (int w = 0; w < 3; ++w)
    if (std::abs(totals[w] - expected[w]) > 1e-12)
      throw std::invalid_argument("scheme multiplicities must cover the full configuration count");
}

double statistical_importance(int weight, double p) {
  if (p < 0.0 || p > 1.0) throw std::domain_error("p must lie in [0, 1]");
  return std::pow(p / 3.0, weight) * std::pow(1.0 - p, 4 - weight);
}

double logical_error_rate(const std::vector<CampaignRow>& table, double p, ErrorKind which) {
  double num = 0.0, den = 0.0;
  for (const auto& row : table) {
    const double po = statistical_importance(row.weight, p);
    const double pf = which == ErrorKind::La   ? row.pf_la
                      : which == ErrorKind::Lb ? row.pf_lb
                                               : row.pf_any;
    num += po * row.multiplicity * row.p_a * pf;
    den += po * row.multiplicity * row.p_a;
  }
  if (den <= 0.0) throw std::domain_error("no accepted probability mass in the estimator denominator");
  return num / den;
}

double analytic_no_intrinsic(double p) {
  if (p < 0.0 || p >= 1.0) throw std::domain_error("p must lie in [0, 1)");
  const double q = p / 3.0, r = 1.0 - p;
  const double den = r * r * r * r + 4.0 * r * r * r * q + 30.0 * r * r * q * q;
  return 16.0 * r * r * q * q / den;
}

namespace {
const std::vector<CampaignRow>& ideal_table() {
  static const std::vector<CampaignRow> table = [] {
    std::vector<std::pair<PauliString, double>> configs;
    for (int w : {0, 1, 2})
      for (auto& p : all_configs_of_weight(w)) configs.emplace_back(p, 1.0);
    return run_injection_campaign(configs, NoiseModel::zero());
  }();
  return table;
}
}  // namespace

double brute_force_oracle(double p) { return logical_error_rate(ideal_table(), p, ErrorKind::La); }

OracleCoefficients oracle_coefficients() {
  OracleCoefficients c{0, 0, 0, 0};
  for (const auto& row : ideal_table()) {
    if (row.weight == 1) c.w1_accepted += row.p_a;
    if (row.weight == 2) {
      c.w2_accepted += row.p_a;
      c.w2_la_error += row.p_a * row.pf_la;
      c.w2_lb_error += row.p_a * row.pf_lb;
    }
  }
  return c;
}

double physical_baseline(double p, double r, double f_x) {
  if (p < 0.0 || p > 1.0) throw std::domain_error("p must lie in [0, 1]");
  return r + (2.0 / 3.0) * f_x * p;
}

std::vector<CurvePoint> sweep_error_curves(const std::vector<double>& p_grid,
                                           const ConfigScheme& scheme, const NoiseModel& noise) {
  if (p_grid.empty()) throw std::invalid_argument("empty p grid");
  const auto table = run_injection_campaign(scheme.campaign_configs(), noise);
  std::vector<CurvePoint> curve;
  curve.reserve(p_grid.size());
  for (double p : p_grid)
    curve.push_back({p, logical_error_rate(table, p, ErrorKind::La),
                     logical_error_rate(table, p, ErrorKind::Lb), analytic_no_intrinsic(p),
                     physical_baseline(p)});
  return curve;
}

std::vector<ExperimentPlan> default_fit_plans() {
  ExperimentPlan a;
  a.state = "00L";
  a.stabilizer = StabKind::Sz;
  a.basis = Basis::Z;
  ExperimentPlan b;
  b.state = "00L";
  b.stabilizer = StabKind::Sx;
  b.basis = Basis::Z;
  ExperimentPlan c;
  c.state = "++L";
  c.stabilizer = StabKind::Sz;
  c.basis = Basis::X;
  return {a, b, c};
}

std::vector<FitTarget> make_fit_targets(const NoiseModel& truth) {
  std::vector<FitTarget> targets;
  for (const auto& plan : default_fit_plans())
    targets.push_back({plan, simulate_plan(plan, truth)});
  return targets;
}

namespace {
struct Simplex {
  std::array<std::array<double, 3>, 4> x;
  std::array<double, 4> f;
};

template <typename Fn>
FitResult nelder_mead(Fn&& objective, std::array<double, 3> start, const FitOptions& opt) {
  constexpr int n = 3;
  // candidates are projected into the box; a hard penalty would pin the
  // simplex against the boundary and stall the free directions
  auto clamp_point = [&](std::array<double, 3> x) {
    for (double& v : x) v = std::clamp(v, opt.lo, opt.hi);
    return x;
  };
  Simplex s;
  s.x[0] = clamp_point(start);
  for (int i = 0; i < n; ++i) {
    s.x[i + 1] = start;
    s.x[i + 1][i] += start[i] != 0.0 ? 0.5 * start[i] : 0.005;
    s.x[i + 1] = clamp_point(s.x[i + 1]);
  }
  for (int v = 0; v < n + 1; ++v) s.f[v] = objective(s.x[v]);

  auto order = [&] {
    std::array<int, 4> idx = {0, 1, 2, 3};
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return s.f[a] < s.f[b]; });
    Simplex t;
    for (int v = 0; v < 4; ++v) {
      t.x[v] = s.x[idx[v]];
      t.f[v] = s.f[idx[v]];
    }
    s = t;
  };
  auto blend = [](const std::array<double, 3>& a, const std::array<double, 3>& b, double t) {
    std::array<double, 3> out;
    for (int i = 0; i < 3; ++i) out[i] = a[i] + t * (b[i] - a[i]);
    return out;
  };

  FitResult result;
  int iter = 0;
  for (; iter < opt.max_iterations; ++iter) {
    order();
    double spread = 0.0;
    for (int i = 0; i < n; ++i)
      spread = std::max(spread, std::abs(s.x[3][i] - s.x[0][i]));
    if (spread < opt.xtol && std::abs(s.f[3] - s.f[0]) < opt.ftol) {
      result.converged = true;
      break;
    }
    std::array<double, 3> centroid{};
    for (int v = 0; v < n; ++v)
      for (int i = 0; i < n; ++i) centroid[i] += s.x[v][i] / n;

    const auto reflected = clamp_point(blend(centroid, s.x[3], -1.0));
    const double fr = objective(reflected);
    if (fr < s.f[0]) {
      const auto expanded = clamp_point(blend(centroid, s.x[3], -2.0));
      const double fe = objective(expanded);
      if (fe < fr) { s.x[3] = expanded; s.f[3] = fe; }
      else { s.x[3] = reflected; s.f[3] = fr; }
    } else if (fr < s.f[2]) {
      s.x[3] = reflected;
      s.f[3] = fr;
    } else {
      const bool outside = fr < s.f[3];
      const auto contracted = clamp_point(blend(centroid, outside ? reflected : s.x[3], 0.5));
      const double fc = objective(contracted);
      if (fc < (outside ? fr : s.f[3])) {
        s.x[3] = contracted;
        s.f[3] = fc;
      } else {
        for (int v = 1; v < n + 1; ++v) {
          s.x[v] = blend(s.x[0], s.x[v], 0.5);
          s.f[v] = objective(s.x[v]);
        }
      }
    }
  }
  order();
  result.params = s.x[0];
  result.objective = s.f[0];
  result.iterations = iter;
  return result;
}
}  // namespace

FitResult fit_noise_params(const std::vector<FitTarget>& targets, const NoiseModel& base,
                           const FitOptions& options) {
  if (targets.empty()) throw std::invalid_argument("at least one fit target is required");

  auto objective = [&](const std::array<double, 3>& x) {
    for (double v : x)
      if (v < options.lo || v > options.hi)
        return 1e3 + std::abs(x[0]) + std::abs(x[1]) + std::abs(x[2]);
    NoiseModel model = base;
    model.eps1 = x[0];
    model.eps2 = x[1];
    model.eps_stark = x[2];
    double total = 0.0;
    for (const auto& t : targets)
      total += (simulate_plan(t.plan, model) - t.observed).norm();
    return total;
  };

  // fixed start lattice; restarts keep the fit deterministic
  const std::array<std::array<double, 3>, 5> starts = {{{0.01, 0.01, 0.01},
                                                        {0.04, 0.01, 0.01},
                                                        {0.01, 0.04, 0.01},
                                                        {0.01, 0.01, 0.04},
                                                        {0.025, 0.025, 0.025}}};
  FitResult best;
  bool have_best = false;
  int total_iters = 0;
  bool any_converged = false;
  for (const auto& start : starts) {
    FitResult r = nelder_mead(objective, start, options);
    total_iters += r.iterations;
    any_converged = any_converged || r.converged;
    if (!have_best || r.objective < best.objective) {
      best = r;
      have_best = true;
    }
  }
  best.iterations = total_iters;
  best.converged = any_converged;
  if (!best.converged) best.warnings.push_back("max_iterations");

  // identifiability probe: flag directions the objective cannot see
  const char* names[3] = {"flat_eps1", "flat_eps2", "flat_eps_stark"};
  const double f0 = best.objective;
  for (int i = 0; i < 3; ++i) {
    std::array<double, 3> probe = best.params;
    probe[i] = std::min(options.hi, probe[i] + 1e-3);
    std::array<double, 3> probe_dn = best.params;
    probe_dn[i] = std::max(options.lo, probe_dn[i] - 1e-3);
    const double up = std::abs(objective(probe) - f0);
    const double dn = std::abs(objective(probe_dn) - f0);
    if (std::max(up, dn) < 1e-12) best.warnings.push_back(names[i]);
  }
  return best;
}

}  // namespace q422
