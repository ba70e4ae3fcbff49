#include <random>

#include <stdexcept>

#include "doctest.h"
#include "q422/analysis.hpp"

using namespace q422;

TEST_CASE("statistical importance") {
  CHECK(statistical_importance(0, 0.0) == 1.0);
  CHECK(statistical_importance(1, 0.3) == doctest::Approx(0.1 * 0.343).epsilon(1e-12));

  // binomial normalization over all 256 configurations: n(w) = 3^w C(4,w)
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const double counts[5] = {1, 12, 54, 108, 81};
  for (int trial = 0; trial < 5; ++trial) {
    const double p = uni(rng);
    double total = 0.0;
    for (int w = 0; w <= 4; ++w) total += counts[w] * statistical_importance(w, p);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(statistical_importance(1, 1.5), std::domain_error);
}

TEST_CASE("logical error rate degenerate cases") {
  std::vector<CampaignRow> table;
  CampaignRow row;
  row.config = PauliString::identity(4);
  row.weight = 0;
  row.multiplicity = 1.0;
  row.p_a = 1.0;
  row.pf_la = 0.1;
  table.push_back(row);
  CHECK(logical_error_rate(table, 0.0, ErrorKind::La) == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(logical_error_rate(table, 0.0, ErrorKind::Lb) == 0.0);

  table[0].pf_la = 0.0;
  CHECK(logical_error_rate(table, 0.2, ErrorKind::La) == 0.0);

  table[0].p_a = 0.0;
  CHECK_THROWS_AS(logical_error_rate(table, 0.2, ErrorKind::La), std::domain_error);
}

TEST_CASE("analytic curve values") {
  CHECK(analytic_no_intrinsic(0.0) == 0.0);
  // p = 0.3: 16 (0.7)^2 (0.1)^2 / [(0.7)^4 + 4(0.7)^3(0.1) + 30(0.7)^2(0.1)^2]
  CHECK(analytic_no_intrinsic(0.3) == doctest::Approx(0.0784 / 0.5243).epsilon(1e-12));
  CHECK_THROWS_AS(analytic_no_intrinsic(1.0), std::domain_error);

  // small-p asymptote p_L*/p^2 -> 16/9
  CHECK(analytic_no_intrinsic(1e-6) / 1e-12 == doctest::Approx(16.0 / 9.0).epsilon(1e-4));

  // increasing on [0, 0.5]
  double last = -1.0;
  for (int i = 0; i <= 50; ++i) {
    const double v = analytic_no_intrinsic(0.5 * i / 50.0);
    CHECK(v > last);
    last = v;
  }
}

TEST_CASE("enumeration oracle reproduces the closed form and its coefficients") {
  auto c = oracle_coefficients();
  CHECK(std::abs(c.w1_accepted - 4.0) < 1e-12);
  CHECK(std::abs(c.w2_accepted - 30.0) < 1e-12);
  CHECK(std::abs(c.w2_la_error - 16.0) < 1e-12);
  CHECK(std::abs(c.w2_lb_error - 16.0) < 1e-12);
  for (double p : {0.0, 0.05, 0.21, 0.37, 0.49})
    CHECK(std::abs(brute_force_oracle(p) - analytic_no_intrinsic(p)) < 1e-12);
}

TEST_CASE("physical baseline") {
  CHECK(physical_baseline(0.0) == 0.003);
  const double slope = (physical_baseline(1.0) - physical_baseline(0.0));
  CHECK(slope == doctest::Approx((2.0 / 3.0) * 0.997).epsilon(1e-15));
  CHECK(physical_baseline(0.3) == doctest::Approx(0.003 + (2.0 / 3.0) * 0.997 * 0.3));
  CHECK(physical_baseline(0.04) == doctest::Approx(0.0296).epsilon(1e-3));
  CHECK_THROWS_AS(physical_baseline(-0.1), std::domain_error);
}

TEST_CASE("configuration schemes") {
  auto full = ConfigScheme::full54();
  CHECK(full.entries.size() == 1 + 12 + 54);

  auto orbit = ConfigScheme::orbit();
  int w2 = 0;
  double mult = 0.0;
  for (const auto& e : orbit.entries)
    if (e.weight == 2) {
      ++w2;
      mult += e.multiplicity;
      CHECK((e.multiplicity == 2.0 || e.multiplicity == 4.0));
    }
  CHECK(w2 == 18);  // orbits of the Klein relabeling group
  CHECK(mult == 54.0);

  auto rand27 = ConfigScheme::random27(12345);
  w2 = 0;
  for (const auto& e : rand27.entries)
    if (e.weight == 2) {
      ++w2;
      CHECK(e.multiplicity == 2.0);
    }
  CHECK(w2 == 27);
  // deterministic per seed
  auto again = ConfigScheme::random27(12345);
  for (std::size_t i = 0; i < rand27.entries.size(); ++i)
    CHECK(rand27.entries[i].pauli == again.entries[i].pauli);

  auto tampered = full;
  tampered.entries.pop_back();
  CHECK_THROWS_AS(tampered.validate(), std::invalid_argument);
}

TEST_CASE("orbit scheme is exact, random27 is a bounded approximation") {
  const auto zero = NoiseModel::zero();
  auto table_full = run_injection_campaign(ConfigScheme::full54().campaign_configs(), zero);
  auto table_orbit = run_injection_campaign(ConfigScheme::orbit().campaign_configs(), zero);
  auto table_rand = run_injection_campaign(ConfigScheme::random27(7).campaign_configs(), zero);
  for (double p : {0.05, 0.15, 0.3}) {
    const double ref = logical_error_rate(table_full, p, ErrorKind::La);
    CHECK(std::abs(logical_error_rate(table_orbit, p, ErrorKind::La) - ref) < 1e-14);
    const double delta = std::abs(logical_error_rate(table_rand, p, ErrorKind::La) - ref);
    MESSAGE("random27 delta at p=" << p << ": " << delta);
    CHECK(delta < 0.05);
  }
}

TEST_CASE("error sweep produces consistent curves") {
  auto curve = sweep_error_curves({0.0, 0.1}, ConfigScheme::orbit(), NoiseModel::zero());
  REQUIRE(curve.size() == 2);
  CHECK(curve[0].pl_a == doctest::Approx(0.0));
  CHECK(curve[0].pl_analytic == 0.0);
  CHECK(curve[0].p_physical == 0.003);
  CHECK(curve[1].pl_a == doctest::Approx(analytic_no_intrinsic(0.1)).epsilon(1e-12));
  CHECK_THROWS_AS(sweep_error_curves({}, ConfigScheme::orbit(), NoiseModel::zero()),
                  std::invalid_argument);
}

TEST_CASE("crossing properties against the physical baseline") {
  auto table =
      run_injection_campaign(ConfigScheme::full54().campaign_configs(), NoiseModel::fitted());
  // L_a stays below the physical qubit across the whole range
  for (int i = 0; i <= 25; ++i) {
    const double p = 0.25 * i / 25.0;
    CHECK(logical_error_rate(table, p, ErrorKind::La) < physical_baseline(p));
  }
  // L_b starts above and crosses below near p ~ 0.04 (within the loose window)
  CHECK(logical_error_rate(table, 0.005, ErrorKind::Lb) > physical_baseline(0.005));
  double crossing = -1.0;
  for (double p = 0.005; p < 0.12; p += 0.001) {
    if (logical_error_rate(table, p, ErrorKind::Lb) <= physical_baseline(p)) {
      crossing = p;
      break;
    }
  }
  MESSAGE("L_b crossing at p = " << crossing);
  CHECK(crossing >= 0.01);
  CHECK(crossing <= 0.07);
}

TEST_CASE("fitting zero-noise targets returns zero") {
  auto targets = make_fit_targets(NoiseModel::zero());
  auto result = fit_noise_params(targets, NoiseModel::zero());
  for (double v : result.params) CHECK(std::abs(v) < 1e-4);
  CHECK(result.objective < 1e-6);
}

TEST_CASE("a Z-insensitive single target flags eps_stark as flat") {
  ExperimentPlan plan;  // |00>_L prepared and read in Z with no stabilizer
  plan.state = "00L";
  plan.basis = Basis::Z;
  NoiseModel truth = NoiseModel::fitted();
  std::vector<FitTarget> targets = {{plan, simulate_plan(plan, truth)}};
  auto result = fit_noise_params(targets, truth);
  bool flagged = false;
  for (const auto& w : result.warnings)
    if (w == "flat_eps_stark") flagged = true;
  CHECK(flagged);
}
