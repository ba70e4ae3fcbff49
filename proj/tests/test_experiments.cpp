#include <random>

#include <stdexcept>

#include "doctest.h"
#include "q422/experiments.hpp"

using namespace q422;

namespace {
const char* kAllLabels[] = {"00L", "01L", "10L", "11L", "++L", "+-L", "-+L", "--L", "0+L", "-1L"};
}

TEST_CASE("encoders produce the exact codewords") {
  for (const char* label : kAllLabels) {
    StateVector psi = run_pure(build_prep(label), zero_state(5));
    CHECK((psi - codeword_full(label)).cwiseAbs().maxCoeff() < 1e-12);
  }
  CHECK_THROWS_AS(build_prep("xyz"), std::invalid_argument);
}

TEST_CASE("gate order of the fixtures is frozen") {
  // fault-slot enumeration depends on this order; changing it is a breaking change
  CHECK(build_prep("00L").to_text() == "H 2\nCNOT 2 3\nCNOT 2 1\nCNOT 3 4\n");
  CHECK(build_prep("++L").to_text() == "H 1\nH 2\nH 4\nCNOT 2 3\nCNOT 1 3\nCNOT 4 2\n");
  CHECK(build_stabilizer(StabKind::Sx).to_text() ==
        "H 5\nCNOT 5 1\nCNOT 5 2\nCNOT 5 3\nCNOT 5 4\nH 5\n");
  CHECK(build_stabilizer(StabKind::Sz).to_text() == "CNOT 2 5\nCNOT 4 5\nCNOT 1 5\nCNOT 3 5\n");
}

TEST_CASE("transversal X on qubits 2,3 maps |00>_L to |11>_L") {
  Circuit c = build_prep("00L");
  c.append(GateOp::x(2)).append(GateOp::x(3));
  StateVector psi = run_pure(c, zero_state(5));
  CHECK(fidelity(psi, codeword_full("11L")) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("stabilizer rounds are non-demolition on codewords") {
  for (const char* label : kAllLabels) {
    for (StabKind st : {StabKind::Sz, StabKind::Sx}) {
      Circuit c = build_prep(label);
      c.append(build_stabilizer(st));
      StateVector psi = run_pure(c, zero_state(5));
      CHECK(fidelity(psi, codeword_full(label)) == doctest::Approx(1.0).epsilon(1e-10));
    }
    // both stabilizers in sequence leave the data state identical
    Circuit c = build_prep(label);
    c.append(build_stabilizer(StabKind::Sz)).append(build_stabilizer(StabKind::Sx));
    StateVector psi = run_pure(c, zero_state(5));
    CHECK(fidelity(psi, codeword_full(label)) == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("stabilizers flag detectable errors") {
  // bit flip on qubit 1 anticommutes with ZZZZ
  Circuit c = build_prep("00L");
  c.append(GateOp::x(1));
  c.append(build_stabilizer(StabKind::Sz));
  auto dist = measure_distribution(run_pure(c, zero_state(5)), uniform_bases(5, Basis::Z));
  double anc1 = 0.0;
  for (int s = 1; s < 32; s += 2) anc1 += dist[s];
  CHECK(anc1 == doctest::Approx(1.0).epsilon(1e-12));

  // phase flip on qubit 2 anticommutes with XXXX
  c = build_prep("++L");
  c.append(GateOp::z(2));
  c.append(build_stabilizer(StabKind::Sx));
  dist = measure_distribution(run_pure(c, zero_state(5)), uniform_bases(5, Basis::X));
  anc1 = 0.0;
  for (int s = 1; s < 32; s += 2) anc1 += dist[s];
  CHECK(anc1 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("postselect on the ideal state") {
  auto dist = measure_distribution(codeword_full("00L"), uniform_bases(5, Basis::Z));
  auto rep = postselect(dist, Basis::Z, false);
  CHECK(rep.yield == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rep.logical_pops[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rep.la_error(0) < 1e-12);
  CHECK(rep.lb_error(0) < 1e-12);
}

TEST_CASE("postselect on the uniform distribution") {
  Eigen::VectorXd uniform = Eigen::VectorXd::Constant(32, 1.0 / 32.0);
  auto rep = postselect(uniform, Basis::Z, true);
  CHECK(rep.yield == doctest::Approx(8.0 / 32.0).epsilon(1e-12));
  for (int i = 0; i < 4; ++i)
    CHECK(rep.logical_pops[i] == doctest::Approx(0.25).epsilon(1e-12));

  rep = postselect(uniform, Basis::Z, false);
  CHECK(rep.yield == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("postselect flags empty acceptance") {
  Eigen::VectorXd d = Eigen::VectorXd::Zero(32);
  d[0b00010] = 1.0;  // odd data parity
  auto rep = postselect(d, Basis::Z, false);
  CHECK(rep.yield == 0.0);
  CHECK_FALSE(rep.pops_defined);
}

TEST_CASE("accepted mass only lives on even-parity ancilla-0 strings") {
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  Eigen::VectorXd d(32);
  for (int i = 0; i < 32; ++i) d[i] = uni(rng);
  d /= d.sum();
  auto rep = postselect(d, Basis::Z, true);
  double manual = 0.0;
  for (int s = 0; s < 32; ++s) {
    const int b1 = (s >> 4) & 1, b2 = (s >> 3) & 1, b3 = (s >> 2) & 1, b4 = (s >> 1) & 1;
    if ((s & 1) == 0 && (b1 ^ b2 ^ b3 ^ b4) == 0) manual += d[s];
  }
  CHECK(rep.yield == doctest::Approx(manual).epsilon(1e-14));
}

TEST_CASE("fault enumeration certifies L_a and finds the L_b hook") {
  auto report = enumerate_single_faults("00L", StabKind::None);
  CHECK(report.la_fault_tolerant());
  CHECK(report.count(FaultClass::LaError) == 0);
  auto hooks = report.hooks();
  REQUIRE(!hooks.empty());
  // the drawn hook: a bit flip on qubit 2 between its two CNOTs, accepted as |01>_L
  bool found = false;
  for (const auto& h : hooks)
    if (h.slot == 2 && h.qubit == 2 && h.pauli == Pauli::X &&
        std::abs(h.accepted - 1.0) < 1e-12 && std::abs(h.lb_wrong - 1.0) < 1e-12)
      found = true;
  CHECK(found);
}

TEST_CASE("no single ancilla fault during a stabilizer harms L_a") {
  for (const char* label : {"00L", "++L"}) {
    for (StabKind st : {StabKind::Sz, StabKind::Sx}) {
      auto report = enumerate_single_faults(label, st);
      CHECK(report.la_fault_tolerant());
      for (const auto& site : report.sites)
        if (site.qubit == 5) CHECK(site.cls != FaultClass::LaError);
    }
  }
}

TEST_CASE("the checker catches a non-fault-tolerant encoder") {
  // fan-out from a single control: an X on the control mid-circuit
  // propagates to X1X4, an L_a error
  Circuit star(5);
  star.append(GateOp::h(1))
      .append(GateOp::cnot(1, 2))
      .append(GateOp::cnot(1, 3))
      .append(GateOp::cnot(1, 4));
  StateVector psi = run_pure(star, zero_state(5));
  CHECK(fidelity(psi, codeword_full("00L")) == doctest::Approx(1.0));  // same ideal output

  auto report = enumerate_single_faults(star, nullptr, Basis::Z, 0, 0, "star-mutant");
  CHECK_FALSE(report.la_fault_tolerant());
  CHECK(report.count(FaultClass::LaError) > 0);
}

TEST_CASE("full certification suite") {
  auto reports = ft_certification_suite();
  CHECK(reports.size() == 12);
  for (const auto& r : reports) {
    INFO(r.construction);
    CHECK(r.la_fault_tolerant());
  }
}

TEST_CASE("transversal logical operators never reduce the ideal yield") {
  for (const char* label : kAllLabels) {
    const auto& info = find_label(label);
    auto dist = measure_distribution(run_pure(build_prep(label), zero_state(5)),
                                     uniform_bases(5, info.def_basis));
    auto rep = postselect(dist, info.def_basis, false);
    CHECK(rep.yield == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("plan keys and parsing") {
  ExperimentPlan plan;
  plan.state = "++L";
  plan.stabilizer = StabKind::Sz;
  plan.basis = Basis::X;
  auto parsed = ExperimentPlan::parse("state=++L;stab=Sz;basis=X");
  CHECK(parsed.key() == plan.key());

  auto defaulted = ExperimentPlan::parse("state=-1L;stab=Sx");
  CHECK(defaulted.basis == Basis::X);  // falls back to the label's definite basis

  auto injected = ExperimentPlan::parse("state=00L;stab=Sz;basis=Z;inject=XYII");
  REQUIRE(injected.injected.has_value());
  CHECK(injected.injected->str() == "+XYII");

  CHECK_THROWS_AS(ExperimentPlan::parse("state=00L;foo=1"), std::invalid_argument);
}

TEST_CASE("injection campaign under ideal gates") {
  std::vector<std::pair<PauliString, double>> configs = {
      {PauliString::parse("IIII"), 1.0},
      {PauliString::parse("XIII"), 1.0},
      {PauliString::parse("XIXI"), 1.0},  // = X_a
      {PauliString::parse("ZIII"), 1.0},
  };
  auto rows = run_injection_campaign(configs, NoiseModel::zero());
  REQUIRE(rows.size() == 4);

  CHECK(rows[0].p_a == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rows[0].pf_any < 1e-12);

  CHECK(rows[1].p_a < 1e-12);  // single X is caught by S_z

  CHECK(rows[2].p_a == doctest::Approx(1.0).epsilon(1e-12));  // logical op passes selection
  CHECK(rows[2].pf_la == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rows[2].pf_lb < 1e-12);

  CHECK(rows[3].p_a == doctest::Approx(1.0).epsilon(1e-12));  // Z is invisible on |00>_L
  CHECK(rows[3].pf_any < 1e-12);
}

TEST_CASE("miscalibration alpha=0 reproduces the native pipeline") {
  ExperimentPlan native;
  native.state = "00L";
  native.stabilizer = StabKind::Sz;
  native.basis = Basis::Z;
  ExperimentPlan macro = native;
  macro.decompose_cnot = true;
  macro.alpha = 0.0;
  auto noise = NoiseModel::fitted();
  auto a = simulate_plan(native, noise);
  auto b = simulate_plan(macro, noise);
  CHECK((a - b).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("miscalibration sweep degrades yield and keeps the gap") {
  auto points = run_miscal_sweep({0.0, 0.1}, NoiseModel::fitted());
  REQUIRE(points.size() == 2);
  CHECK(points[1].yield_sx < points[0].yield_sx);
  CHECK(points[1].yield_sz < points[0].yield_sz);
  for (const auto& pt : points) {
    const auto la_err = [](const Eigen::Vector4d& pops) { return pops[2] + pops[3]; };
    const auto lb_err = [](const Eigen::Vector4d& pops) { return pops[1] + pops[3]; };
    CHECK(la_err(pt.pops_sx) < lb_err(pt.pops_sx));
    CHECK(la_err(pt.pops_sz) < lb_err(pt.pops_sz));
  }
}

TEST_CASE("fitted-noise yields land in the published bands") {
  const auto noise = NoiseModel::fitted();

  ExperimentPlan prep;
  prep.state = "00L";
  prep.basis = Basis::Z;
  auto rep = postselect(simulate_plan(prep, noise), Basis::Z, false);
  CHECK(rep.yield > 0.86);  // published value 91.1, +/- 0.05 band
  CHECK(rep.yield < 0.96);
  CHECK(rep.logical_pops[0] > 0.9);

  ExperimentPlan eleven;
  eleven.state = "11L";
  eleven.stabilizer = StabKind::Sx;
  eleven.basis = Basis::Z;
  rep = postselect(simulate_plan(eleven, noise), Basis::Z, true);
  CHECK(rep.logical_pops[3] > 0.9);    // pop11 dominant
  CHECK(rep.la_error(1) < 0.01);       // L_a error below 1%
}

TEST_CASE("table 1 fixture") {
  const auto& rows = table1_rows();
  CHECK(rows.size() == 19);
  int definite = 0;
  for (const auto& r : rows)
    if (r.definite()) ++definite;
  CHECK(definite == 7);
  // zero-noise |−1>_L in Z splits evenly between |01>_L and |11>_L
  ExperimentPlan plan;
  plan.state = "-1L";
  plan.basis = Basis::Z;
  auto rep = postselect(simulate_plan(plan, NoiseModel::zero()), Basis::Z, false);
  CHECK(rep.logical_pops[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rep.logical_pops[3] == doctest::Approx(0.5).epsilon(1e-12));
}
