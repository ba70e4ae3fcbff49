// This code is part of q422.
//
// (C) Copyright 2026 q422 contributors.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
//
// Batch front end: reproducible experiment runs with CSV/JSON file outputs.
// Exit codes: 0 success, 1 usage error, 2 property violation.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "q422/analysis.hpp"
#include "q422/experiments.hpp"

using namespace q422;

namespace {

std::string g12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<double> parse_grid(const std::string& spec) {
  // "a:b:step" inclusive of both ends (within step/2 slack)
  double a, b, step;
  char c1, c2;
  std::istringstream in(spec);
  if (!(in >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':' || step <= 0)
    throw CLI::ValidationError("--p-grid", "expected a:b:step with step > 0");
  std::vector<double> grid;
  for (double v = a; v <= b + step * 0.5; v += step) grid.push_back(v);
  return grid;
}

NoiseModel parse_noise(const std::string& spec) {
  if (spec == "zero") return NoiseModel::zero();
  if (spec == "fitted") return NoiseModel::fitted();
  if (spec.rfind("file=", 0) == 0) {
    std::ifstream in(spec.substr(5));
    if (!in) throw CLI::ValidationError("--noise", "cannot open " + spec.substr(5));
    NoiseModel m;
    double p01 = 0.003, p10 = 0.009, crosstalk = 0.0055;
    std::string spam = "synthesized";
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      std::string kv;
      if (!(ls >> kv)) continue;
      auto eq = kv.find('=');
      if (eq == std::string::npos)
        throw CLI::ValidationError("--noise", "expected key=value: " + kv);
      const std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
      if (key == "eps1") m.eps1 = std::stod(value);
      else if (key == "eps2") m.eps2 = std::stod(value);
      else if (key == "eps_stark") m.eps_stark = std::stod(value);
      else if (key == "spam") spam = value;
      else if (key == "spam_p01") p01 = std::stod(value);
      else if (key == "spam_p10") p10 = std::stod(value);
      else if (key == "spam_crosstalk") crosstalk = std::stod(value);
      else throw CLI::ValidationError("--noise", "unknown key: " + key);
    }
    if (spam == "synthesized") m.spam = TransferMatrix::synthesized(p01, p10, crosstalk);
    else if (spam == "identity") m.spam = TransferMatrix::identity();
    else throw CLI::ValidationError("--noise", "spam must be identity or synthesized");
    m.validate();
    return m;
  }
  throw CLI::ValidationError("--noise", "expected zero, fitted or file=PATH");
}

// all output flows through one sink so runs are byte-reproducible
struct Out {
  std::unique_ptr<std::ofstream> file;
  std::ostream& stream() { return file ? *file : std::cout; }
  explicit Out(const std::string& path) {
    if (!path.empty()) {
      file = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file) throw CLI::ValidationError("--out", "cannot write " + path);
    }
  }
};

void write_distribution(std::ostream& os, const Eigen::VectorXd& dist) {
  os << "state_index,probability\n";
  for (Eigen::Index i = 0; i < dist.size(); ++i) os << i << "," << g12(dist[i]) << "\n";
}

void write_report_row(std::ostream& os, const std::string& key, const SelectionReport& rep) {
  os << key << "," << g12(rep.yield);
  for (int i = 0; i < 4; ++i) os << "," << g12(rep.logical_pops[i]);
  os << "\n";
}

constexpr const char* kReportHeader = "key,yield,pop00,pop01,pop10,pop11\n";

std::string corrected_path(const std::string& raw) {
  const std::string suffix = ".csv";
  if (raw.size() > suffix.size() &&
      raw.compare(raw.size() - suffix.size(), suffix.size(), suffix) == 0)
    return raw.substr(0, raw.size() - suffix.size()) + ".corrected.csv";
  return raw + ".corrected";
}

struct CommonArgs {
  std::string state = "00L";
  std::string stabilizer = "none";
  std::string basis;
  std::string noise = "zero";
  std::string scheme = "orbit";
  std::string out;
  std::uint64_t seed = 12345;
};

ExperimentPlan make_plan(const CommonArgs& args) {
  ExperimentPlan plan;
  plan.state = args.state;
  plan.stabilizer = stab_from_name(args.stabilizer);
  plan.basis = args.basis.empty() ? find_label(args.state).def_basis
                                  : basis_from_char(args.basis.at(0));
  return plan;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"[[4,2,2]] error-detection code simulator and analysis toolkit"};
  app.require_subcommand(1);

  CommonArgs args;
  double alpha = 0.0;
  std::string p_grid = "0:0.3:0.01";
  std::string alpha_grid = "0:0.1:0.02";
  std::string truth = "0.005,0.010,0.014";
  std::string circuit_file;

  auto add_noise = [&](CLI::App* cmd) {
    cmd->add_option("--noise", args.noise, "zero | fitted | file=PATH");
  };
  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", args.out, "output file (stdout when omitted)");
  };

  auto* encode = app.add_subcommand("encode", "prepare a logical state and measure it");
  encode->add_option("--state", args.state, "logical state label, e.g. 00L, ++L, -1L");
  encode->add_option("--basis", args.basis, "Z or X (defaults to the state's definite basis)");
  auto* encode_alpha =
      encode->add_option("--alpha", alpha, "run CNOTs through miscalibrated XX gates");
  add_noise(encode);
  add_out(encode);

  auto* stabilize =
      app.add_subcommand("stabilize", "prepare, run a stabilizer round, post-select");
  stabilize->add_option("--state", args.state, "logical state label");
  stabilize->add_option("--stabilizer", args.stabilizer, "none | Sx | Sz");
  stabilize->add_option("--basis", args.basis, "Z or X");
  auto* stabilize_alpha =
      stabilize->add_option("--alpha", alpha, "run CNOTs through miscalibrated XX gates");
  add_noise(stabilize);
  add_out(stabilize);

  auto* ftcheck = app.add_subcommand(
      "ftcheck", "certify fault tolerance of the encoding and stabilizer circuits");
  ftcheck->add_option("--circuit", circuit_file,
                      "check a custom prep circuit (text format) instead of the suite");
  ftcheck->add_option("--state", args.state, "label giving decode targets for --circuit");
  ftcheck->add_option("--stabilizer", args.stabilizer, "stabilizer appended after --circuit");
  add_out(ftcheck);

  auto* inject = app.add_subcommand("inject", "per-configuration injection campaign table");
  inject->add_option("--scheme", args.scheme, "orbit | random27 | full54");
  inject->add_option("--seed", args.seed, "seed for the random27 scheme");
  add_noise(inject);
  add_out(inject);

  auto* sweep_error = app.add_subcommand("sweep-error", "logical error curves vs added error");
  sweep_error->add_option("--p-grid", p_grid, "a:b:step");
  sweep_error->add_option("--scheme", args.scheme, "orbit | random27 | full54");
  sweep_error->add_option("--seed", args.seed, "seed for the random27 scheme");
  add_noise(sweep_error);
  add_out(sweep_error);

  auto* sweep_miscal =
      app.add_subcommand("sweep-miscal", "yields and populations vs XX miscalibration");
  sweep_miscal->add_option("--alpha-grid", alpha_grid, "a:b:step");
  add_noise(sweep_miscal);
  add_out(sweep_miscal);

  auto* fit = app.add_subcommand("fit", "round-trip noise-parameter fit");
  fit->add_option("--truth", truth, "eps1,eps2,eps_stark used to synthesize targets");
  std::string fit_noise = "fitted";
  fit->add_option("--noise", fit_noise, "base model supplying the SPAM matrix");
  add_out(fit);

  auto* table1 = app.add_subcommand("table1", "the 19 published rows, simulated");
  add_noise(table1);
  add_out(table1);

  try {
    app.parse(argc, argv);

    if (encode->parsed()) {
      auto noise = parse_noise(args.noise);
      auto plan = make_plan(args);
      if (encode_alpha->count()) {
        plan.decompose_cnot = true;
        plan.alpha = alpha;
      }
      auto dist = simulate_plan(plan, noise);
      auto rep = postselect(dist, plan.basis, false);
      Out out(args.out);
      out.stream() << kReportHeader;
      write_report_row(out.stream(), plan.key(), rep);
      if (!args.out.empty()) {
        std::string base = args.out;
        if (base.size() > 4 && base.compare(base.size() - 4, 4, ".csv") == 0)
          base.resize(base.size() - 4);
        std::ofstream raw(base + ".raw.csv", std::ios::binary);
        write_distribution(raw, dist);
        std::ofstream corr(base + ".corrected.csv", std::ios::binary);
        write_distribution(corr, noise.spam.correct(dist));
      } else {
        out.stream() << "# raw distribution\n";
        write_distribution(out.stream(), dist);
        out.stream() << "# SPAM-corrected distribution\n";
        write_distribution(out.stream(), noise.spam.correct(dist));
      }
      return 0;
    }

    if (stabilize->parsed()) {
      auto noise = parse_noise(args.noise);
      auto plan = make_plan(args);
      if (stabilize_alpha->count()) {
        plan.decompose_cnot = true;
        plan.alpha = alpha;
      }
      auto rep = postselect(simulate_plan(plan, noise), plan.basis,
                            plan.stabilizer != StabKind::None);
      Out out(args.out);
      out.stream() << kReportHeader;
      write_report_row(out.stream(), plan.key(), rep);
      return 0;
    }

    if (ftcheck->parsed()) {
      std::vector<FaultReport> reports;
      if (!circuit_file.empty()) {
        std::ifstream in(circuit_file);
        if (!in) throw CLI::ValidationError("--circuit", "cannot open " + circuit_file);
        std::ostringstream ss;
        ss << in.rdbuf();
        Circuit prep = Circuit::parse(ss.str());
        const auto& info = find_label(args.state);
        const Basis basis = info.def_basis;
        const StabKind st = stab_from_name(args.stabilizer);
        if (st == StabKind::None) {
          reports.push_back(enumerate_single_faults(prep, nullptr, basis, info.la(basis),
                                                    info.lb(basis), circuit_file));
        } else {
          Circuit stc = build_stabilizer(st);
          reports.push_back(enumerate_single_faults(prep, &stc, basis, info.la(basis),
                                                    info.lb(basis), circuit_file));
        }
      } else {
        reports = ft_certification_suite();
      }
      Out out(args.out);
      bool violated = false;
      for (const auto& r : reports) {
        out.stream() << r.construction << ": la_error=" << r.count(FaultClass::LaError)
                     << " lb_error=" << r.count(FaultClass::LbError)
                     << " detected=" << r.count(FaultClass::Detected)
                     << " benign=" << r.count(FaultClass::Benign)
                     << " max_la_mass=" << g12(r.max_la_mass) << "\n";
        if (!r.la_fault_tolerant()) {
          violated = true;
          for (const auto& s : r.sites)
            if (s.cls == FaultClass::LaError)
              out.stream() << "  L_a error: slot=" << s.slot << " qubit=" << s.qubit << " "
                           << pauli_char(s.pauli) << " accepted=" << g12(s.accepted) << "\n";
        }
        if (r.construction == "00L")
          for (const auto& h : r.hooks())
            out.stream() << "  hook: slot=" << h.slot << " qubit=" << h.qubit << " "
                         << pauli_char(h.pauli) << " -> accepted L_b flip "
                         << g12(h.lb_wrong) << "\n";
      }
      out.stream() << (violated ? "FAULT TOLERANCE VIOLATED\n" : "L_a fault tolerant\n");
      return violated ? 2 : 0;
    }

    if (inject->parsed()) {
      auto noise = parse_noise(args.noise);
      auto scheme = ConfigScheme::make(scheme_from_name(args.scheme), args.seed);
      auto rows = run_injection_campaign(scheme.campaign_configs(), noise);
      Out out(args.out);
      out.stream() << kReportHeader;
      for (const auto& row : rows) {
        std::string letters;
        for (Pauli p : row.config.letters()) letters += pauli_char(p);
        std::ostringstream key;
        key << "config=" << letters << ";mult=" << row.multiplicity;
        out.stream() << key.str() << "," << g12(row.p_a);
        for (int i = 0; i < 4; ++i) out.stream() << "," << g12(row.pops[i]);
        out.stream() << "\n";
      }
      return 0;
    }

    if (sweep_error->parsed()) {
      auto noise = parse_noise(args.noise);
      auto scheme = ConfigScheme::make(scheme_from_name(args.scheme), args.seed);
      auto curve = sweep_error_curves(parse_grid(p_grid), scheme, noise);
      Out out(args.out);
      out.stream() << "p,pL_a,pL_b,pL_analytic,p_physical\n";
      for (const auto& pt : curve)
        out.stream() << g12(pt.p) << "," << g12(pt.pl_a) << "," << g12(pt.pl_b) << ","
                     << g12(pt.pl_analytic) << "," << g12(pt.p_physical) << "\n";
      return 0;
    }

    if (sweep_miscal->parsed()) {
      auto noise = parse_noise(args.noise);
      auto points = run_miscal_sweep(parse_grid(alpha_grid), noise);
      Out out(args.out);
      out.stream() << kReportHeader;
      for (const auto& pt : points) {
        for (StabKind st : {StabKind::Sx, StabKind::Sz}) {
          std::ostringstream key;
          key << "alpha=" << g12(pt.alpha) << ";stab=" << stab_name(st);
          const double yield = st == StabKind::Sx ? pt.yield_sx : pt.yield_sz;
          const auto& pops = st == StabKind::Sx ? pt.pops_sx : pt.pops_sz;
          out.stream() << key.str() << "," << g12(yield);
          for (int i = 0; i < 4; ++i) out.stream() << "," << g12(pops[i]);
          out.stream() << "\n";
        }
      }
      return 0;
    }

    if (fit->parsed()) {
      NoiseModel base = parse_noise(fit_noise);
      NoiseModel truth_model = base;
      if (std::sscanf(truth.c_str(), "%lf,%lf,%lf", &truth_model.eps1, &truth_model.eps2,
                      &truth_model.eps_stark) != 3)
        throw CLI::ValidationError("--truth", "expected eps1,eps2,eps_stark");
      truth_model.validate();
      auto result = fit_noise_params(make_fit_targets(truth_model), base);
      nlohmann::json j;
      j["eps1"] = result.params[0];
      j["eps2"] = result.params[1];
      j["eps_stark"] = result.params[2];
      j["objective"] = result.objective;
      j["iterations"] = result.iterations;
      j["converged"] = result.converged;
      j["warnings"] = result.warnings;
      j["truth"] = {truth_model.eps1, truth_model.eps2, truth_model.eps_stark};
      Out out(args.out);
      out.stream() << j.dump(2) << "\n";
      return 0;
    }

    if (table1->parsed()) {
      auto noise = parse_noise(args.noise);
      Out out(args.out);
      out.stream() << "state stab basis |   yield  pop00  pop01  pop10  pop11 | published:  yield  "
                      "pop00  pop01  pop10  pop11\n";
      for (const auto& row : table1_rows()) {
        ExperimentPlan plan;
        plan.state = row.label;
        plan.stabilizer = row.stab;
        plan.basis = row.basis;
        auto rep = postselect(simulate_plan(plan, noise), row.basis,
                              row.stab != StabKind::None);
        char line[256];
        std::snprintf(line, sizeof line,
                      "%-5s %-4s %c     | %7.1f %6.1f %6.1f %6.1f %6.1f |        %6.1f %6.1f "
                      "%6.1f %6.2f %6.2f\n",
                      row.label, stab_name(row.stab), basis_char(row.basis), rep.yield * 100,
                      rep.logical_pops[0] * 100, rep.logical_pops[1] * 100,
                      rep.logical_pops[2] * 100, rep.logical_pops[3] * 100, row.published_yield,
                      row.published_pops[0], row.published_pops[1], row.published_pops[2],
                      row.published_pops[3]);
        out.stream() << line;
      }
      return 0;
    }
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
