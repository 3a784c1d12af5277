// Copyright 2026 The qcw developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcw/dense.hpp"
#include "qcw/dm_sim.hpp"
#include "qcw/errors.hpp"
#include "qcw/lattice.hpp"
#include "qcw/measure.hpp"
#include "qcw/pauli.hpp"
#include "qcw/sched.hpp"
#include "qcw/serialize.hpp"
#include "qcw/sv_sim.hpp"
#include "qcw/swapnet.hpp"
#include "qcw/trotter.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using qcw::io::json;

// Reproducibility stamp written next to every primary output: exact input
// digests, the command line, and the seed in effect.
class RunManifest {
 public:
  RunManifest(int argc, char** argv)
      : start_(std::chrono::steady_clock::now()) {
    std::ostringstream cmd;
    for (int i = 0; i < argc; ++i) {
      if (i) cmd << ' ';
      cmd << argv[i];
    }
    command_ = cmd.str();
  }

  void record_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw qcw::ValidationError("io.missing_file", "cannot open " + path);
    }
    std::uint64_t hash = 14695981039346656037ull;  // FNV-1a 64
    char buffer[16384];
    while (in.read(buffer, sizeof(buffer)) || in.gcount() > 0) {
      for (std::streamsize i = 0; i < in.gcount(); ++i) {
        hash ^= static_cast<unsigned char>(buffer[i]);
        hash *= 1099511628211ull;
      }
    }
    std::ostringstream hex;
    hex << "fnv1a64:" << std::hex << hash;
    inputs_[path] = hex.str();
  }

  void record_output(const std::string& path) { outputs_.push_back(path); }
  void set_seed(std::uint64_t seed) { seed_ = seed; }

  void write(const std::string& path) const {
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start_);
    const json j = {{"tool", "qcw"},
                    {"version", kVersion},
                    {"command", command_},
                    {"inputs", inputs_},
                    {"seed", seed_},
                    {"outputs", outputs_},
                    {"duration_ms", elapsed.count()}};
    qcw::io::write_json_file(path, j);
  }

 private:
  std::chrono::steady_clock::time_point start_;
  std::string command_;
  std::map<std::string, std::string> inputs_;
  std::vector<std::string> outputs_;
  std::uint64_t seed_ = 0;
};

qcw::QubitOperator load_operator(RunManifest& manifest,
                                 const std::string& path) {
  manifest.record_input(path);
  return qcw::io::operator_from_json(qcw::io::read_json_file(path));
}

qcw::Circuit load_circuit(RunManifest& manifest, const std::string& path) {
  manifest.record_input(path);
  return qcw::io::circuit_from_json(qcw::io::read_json_file(path));
}

void emit(RunManifest& manifest, const std::string& out_path, const json& j) {
  qcw::io::write_json_file(out_path, j);
  manifest.record_output(out_path);
  manifest.write(out_path + ".manifest.json");
}

std::vector<std::pair<double, double>> read_points_csv(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw qcw::ValidationError("io.missing_file", "cannot open " + path);
  }
  std::vector<std::pair<double, double>> points;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    double f, v;
    if (row >> f >> v) points.emplace_back(f, v);
  }
  if (points.empty()) {
    throw qcw::ValidationError("zne.too_few_points",
                               "no data rows in " + path);
  }
  return points;
}

struct SimRunArgs {
  std::string circuit_path;
  std::string observable_path;
  std::string noise_path;
  std::string out = "sim_out.json";
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
};

void run_sim(RunManifest& manifest, const SimRunArgs& args) {
  manifest.set_seed(args.seed);
  const qcw::Circuit circuit = load_circuit(manifest, args.circuit_path);
  json out;

  if (!args.noise_path.empty()) {
    manifest.record_input(args.noise_path);
    const qcw::NoiseModel nm = qcw::io::noise_model_from_json(
        qcw::io::read_json_file(args.noise_path));
    const qcw::DensityMatrix rho = qcw::run_noisy(circuit, nm);
    if (!args.observable_path.empty()) {
      const qcw::QubitOperator op =
          load_operator(manifest, args.observable_path);
      out["expectation"] = qcw::expectation_dm(rho, op);
    }
    if (args.shots > 0) {
      // Measurement statistics from the diagonal of rho.
      std::vector<double> cdf(rho.dim());
      double acc = 0.0;
      for (std::uint64_t i = 0; i < rho.dim(); ++i) {
        acc += rho.entry(i, i).real();
        cdf[i] = acc;
      }
      std::mt19937_64 rng(args.seed);
      std::uniform_real_distribution<double> unif(0.0, 1.0);
      std::map<std::string, std::uint64_t> counts;
      for (std::uint64_t s = 0; s < args.shots; ++s) {
        const double r = unif(rng) * acc;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), r);
        const std::uint64_t idx =
            it == cdf.end() ? cdf.size() - 1
                            : static_cast<std::uint64_t>(it - cdf.begin());
        ++counts[std::to_string(idx)];
      }
      out["counts"] = counts;
    }
    if (out.empty()) {
      throw qcw::ValidationError(
          "cli.nothing_to_do",
          "noisy runs need --shots and/or --observable");
    }
    emit(manifest, args.out, out);
    return;
  }

  const qcw::StateVec state = qcw::run(circuit);
  if (!args.observable_path.empty()) {
    const qcw::QubitOperator op = load_operator(manifest, args.observable_path);
    out["expectation"] = qcw::expectation(state, op);
  }
  if (args.shots > 0) {
    std::map<std::string, std::uint64_t> counts;
    for (const auto& [idx, count] : qcw::sample(state, args.shots, args.seed)) {
      counts[std::to_string(idx)] = count;
    }
    out["counts"] = counts;
  }
  if (out.empty()) {
    if (circuit.num_qubits > 20) {
      throw qcw::ValidationError("cli.amplitudes_oversize",
                                 "amplitude dumps are capped at 20 qubits");
    }
    json amps = json::array();
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
      amps.push_back({state.amplitude(i).real(), state.amplitude(i).imag()});
    }
    out["amplitudes"] = amps;
  }
  emit(manifest, args.out, out);
}

struct HamBuildArgs {
  std::string model;
  std::string lattice_path;
  std::string out = "hamiltonian.json";
  std::uint32_t sites = 0;
  std::vector<std::uint32_t> hex_cells{1, 1};
  bool periodic = false;
  double t = 1.0, u = 0.0;
  double t_pd = 0.0, t_pp = 0.0, delta_pd = 0.0, u_d = 0.0, u_p = 0.0,
         v_pd = 0.0;
  std::uint32_t cells = 1;
  double j = 0.0, k = 0.0, gamma = 0.0, gamma_prime = 0.0;
};

qcw::LatticeSpec resolve_lattice(RunManifest& manifest,
                                 const HamBuildArgs& args,
                                 qcw::LatticeKind fallback) {
  if (!args.lattice_path.empty()) {
    manifest.record_input(args.lattice_path);
    return qcw::io::lattice_from_json(
        qcw::io::read_json_file(args.lattice_path));
  }
  qcw::LatticeSpec lat;
  lat.kind = fallback;
  if (fallback == qcw::LatticeKind::Honeycomb) {
    lat.cells = args.hex_cells;
    lat.periodic = {false, false};
  } else {
    if (args.sites == 0) {
      throw qcw::ValidationError("cli.missing_flag",
                                 "--sites or --lattice is required");
    }
    lat.cells = {args.sites};
    lat.periodic = {args.periodic};
  }
  return lat;
}

void run_ham_build(RunManifest& manifest, const HamBuildArgs& args) {
  qcw::QubitOperator h;
  if (args.model == "hubbard") {
    const auto lat = resolve_lattice(
        manifest, args,
        args.periodic ? qcw::LatticeKind::Ring : qcw::LatticeKind::Chain);
    h = qcw::hubbard_hamiltonian(lat, args.t, args.u);
  } else if (args.model == "emery") {
    h = qcw::emery_hamiltonian(args.cells, args.t_pd, args.t_pp, args.delta_pd,
                               args.u_d, args.u_p, args.v_pd);
  } else if (args.model == "kitaev_heisenberg") {
    const auto lat = resolve_lattice(manifest, args,
                                     qcw::LatticeKind::Honeycomb);
    h = qcw::kitaev_heisenberg(lat, args.j, args.k, args.gamma,
                               args.gamma_prime);
  } else if (args.model == "heisenberg") {
    const auto lat = resolve_lattice(
        manifest, args,
        args.periodic ? qcw::LatticeKind::Ring : qcw::LatticeKind::Chain);
    h = qcw::heisenberg_model(lat, args.j);
  } else {
    throw qcw::ValidationError("cli.unknown_model",
                               "unknown model: " + args.model);
  }
  emit(manifest, args.out, qcw::io::operator_to_json(h));
}

struct HamAnalyzeArgs {
  std::string ham_path;
  std::string out = "analysis.json";
  bool halfwidth = false;
  std::uint32_t electrons = 0;
  double grid_from = 0.0, grid_to = 0.0;
  std::uint32_t grid_points = 0;
};

void run_ham_analyze(RunManifest& manifest, const HamAnalyzeArgs& args) {
  const qcw::QubitOperator h = load_operator(manifest, args.ham_path);
  json out = {{"num_qubits", h.num_qubits()},
              {"num_terms", h.size()},
              {"l1_norm", qcw::l1_norm(h)}};
  if (args.halfwidth) {
    out["spectral_halfwidth"] = qcw::spectral_halfwidth(h);
  }
  const auto qw_groups = qcw::group_qubitwise_commuting(h);
  out["qubitwise_groups"] = qw_groups.size();
  const auto ac_groups = qcw::group_anticommuting(h.real_coefficients());
  double combined = 0.0;
  for (const auto& g : ac_groups) combined += g.combined_norm;
  out["anticommuting"] = {{"groups", ac_groups.size()},
                          {"sum_combined_norm", combined}};
  if (args.grid_points > 0) {
    std::vector<double> grid;
    for (std::uint32_t i = 0; i < args.grid_points; ++i) {
      const double f = args.grid_points == 1
                           ? 0.0
                           : static_cast<double>(i) / (args.grid_points - 1);
      grid.push_back(args.grid_from + f * (args.grid_to - args.grid_from));
    }
    const auto [c_best, l1_best] =
        qcw::optimize_shift(h, args.electrons, grid);
    out["shift"] = {{"electrons", args.electrons},
                    {"c_best", c_best},
                    {"l1_best", l1_best}};
  }
  emit(manifest, args.out, out);
}

struct TrotterArgs {
  std::string ham_path;
  std::string out = "plan.json";
  std::string circuit_out = "trotter_circuit.json";
  std::string bound = "l1";
  double t = 1.0;
  double eps = 1e-3;
  int order = 1;
};

void run_trotter_plan(RunManifest& manifest, const TrotterArgs& args) {
  const qcw::QubitOperator h = load_operator(manifest, args.ham_path);
  std::uint64_t n = 0;
  double bound_value = 0.0;
  if (args.bound == "l1") {
    n = qcw::steps_for_error_l1(h, args.t, args.eps, args.order);
    bound_value = qcw::l1_error_bound(h, args.t, n, args.order);
  } else if (args.bound == "commutator") {
    if (args.order != 1) {
      throw qcw::ValidationError("cli.bad_flag",
                                 "the commutator bound applies to order 1");
    }
    n = qcw::steps_for_error_commutator(h, args.t, args.eps);
    bound_value = qcw::commutator_error_bound(h, args.t, n);
  } else {
    throw qcw::ValidationError("cli.bad_flag",
                               "--bound must be l1 or commutator");
  }
  const qcw::TrotterPlan plan = qcw::make_plan(h, args.t, args.order, n);
  const qcw::Circuit circuit = qcw::trotter_circuit(plan);
  qcw::io::write_json_file(args.circuit_out, qcw::io::circuit_to_json(circuit));
  manifest.record_output(args.circuit_out);

  emit(manifest, args.out,
       {{"n", n},
        {"order", args.order},
        {"bound", args.bound},
        {"bound_value", bound_value},
        {"t", args.t},
        {"eps", args.eps},
        {"lambda", qcw::l1_norm(h)},
        {"gate_count", circuit.size()},
        {"circuit_path", args.circuit_out}});
}

struct MeasureEstimateArgs {
  std::string circuit_path;
  std::string observable_path;
  std::string out = "estimate.json";
  std::string method = "groups";
  std::uint64_t shots = 10000;
  std::uint64_t seed = 0;
};

void run_measure_estimate(RunManifest& manifest,
                          const MeasureEstimateArgs& args) {
  manifest.set_seed(args.seed);
  const qcw::Circuit circuit = load_circuit(manifest, args.circuit_path);
  qcw::QubitOperator op = load_operator(manifest, args.observable_path);
  if (op.num_qubits() > circuit.num_qubits) {
    throw qcw::ValidationError("cli.size_mismatch",
                               "observable acts outside the circuit register");
  }
  if (op.num_qubits() < circuit.num_qubits) {
    qcw::QubitOperator lifted(circuit.num_qubits);
    lifted.add(op);
    op = lifted;
  }
  const qcw::StateVec state = qcw::run(circuit);

  qcw::EstimateReport report;
  json groups_json = json::array();
  if (args.method == "groups") {
    auto groups = qcw::make_measurement_groups(op);
    qcw::allocate_shots(groups, args.shots);
    report = qcw::estimate_expectation(state, op, groups, args.seed);
    for (std::size_t i = 0; i < groups.size(); ++i) {
      json terms = json::array();
      for (const auto& t : groups[i].terms) terms.push_back(t.pauli_string());
      groups_json.push_back({{"terms", terms},
                             {"shots", report.per_group[i].shots},
                             {"mean", report.per_group[i].mean},
                             {"variance", report.per_group[i].variance}});
    }
  } else if (args.method == "shadows") {
    report = qcw::shadow_estimate(state, op, args.shots, args.seed);
  } else {
    throw qcw::ValidationError("cli.bad_flag",
                               "--method must be groups or shadows");
  }
  json out = {{"mean", report.mean},
              {"stderr", report.stderr_},
              {"total_shots", report.total_shots},
              {"seed", report.seed},
              {"method", args.method}};
  if (!groups_json.empty()) out["groups"] = groups_json;
  emit(manifest, args.out, out);
}

struct ZneArgs {
  std::string points_path;
  std::string model = "linear";
  std::string out = "zne.json";
};

void run_measure_zne(RunManifest& manifest, const ZneArgs& args) {
  manifest.record_input(args.points_path);
  const auto points = read_points_csv(args.points_path);
  const double value =
      qcw::zne_extrapolate(points, qcw::zne_model_from_name(args.model));
  emit(manifest, args.out,
       {{"model", args.model},
        {"points", points.size()},
        {"zero_noise_value", value}});
}

struct SwapnetArgs {
  std::uint32_t n = 0;
  std::string compile_path;
  double t = 1.0;
  std::string out = "swapnet.json";
};

void run_swapnet(RunManifest& manifest, const SwapnetArgs& args) {
  if (args.compile_path.empty()) {
    emit(manifest, args.out,
         qcw::io::schedule_to_json(qcw::swap_network(args.n)));
    return;
  }
  const qcw::QubitOperator zz = load_operator(manifest, args.compile_path);
  const qcw::Circuit circuit =
      qcw::compile_dense_interactions(zz, args.n, args.t);
  emit(manifest, args.out, qcw::io::circuit_to_json(circuit));
}

struct SchedRunArgs {
  std::string scenario_path;
  std::string out_dir = "sched_out";
  std::uint64_t seed = 0;
};

void run_sched(RunManifest& manifest, const SchedRunArgs& args) {
  manifest.set_seed(args.seed);
  manifest.record_input(args.scenario_path);
  const qcw::sched::Scenario scenario =
      qcw::io::scenario_from_json(qcw::io::read_json_file(args.scenario_path));
  const qcw::sched::SimResult result = qcw::sched::simulate(scenario, args.seed);

  std::filesystem::create_directories(args.out_dir);
  const std::string events_path = args.out_dir + "/events.jsonl";
  {
    std::ofstream out(events_path);
    if (!out) {
      throw qcw::ValidationError("io.write_failed", "cannot write " + events_path);
    }
    for (const auto& e : result.events) {
      out << qcw::io::event_to_json(e).dump() << "\n";
    }
  }
  manifest.record_output(events_path);
  const std::string metrics_path = args.out_dir + "/metrics.json";
  qcw::io::write_json_file(metrics_path,
                           qcw::io::metrics_to_json(result.metrics));
  manifest.record_output(metrics_path);
  manifest.write(args.out_dir + "/manifest.json");
}

struct SchedCalibrateArgs {
  std::string trace_path;
  std::string out = "runtime_fit.json";
};

void run_sched_calibrate(RunManifest& manifest,
                         const SchedCalibrateArgs& args) {
  manifest.record_input(args.trace_path);
  std::ifstream in(args.trace_path);
  std::vector<qcw::sched::RuntimeTraceRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    qcw::sched::RuntimeTraceRow r{};
    if (row >> r.circuits >> r.shots >> r.depth >> r.duration) {
      rows.push_back(r);
    }
  }
  const auto [alpha, beta] = qcw::sched::calibrate_runtime(rows);
  emit(manifest, args.out,
       {{"rows", rows.size()},
        {"layer_time_us", alpha},
        {"readout_time_us", beta}});
}

struct SchedVqeArgs {
  qcw::sched::VqeWorkloadParams params;
  std::string project_path = "hub/group/project";
  std::string out = "vqe_jobs.json";
};

void run_sched_vqe(RunManifest& manifest, SchedVqeArgs& args) {
  const auto first = args.project_path.find('/');
  const auto second = args.project_path.find('/', first + 1);
  if (first == std::string::npos || second == std::string::npos) {
    throw qcw::ValidationError("scenario.bad_project_path",
                               "--project is hub/group/project");
  }
  args.params.hub = args.project_path.substr(0, first);
  args.params.group = args.project_path.substr(first + 1, second - first - 1);
  args.params.project = args.project_path.substr(second + 1);

  json jobs = json::array();
  for (const auto& j : qcw::sched::gen_vqe_workload(args.params)) {
    json jj = {{"id", j.id},
               {"project", j.project_path()},
               {"coupling", qcw::sched::coupling_name(j.coupling)},
               {"circuits", j.circuits},
               {"depth", j.depth},
               {"n_qubits", j.n_qubits},
               {"shots", j.shots},
               {"classical_node_need", j.classical_node_need},
               {"submit_time", j.submit_time},
               {"classical_runtime", j.classical_runtime}};
    if (!j.depends_on.empty()) jj["depends_on"] = j.depends_on;
    jobs.push_back(std::move(jj));
  }
  emit(manifest, args.out, {{"jobs", jobs}});
}

struct OracleArgs {
  std::string ham_path;
  std::string out = "eigenvalues.json";
  std::uint32_t k = 1;
  std::int64_t sector = -1;
};

void run_oracle_diag(RunManifest& manifest, const OracleArgs& args) {
  const qcw::QubitOperator h = load_operator(manifest, args.ham_path);
  const std::vector<double> eigenvalues =
      args.sector >= 0
          ? qcw::sector_spectrum(h, static_cast<std::uint32_t>(args.sector),
                                 args.k)
          : qcw::exact_spectrum(h, args.k);
  json out = {{"eigenvalues", eigenvalues}};
  if (args.sector >= 0) out["sector"] = args.sector;
  emit(manifest, args.out, out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum-centric computing workbench"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  RunManifest manifest(argc, argv);

  // sim
  auto* sim = app.add_subcommand("sim", "state-vector and density-matrix runs");
  sim->require_subcommand(1);
  SimRunArgs sim_args;
  auto* sim_run = sim->add_subcommand("run", "execute a circuit");
  sim_run->add_option("--circuit", sim_args.circuit_path)->required();
  sim_run->add_option("--shots", sim_args.shots);
  sim_run->add_option("--seed", sim_args.seed);
  sim_run->add_option("--observable", sim_args.observable_path);
  sim_run->add_option("--noise", sim_args.noise_path);
  sim_run->add_option("--out", sim_args.out);
  sim_run->callback([&] { run_sim(manifest, sim_args); });

  // ham
  auto* ham = app.add_subcommand("ham", "model Hamiltonian builders");
  ham->require_subcommand(1);
  HamBuildArgs build_args;
  auto* ham_build = ham->add_subcommand("build", "build a model Hamiltonian");
  ham_build->add_option("--model", build_args.model)->required();
  ham_build->add_option("--lattice", build_args.lattice_path);
  ham_build->add_option("--sites", build_args.sites);
  ham_build->add_option("--hex-cells", build_args.hex_cells)->expected(2);
  ham_build->add_flag("--periodic", build_args.periodic);
  ham_build->add_option("--t", build_args.t);
  ham_build->add_option("--u", build_args.u);
  ham_build->add_option("--cells", build_args.cells);
  ham_build->add_option("--tpd", build_args.t_pd);
  ham_build->add_option("--tpp", build_args.t_pp);
  ham_build->add_option("--delta", build_args.delta_pd);
  ham_build->add_option("--ud", build_args.u_d);
  ham_build->add_option("--up", build_args.u_p);
  ham_build->add_option("--vpd", build_args.v_pd);
  ham_build->add_option("--j", build_args.j);
  ham_build->add_option("--k", build_args.k);
  ham_build->add_option("--gamma", build_args.gamma);
  ham_build->add_option("--gammap", build_args.gamma_prime);
  ham_build->add_option("--out", build_args.out);
  ham_build->callback([&] { run_ham_build(manifest, build_args); });

  HamAnalyzeArgs analyze_args;
  auto* ham_analyze =
      ham->add_subcommand("analyze", "operator norms, groupings and shifts");
  ham_analyze->add_option("--ham", analyze_args.ham_path)->required();
  ham_analyze->add_flag("--halfwidth", analyze_args.halfwidth);
  ham_analyze->add_option("--electrons", analyze_args.electrons);
  ham_analyze->add_option("--shift-from", analyze_args.grid_from);
  ham_analyze->add_option("--shift-to", analyze_args.grid_to);
  ham_analyze->add_option("--shift-points", analyze_args.grid_points);
  ham_analyze->add_option("--out", analyze_args.out);
  ham_analyze->callback([&] { run_ham_analyze(manifest, analyze_args); });

  // trotter
  auto* trotter = app.add_subcommand("trotter", "product-formula planning");
  trotter->require_subcommand(1);
  TrotterArgs trotter_args;
  auto* trotter_plan =
      trotter->add_subcommand("plan", "step counts and compiled circuit");
  trotter_plan->add_option("--ham", trotter_args.ham_path)->required();
  trotter_plan->add_option("--t", trotter_args.t);
  trotter_plan->add_option("--eps", trotter_args.eps);
  trotter_plan->add_option("--order", trotter_args.order);
  trotter_plan->add_option("--bound", trotter_args.bound);
  trotter_plan->add_option("--out", trotter_args.out);
  trotter_plan->add_option("--circuit-out", trotter_args.circuit_out);
  trotter_plan->callback([&] { run_trotter_plan(manifest, trotter_args); });

  // measure
  auto* measure = app.add_subcommand("measure", "estimators and mitigation");
  measure->require_subcommand(1);
  MeasureEstimateArgs est_args;
  auto* est = measure->add_subcommand("estimate", "sampled expectation value");
  est->add_option("--circuit", est_args.circuit_path)->required();
  est->add_option("--observable", est_args.observable_path)->required();
  est->add_option("--shots", est_args.shots);
  est->add_option("--seed", est_args.seed);
  est->add_option("--method", est_args.method);
  est->add_option("--out", est_args.out);
  est->callback([&] { run_measure_estimate(manifest, est_args); });

  ZneArgs zne_args;
  auto* zne = measure->add_subcommand("zne", "zero-noise extrapolation");
  zne->add_option("--points", zne_args.points_path)->required();
  zne->add_option("--model", zne_args.model);
  zne->add_option("--out", zne_args.out);
  zne->callback([&] { run_measure_zne(manifest, zne_args); });

  // swapnet
  SwapnetArgs swapnet_args;
  auto* swapnet =
      app.add_subcommand("swapnet", "linear-connectivity SWAP networks");
  swapnet->add_option("--n", swapnet_args.n)->required();
  swapnet->add_option("--compile", swapnet_args.compile_path);
  swapnet->add_option("--t", swapnet_args.t);
  swapnet->add_option("--out", swapnet_args.out);
  swapnet->callback([&] { run_swapnet(manifest, swapnet_args); });

  // sched
  auto* sched = app.add_subcommand("sched", "workload scheduling simulator");
  sched->require_subcommand(1);
  SchedRunArgs sched_args;
  auto* sched_run = sched->add_subcommand("run", "simulate a scenario");
  sched_run->add_option("--scenario", sched_args.scenario_path)->required();
  sched_run->add_option("--seed", sched_args.seed);
  sched_run->add_option("--out", sched_args.out_dir);
  sched_run->callback([&] { run_sched(manifest, sched_args); });

  SchedCalibrateArgs cal_args;
  auto* sched_cal =
      sched->add_subcommand("calibrate", "fit the runtime model from a trace");
  sched_cal->add_option("--trace", cal_args.trace_path)->required();
  sched_cal->add_option("--out", cal_args.out);
  sched_cal->callback([&] { run_sched_calibrate(manifest, cal_args); });

  SchedVqeArgs vqe_args;
  auto* sched_vqe = sched->add_subcommand("vqe", "generate a VQE job chain");
  sched_vqe->add_option("--iterations", vqe_args.params.iterations);
  sched_vqe->add_option("--circuits", vqe_args.params.circuits_per_iter);
  sched_vqe->add_option("--shots", vqe_args.params.shots);
  sched_vqe->add_option("--qubits", vqe_args.params.n_qubits);
  sched_vqe->add_option("--depth", vqe_args.params.depth);
  sched_vqe->add_option("--nodes", vqe_args.params.classical_nodes);
  sched_vqe->add_option("--pre-runtime", vqe_args.params.pre_runtime);
  sched_vqe->add_option("--update-runtime", vqe_args.params.update_runtime);
  sched_vqe->add_option("--project", vqe_args.project_path);
  sched_vqe->add_option("--out", vqe_args.out);
  sched_vqe->callback([&] { run_sched_vqe(manifest, vqe_args); });

  // oracle
  auto* oracle = app.add_subcommand("oracle", "dense diagonalization");
  oracle->require_subcommand(1);
  OracleArgs oracle_args;
  auto* diag = oracle->add_subcommand("diag", "lowest eigenvalues");
  diag->add_option("--ham", oracle_args.ham_path)->required();
  diag->add_option("--k", oracle_args.k);
  diag->add_option("--sector", oracle_args.sector);
  diag->add_option("--out", oracle_args.out);
  diag->callback([&] { run_oracle_diag(manifest, oracle_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    const qcw::io::json err = {
        {"error", {{"code", "cli.parse"}, {"message", e.what()}}}};
    std::cerr << err.dump() << "\n";
    return 2;
  } catch (const qcw::ValidationError& e) {
    const qcw::io::json err = {
        {"error", {{"code", e.code()}, {"message", e.what()}}}};
    std::cerr << err.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    const qcw::io::json err = {
        {"error", {{"code", "internal"}, {"message", e.what()}}}};
    std::cerr << err.dump() << "\n";
    return 1;
  }
  return 0;
}
