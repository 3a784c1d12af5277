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

#include "qcw/serialize.hpp"

#include <fstream>

#include "qcw/errors.hpp"

namespace qcw::io {

namespace {

json complex_to_json(const cplx& c) { return json::array({c.real(), c.imag()}); }

cplx complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw ValidationError("json.bad_complex",
                          "complex values are [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<cplx> matrix_from_json(const json& j, std::size_t expected) {
  if (!j.is_array() || j.size() != expected) {
    throw ValidationError("json.bad_matrix", "matrix entry count mismatch");
  }
  std::vector<cplx> out;
  out.reserve(expected);
  for (const auto& e : j) out.push_back(complex_from_json(e));
  return out;
}

}  // namespace

json operator_to_json(const QubitOperator& op) {
  json terms = json::array();
  for (const auto& t : op.terms()) {
    terms.push_back(
        {{"pauli", t.pauli_string()}, {"coeff", complex_to_json(t.coeff())}});
  }
  return {{"num_qubits", op.num_qubits()}, {"terms", terms}};
}

QubitOperator operator_from_json(const json& j) {
  if (!j.contains("num_qubits") || !j.contains("terms")) {
    throw ValidationError("json.bad_operator",
                          "operator needs num_qubits and terms");
  }
  QubitOperator op(j["num_qubits"].get<std::uint32_t>());
  for (const auto& t : j["terms"]) {
    op.add(PauliTerm::parse(t.at("pauli").get<std::string>(),
                            complex_from_json(t.at("coeff"))));
  }
  if (op.num_qubits() > j["num_qubits"].get<std::uint32_t>()) {
    throw ValidationError("json.bad_operator",
                          "terms act outside the declared register");
  }
  return op;
}

json circuit_to_json(const Circuit& c) {
  json gates = json::array();
  for (const auto& g : c.gates) {
    json entry = {{"kind", gate_kind_name(g.kind)}};
    json targets = json::array();
    for (int i = 0; i < g.arity(); ++i) targets.push_back(g.targets[i]);
    entry["targets"] = targets;
    if (g.kind == GateKind::RZ || g.kind == GateKind::RZZ) {
      entry["theta"] = g.theta;
    }
    if (!g.matrix.empty()) {
      json m = json::array();
      for (const auto& e : g.matrix) m.push_back(complex_to_json(e));
      entry["matrix"] = m;
    }
    gates.push_back(std::move(entry));
  }
  return {{"num_qubits", c.num_qubits}, {"gates", gates}};
}

Circuit circuit_from_json(const json& j) {
  Circuit c(j.at("num_qubits").get<std::uint32_t>());
  for (const auto& e : j.at("gates")) {
    const GateKind kind = gate_kind_from_name(e.at("kind").get<std::string>());
    const auto& targets = e.at("targets");
    if (static_cast<int>(targets.size()) != gate_arity(kind)) {
      throw ValidationError("json.bad_gate", "gate target count mismatch");
    }
    switch (kind) {
      case GateKind::X:
        c.append(Gate::x(targets[0]));
        break;
      case GateKind::SX:
        c.append(Gate::sx(targets[0]));
        break;
      case GateKind::H:
        c.append(Gate::h(targets[0]));
        break;
      case GateKind::S:
        c.append(Gate::s(targets[0]));
        break;
      case GateKind::Sdg:
        c.append(Gate::sdg(targets[0]));
        break;
      case GateKind::RZ:
        c.append(Gate::rz(targets[0], e.at("theta").get<double>()));
        break;
      case GateKind::CX:
        c.append(Gate::cx(targets[0], targets[1]));
        break;
      case GateKind::RZZ:
        c.append(Gate::rzz(targets[0], targets[1], e.at("theta").get<double>()));
        break;
      case GateKind::U1q: {
        const auto entries = matrix_from_json(e.at("matrix"), 4);
        Eigen::Matrix2cd m;
        m << entries[0], entries[1], entries[2], entries[3];
        c.append(Gate::u1q(targets[0], m));
        break;
      }
      case GateKind::U2q: {
        const auto entries = matrix_from_json(e.at("matrix"), 16);
        Eigen::Matrix4cd m;
        for (int r = 0; r < 4; ++r) {
          for (int col = 0; col < 4; ++col) m(r, col) = entries[4 * r + col];
        }
        c.append(Gate::u2q(targets[0], targets[1], m));
        break;
      }
    }
  }
  return c;
}

json lattice_to_json(const LatticeSpec& lat) {
  return {{"kind", lattice_kind_name(lat.kind)},
          {"cells", lat.cells},
          {"periodic", lat.periodic}};
}

LatticeSpec lattice_from_json(const json& j) {
  LatticeSpec lat;
  lat.kind = lattice_kind_from_name(j.at("kind").get<std::string>());
  lat.cells = j.at("cells").get<std::vector<std::uint32_t>>();
  if (j.contains("periodic")) {
    lat.periodic = j["periodic"].get<std::vector<bool>>();
  } else {
    lat.periodic.assign(lat.cells.size(), false);
  }
  return lat;
}

NoiseModel noise_model_from_json(const json& j) {
  NoiseModel nm;
  if (!j.contains("gates")) return nm;
  for (const auto& [kind_name, spec] : j["gates"].items()) {
    const GateKind kind = gate_kind_from_name(kind_name);
    const std::string channel = spec.at("channel").get<std::string>();
    KrausChannel ch;
    if (channel == "depolarizing") {
      const double p = spec.at("p").get<double>();
      ch = gate_arity(kind) == 1 ? depolarizing_1q(p) : depolarizing_2q(p);
    } else if (channel == "amplitude_damping") {
      ch = amplitude_damping(spec.at("gamma").get<double>());
    } else if (channel == "bit_flip") {
      ch = bit_flip(spec.at("p").get<double>());
    } else if (channel == "phase_flip") {
      ch = phase_flip(spec.at("p").get<double>());
    } else {
      throw ValidationError("noise.unknown_channel",
                            "unknown channel: " + channel);
    }
    nm.attach(kind, std::move(ch));
  }
  return nm;
}

json schedule_to_json(const SwapSchedule& s) {
  json layers = json::array();
  for (const auto& layer : s.layers) {
    json pairs = json::array();
    for (const auto& [a, b] : layer) pairs.push_back({a, b});
    layers.push_back(std::move(pairs));
  }
  json meetings = json::array();
  for (const auto& m : s.meeting_log) {
    meetings.push_back({{"logical", {m.logical_a, m.logical_b}},
                        {"layer", m.layer},
                        {"position", m.position}});
  }
  return {{"n", s.n},
          {"layers", layers},
          {"meetings", meetings},
          {"final_order", s.final_order}};
}

sched::Scenario scenario_from_json(const json& j) {
  sched::Scenario s;
  for (const auto& d : j.at("devices")) {
    sched::Device dev;
    dev.id = d.at("id").get<std::string>();
    dev.kind = sched::device_kind_from_name(d.at("kind").get<std::string>());
    dev.qubits = d.value("qubits", 0u);
    dev.gate_time_1q = d.value("gate_time_1q", sched::Time{1});
    dev.gate_time_2q = d.value("gate_time_2q", sched::Time{1});
    dev.readout_time = d.value("readout_time", sched::Time{1});
    dev.location = sched::location_from_name(d.value("location", "local"));
    dev.submit_latency = d.value("submit_latency", sched::Time{0});
    if (d.contains("resource_model")) {
      const auto& rm = d["resource_model"];
      const std::string type = rm.at("type").get<std::string>();
      if (type == "qpu_exclusive") {
        dev.shares = 1;
      } else if (type == "shares") {
        dev.shares = rm.at("k").get<std::uint32_t>();
      } else {
        throw ValidationError("scenario.unknown_resource_model",
                              "unknown resource model: " + type);
      }
    }
    s.devices.push_back(std::move(dev));
  }

  const auto& tree = j.at("share_tree");
  for (const auto& h : tree.at("hubs")) {
    sched::ShareHub hub;
    hub.name = h.at("name").get<std::string>();
    hub.shares = h.value("shares", 1.0);
    for (const auto& g : h.at("groups")) {
      sched::ShareGroup group;
      group.name = g.at("name").get<std::string>();
      group.shares = g.value("shares", 1.0);
      for (const auto& p : g.at("projects")) {
        group.projects.push_back({p.at("name").get<std::string>(),
                                  p.value("shares", 1.0)});
      }
      hub.groups.push_back(std::move(group));
    }
    s.tree.hubs.push_back(std::move(hub));
  }

  for (const auto& jj : j.at("jobs")) {
    sched::Job job;
    job.id = jj.at("id").get<std::string>();
    const std::string path = jj.at("project").get<std::string>();
    const auto first = path.find('/');
    const auto second = path.find('/', first + 1);
    if (first == std::string::npos || second == std::string::npos) {
      throw ValidationError("scenario.bad_project_path",
                            "project paths are hub/group/project: " + path);
    }
    job.hub = path.substr(0, first);
    job.group = path.substr(first + 1, second - first - 1);
    job.project = path.substr(second + 1);
    job.coupling = sched::coupling_from_name(
        jj.value("coupling", std::string("Quantum_about_HPC")));
    job.circuits = jj.value("circuits", std::uint64_t{0});
    job.depth = jj.value("depth", std::uint64_t{0});
    job.n_qubits = jj.value("n_qubits", std::uint64_t{0});
    job.shots = jj.value("shots", std::uint64_t{0});
    job.classical_node_need = jj.value("classical_node_need", 0u);
    job.submit_time = jj.value("submit_time", sched::Time{0});
    if (jj.contains("deadline")) {
      job.deadline = jj["deadline"].get<sched::Time>();
    }
    job.classical_runtime = jj.value("classical_runtime", sched::Time{0});
    if (jj.contains("depends_on")) {
      job.depends_on = jj["depends_on"].get<std::vector<std::string>>();
    }
    s.jobs.push_back(std::move(job));
  }

  if (j.contains("burst_policy")) {
    s.burst.allow = j["burst_policy"].value("allow", true);
    s.burst.deadline_only = j["burst_policy"].value("deadline_only", false);
  }
  if (j.contains("horizon_us")) {
    s.horizon = j["horizon_us"].get<sched::Time>();
  }
  return s;
}

json event_to_json(const sched::Event& e) {
  json out = {{"t", e.t}, {"kind", e.kind}, {"job", e.job_id}};
  if (!e.device.empty()) out["device"] = e.device;
  if (!e.nodes.empty()) out["nodes"] = e.nodes;
  if (!e.reason.empty()) out["reason"] = e.reason;
  if (e.kind == "start" || e.kind == "complete") out["duration"] = e.duration;
  return out;
}

json metrics_to_json(const sched::Metrics& m) {
  return {{"device_utilization", m.device_utilization},
          {"mean_wait_us", m.mean_wait_us},
          {"p95_wait_us", m.p95_wait_us},
          {"makespan_us", m.makespan_us},
          {"burst_fraction", m.burst_fraction},
          {"project_used_time", m.project_used_time},
          {"completed", m.completed},
          {"unschedulable", m.unschedulable}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("io.missing_file", "cannot open " + path);
  }
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ValidationError("io.bad_json",
                          "parse error in " + path + ": " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) {
    throw ValidationError("io.write_failed", "cannot write " + path);
  }
  out << j.dump(2) << "\n";
}

}  // namespace qcw::io
