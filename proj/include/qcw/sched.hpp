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

#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qcw::sched {

// All times are integer microseconds; event ordering never touches floats.
using Time = std::int64_t;

// Rolling window over which fair-share usage is measured (24 simulated
// hours).
constexpr Time kSchedulingPeriod = Time{86'400} * 1'000'000;

enum class DeviceKind { Qpu, CpuNode, GpuNode };
enum class Location { Local, Cloud };
enum class Coupling { HpcForQuantum, QuantumInHpc, QuantumAboutHpc };

std::string device_kind_name(DeviceKind k);
DeviceKind device_kind_from_name(const std::string& name);
std::string location_name(Location l);
Location location_from_name(const std::string& name);
std::string coupling_name(Coupling c);
Coupling coupling_from_name(const std::string& name);

struct Device {
  std::string id;
  DeviceKind kind = DeviceKind::Qpu;
  std::uint32_t qubits = 0;  // QPUs only
  Time gate_time_1q = 1;
  Time gate_time_2q = 1;
  Time readout_time = 1;
  Location location = Location::Local;
  Time submit_latency = 0;
  // Concurrent job slots. 1 models an exclusively held QPU; k > 1 models a
  // device split into k shares, each running an independent job at full
  // predicted runtime. Classical nodes are always single-slot.
  std::uint32_t shares = 1;
};

struct Job {
  std::string id;
  std::string hub, group, project;
  Coupling coupling = Coupling::QuantumAboutHpc;
  std::uint64_t circuits = 0;
  std::uint64_t depth = 0;
  std::uint64_t n_qubits = 0;
  std::uint64_t shots = 0;
  std::uint32_t classical_node_need = 0;
  Time submit_time = 0;
  std::optional<Time> deadline;
  // Wall-clock of a purely classical job (circuits == 0); quantum runtimes
  // come from predict_runtime.
  Time classical_runtime = 0;
  std::vector<std::string> depends_on;

  bool is_quantum() const { return circuits > 0; }
  std::string project_path() const {
    return hub + "/" + group + "/" + project;
  }
};

struct ShareProject {
  std::string name;
  double shares = 1.0;
};
struct ShareGroup {
  std::string name;
  double shares = 1.0;
  std::vector<ShareProject> projects;
};
struct ShareHub {
  std::string name;
  double shares = 1.0;
  std::vector<ShareGroup> groups;
};
struct ShareTree {
  std::vector<ShareHub> hubs;
};

struct BurstPolicy {
  bool allow = true;
  // When set, cloud devices are used only to rescue deadlines; capacity
  // bursting (no fitting local QPU) is disabled.
  bool deadline_only = false;
};

struct Scenario {
  std::vector<Device> devices;
  ShareTree tree;
  std::vector<Job> jobs;
  BurstPolicy burst;
  Time horizon = std::numeric_limits<Time>::max() / 4;
};

struct Event {
  Time t = 0;
  std::string kind;  // submit | start | complete | unschedulable
  std::string job_id;
  std::string device;              // start/complete
  std::vector<std::string> nodes;  // classical nodes held with the device
  std::string reason;              // start: local | capacity | deadline
  Time duration = 0;               // start/complete
};

struct Metrics {
  std::map<std::string, double> device_utilization;
  double mean_wait_us = 0.0;
  double p95_wait_us = 0.0;
  Time makespan_us = 0;
  double burst_fraction = 0.0;
  std::map<std::string, Time> project_used_time;
  std::uint64_t completed = 0;
  std::uint64_t unschedulable = 0;
};

struct SimResult {
  std::vector<Event> events;
  Metrics metrics;
};

// circuits * shots * (depth * gate_time_2q + readout_time) + submit_latency.
// Quantum jobs only; the device must be a QPU with enough qubits.
Time predict_runtime(const Job& job, const Device& device);

// Least-squares fit of the two runtime-model coefficients (effective layer
// time, readout time) from (circuits, shots, depth, observed duration) rows.
struct RuntimeTraceRow {
  std::uint64_t circuits;
  std::uint64_t shots;
  std::uint64_t depth;
  Time duration;
};
std::pair<double, double> calibrate_runtime(
    const std::vector<RuntimeTraceRow>& rows);

// Windowed usage per share-tree node, used by the fair-share ranking.
class FairShareState {
 public:
  explicit FairShareState(const ShareTree& tree);

  void record_usage(const Job& job, Time completion, Time amount);
  // used_time / (entitlement fraction * scheduling period) over the rolling
  // window ending at now.
  double group_ratio(const Job& job, Time now) const;
  double project_ratio(const Job& job, Time now) const;
  bool knows_project(const Job& job) const;

 private:
  struct Usage {
    std::vector<std::pair<Time, Time>> entries;  // (completion, amount)
  };
  double window_ratio(const std::string& key, double fraction, Time now) const;

  std::map<std::string, double> group_fraction_;
  std::map<std::string, double> project_fraction_;
  mutable std::map<std::string, Usage> usage_;
};

// Index into `queue` of the job that runs next: smallest group ratio, then
// project ratio, then submit time, then job id. Empty queue yields nullopt.
std::optional<std::size_t> fairshare_next(const std::vector<const Job*>& queue,
                                          const FairShareState& usage,
                                          Time now);

// Returns human-readable problems ("devices: ...", "jobs[3].project: ...");
// empty means the scenario is runnable.
std::vector<std::string> validate_scenario(const Scenario& scenario);

// Deterministic discrete-event simulation. The seed is recorded in the
// run metadata; the v1 engine itself takes no random decisions.
SimResult simulate(const Scenario& scenario, std::uint64_t seed);

struct VqeWorkloadParams {
  std::uint64_t iterations = 1;
  std::uint64_t circuits_per_iter = 1;
  std::uint64_t shots = 1000;
  std::uint64_t n_qubits = 4;
  std::uint64_t depth = 10;
  std::uint32_t classical_nodes = 1;
  Time pre_runtime = 1'000'000;   // long-time preprocessing
  Time update_runtime = 10'000;   // near-time parameter update
  std::string hub = "hub";
  std::string group = "group";
  std::string project = "project";
  Time submit_time = 0;
};

// One long-time classical pre-job, then per iteration a quantum job
// (Quantum-in-HPC) followed by a near-time classical update, chained by
// dependencies: 2*iterations + 1 jobs.
std::vector<Job> gen_vqe_workload(const VqeWorkloadParams& params);

}  // namespace qcw::sched
