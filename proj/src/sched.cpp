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

#include "qcw/sched.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>

#include <Eigen/Dense>

#include "qcw/errors.hpp"

namespace qcw::sched {

namespace {

std::string group_key(const Job& j) { return j.hub + "/" + j.group; }

// Engine event; completions sort before submissions at equal times so a
// freed device is visible to same-instant dispatch.
struct EngineEvent {
  Time t;
  int priority;  // 0 complete, 1 submit
  std::string job_id;

  bool operator>(const EngineEvent& o) const {
    if (t != o.t) return t > o.t;
    if (priority != o.priority) return priority > o.priority;
    return job_id > o.job_id;
  }
};

struct DeviceState {
  const Device* dev = nullptr;
  std::vector<Time> running_ends;  // end time per occupied slot
  Time busy_time = 0;              // accumulated slot-microseconds

  bool has_free_slot() const { return running_ends.size() < dev->shares; }
  Time earliest_free(Time now) const {
    if (has_free_slot()) return now;
    return *std::min_element(running_ends.begin(), running_ends.end());
  }
  void occupy(Time end) { running_ends.push_back(end); }
  void release(Time end) {
    const auto it =
        std::find(running_ends.begin(), running_ends.end(), end);
    running_ends.erase(it);
  }
};

struct RunningJob {
  std::string device;
  std::vector<std::string> nodes;
  Time start = 0;
  Time end = 0;
  bool on_cloud = false;
};

}  // namespace

std::string device_kind_name(DeviceKind k) {
  switch (k) {
    case DeviceKind::Qpu:
      return "QPU";
    case DeviceKind::CpuNode:
      return "CPU-node";
    case DeviceKind::GpuNode:
      return "GPU-node";
  }
  return "?";
}

DeviceKind device_kind_from_name(const std::string& name) {
  if (name == "QPU") return DeviceKind::Qpu;
  if (name == "CPU-node") return DeviceKind::CpuNode;
  if (name == "GPU-node") return DeviceKind::GpuNode;
  throw ValidationError("scenario.unknown_device_kind",
                        "unknown device kind: " + name);
}

std::string location_name(Location l) {
  return l == Location::Local ? "local" : "cloud";
}

Location location_from_name(const std::string& name) {
  if (name == "local") return Location::Local;
  if (name == "cloud") return Location::Cloud;
  throw ValidationError("scenario.unknown_location",
                        "unknown location: " + name);
}

std::string coupling_name(Coupling c) {
  switch (c) {
    case Coupling::HpcForQuantum:
      return "HPC_for_Quantum";
    case Coupling::QuantumInHpc:
      return "Quantum_in_HPC";
    case Coupling::QuantumAboutHpc:
      return "Quantum_about_HPC";
  }
  return "?";
}

Coupling coupling_from_name(const std::string& name) {
  if (name == "HPC_for_Quantum") return Coupling::HpcForQuantum;
  if (name == "Quantum_in_HPC") return Coupling::QuantumInHpc;
  if (name == "Quantum_about_HPC") return Coupling::QuantumAboutHpc;
  throw ValidationError("scenario.unknown_coupling",
                        "unknown coupling class: " + name);
}

Time predict_runtime(const Job& job, const Device& device) {
  if (device.kind != DeviceKind::Qpu) {
    throw ValidationError("sched.not_a_qpu",
                          "quantum runtime prediction needs a QPU");
  }
  if (job.n_qubits > device.qubits) {
    throw ValidationError("sched.qubits_exceed_device",
                          "job needs more qubits than the device has");
  }
  const Time per_shot = static_cast<Time>(job.depth) * device.gate_time_2q +
                        device.readout_time;
  return static_cast<Time>(job.circuits) * static_cast<Time>(job.shots) *
             per_shot +
         device.submit_latency;
}

std::pair<double, double> calibrate_runtime(
    const std::vector<RuntimeTraceRow>& rows) {
  if (rows.size() < 2) {
    throw ValidationError("sched.trace_too_small",
                          "need at least two trace rows");
  }
  Eigen::MatrixXd a(rows.size(), 2);
  Eigen::VectorXd b(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double cs =
        static_cast<double>(rows[i].circuits) * static_cast<double>(rows[i].shots);
    a(i, 0) = cs * static_cast<double>(rows[i].depth);
    a(i, 1) = cs;
    b(i) = static_cast<double>(rows[i].duration);
  }
  const Eigen::Vector2d x =
      a.jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(b);
  return {x(0), x(1)};
}

FairShareState::FairShareState(const ShareTree& tree) {
  double hub_total = 0.0;
  for (const auto& hub : tree.hubs) hub_total += hub.shares;
  for (const auto& hub : tree.hubs) {
    const double hub_frac = hub.shares / hub_total;
    double group_total = 0.0;
    for (const auto& g : hub.groups) group_total += g.shares;
    for (const auto& g : hub.groups) {
      const double g_frac = hub_frac * g.shares / group_total;
      group_fraction_[hub.name + "/" + g.name] = g_frac;
      double proj_total = 0.0;
      for (const auto& p : g.projects) proj_total += p.shares;
      for (const auto& p : g.projects) {
        project_fraction_[hub.name + "/" + g.name + "/" + p.name] =
            g_frac * p.shares / proj_total;
      }
    }
  }
}

void FairShareState::record_usage(const Job& job, Time completion,
                                  Time amount) {
  usage_[group_key(job)].entries.emplace_back(completion, amount);
  usage_[job.project_path()].entries.emplace_back(completion, amount);
}

double FairShareState::window_ratio(const std::string& key, double fraction,
                                    Time now) const {
  const auto it = usage_.find(key);
  Time used = 0;
  if (it != usage_.end()) {
    const Time cutoff = now - kSchedulingPeriod;
    for (const auto& [t, amount] : it->second.entries) {
      if (t > cutoff) used += amount;
    }
  }
  return static_cast<double>(used) /
         (fraction * static_cast<double>(kSchedulingPeriod));
}

double FairShareState::group_ratio(const Job& job, Time now) const {
  return window_ratio(group_key(job), group_fraction_.at(group_key(job)), now);
}

double FairShareState::project_ratio(const Job& job, Time now) const {
  return window_ratio(job.project_path(),
                      project_fraction_.at(job.project_path()), now);
}

bool FairShareState::knows_project(const Job& job) const {
  return project_fraction_.count(job.project_path()) > 0;
}

std::optional<std::size_t> fairshare_next(const std::vector<const Job*>& queue,
                                          const FairShareState& usage,
                                          Time now) {
  if (queue.empty()) return std::nullopt;
  std::size_t best = 0;
  auto rank = [&](const Job& j) {
    return std::tuple(usage.group_ratio(j, now), usage.project_ratio(j, now),
                      j.submit_time, j.id);
  };
  for (std::size_t i = 1; i < queue.size(); ++i) {
    if (rank(*queue[i]) < rank(*queue[best])) best = i;
  }
  return best;
}

std::vector<std::string> validate_scenario(const Scenario& s) {
  std::vector<std::string> errors;
  if (s.devices.empty()) errors.push_back("devices: list is empty");
  std::set<std::string> device_ids;
  for (std::size_t i = 0; i < s.devices.size(); ++i) {
    const auto& d = s.devices[i];
    const std::string path = "devices[" + std::to_string(i) + "]";
    if (d.id.empty()) errors.push_back(path + ".id: empty");
    if (!device_ids.insert(d.id).second) {
      errors.push_back(path + ".id: duplicate '" + d.id + "'");
    }
    if (d.gate_time_1q <= 0 || d.gate_time_2q <= 0 || d.readout_time <= 0) {
      errors.push_back(path + ": gate and readout times must be positive");
    }
    if (d.submit_latency < 0) {
      errors.push_back(path + ".submit_latency: negative");
    }
    if (d.shares < 1) errors.push_back(path + ".shares: must be >= 1");
    if (d.kind == DeviceKind::Qpu && d.qubits == 0) {
      errors.push_back(path + ".qubits: QPU needs at least one qubit");
    }
    if (d.kind != DeviceKind::Qpu && d.shares != 1) {
      errors.push_back(path + ".shares: classical nodes are single-slot");
    }
  }

  if (s.tree.hubs.empty()) errors.push_back("share_tree: no hubs");
  std::set<std::string> projects;
  for (const auto& hub : s.tree.hubs) {
    if (hub.shares <= 0) {
      errors.push_back("share_tree." + hub.name + ".shares: must be positive");
    }
    if (hub.groups.empty()) {
      errors.push_back("share_tree." + hub.name + ": no groups");
    }
    for (const auto& g : hub.groups) {
      if (g.shares <= 0) {
        errors.push_back("share_tree." + hub.name + "/" + g.name +
                         ".shares: must be positive");
      }
      if (g.projects.empty()) {
        errors.push_back("share_tree." + hub.name + "/" + g.name +
                         ": no projects");
      }
      for (const auto& p : g.projects) {
        if (p.shares <= 0) {
          errors.push_back("share_tree." + hub.name + "/" + g.name + "/" +
                           p.name + ".shares: must be positive");
        }
        projects.insert(hub.name + "/" + g.name + "/" + p.name);
      }
    }
  }

  std::set<std::string> job_ids;
  for (const auto& j : s.jobs) job_ids.insert(j.id);
  std::map<std::string, std::vector<std::string>> dep_edges;
  for (std::size_t i = 0; i < s.jobs.size(); ++i) {
    const auto& j = s.jobs[i];
    const std::string path = "jobs[" + std::to_string(i) + "]";
    if (j.id.empty()) errors.push_back(path + ".id: empty");
    if (!projects.count(j.project_path())) {
      errors.push_back(path + ".project: unknown project '" +
                       j.project_path() + "'");
    }
    if (j.submit_time < 0) errors.push_back(path + ".submit_time: negative");
    if (j.is_quantum() && j.n_qubits == 0) {
      errors.push_back(path + ".n_qubits: quantum job needs qubits");
    }
    if (j.coupling == Coupling::HpcForQuantum && j.is_quantum() &&
        j.classical_node_need == 0) {
      errors.push_back(path +
                       ".classical_node_need: HPC_for_Quantum co-reserves "
                       "classical nodes");
    }
    for (const auto& dep : j.depends_on) {
      if (!job_ids.count(dep)) {
        errors.push_back(path + ".depends_on: unknown job '" + dep + "'");
      } else if (dep == j.id) {
        errors.push_back(path + ".depends_on: self-dependency");
      } else {
        dep_edges[j.id].push_back(dep);
      }
    }
  }
  if (job_ids.size() != s.jobs.size()) {
    errors.push_back("jobs: duplicate ids");
  }

  // Kahn check; cyclic dependencies would deadlock the event loop.
  std::map<std::string, std::size_t> out_degree;
  std::map<std::string, std::vector<std::string>> dependents;
  for (const auto& j : s.jobs) out_degree[j.id] = 0;
  for (const auto& [id, deps] : dep_edges) {
    out_degree[id] = deps.size();
    for (const auto& d : deps) dependents[d].push_back(id);
  }
  std::vector<std::string> frontier;
  for (const auto& [id, deg] : out_degree) {
    if (deg == 0) frontier.push_back(id);
  }
  std::size_t resolved = 0;
  while (!frontier.empty()) {
    const std::string id = frontier.back();
    frontier.pop_back();
    ++resolved;
    for (const auto& nxt : dependents[id]) {
      if (--out_degree[nxt] == 0) frontier.push_back(nxt);
    }
  }
  if (resolved != s.jobs.size()) {
    errors.push_back("jobs.depends_on: dependency cycle");
  }

  if (s.horizon <= 0) errors.push_back("horizon_us: must be positive");
  return errors;
}

namespace {

class Engine {
 public:
  Engine(const Scenario& scenario)
      : scenario_(scenario), usage_(scenario.tree) {
    for (const auto& d : scenario.devices) {
      device_states_[d.id] = DeviceState{&d, {}, 0};
    }
    for (const auto& j : scenario.jobs) jobs_by_id_[j.id] = &j;
  }

  SimResult run() {
    for (const auto& j : scenario_.jobs) {
      queue_.push({j.submit_time, 1, j.id});
    }
    while (!queue_.empty()) {
      const Time now = queue_.top().t;
      if (now > scenario_.horizon) break;
      while (!queue_.empty() && queue_.top().t == now) {
        const EngineEvent ev = queue_.top();
        queue_.pop();
        if (ev.priority == 0) {
          handle_completion(ev.job_id, now);
        } else {
          handle_submission(ev.job_id, now);
        }
      }
      dispatch(now);
    }
    return {std::move(events_), build_metrics()};
  }

 private:
  void handle_submission(const std::string& id, Time now) {
    events_.push_back({now, "submit", id});
    pending_.push_back(id);
  }

  void handle_completion(const std::string& id, Time now) {
    const RunningJob run = running_.at(id);
    const Job& job = *jobs_by_id_.at(id);
    device_states_.at(run.device).release(run.end);
    device_states_.at(run.device).busy_time += run.end - run.start;
    for (const auto& node : run.nodes) {
      device_states_.at(node).release(run.end);
      device_states_.at(node).busy_time += run.end - run.start;
    }
    const Time duration = run.end - run.start;
    usage_.record_usage(job, now, duration);
    used_time_[job.project_path()] += duration;
    waits_.push_back(static_cast<double>(run.start - job.submit_time));
    ++completed_count_;
    if (run.on_cloud) ++cloud_count_;
    max_completion_ = std::max(max_completion_, now);
    completed_.insert(id);
    running_.erase(id);
    events_.push_back({now, "complete", id, run.device, run.nodes, "",
                       duration});
  }

  bool deps_met(const Job& job) const {
    return std::all_of(job.depends_on.begin(), job.depends_on.end(),
                       [&](const std::string& d) { return completed_.count(d); });
  }

  // Free classical nodes in id order; HPC-for-Quantum jobs only accept
  // co-located (local) nodes.
  std::vector<std::string> pick_nodes(const Job& job, bool require_local) {
    std::vector<std::string> picked;
    if (job.classical_node_need == 0) return picked;
    for (const auto& [id, state] : device_states_) {
      if (state.dev->kind == DeviceKind::Qpu) continue;
      if (require_local && state.dev->location != Location::Local) continue;
      if (!state.has_free_slot()) continue;
      picked.push_back(id);
      if (picked.size() == job.classical_node_need) return picked;
    }
    return {};
  }

  struct Choice {
    const Device* device = nullptr;
    std::string reason;
  };

  // Fitting local QPU with the best completion estimate; cloud when no
  // local fits (policy allowing) or the local estimate misses the deadline.
  std::optional<Choice> choose_qpu(const Job& job, Time now, bool& impossible) {
    const Device* best_local = nullptr;
    Time best_local_completion = 0;
    const Device* best_cloud = nullptr;
    Time best_cloud_runtime = 0;
    for (const auto& [id, state] : device_states_) {
      const Device& d = *state.dev;
      if (d.kind != DeviceKind::Qpu || d.qubits < job.n_qubits) continue;
      if (d.location == Location::Local) {
        const Time completion = state.earliest_free(now) +
                                predict_runtime(job, d);
        if (best_local == nullptr || completion < best_local_completion) {
          best_local = &d;
          best_local_completion = completion;
        }
      } else if (job.coupling != Coupling::HpcForQuantum) {
        const Time runtime = predict_runtime(job, d);
        if (best_cloud == nullptr || runtime < best_cloud_runtime) {
          best_cloud = &d;
          best_cloud_runtime = runtime;
        }
      }
    }
    impossible = best_local == nullptr &&
                 (best_cloud == nullptr || !scenario_.burst.allow);
    if (impossible) return std::nullopt;
    if (best_local == nullptr) {
      if (scenario_.burst.deadline_only) {
        impossible = true;
        return std::nullopt;
      }
      return Choice{best_cloud, "capacity"};
    }
    if (job.deadline && best_local_completion > *job.deadline &&
        scenario_.burst.allow && best_cloud != nullptr) {
      return Choice{best_cloud, "deadline"};
    }
    return Choice{best_local, "local"};
  }

  bool try_start(const Job& job, Time now) {
    if (!job.is_quantum()) {
      const bool ok = start_classical(job, now);
      return ok;
    }
    bool impossible = false;
    const auto choice = choose_qpu(job, now, impossible);
    if (impossible) {
      events_.push_back({now, "unschedulable", job.id, "", {}, "no_fit", 0});
      ++unschedulable_count_;
      return true;  // leaves the pending queue either way
    }
    if (!choice) return false;
    DeviceState& qpu = device_states_.at(choice->device->id);
    if (!qpu.has_free_slot()) return false;

    std::vector<std::string> nodes;
    const bool holds_nodes = job.coupling == Coupling::HpcForQuantum ||
                             job.coupling == Coupling::QuantumInHpc;
    if (holds_nodes && job.classical_node_need > 0) {
      nodes = pick_nodes(job, job.coupling == Coupling::HpcForQuantum);
      if (nodes.empty()) return false;
    }
    const Time duration = predict_runtime(job, *choice->device);
    start_job(job, choice->device->id, nodes, choice->reason, now, duration,
              choice->device->location == Location::Cloud);
    return true;
  }

  bool start_classical(const Job& job, Time now) {
    const auto nodes = pick_nodes(job, false);
    if (job.classical_node_need > 0 && nodes.empty()) return false;
    start_job(job, nodes.empty() ? "" : nodes.front(),
              nodes.empty()
                  ? std::vector<std::string>{}
                  : std::vector<std::string>(nodes.begin() + 1, nodes.end()),
              "local", now, job.classical_runtime, false);
    return true;
  }

  void start_job(const Job& job, const std::string& device,
                 std::vector<std::string> nodes, const std::string& reason,
                 Time now, Time duration, bool on_cloud) {
    const Time end = now + duration;
    if (!device.empty()) device_states_.at(device).occupy(end);
    for (const auto& n : nodes) device_states_.at(n).occupy(end);
    running_[job.id] = {device, nodes, now, end, on_cloud};
    queue_.push({end, 0, job.id});
    events_.push_back({now, "start", job.id, device, std::move(nodes), reason,
                       duration});
  }

  void dispatch(Time now) {
    std::vector<const Job*> ready;
    for (const auto& id : pending_) {
      const Job* j = jobs_by_id_.at(id);
      if (deps_met(*j)) ready.push_back(j);
    }
    if (ready.empty()) return;
    // Ratios are fixed during the pass (usage accrues on completion only).
    std::map<std::string, std::pair<double, double>> rank_cache;
    for (const Job* j : ready) {
      rank_cache.emplace(j->project_path(),
                         std::pair(usage_.group_ratio(*j, now),
                                   usage_.project_ratio(*j, now)));
    }
    std::sort(ready.begin(), ready.end(), [&](const Job* a, const Job* b) {
      const auto& ra = rank_cache.at(a->project_path());
      const auto& rb = rank_cache.at(b->project_path());
      if (ra != rb) return ra < rb;
      if (a->submit_time != b->submit_time) {
        return a->submit_time < b->submit_time;
      }
      return a->id < b->id;
    });
    for (const Job* j : ready) {
      if (try_start(*j, now)) {
        pending_.erase(std::find(pending_.begin(), pending_.end(), j->id));
      }
    }
  }

  Metrics build_metrics() const {
    Metrics m;
    m.completed = completed_count_;
    m.unschedulable = unschedulable_count_;
    m.makespan_us = max_completion_;
    for (const auto& [id, state] : device_states_) {
      const double span = static_cast<double>(max_completion_);
      m.device_utilization[id] =
          span > 0.0 ? static_cast<double>(state.busy_time) /
                           (span * state.dev->shares)
                     : 0.0;
    }
    if (!waits_.empty()) {
      std::vector<double> sorted = waits_;
      std::sort(sorted.begin(), sorted.end());
      double sum = 0.0;
      for (double w : sorted) sum += w;
      m.mean_wait_us = sum / static_cast<double>(sorted.size());
      const std::size_t idx = static_cast<std::size_t>(
          std::ceil(0.95 * static_cast<double>(sorted.size())));
      m.p95_wait_us = sorted[std::min(sorted.size() - 1, idx == 0 ? 0 : idx - 1)];
    }
    if (completed_count_ > 0) {
      m.burst_fraction = static_cast<double>(cloud_count_) /
                         static_cast<double>(completed_count_);
    }
    m.project_used_time = used_time_;
    return m;
  }

  const Scenario& scenario_;
  FairShareState usage_;
  std::map<std::string, DeviceState> device_states_;
  std::map<std::string, const Job*> jobs_by_id_;
  std::priority_queue<EngineEvent, std::vector<EngineEvent>,
                      std::greater<EngineEvent>>
      queue_;
  std::vector<std::string> pending_;
  std::map<std::string, RunningJob> running_;
  std::set<std::string> completed_;
  std::map<std::string, Time> used_time_;
  std::vector<Event> events_;
  std::vector<double> waits_;
  std::uint64_t completed_count_ = 0;
  std::uint64_t cloud_count_ = 0;
  std::uint64_t unschedulable_count_ = 0;
  Time max_completion_ = 0;
};

}  // namespace

SimResult simulate(const Scenario& scenario, std::uint64_t seed) {
  (void)seed;  // recorded by callers; the v1 engine is seed-free
  const auto errors = validate_scenario(scenario);
  if (!errors.empty()) {
    std::string joined;
    for (const auto& e : errors) {
      if (!joined.empty()) joined += "; ";
      joined += e;
    }
    throw ValidationError("scenario.invalid", joined);
  }
  return Engine(scenario).run();
}

std::vector<Job> gen_vqe_workload(const VqeWorkloadParams& p) {
  if (p.iterations < 1) {
    throw ValidationError("vqe.bad_iterations", "need at least one iteration");
  }
  std::vector<Job> jobs;
  const auto base = [&](const std::string& id) {
    Job j;
    j.id = id;
    j.hub = p.hub;
    j.group = p.group;
    j.project = p.project;
    j.submit_time = p.submit_time;
    return j;
  };

  Job pre = base("vqe-pre");
  pre.coupling = Coupling::QuantumAboutHpc;
  pre.classical_node_need = p.classical_nodes;
  pre.classical_runtime = p.pre_runtime;
  jobs.push_back(pre);

  std::string prev = pre.id;
  for (std::uint64_t i = 1; i <= p.iterations; ++i) {
    const std::string tag = std::to_string(i);
    Job q = base("vqe-q-" + tag);
    q.coupling = Coupling::QuantumInHpc;
    q.circuits = p.circuits_per_iter;
    q.depth = p.depth;
    q.n_qubits = p.n_qubits;
    q.shots = p.shots;
    q.classical_node_need = p.classical_nodes;
    q.depends_on = {prev};
    jobs.push_back(q);

    Job u = base("vqe-u-" + tag);
    u.coupling = Coupling::QuantumAboutHpc;
    u.classical_node_need = p.classical_nodes;
    u.classical_runtime = p.update_runtime;
    u.depends_on = {q.id};
    jobs.push_back(u);
    prev = u.id;
  }
  return jobs;
}

}  // namespace qcw::sched
