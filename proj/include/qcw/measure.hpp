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
#include <span>
#include <utility>
#include <vector>

#include "qcw/circuit.hpp"
#include "qcw/pauli.hpp"
#include "qcw/sv_sim.hpp"

namespace qcw {

// Pairwise qubitwise-commuting terms plus the single-qubit rotations that
// diagonalize all of them, and a shot budget.
struct MeasurementGroup {
  std::vector<PauliTerm> terms;
  Circuit basis_circuit;
  std::uint64_t shots = 0;
};

// H on X-support, Sdg;H on Y-support, nothing on Z/identity. Rejects groups
// that are not pairwise qubitwise-commuting.
Circuit basis_change(const std::vector<PauliTerm>& terms,
                     std::uint32_t num_qubits);

// Qubitwise-commuting partition of op with basis circuits attached; shot
// budgets start at zero.
std::vector<MeasurementGroup> make_measurement_groups(const QubitOperator& op);

enum class ShotStrategy { Uniform, ProportionalL1 };

// Splits `total` over the groups by largest-remainder rounding; every
// nonempty group receives at least one shot. ProportionalL1 weights by the
// group coefficient l1 norm.
void allocate_shots(std::vector<MeasurementGroup>& groups, std::uint64_t total,
                    ShotStrategy strategy = ShotStrategy::ProportionalL1);

struct GroupStats {
  double mean = 0.0;
  double variance = 0.0;  // unbiased sample variance of the group value
  std::uint64_t shots = 0;
};

struct EstimateReport {
  double mean = 0.0;
  double stderr_ = 0.0;  // infinity when any sampled group has one shot
  std::vector<GroupStats> per_group;
  std::uint64_t total_shots = 0;
  std::uint64_t seed = 0;
};

// Grouped estimator: per group, rotates a copy of the state by the basis
// circuit, samples `shots` outcomes (seed derived from seed and group
// index), and averages the diagonalized group value. Groups must cover the
// operator's terms exactly.
EstimateReport estimate_expectation(const StateVec& state,
                                    const QubitOperator& op,
                                    const std::vector<MeasurementGroup>& groups,
                                    std::uint64_t seed);

// Local randomized-basis estimator: each sample draws a uniform X/Y/Z basis
// per qubit, measures once, and scores a term by prod 3*(eigenvalue) over
// its support when every support basis matches, else zero. Unbiased.
EstimateReport shadow_estimate(const StateVec& state, const QubitOperator& op,
                               std::uint64_t samples, std::uint64_t seed);

enum class ZneModel { Linear, Poly2, Exp };

ZneModel zne_model_from_name(const std::string& name);

// Least-squares fit of (noise_factor, value) points evaluated at factor 0.
// Exp fits a*e^(-b f) + c, with c pinned to 0 on two points.
double zne_extrapolate(std::span<const std::pair<double, double>> points,
                       ZneModel model);

}  // namespace qcw
