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

#include <string>

#include <json.hpp>

#include "qcw/circuit.hpp"
#include "qcw/dm_sim.hpp"
#include "qcw/lattice.hpp"
#include "qcw/pauli.hpp"
#include "qcw/sched.hpp"
#include "qcw/swapnet.hpp"

namespace qcw::io {

using json = nlohmann::json;

// {"num_qubits": n, "terms": [{"pauli": "X0 Z3", "coeff": [re, im]}, ...]}
json operator_to_json(const QubitOperator& op);
QubitOperator operator_from_json(const json& j);

// {"num_qubits": n, "gates": [{"kind": "RZ", "targets": [0],
//  "theta": 0.5}, ...]}; explicit matrices as row-major [re, im] pairs.
json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const json& j);

// {"kind": "honeycomb", "cells": [2, 1], "periodic": [false, false]}
json lattice_to_json(const LatticeSpec& lat);
LatticeSpec lattice_from_json(const json& j);

// {"gates": {"CX": {"channel": "depolarizing", "p": 0.01}, ...}}
NoiseModel noise_model_from_json(const json& j);

json schedule_to_json(const SwapSchedule& s);

sched::Scenario scenario_from_json(const json& j);
json event_to_json(const sched::Event& e);
json metrics_to_json(const sched::Metrics& m);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace qcw::io
