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
#include <vector>

#include <Eigen/Dense>

#include "qcw/circuit.hpp"
#include "qcw/pauli.hpp"

namespace qcw {

// Product-formula schedule for exp(-i H t): order-p formula (p = 1 or 2)
// with `steps` repetitions, terms visited in `term_order` within each step.
struct TrotterPlan {
  QubitOperator hamiltonian;
  double t = 0.0;
  int order = 1;
  std::uint64_t steps = 1;
  std::vector<std::size_t> term_order;
};

// Default term order is descending |coefficient| (stable). Validates order,
// steps and that the Hamiltonian has real coefficients.
TrotterPlan make_plan(const QubitOperator& h, double t, int order,
                      std::uint64_t steps);
TrotterPlan make_plan(const QubitOperator& h, double t, int order,
                      std::uint64_t steps, std::vector<std::size_t> term_order);

// Compiles the plan to Pauli-rotation blocks: theta_k = 2 c_k t / n for
// order 1; order 2 uses half angles forward then mirrored within each step.
// Identity terms only shift the global phase and are skipped.
Circuit trotter_circuit(const TrotterPlan& plan);

// Dense unitary of the product formula itself, term exponentials applied in
// schedule order (identity terms included as phases). Equals the compiled
// circuit's unitary up to the global phase of skipped identity terms.
Eigen::MatrixXcd product_formula_unitary(const TrotterPlan& plan);

bool all_terms_commute(const QubitOperator& h);

// Error bound of the n-step formula from the coefficient l1 norm:
// (lambda t)^2/(2n) e^{lambda t/n} for order 1 and
// (lambda t)^3/(6 n^2) e^{lambda t/n} for order 2.
double l1_error_bound(const QubitOperator& h, double t, std::uint64_t steps,
                      int order);

// sum_{i<j} l1([H_i, H_j]), evaluated by Pauli algebra (2|c_i c_j| per
// anticommuting pair). Term count capped at 2000 (quadratic pair scan).
double commutator_l1_sum(const QubitOperator& h);

// First-order commutator bound t^2 C / (2n) at n steps.
double commutator_error_bound(const QubitOperator& h, double t,
                              std::uint64_t steps);

// Smallest n with the respective bound below eps. Pairwise-commuting
// Hamiltonians and t = 0 return 1.
std::uint64_t steps_for_error_l1(const QubitOperator& h, double t, double eps,
                                 int order);
std::uint64_t steps_for_error_commutator(const QubitOperator& h, double t,
                                         double eps);

// Spectral-norm distance, up to global phase, between the product-formula
// unitary and exp(-i H t). At most 10 qubits.
double empirical_error(const QubitOperator& h, double t, std::uint64_t steps,
                       int order);

}  // namespace qcw
