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

#include <Eigen/Dense>

#include "qcw/pauli.hpp"

namespace qcw::dense {

// Basis-state action of a Pauli string, little-endian (bit q of the index is
// qubit q): P|i> = phase(i) |i ^ flip_mask>.
struct PauliAction {
  std::uint64_t flip_mask = 0;   // qubits with X or Y
  std::uint64_t phase_mask = 0;  // qubits with Z or Y
  int y_count = 0;

  cplx phase(std::uint64_t basis_index) const;
};

PauliAction pauli_action(const PauliTerm& term);

// 2^n x 2^n matrix of a single weighted Pauli string.
Eigen::MatrixXcd pauli_matrix(const PauliTerm& term, std::uint32_t num_qubits);

// Dense matrix of a Pauli-sum operator.
Eigen::MatrixXcd operator_matrix(const QubitOperator& op);

// exp(-i H t) for Hermitian H, via eigendecomposition.
Eigen::MatrixXcd evolution_operator(const Eigen::MatrixXcd& h, double t);

// Largest singular value of a - e^{i phi} b with phi chosen to cancel the
// global phase (phi = arg tr(b^dag a)).
double phase_aligned_distance(const Eigen::MatrixXcd& a,
                              const Eigen::MatrixXcd& b);

// 0.5 * sum |eigenvalues(a - b)| for Hermitian a, b.
double trace_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

// max_ij |(U^dag U - I)_ij|.
double unitarity_defect(const Eigen::MatrixXcd& u);

}  // namespace qcw::dense
