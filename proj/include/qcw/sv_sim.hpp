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
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "qcw/circuit.hpp"
#include "qcw/pauli.hpp"

namespace qcw {

// 2^n complex amplitudes, little-endian: bit q of the index is qubit q.
// 16 * 2^n bytes at double precision.
class StateVec {
 public:
  explicit StateVec(std::uint32_t num_qubits);  // |0...0>
  StateVec(std::uint32_t num_qubits, std::vector<cplx> amplitudes);

  std::uint32_t num_qubits() const { return num_qubits_; }
  std::uint64_t dim() const { return std::uint64_t{1} << num_qubits_; }
  const std::vector<cplx>& amplitudes() const { return amps_; }
  std::vector<cplx>& amplitudes() { return amps_; }
  cplx amplitude(std::uint64_t i) const { return amps_[i]; }
  double norm_sq() const;

  Eigen::VectorXcd to_vector() const;

 private:
  std::uint32_t num_qubits_;
  std::vector<cplx> amps_;
};

// In-place pair update: for i in [0, 2^(n-1)) the pair at
// s_i = floor(i / 2^q) * 2^(q+1) + (i mod 2^q) and s_i + 2^q is replaced by
// u times itself. u must be unitary to 1e-10.
void apply_1q(StateVec& state, const Eigen::Matrix2cd& u, std::uint32_t q);

// In-place 4-block update on qubits p and q; the 4x4 matrix is indexed by
// bit(p) + 2*bit(q). If p > q the targets are reordered internally and u is
// conjugated by the index-swap permutation.
void apply_2q(StateVec& state, const Eigen::Matrix4cd& u, std::uint32_t p,
              std::uint32_t q);

void apply_gate(StateVec& state, const Gate& g);

// Applies the circuit to |0...0>.
StateVec run(const Circuit& c);
// Applies the circuit to a copy of init.
StateVec run(const Circuit& c, const StateVec& init);

// sum_i c_i <psi|P_i|psi>, evaluated per term from the basis action of the
// string (no dense matrices). Requires a Hermitian operator.
double expectation(const StateVec& state, const QubitOperator& op);

// Seeded measurement histogram: basis index -> count. Reproducible for a
// fixed seed.
std::map<std::uint64_t, std::uint64_t> sample(const StateVec& state,
                                              std::uint64_t shots,
                                              std::uint64_t seed);

}  // namespace qcw
