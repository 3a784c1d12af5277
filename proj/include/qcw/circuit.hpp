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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qcw/pauli.hpp"

namespace qcw {

enum class GateKind : std::uint8_t { X, SX, RZ, H, S, Sdg, CX, RZZ, U1q, U2q };

std::string gate_kind_name(GateKind k);
GateKind gate_kind_from_name(const std::string& name);
int gate_arity(GateKind k);

// One- or two-qubit unitary. For two-qubit gates the 4x4 matrix is indexed by
// bit(targets[0]) + 2*bit(targets[1]), matching the little-endian register
// convention (bit q of a basis index is qubit q). Explicit U1q/U2q matrices
// are validated unitary to 1e-10 at construction.
struct Gate {
  GateKind kind;
  std::array<std::uint32_t, 2> targets{0, 0};
  double theta = 0.0;                // RZ, RZZ
  std::vector<cplx> matrix;          // U1q (4 entries) / U2q (16), row-major

  static Gate x(std::uint32_t q);
  static Gate sx(std::uint32_t q);
  static Gate rz(std::uint32_t q, double theta);
  static Gate h(std::uint32_t q);
  static Gate s(std::uint32_t q);
  static Gate sdg(std::uint32_t q);
  static Gate cx(std::uint32_t control, std::uint32_t target);
  static Gate rzz(std::uint32_t a, std::uint32_t b, double theta);
  static Gate u1q(std::uint32_t q, const Eigen::Matrix2cd& u);
  static Gate u2q(std::uint32_t a, std::uint32_t b, const Eigen::Matrix4cd& u);

  int arity() const { return gate_arity(kind); }
  // Inverse gate, staying inside the gate set (SX^-1 becomes an explicit
  // U1q; RZ/RZZ negate theta).
  Gate inverse() const;
};

Eigen::Matrix2cd gate_matrix_1q(const Gate& g);
Eigen::Matrix4cd gate_matrix_2q(const Gate& g);

struct Circuit {
  std::uint32_t num_qubits = 0;
  std::vector<Gate> gates;

  Circuit() = default;
  explicit Circuit(std::uint32_t n) : num_qubits(n) {}

  // Validates targets against the register size.
  void append(Gate g);
  void append(const Circuit& other);
  std::size_t size() const { return gates.size(); }
};

// Reversed gate list with each gate inverted.
Circuit adjoint(const Circuit& c);

// Full 2^n x 2^n unitary, product of embedded gate matrices in program
// order. Capped at 10 qubits; this is the brute-force reference path, so it
// deliberately shares no code with the simulator kernels.
Eigen::MatrixXcd to_matrix(const Circuit& c);

// C (C^dag C)^((factor-1)/2) for odd factor; same unitary action, factor
// times the gate count.
Circuit fold_global(const Circuit& c, std::uint64_t factor);

// exp(-i theta/2 P) for a nonempty Pauli string P: basis changes into Z,
// a CX ladder onto the highest support qubit, RZ(theta), and the mirror.
// The term's coefficient is ignored here; callers fold it into theta.
Circuit pauli_rotation_circuit(const PauliTerm& term, double theta,
                               std::uint32_t num_qubits);

}  // namespace qcw
