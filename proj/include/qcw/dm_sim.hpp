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
#include "qcw/sv_sim.hpp"

namespace qcw {

// 2^n x 2^n density operator, row-major. Gates act by conjugation
// rho -> G rho G^dag applied as a strided left kernel over columns and a
// right kernel over rows; the full 2^n x 2^n gate matrix is never formed.
class DensityMatrix {
 public:
  explicit DensityMatrix(std::uint32_t num_qubits);  // |0...0><0...0|
  static DensityMatrix from_pure(const StateVec& psi);
  // Validates Hermiticity and unit trace (1e-9 each).
  static DensityMatrix from_entries(std::uint32_t num_qubits,
                                    Eigen::MatrixXcd entries);

  std::uint32_t num_qubits() const { return num_qubits_; }
  std::uint64_t dim() const { return std::uint64_t{1} << num_qubits_; }
  cplx entry(std::uint64_t r, std::uint64_t c) const {
    return data_[r * dim() + c];
  }
  Eigen::MatrixXcd to_matrix() const;
  cplx trace() const;

  void apply_gate(const Gate& g);
  // rho -> sum_k K rho K^dag on the given targets (one or two, by channel
  // arity).
  void apply_channel(const std::vector<Eigen::MatrixXcd>& kraus,
                     std::uint32_t a, std::uint32_t b = 0);

 private:
  std::uint32_t num_qubits_;
  std::vector<cplx> data_;

  void left_1q(const Eigen::Matrix2cd& u, std::uint32_t q);
  void right_1q(const Eigen::Matrix2cd& u, std::uint32_t q);
  void left_2q(const Eigen::Matrix4cd& u, std::uint32_t p, std::uint32_t q);
  void right_2q(const Eigen::Matrix4cd& u, std::uint32_t p, std::uint32_t q);
  void conjugate_1q(const Eigen::Matrix2cd& u, std::uint32_t q);
  void conjugate_2q(const Eigen::Matrix4cd& u, std::uint32_t p,
                    std::uint32_t q);
};

// Trace-preserving Kraus channel; sum K^dag K = I validated to 1e-9.
struct KrausChannel {
  std::vector<Eigen::MatrixXcd> ops;
  int arity() const;
};

KrausChannel make_channel(std::vector<Eigen::MatrixXcd> kraus);

// rho -> (1-p) rho + p I/2 on one qubit.
KrausChannel depolarizing_1q(double p);
// Uniform over the 15 non-identity two-qubit Paulis; p = 1 fully mixes the
// pair.
KrausChannel depolarizing_2q(double p);
KrausChannel amplitude_damping(double gamma);
KrausChannel bit_flip(double p);
KrausChannel phase_flip(double p);

// Channel attached per gate kind, applied after each gate of that kind on
// the gate's targets.
class NoiseModel {
 public:
  void attach(GateKind kind, KrausChannel channel);
  const KrausChannel* channel_for(GateKind kind) const;
  bool empty() const { return channels_.empty(); }

 private:
  std::map<GateKind, KrausChannel> channels_;
};

DensityMatrix run_noisy(const Circuit& c, const NoiseModel& nm);
DensityMatrix run_noisy(const Circuit& c, const NoiseModel& nm,
                        const DensityMatrix& init);

// Tr(rho H), term by term from the basis action of each string.
double expectation_dm(const DensityMatrix& rho, const QubitOperator& op);

}  // namespace qcw
