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

#include "qcw/sv_sim.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qcw/dense.hpp"
#include "qcw/errors.hpp"

namespace qcw {

namespace {

constexpr double kNormTol = 1e-9;
constexpr double kUnitaryTol = 1e-10;

void check_qubit(std::uint32_t q, std::uint32_t n) {
  if (q >= n) {
    throw ValidationError("state.qubit_out_of_range",
                          "qubit index exceeds register size");
  }
}

// Pair update without unitarity validation; shared with the density-matrix
// backend, whose Kraus operators are intentionally non-unitary.
void kernel_1q_raw(cplx* amps, std::uint64_t dim, const Eigen::Matrix2cd& u,
                   std::uint32_t q) {
  const std::uint64_t stride = std::uint64_t{1} << q;
  const std::uint64_t low_mask = stride - 1;
  const std::uint64_t half = dim >> 1;
  const cplx u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
  for (std::uint64_t i = 0; i < half; ++i) {
    const std::uint64_t s = ((i >> q) << (q + 1)) | (i & low_mask);
    const cplx a0 = amps[s];
    const cplx a1 = amps[s + stride];
    amps[s] = u00 * a0 + u01 * a1;
    amps[s + stride] = u10 * a0 + u11 * a1;
  }
}

void kernel_2q_raw(cplx* amps, std::uint64_t dim, Eigen::Matrix4cd u,
                   std::uint32_t p, std::uint32_t q) {
  if (p > q) {
    // Reorder targets; conjugate by the permutation swapping sub-indices
    // 1 (bit p) and 2 (bit q).
    std::swap(p, q);
    u.row(1).swap(u.row(2));
    u.col(1).swap(u.col(2));
  }
  const std::uint64_t sp = std::uint64_t{1} << p;
  const std::uint64_t sq = std::uint64_t{1} << q;
  const std::uint64_t low_mask = sp - 1;
  const std::uint64_t mid_bits = q - p - 1;
  const std::uint64_t mid_mask = (std::uint64_t{1} << mid_bits) - 1;
  const std::uint64_t quarter = dim >> 2;
  for (std::uint64_t i = 0; i < quarter; ++i) {
    const std::uint64_t mid = (i >> p) & mid_mask;
    const std::uint64_t s = ((i >> (q - 1)) << (q + 1)) | (mid << (p + 1)) |
                            (i & low_mask);
    cplx a[4] = {amps[s], amps[s + sp], amps[s + sq], amps[s + sp + sq]};
    cplx b[4];
    for (int r = 0; r < 4; ++r) {
      b[r] = u(r, 0) * a[0] + u(r, 1) * a[1] + u(r, 2) * a[2] + u(r, 3) * a[3];
    }
    amps[s] = b[0];
    amps[s + sp] = b[1];
    amps[s + sq] = b[2];
    amps[s + sp + sq] = b[3];
  }
}

}  // namespace

namespace detail {
// Internal entry points for the density-matrix backend.
void sv_kernel_1q(cplx* amps, std::uint64_t dim, const Eigen::Matrix2cd& u,
                  std::uint32_t q) {
  kernel_1q_raw(amps, dim, u, q);
}
void sv_kernel_2q(cplx* amps, std::uint64_t dim, const Eigen::Matrix4cd& u,
                  std::uint32_t p, std::uint32_t q) {
  kernel_2q_raw(amps, dim, u, p, q);
}
}  // namespace detail

StateVec::StateVec(std::uint32_t num_qubits)
    : num_qubits_(num_qubits), amps_(std::uint64_t{1} << num_qubits) {
  amps_[0] = 1.0;
}

StateVec::StateVec(std::uint32_t num_qubits, std::vector<cplx> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
  if (amps_.size() != (std::uint64_t{1} << num_qubits)) {
    throw ValidationError("state.bad_size",
                          "amplitude vector length must be 2^n");
  }
  if (std::abs(norm_sq() - 1.0) > kNormTol) {
    throw ValidationError("state.not_normalized",
                          "state vector must have unit norm");
  }
}

double StateVec::norm_sq() const {
  double s = 0.0;
  for (const cplx& a : amps_) s += std::norm(a);
  return s;
}

Eigen::VectorXcd StateVec::to_vector() const {
  Eigen::VectorXcd v(amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i) v(i) = amps_[i];
  return v;
}

void apply_1q(StateVec& state, const Eigen::Matrix2cd& u, std::uint32_t q) {
  check_qubit(q, state.num_qubits());
  if (dense::unitarity_defect(u) > kUnitaryTol) {
    throw ValidationError("gate.non_unitary", "1-qubit update must be unitary");
  }
  kernel_1q_raw(state.amplitudes().data(), state.dim(), u, q);
}

void apply_2q(StateVec& state, const Eigen::Matrix4cd& u, std::uint32_t p,
              std::uint32_t q) {
  check_qubit(p, state.num_qubits());
  check_qubit(q, state.num_qubits());
  if (p == q) {
    throw ValidationError("gate.duplicate_target",
                          "two-qubit update targets must be distinct");
  }
  if (dense::unitarity_defect(u) > kUnitaryTol) {
    throw ValidationError("gate.non_unitary", "2-qubit update must be unitary");
  }
  kernel_2q_raw(state.amplitudes().data(), state.dim(), u, p, q);
}

void apply_gate(StateVec& state, const Gate& g) {
  if (g.arity() == 1) {
    apply_1q(state, gate_matrix_1q(g), g.targets[0]);
  } else {
    apply_2q(state, gate_matrix_2q(g), g.targets[0], g.targets[1]);
  }
}

StateVec run(const Circuit& c) { return run(c, StateVec(c.num_qubits)); }

StateVec run(const Circuit& c, const StateVec& init) {
  if (init.num_qubits() != c.num_qubits) {
    throw ValidationError("state.size_mismatch",
                          "initial state does not match circuit width");
  }
  StateVec state = init;
  for (const auto& g : c.gates) apply_gate(state, g);
  return state;
}

double expectation(const StateVec& state, const QubitOperator& op) {
  if (op.num_qubits() > state.num_qubits()) {
    throw ValidationError("state.size_mismatch",
                          "operator acts outside the register");
  }
  if (!op.is_hermitian()) {
    throw ValidationError("operator.non_hermitian",
                          "expectation needs a Hermitian operator");
  }
  const auto& amps = state.amplitudes();
  const std::uint64_t dim = state.dim();
  cplx total = 0.0;
  for (const auto& term : op.terms()) {
    const dense::PauliAction act = dense::pauli_action(term);
    cplx val = 0.0;
    for (std::uint64_t i = 0; i < dim; ++i) {
      val += std::conj(amps[i ^ act.flip_mask]) * act.phase(i) * amps[i];
    }
    total += term.coeff() * val;
  }
  return total.real();
}

std::map<std::uint64_t, std::uint64_t> sample(const StateVec& state,
                                              std::uint64_t shots,
                                              std::uint64_t seed) {
  if (shots == 0) {
    throw ValidationError("sample.zero_shots", "shot count must be positive");
  }
  const auto& amps = state.amplitudes();
  std::vector<double> cdf(amps.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    acc += std::norm(amps[i]);
    cdf[i] = acc;
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::map<std::uint64_t, std::uint64_t> counts;
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double r = unif(rng) * acc;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), r);
    const std::uint64_t idx =
        it == cdf.end() ? cdf.size() - 1 : static_cast<std::uint64_t>(
                                               it - cdf.begin());
    ++counts[idx];
  }
  return counts;
}

}  // namespace qcw
