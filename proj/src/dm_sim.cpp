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

#include "qcw/dm_sim.hpp"

#include <cmath>

#include "qcw/dense.hpp"
#include "qcw/errors.hpp"

namespace qcw {

namespace {

constexpr double kTol = 1e-9;
constexpr std::uint32_t kMaxQubits = 13;  // 16 * 4^13 bytes ~ 1.1 GB

Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}
Eigen::Matrix2cd pauli_y() {
  Eigen::Matrix2cd m;
  m << 0, cplx(0, -1), cplx(0, 1), 0;
  return m;
}
Eigen::Matrix2cd pauli_z() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}

}  // namespace

DensityMatrix::DensityMatrix(std::uint32_t num_qubits)
    : num_qubits_(num_qubits),
      data_(std::uint64_t{1} << (2 * num_qubits)) {
  data_[0] = 1.0;
}

DensityMatrix DensityMatrix::from_pure(const StateVec& psi) {
  DensityMatrix rho(psi.num_qubits());
  const auto& a = psi.amplitudes();
  const std::uint64_t dim = rho.dim();
  for (std::uint64_t r = 0; r < dim; ++r) {
    for (std::uint64_t c = 0; c < dim; ++c) {
      rho.data_[r * dim + c] = a[r] * std::conj(a[c]);
    }
  }
  return rho;
}

DensityMatrix DensityMatrix::from_entries(std::uint32_t num_qubits,
                                          Eigen::MatrixXcd entries) {
  const std::uint64_t dim = std::uint64_t{1} << num_qubits;
  if (entries.rows() != static_cast<Eigen::Index>(dim) ||
      entries.cols() != static_cast<Eigen::Index>(dim)) {
    throw ValidationError("dm.bad_size", "entries must be 2^n x 2^n");
  }
  if ((entries - entries.adjoint()).cwiseAbs().maxCoeff() > kTol) {
    throw ValidationError("dm.not_hermitian", "density matrix not Hermitian");
  }
  if (std::abs(entries.trace() - cplx(1.0, 0.0)) > kTol) {
    throw ValidationError("dm.bad_trace", "density matrix trace must be 1");
  }
  DensityMatrix rho(num_qubits);
  for (std::uint64_t r = 0; r < dim; ++r) {
    for (std::uint64_t c = 0; c < dim; ++c) {
      rho.data_[r * dim + c] = entries(r, c);
    }
  }
  return rho;
}

Eigen::MatrixXcd DensityMatrix::to_matrix() const {
  const std::uint64_t d = dim();
  Eigen::MatrixXcd m(d, d);
  for (std::uint64_t r = 0; r < d; ++r) {
    for (std::uint64_t c = 0; c < d; ++c) m(r, c) = data_[r * d + c];
  }
  return m;
}

cplx DensityMatrix::trace() const {
  const std::uint64_t d = dim();
  cplx t = 0.0;
  for (std::uint64_t i = 0; i < d; ++i) t += data_[i * d + i];
  return t;
}

void DensityMatrix::left_1q(const Eigen::Matrix2cd& u, std::uint32_t q) {
  const std::uint64_t d = dim();
  const std::uint64_t stride = std::uint64_t{1} << q;
  const std::uint64_t low = stride - 1;
  for (std::uint64_t i = 0; i < d / 2; ++i) {
    const std::uint64_t r0 = (((i >> q) << (q + 1)) | (i & low)) * d;
    const std::uint64_t r1 = r0 + stride * d;
    for (std::uint64_t c = 0; c < d; ++c) {
      const cplx a0 = data_[r0 + c], a1 = data_[r1 + c];
      data_[r0 + c] = u(0, 0) * a0 + u(0, 1) * a1;
      data_[r1 + c] = u(1, 0) * a0 + u(1, 1) * a1;
    }
  }
}

void DensityMatrix::right_1q(const Eigen::Matrix2cd& u, std::uint32_t q) {
  // rho <- rho u^T acting on column pairs of each row, i.e. the row vector is
  // updated by u as a column vector.
  const std::uint64_t d = dim();
  const std::uint64_t stride = std::uint64_t{1} << q;
  const std::uint64_t low = stride - 1;
  for (std::uint64_t r = 0; r < d; ++r) {
    cplx* row = data_.data() + r * d;
    for (std::uint64_t i = 0; i < d / 2; ++i) {
      const std::uint64_t s = ((i >> q) << (q + 1)) | (i & low);
      const cplx a0 = row[s], a1 = row[s + stride];
      row[s] = u(0, 0) * a0 + u(0, 1) * a1;
      row[s + stride] = u(1, 0) * a0 + u(1, 1) * a1;
    }
  }
}

void DensityMatrix::left_2q(const Eigen::Matrix4cd& u, std::uint32_t p,
                            std::uint32_t q) {
  Eigen::Matrix4cd m = u;
  if (p > q) {
    std::swap(p, q);
    m.row(1).swap(m.row(2));
    m.col(1).swap(m.col(2));
  }
  const std::uint64_t d = dim();
  const std::uint64_t sp = std::uint64_t{1} << p;
  const std::uint64_t sq = std::uint64_t{1} << q;
  const std::uint64_t low = sp - 1;
  const std::uint64_t mid_mask = (std::uint64_t{1} << (q - p - 1)) - 1;
  for (std::uint64_t i = 0; i < d / 4; ++i) {
    const std::uint64_t mid = (i >> p) & mid_mask;
    const std::uint64_t s =
        ((i >> (q - 1)) << (q + 1)) | (mid << (p + 1)) | (i & low);
    const std::uint64_t rows[4] = {s * d, (s + sp) * d, (s + sq) * d,
                                   (s + sp + sq) * d};
    for (std::uint64_t c = 0; c < d; ++c) {
      cplx a[4] = {data_[rows[0] + c], data_[rows[1] + c], data_[rows[2] + c],
                   data_[rows[3] + c]};
      for (int r = 0; r < 4; ++r) {
        data_[rows[r] + c] =
            m(r, 0) * a[0] + m(r, 1) * a[1] + m(r, 2) * a[2] + m(r, 3) * a[3];
      }
    }
  }
}

void DensityMatrix::right_2q(const Eigen::Matrix4cd& u, std::uint32_t p,
                             std::uint32_t q) {
  Eigen::Matrix4cd m = u;
  if (p > q) {
    std::swap(p, q);
    m.row(1).swap(m.row(2));
    m.col(1).swap(m.col(2));
  }
  const std::uint64_t d = dim();
  const std::uint64_t sp = std::uint64_t{1} << p;
  const std::uint64_t sq = std::uint64_t{1} << q;
  const std::uint64_t low = sp - 1;
  const std::uint64_t mid_mask = (std::uint64_t{1} << (q - p - 1)) - 1;
  for (std::uint64_t r = 0; r < d; ++r) {
    cplx* row = data_.data() + r * d;
    for (std::uint64_t i = 0; i < d / 4; ++i) {
      const std::uint64_t mid = (i >> p) & mid_mask;
      const std::uint64_t s =
          ((i >> (q - 1)) << (q + 1)) | (mid << (p + 1)) | (i & low);
      cplx a[4] = {row[s], row[s + sp], row[s + sq], row[s + sp + sq]};
      cplx b[4];
      for (int k = 0; k < 4; ++k) {
        b[k] =
            m(k, 0) * a[0] + m(k, 1) * a[1] + m(k, 2) * a[2] + m(k, 3) * a[3];
      }
      row[s] = b[0];
      row[s + sp] = b[1];
      row[s + sq] = b[2];
      row[s + sp + sq] = b[3];
    }
  }
}

void DensityMatrix::conjugate_1q(const Eigen::Matrix2cd& u, std::uint32_t q) {
  left_1q(u, q);
  right_1q(u.conjugate(), q);  // right-multiplication by u^dag
}

void DensityMatrix::conjugate_2q(const Eigen::Matrix4cd& u, std::uint32_t p,
                                 std::uint32_t q) {
  left_2q(u, p, q);
  right_2q(u.conjugate(), p, q);
}

void DensityMatrix::apply_gate(const Gate& g) {
  for (int i = 0; i < g.arity(); ++i) {
    if (g.targets[i] >= num_qubits_) {
      throw ValidationError("dm.qubit_out_of_range",
                            "gate target exceeds register size");
    }
  }
  if (g.arity() == 1) {
    conjugate_1q(gate_matrix_1q(g), g.targets[0]);
  } else {
    conjugate_2q(gate_matrix_2q(g), g.targets[0], g.targets[1]);
  }
}

void DensityMatrix::apply_channel(const std::vector<Eigen::MatrixXcd>& kraus,
                                  std::uint32_t a, std::uint32_t b) {
  const std::vector<cplx> input = data_;
  std::vector<cplx> accum(data_.size(), cplx(0.0, 0.0));
  for (const auto& k : kraus) {
    data_ = input;
    if (k.rows() == 2) {
      conjugate_1q(k, a);
    } else {
      conjugate_2q(k, a, b);
    }
    for (std::size_t i = 0; i < data_.size(); ++i) accum[i] += data_[i];
  }
  data_ = std::move(accum);
}

int KrausChannel::arity() const {
  return ops.empty() || ops[0].rows() == 2 ? 1 : 2;
}

KrausChannel make_channel(std::vector<Eigen::MatrixXcd> kraus) {
  if (kraus.empty()) {
    throw ValidationError("noise.empty_channel", "channel needs Kraus terms");
  }
  const Eigen::Index d = kraus[0].rows();
  if (d != 2 && d != 4) {
    throw ValidationError("noise.bad_arity", "Kraus matrices must be 2x2 or 4x4");
  }
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& k : kraus) {
    if (k.rows() != d || k.cols() != d) {
      throw ValidationError("noise.bad_arity", "mixed Kraus matrix sizes");
    }
    sum += k.adjoint() * k;
  }
  if ((sum - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff() > kTol) {
    throw ValidationError("noise.not_trace_preserving",
                          "Kraus terms must satisfy sum K^dag K = I");
  }
  return KrausChannel{std::move(kraus)};
}

KrausChannel depolarizing_1q(double p) {
  if (p < 0.0 || p > 1.0) {
    throw ValidationError("noise.bad_probability", "p must be in [0, 1]");
  }
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  std::vector<Eigen::MatrixXcd> ks;
  ks.push_back(std::sqrt(1.0 - 0.75 * p) * id);
  ks.push_back(std::sqrt(p / 4.0) * pauli_x());
  ks.push_back(std::sqrt(p / 4.0) * pauli_y());
  ks.push_back(std::sqrt(p / 4.0) * pauli_z());
  return make_channel(std::move(ks));
}

KrausChannel depolarizing_2q(double p) {
  if (p < 0.0 || p > 1.0) {
    throw ValidationError("noise.bad_probability", "p must be in [0, 1]");
  }
  const Eigen::Matrix2cd singles[4] = {Eigen::Matrix2cd::Identity(), pauli_x(),
                                       pauli_y(), pauli_z()};
  std::vector<Eigen::MatrixXcd> ks;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      // Sub-index bit(p) + 2*bit(q): first target varies fastest.
      Eigen::Matrix4cd k;
      for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
          k(r, c) = singles[a](r & 1, c & 1) * singles[b](r >> 1, c >> 1);
        }
      }
      const double w = (a == 0 && b == 0) ? 1.0 - 15.0 * p / 16.0 : p / 16.0;
      ks.push_back(std::sqrt(w) * k);
    }
  }
  return make_channel(std::move(ks));
}

KrausChannel amplitude_damping(double gamma) {
  if (gamma < 0.0 || gamma > 1.0) {
    throw ValidationError("noise.bad_probability", "gamma must be in [0, 1]");
  }
  Eigen::Matrix2cd k0, k1;
  k0 << 1, 0, 0, std::sqrt(1.0 - gamma);
  k1 << 0, std::sqrt(gamma), 0, 0;
  return make_channel({k0, k1});
}

KrausChannel bit_flip(double p) {
  if (p < 0.0 || p > 1.0) {
    throw ValidationError("noise.bad_probability", "p must be in [0, 1]");
  }
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  return make_channel({std::sqrt(1.0 - p) * id, std::sqrt(p) * pauli_x()});
}

KrausChannel phase_flip(double p) {
  if (p < 0.0 || p > 1.0) {
    throw ValidationError("noise.bad_probability", "p must be in [0, 1]");
  }
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  return make_channel({std::sqrt(1.0 - p) * id, std::sqrt(p) * pauli_z()});
}

void NoiseModel::attach(GateKind kind, KrausChannel channel) {
  if (channel.arity() != gate_arity(kind)) {
    throw ValidationError("noise.arity_mismatch",
                          "channel arity must match the gate kind");
  }
  channels_[kind] = std::move(channel);
}

const KrausChannel* NoiseModel::channel_for(GateKind kind) const {
  const auto it = channels_.find(kind);
  return it == channels_.end() ? nullptr : &it->second;
}

DensityMatrix run_noisy(const Circuit& c, const NoiseModel& nm) {
  return run_noisy(c, nm, DensityMatrix(c.num_qubits));
}

DensityMatrix run_noisy(const Circuit& c, const NoiseModel& nm,
                        const DensityMatrix& init) {
  if (c.num_qubits > kMaxQubits) {
    throw ValidationError("dm.oversize",
                          "density-matrix simulation capped at 13 qubits");
  }
  if (init.num_qubits() != c.num_qubits) {
    throw ValidationError("dm.size_mismatch",
                          "initial state does not match circuit width");
  }
  DensityMatrix rho = init;
  for (const auto& g : c.gates) {
    rho.apply_gate(g);
    if (const KrausChannel* ch = nm.channel_for(g.kind)) {
      rho.apply_channel(ch->ops, g.targets[0], g.targets[1]);
    }
  }
  return rho;
}

double expectation_dm(const DensityMatrix& rho, const QubitOperator& op) {
  if (op.num_qubits() > rho.num_qubits()) {
    throw ValidationError("dm.size_mismatch",
                          "operator acts outside the register");
  }
  if (!op.is_hermitian()) {
    throw ValidationError("operator.non_hermitian",
                          "expectation needs a Hermitian operator");
  }
  const std::uint64_t d = rho.dim();
  cplx total = 0.0;
  for (const auto& term : op.terms()) {
    const dense::PauliAction act = dense::pauli_action(term);
    cplx val = 0.0;
    for (std::uint64_t i = 0; i < d; ++i) {
      val += rho.entry(i, i ^ act.flip_mask) * act.phase(i);
    }
    total += term.coeff() * val;
  }
  return total.real();
}

}  // namespace qcw
