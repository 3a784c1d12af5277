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

#include "qcw/circuit.hpp"

#include <algorithm>
#include <cmath>

#include "qcw/dense.hpp"
#include "qcw/errors.hpp"

namespace qcw {

namespace {

constexpr double kUnitaryTol = 1e-10;

void check_unitary(const Eigen::MatrixXcd& u) {
  if (dense::unitarity_defect(u) > kUnitaryTol) {
    throw ValidationError("gate.non_unitary",
                          "explicit gate matrix is not unitary");
  }
}

std::vector<cplx> flatten(const Eigen::MatrixXcd& u) {
  std::vector<cplx> out;
  out.reserve(u.size());
  for (Eigen::Index r = 0; r < u.rows(); ++r) {
    for (Eigen::Index c = 0; c < u.cols(); ++c) out.push_back(u(r, c));
  }
  return out;
}

}  // namespace

std::string gate_kind_name(GateKind k) {
  switch (k) {
    case GateKind::X:
      return "X";
    case GateKind::SX:
      return "SX";
    case GateKind::RZ:
      return "RZ";
    case GateKind::H:
      return "H";
    case GateKind::S:
      return "S";
    case GateKind::Sdg:
      return "Sdg";
    case GateKind::CX:
      return "CX";
    case GateKind::RZZ:
      return "RZZ";
    case GateKind::U1q:
      return "U1q";
    case GateKind::U2q:
      return "U2q";
  }
  return "?";
}

GateKind gate_kind_from_name(const std::string& name) {
  static const std::pair<const char*, GateKind> table[] = {
      {"X", GateKind::X},     {"SX", GateKind::SX},   {"RZ", GateKind::RZ},
      {"H", GateKind::H},     {"S", GateKind::S},     {"Sdg", GateKind::Sdg},
      {"CX", GateKind::CX},   {"RZZ", GateKind::RZZ}, {"U1q", GateKind::U1q},
      {"U2q", GateKind::U2q}};
  for (const auto& [n, k] : table) {
    if (name == n) return k;
  }
  throw ValidationError("gate.unknown_kind", "unknown gate kind: " + name);
}

int gate_arity(GateKind k) {
  switch (k) {
    case GateKind::CX:
    case GateKind::RZZ:
    case GateKind::U2q:
      return 2;
    default:
      return 1;
  }
}

Gate Gate::x(std::uint32_t q) { return Gate{GateKind::X, {q, 0}}; }
Gate Gate::sx(std::uint32_t q) { return Gate{GateKind::SX, {q, 0}}; }
Gate Gate::rz(std::uint32_t q, double theta) {
  return Gate{GateKind::RZ, {q, 0}, theta};
}
Gate Gate::h(std::uint32_t q) { return Gate{GateKind::H, {q, 0}}; }
Gate Gate::s(std::uint32_t q) { return Gate{GateKind::S, {q, 0}}; }
Gate Gate::sdg(std::uint32_t q) { return Gate{GateKind::Sdg, {q, 0}}; }

Gate Gate::cx(std::uint32_t control, std::uint32_t target) {
  if (control == target) {
    throw ValidationError("gate.duplicate_target",
                          "two-qubit gate targets must be distinct");
  }
  return Gate{GateKind::CX, {control, target}};
}

Gate Gate::rzz(std::uint32_t a, std::uint32_t b, double theta) {
  if (a == b) {
    throw ValidationError("gate.duplicate_target",
                          "two-qubit gate targets must be distinct");
  }
  return Gate{GateKind::RZZ, {a, b}, theta};
}

Gate Gate::u1q(std::uint32_t q, const Eigen::Matrix2cd& u) {
  check_unitary(u);
  return Gate{GateKind::U1q, {q, 0}, 0.0, flatten(u)};
}

Gate Gate::u2q(std::uint32_t a, std::uint32_t b, const Eigen::Matrix4cd& u) {
  if (a == b) {
    throw ValidationError("gate.duplicate_target",
                          "two-qubit gate targets must be distinct");
  }
  check_unitary(u);
  return Gate{GateKind::U2q, {a, b}, 0.0, flatten(u)};
}

Gate Gate::inverse() const {
  switch (kind) {
    case GateKind::X:
    case GateKind::H:
    case GateKind::CX:
      return *this;
    case GateKind::S:
      return Gate{GateKind::Sdg, targets};
    case GateKind::Sdg:
      return Gate{GateKind::S, targets};
    case GateKind::RZ:
      return Gate{GateKind::RZ, targets, -theta};
    case GateKind::RZZ:
      return Gate{GateKind::RZZ, targets, -theta};
    case GateKind::SX:
      return Gate::u1q(targets[0], gate_matrix_1q(*this).adjoint());
    case GateKind::U1q:
      return Gate::u1q(targets[0], gate_matrix_1q(*this).adjoint());
    case GateKind::U2q:
      return Gate::u2q(targets[0], targets[1],
                       gate_matrix_2q(*this).adjoint());
  }
  throw ValidationError("gate.unknown_kind", "cannot invert unknown gate");
}

Eigen::Matrix2cd gate_matrix_1q(const Gate& g) {
  Eigen::Matrix2cd m;
  const cplx i(0.0, 1.0);
  switch (g.kind) {
    case GateKind::X:
      m << 0, 1, 1, 0;
      return m;
    case GateKind::SX:
      m << 0.5 * cplx(1, 1), 0.5 * cplx(1, -1), 0.5 * cplx(1, -1),
          0.5 * cplx(1, 1);
      return m;
    case GateKind::RZ:
      m << std::exp(-i * (g.theta / 2)), 0, 0, std::exp(i * (g.theta / 2));
      return m;
    case GateKind::H:
      m << 1, 1, 1, -1;
      return m / std::sqrt(2.0);
    case GateKind::S:
      m << 1, 0, 0, i;
      return m;
    case GateKind::Sdg:
      m << 1, 0, 0, -i;
      return m;
    case GateKind::U1q:
      m << g.matrix[0], g.matrix[1], g.matrix[2], g.matrix[3];
      return m;
    default:
      throw ValidationError("gate.arity_mismatch",
                            "requested a 2x2 matrix for a two-qubit gate");
  }
}

Eigen::Matrix4cd gate_matrix_2q(const Gate& g) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  const cplx i(0.0, 1.0);
  switch (g.kind) {
    case GateKind::CX:
      // Sub-index = bit(control) + 2*bit(target).
      m(0, 0) = 1;
      m(3, 1) = 1;
      m(2, 2) = 1;
      m(1, 3) = 1;
      return m;
    case GateKind::RZZ:
      m(0, 0) = std::exp(-i * (g.theta / 2));
      m(1, 1) = std::exp(i * (g.theta / 2));
      m(2, 2) = std::exp(i * (g.theta / 2));
      m(3, 3) = std::exp(-i * (g.theta / 2));
      return m;
    case GateKind::U2q:
      for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) m(r, c) = g.matrix[4 * r + c];
      }
      return m;
    default:
      throw ValidationError("gate.arity_mismatch",
                            "requested a 4x4 matrix for a one-qubit gate");
  }
}

void Circuit::append(Gate g) {
  for (int i = 0; i < g.arity(); ++i) {
    if (g.targets[i] >= num_qubits) {
      throw ValidationError("circuit.target_out_of_range",
                            "gate target exceeds register size");
    }
  }
  gates.push_back(std::move(g));
}

void Circuit::append(const Circuit& other) {
  for (const auto& g : other.gates) append(g);
}

Circuit adjoint(const Circuit& c) {
  Circuit out(c.num_qubits);
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    out.append(it->inverse());
  }
  return out;
}

Eigen::MatrixXcd to_matrix(const Circuit& c) {
  if (c.num_qubits > 10) {
    throw ValidationError("circuit.oversize",
                          "dense circuit matrices capped at 10 qubits");
  }
  const std::uint64_t dim = std::uint64_t{1} << c.num_qubits;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  for (const auto& g : c.gates) {
    Eigen::MatrixXcd embedded = Eigen::MatrixXcd::Zero(dim, dim);
    if (g.arity() == 1) {
      const Eigen::Matrix2cd m = gate_matrix_1q(g);
      const std::uint64_t bit = std::uint64_t{1} << g.targets[0];
      for (std::uint64_t col = 0; col < dim; ++col) {
        const int b = (col & bit) ? 1 : 0;
        embedded(col & ~bit, col) += m(0, b);
        embedded(col | bit, col) += m(1, b);
      }
    } else {
      const Eigen::Matrix4cd m = gate_matrix_2q(g);
      const std::uint64_t bp = std::uint64_t{1} << g.targets[0];
      const std::uint64_t bq = std::uint64_t{1} << g.targets[1];
      for (std::uint64_t col = 0; col < dim; ++col) {
        const int sub = ((col & bp) ? 1 : 0) + (((col & bq) ? 1 : 0) << 1);
        const std::uint64_t base = col & ~(bp | bq);
        for (int r = 0; r < 4; ++r) {
          const std::uint64_t row =
              base | ((r & 1) ? bp : 0) | ((r & 2) ? bq : 0);
          embedded(row, col) += m(r, sub);
        }
      }
    }
    u = embedded * u;
  }
  return u;
}

Circuit fold_global(const Circuit& c, std::uint64_t factor) {
  if (factor % 2 == 0 || factor < 1) {
    throw ValidationError("fold.even_factor", "fold factor must be odd");
  }
  Circuit out = c;
  const Circuit inv = adjoint(c);
  for (std::uint64_t k = 0; k < (factor - 1) / 2; ++k) {
    out.append(inv);
    out.append(c);
  }
  return out;
}

Circuit pauli_rotation_circuit(const PauliTerm& term, double theta,
                               std::uint32_t num_qubits) {
  if (term.is_identity()) {
    throw ValidationError("rotation.identity",
                          "Pauli rotation needs a nonempty string");
  }
  Circuit c(num_qubits);
  const auto& factors = term.factors();  // sorted ascending by qubit

  for (const auto& f : factors) {
    if (f.axis == Axis::X) {
      c.append(Gate::h(f.qubit));
    } else if (f.axis == Axis::Y) {
      c.append(Gate::sdg(f.qubit));
      c.append(Gate::h(f.qubit));
    }
  }
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    c.append(Gate::cx(factors[i].qubit, factors[i + 1].qubit));
  }
  c.append(Gate::rz(factors.back().qubit, theta));
  for (std::size_t i = factors.size() - 1; i-- > 0;) {
    c.append(Gate::cx(factors[i].qubit, factors[i + 1].qubit));
  }
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    if (it->axis == Axis::X) {
      c.append(Gate::h(it->qubit));
    } else if (it->axis == Axis::Y) {
      c.append(Gate::h(it->qubit));
      c.append(Gate::s(it->qubit));
    }
  }
  return c;
}

}  // namespace qcw
