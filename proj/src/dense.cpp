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

#include "qcw/dense.hpp"

#include <bit>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "qcw/errors.hpp"

namespace qcw::dense {

namespace {

const cplx kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

cplx PauliAction::phase(std::uint64_t basis_index) const {
  const int sign = std::popcount(basis_index & phase_mask) % 2 == 0 ? 1 : -1;
  return static_cast<double>(sign) * kIPowers[y_count % 4];
}

PauliAction pauli_action(const PauliTerm& term) {
  PauliAction a;
  for (const auto& f : term.factors()) {
    if (f.qubit >= 64) {
      throw ValidationError("pauli.qubit_too_large",
                            "basis-action masks support qubits below 64");
    }
    const std::uint64_t bit = std::uint64_t{1} << f.qubit;
    if (f.axis == Axis::X || f.axis == Axis::Y) a.flip_mask |= bit;
    if (f.axis == Axis::Z || f.axis == Axis::Y) a.phase_mask |= bit;
    if (f.axis == Axis::Y) ++a.y_count;
  }
  return a;
}

Eigen::MatrixXcd pauli_matrix(const PauliTerm& term,
                              std::uint32_t num_qubits) {
  if (term.min_qubits() > num_qubits) {
    throw ValidationError("pauli.qubit_out_of_range",
                          "term acts outside the register");
  }
  const std::uint64_t dim = std::uint64_t{1} << num_qubits;
  const PauliAction act = pauli_action(term);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::uint64_t i = 0; i < dim; ++i) {
    m(i ^ act.flip_mask, i) = term.coeff() * act.phase(i);
  }
  return m;
}

Eigen::MatrixXcd operator_matrix(const QubitOperator& op) {
  const std::uint64_t dim = std::uint64_t{1} << op.num_qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& term : op.terms()) {
    const PauliAction act = pauli_action(term);
    for (std::uint64_t i = 0; i < dim; ++i) {
      m(i ^ act.flip_mask, i) += term.coeff() * act.phase(i);
    }
  }
  return m;
}

Eigen::MatrixXcd evolution_operator(const Eigen::MatrixXcd& h, double t) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  Eigen::VectorXcd phases(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    phases(i) = std::exp(cplx(0.0, -ev(i) * t));
  }
  return solver.eigenvectors() * phases.asDiagonal() *
         solver.eigenvectors().adjoint();
}

double phase_aligned_distance(const Eigen::MatrixXcd& a,
                              const Eigen::MatrixXcd& b) {
  const cplx overlap = (b.adjoint() * a).trace();
  const cplx phase = std::abs(overlap) > 1e-300
                         ? overlap / std::abs(overlap)
                         : cplx(1.0, 0.0);
  const Eigen::MatrixXcd diff = a / phase - b;
  return Eigen::JacobiSVD<Eigen::MatrixXcd>(diff).singularValues()(0);
}

double trace_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a - b,
                                                         Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

double unitarity_defect(const Eigen::MatrixXcd& u) {
  const Eigen::MatrixXcd d =
      u.adjoint() * u -
      Eigen::MatrixXcd::Identity(u.rows(), u.cols());
  return d.cwiseAbs().maxCoeff();
}

}  // namespace qcw::dense
