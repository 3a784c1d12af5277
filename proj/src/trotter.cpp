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

#include "qcw/trotter.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qcw/dense.hpp"
#include "qcw/errors.hpp"

namespace qcw {

namespace {

constexpr std::uint64_t kMaxSteps = std::uint64_t{1} << 62;
constexpr std::size_t kMaxCommutatorTerms = 2000;

void validate_hamiltonian(const QubitOperator& h) {
  if (!h.is_hermitian()) {
    throw ValidationError("trotter.complex_coeffs",
                          "product formulas need real coefficients");
  }
}

void validate_order(int order) {
  if (order != 1 && order != 2) {
    throw ValidationError("trotter.bad_order", "order must be 1 or 2");
  }
}

double l1_step_bound(double lambda_t, std::uint64_t n, int order) {
  const double per_step = lambda_t / static_cast<double>(n);
  if (order == 1) {
    return lambda_t * per_step / 2.0 * std::exp(per_step);
  }
  return lambda_t * per_step * per_step / 6.0 * std::exp(per_step);
}

// exp(-i theta/2 P) acting on the left of m: cos(theta/2) m - i sin(theta/2)
// (P m), with P m computed from the row permutation/phase of the string.
void apply_term_exponential(Eigen::MatrixXcd& m, const PauliTerm& term,
                            double theta) {
  const std::uint64_t dim = m.rows();
  const double c = std::cos(theta / 2.0);
  const cplx s = cplx(0.0, -1.0) * std::sin(theta / 2.0);
  if (term.is_identity()) {
    m *= c + s;
    return;
  }
  const dense::PauliAction act = dense::pauli_action(term);
  Eigen::MatrixXcd pm(dim, m.cols());
  for (std::uint64_t i = 0; i < dim; ++i) {
    pm.row(i ^ act.flip_mask) = act.phase(i) * m.row(i);
  }
  m = c * m + s * pm;
}

}  // namespace

TrotterPlan make_plan(const QubitOperator& h, double t, int order,
                      std::uint64_t steps) {
  std::vector<std::size_t> order_idx(h.size());
  std::iota(order_idx.begin(), order_idx.end(), 0);
  std::stable_sort(order_idx.begin(), order_idx.end(),
                   [&](std::size_t a, std::size_t b) {
                     return std::abs(h.terms()[a].coeff()) >
                            std::abs(h.terms()[b].coeff());
                   });
  return make_plan(h, t, order, steps, std::move(order_idx));
}

TrotterPlan make_plan(const QubitOperator& h, double t, int order,
                      std::uint64_t steps,
                      std::vector<std::size_t> term_order) {
  validate_hamiltonian(h);
  validate_order(order);
  if (steps < 1) {
    throw ValidationError("trotter.bad_steps", "need at least one step");
  }
  std::vector<std::size_t> sorted = term_order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i || sorted.size() != h.size()) {
      throw ValidationError("trotter.bad_term_order",
                            "term order must be a permutation of the terms");
    }
  }
  return TrotterPlan{h, t, order, steps, std::move(term_order)};
}

Circuit trotter_circuit(const TrotterPlan& plan) {
  validate_hamiltonian(plan.hamiltonian);
  validate_order(plan.order);
  const auto& terms = plan.hamiltonian.terms();
  Circuit c(plan.hamiltonian.num_qubits());
  const double dt = plan.t / static_cast<double>(plan.steps);

  const auto emit = [&](std::size_t idx, double step_fraction) {
    const PauliTerm& term = terms[idx];
    if (term.is_identity()) return;  // global phase only
    const double theta = 2.0 * term.coeff().real() * dt * step_fraction;
    c.append(pauli_rotation_circuit(term, theta, c.num_qubits));
  };

  for (std::uint64_t step = 0; step < plan.steps; ++step) {
    if (plan.order == 1) {
      for (std::size_t idx : plan.term_order) emit(idx, 1.0);
    } else {
      for (std::size_t idx : plan.term_order) emit(idx, 0.5);
      for (auto it = plan.term_order.rbegin(); it != plan.term_order.rend();
           ++it) {
        emit(*it, 0.5);
      }
    }
  }
  return c;
}

Eigen::MatrixXcd product_formula_unitary(const TrotterPlan& plan) {
  validate_hamiltonian(plan.hamiltonian);
  validate_order(plan.order);
  const auto& terms = plan.hamiltonian.terms();
  const std::uint64_t dim = std::uint64_t{1}
                            << plan.hamiltonian.num_qubits();
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  const double dt = plan.t / static_cast<double>(plan.steps);

  const auto emit = [&](std::size_t idx, double step_fraction) {
    const double theta = 2.0 * terms[idx].coeff().real() * dt * step_fraction;
    apply_term_exponential(u, terms[idx], theta);
  };
  for (std::uint64_t step = 0; step < plan.steps; ++step) {
    if (plan.order == 1) {
      for (std::size_t idx : plan.term_order) emit(idx, 1.0);
    } else {
      for (std::size_t idx : plan.term_order) emit(idx, 0.5);
      for (auto it = plan.term_order.rbegin(); it != plan.term_order.rend();
           ++it) {
        emit(*it, 0.5);
      }
    }
  }
  return u;
}

bool all_terms_commute(const QubitOperator& h) {
  const auto& terms = h.terms();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      if (!commutes(terms[i], terms[j])) return false;
    }
  }
  return true;
}

double l1_error_bound(const QubitOperator& h, double t, std::uint64_t steps,
                      int order) {
  validate_hamiltonian(h);
  validate_order(order);
  if (steps < 1) {
    throw ValidationError("trotter.bad_steps", "need at least one step");
  }
  if (all_terms_commute(h)) return 0.0;
  return l1_step_bound(l1_norm(h) * std::abs(t), steps, order);
}

double commutator_l1_sum(const QubitOperator& h) {
  validate_hamiltonian(h);
  const auto& terms = h.terms();
  if (terms.size() > kMaxCommutatorTerms) {
    throw ValidationError("trotter.too_many_terms",
                          "commutator bound capped at 2000 terms");
  }
  double c_sum = 0.0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      if (commutes(terms[i], terms[j])) continue;
      // [P_i, P_j] = 2 P_i P_j for anticommuting strings.
      const PauliTerm prod = multiply(terms[i], terms[j]);
      c_sum += 2.0 * std::abs(prod.coeff());
    }
  }
  return c_sum;
}

double commutator_error_bound(const QubitOperator& h, double t,
                              std::uint64_t steps) {
  if (steps < 1) {
    throw ValidationError("trotter.bad_steps", "need at least one step");
  }
  return t * t * commutator_l1_sum(h) / (2.0 * static_cast<double>(steps));
}

std::uint64_t steps_for_error_l1(const QubitOperator& h, double t, double eps,
                                 int order) {
  validate_hamiltonian(h);
  validate_order(order);
  if (eps <= 0.0) {
    throw ValidationError("trotter.bad_eps", "error budget must be positive");
  }
  const double lambda_t = l1_norm(h) * std::abs(t);
  if (lambda_t == 0.0 || all_terms_commute(h)) return 1;

  std::uint64_t hi = 1;
  while (l1_step_bound(lambda_t, hi, order) > eps) {
    if (hi >= kMaxSteps) {
      throw ValidationError("trotter.unreachable_eps",
                            "step bound does not reach the requested error");
    }
    hi *= 2;
  }
  std::uint64_t lo = hi / 2 + 1;
  if (hi == 1) return 1;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (l1_step_bound(lambda_t, mid, order) <= eps) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return hi;
}

std::uint64_t steps_for_error_commutator(const QubitOperator& h, double t,
                                         double eps) {
  validate_hamiltonian(h);
  if (eps <= 0.0) {
    throw ValidationError("trotter.bad_eps", "error budget must be positive");
  }
  const double c_sum = commutator_l1_sum(h);
  if (c_sum == 0.0 || t == 0.0) return 1;
  const double n = std::ceil(t * t * c_sum / (2.0 * eps));
  if (n >= static_cast<double>(kMaxSteps)) {
    throw ValidationError("trotter.unreachable_eps",
                          "step bound does not reach the requested error");
  }
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(n));
}

double empirical_error(const QubitOperator& h, double t, std::uint64_t steps,
                       int order) {
  if (h.num_qubits() > 10) {
    throw ValidationError("trotter.oversize",
                          "empirical error capped at 10 qubits");
  }
  const TrotterPlan plan = make_plan(h, t, order, steps);
  const Eigen::MatrixXcd approx = product_formula_unitary(plan);
  const Eigen::MatrixXcd exact =
      dense::evolution_operator(dense::operator_matrix(h), t);
  return dense::phase_aligned_distance(approx, exact);
}

}  // namespace qcw
