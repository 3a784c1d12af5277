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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qcw/dense.hpp"
#include "qcw/errors.hpp"
#include "qcw/lattice.hpp"

namespace qcw {
namespace {

QubitOperator x_plus_z() {
  QubitOperator h(1);
  h.add(PauliTerm::parse("X0", 1.0));
  h.add(PauliTerm::parse("Z0", 1.0));
  return h;
}

// Two bonds of a spin chain; terms across bonds do not commute.
QubitOperator heisenberg_three_site() {
  QubitOperator h(3);
  for (const auto& [a, b] : {std::pair{0, 1}, std::pair{1, 2}}) {
    for (Axis ax : {Axis::X, Axis::Y, Axis::Z}) {
      h.add(PauliTerm(0.25, {{static_cast<std::uint32_t>(a), ax},
                             {static_cast<std::uint32_t>(b), ax}}));
    }
  }
  return h;
}

TEST(TrotterCircuit, CommutingHamiltonianIsExactInOneStep) {
  QubitOperator h(2);
  h.add(PauliTerm::parse("Z0", 0.7));
  h.add(PauliTerm::parse("Z1", -0.4));
  h.add(PauliTerm::parse("Z0 Z1", 0.9));
  EXPECT_NEAR(empirical_error(h, 1.3, 1, 1), 0.0, 1e-9);
}

TEST(TrotterCircuit, FirstOrderErrorBelowL1Bound) {
  const QubitOperator h = x_plus_z();
  const double t = 1.0;
  const std::uint64_t n = 100;
  const double err = empirical_error(h, t, n, 1);
  const double lambda_t = l1_norm(h) * t;
  const double bound = lambda_t * lambda_t / (2.0 * n) * std::exp(lambda_t / n);
  EXPECT_LE(err, bound);
  EXPECT_GT(err, 0.0);
}

TEST(TrotterCircuit, SecondOrderStepIsPalindromic) {
  QubitOperator h(2);
  h.add(PauliTerm::parse("X0", 0.8));
  h.add(PauliTerm::parse("Z1", 0.5));
  const Circuit c = trotter_circuit(make_plan(h, 0.3, 2, 1));
  std::vector<std::pair<std::uint32_t, double>> rotations;
  for (const auto& g : c.gates) {
    if (g.kind == GateKind::RZ) rotations.push_back({g.targets[0], g.theta});
  }
  ASSERT_EQ(rotations.size(), 4u);
  EXPECT_EQ(rotations[0], rotations[3]);
  EXPECT_EQ(rotations[1], rotations[2]);
}

TEST(TrotterCircuit, IdentityTermsOnlyShiftPhase) {
  QubitOperator h(1);
  h.add(PauliTerm::identity(2.5));
  h.add(PauliTerm::parse("Z0", 1.0));
  const Circuit c = trotter_circuit(make_plan(h, 0.9, 1, 4));
  for (const auto& g : c.gates) EXPECT_EQ(g.kind, GateKind::RZ);
  EXPECT_NEAR(empirical_error(h, 0.9, 1, 1), 0.0, 1e-9);
}

TEST(TrotterCircuit, RejectsComplexCoefficients) {
  QubitOperator h(1);
  h.add(PauliTerm::parse("X0", cplx(0, 1)));
  EXPECT_THROW(trotter_circuit(make_plan(h, 1.0, 1, 1)), ValidationError);
}

TEST(ProductFormula, MatchesCompiledCircuitUpToPhase) {
  std::mt19937_64 rng(44);
  const QubitOperator h = oracle::random_hermitian_operator(rng, 3, 5);
  for (int order : {1, 2}) {
    const TrotterPlan plan = make_plan(h, 0.45, order, 3);
    const Eigen::MatrixXcd direct = product_formula_unitary(plan);
    const Eigen::MatrixXcd compiled = to_matrix(trotter_circuit(plan));
    EXPECT_LT(dense::phase_aligned_distance(compiled, direct), 1e-11);
  }
}

TEST(StepsForError, CommutingAndZeroTimeShortCircuit) {
  QubitOperator h(2);
  h.add(PauliTerm::parse("Z0", 1.0));
  h.add(PauliTerm::parse("Z1", 2.0));
  EXPECT_EQ(steps_for_error_l1(h, 5.0, 1e-8, 1), 1u);
  EXPECT_EQ(steps_for_error_l1(x_plus_z(), 0.0, 1e-8, 2), 1u);
}

TEST(StepsForError, SufficientForEmpiricalError) {
  const QubitOperator h = x_plus_z();
  for (int order : {1, 2}) {
    const double eps = 1e-3;
    const std::uint64_t n = steps_for_error_l1(h, 1.0, eps, order);
    EXPECT_LE(empirical_error(h, 1.0, n, order), eps);
  }
}

TEST(StepsForError, ReturnsTheSmallestSufficientCount) {
  const QubitOperator h = x_plus_z();
  for (int order : {1, 2}) {
    const double eps = 3e-4;
    const std::uint64_t n = steps_for_error_l1(h, 1.3, eps, order);
    EXPECT_LE(l1_error_bound(h, 1.3, n, order), eps);
    ASSERT_GT(n, 1u);
    EXPECT_GT(l1_error_bound(h, 1.3, n - 1, order), eps);
  }
  const double eps = 7e-4;  // keeps t^2 C / (2 eps) away from an integer
  const std::uint64_t n = steps_for_error_commutator(h, 1.3, eps);
  EXPECT_LE(commutator_error_bound(h, 1.3, n), eps);
  EXPECT_GT(commutator_error_bound(h, 1.3, n - 1), eps);
  EXPECT_NEAR(commutator_l1_sum(h), 2.0, 1e-12);
}

TEST(StepsForError, MonotoneInEps) {
  const QubitOperator h = x_plus_z();
  std::uint64_t prev = 0;
  for (double eps : {1e-1, 1e-2, 1e-3, 1e-4}) {
    const std::uint64_t n = steps_for_error_l1(h, 1.0, eps, 1);
    EXPECT_GE(n, prev);
    prev = n;
  }
  EXPECT_THROW(steps_for_error_l1(h, 1.0, 0.0, 1), ValidationError);
  EXPECT_THROW(steps_for_error_l1(h, 1.0, 1e-3, 3), ValidationError);
}

TEST(CommutatorBound, ExamplesAndComparison) {
  QubitOperator all_z(2);
  all_z.add(PauliTerm::parse("Z0", 1.0));
  all_z.add(PauliTerm::parse("Z0 Z1", -2.0));
  EXPECT_EQ(steps_for_error_commutator(all_z, 3.0, 1e-6), 1u);

  // [X, Z] has l1 norm 2, so n = ceil(t^2 * 2 / (2 eps)) = ceil(t^2/eps).
  const double t = 1.7, eps = 1e-3;
  EXPECT_EQ(steps_for_error_commutator(x_plus_z(), t, eps),
            static_cast<std::uint64_t>(std::ceil(t * t / eps)));

  // Many commuting pairs: the commutator count beats the l1 count.
  const LatticeSpec ring{LatticeKind::Ring, {6}, {true}};
  const QubitOperator heis = heisenberg_model(ring, 1.0);
  const std::uint64_t n_comm = steps_for_error_commutator(heis, 1.0, 1e-3);
  const std::uint64_t n_l1 = steps_for_error_l1(heis, 1.0, 1e-3, 1);
  EXPECT_LT(n_comm, n_l1);

  const std::uint64_t n_suff = steps_for_error_commutator(heis, 0.5, 1e-2);
  EXPECT_LE(empirical_error(heis, 0.5, n_suff, 1), 1e-2);
}

TEST(EmpiricalError, OrderScalingRatios) {
  const QubitOperator h = x_plus_z();
  const double t = 1.0;
  for (int order : {1, 2}) {
    const double e1 = empirical_error(h, t, 64, order);
    const double e2 = empirical_error(h, t, 128, order);
    const double exponent = std::log2(e1 / e2);
    if (order == 1) {
      EXPECT_GT(exponent, 0.75);
      EXPECT_LT(exponent, 1.25);
    } else {
      EXPECT_GT(exponent, 1.75);
      EXPECT_LT(exponent, 2.25);
    }
  }
}

TEST(EmpiricalError, FirstOrderScalingSurvivesTermReordering) {
  const QubitOperator h = heisenberg_three_site();
  std::mt19937_64 rng(48);
  std::vector<std::size_t> order(h.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(order.begin(), order.end(), rng);
    const TrotterPlan p64 = make_plan(h, 1.0, 1, 64, order);
    const TrotterPlan p128 = make_plan(h, 1.0, 1, 128, order);
    const double e64 = dense::phase_aligned_distance(
        product_formula_unitary(p64),
        dense::evolution_operator(dense::operator_matrix(h), 1.0));
    const double e128 = dense::phase_aligned_distance(
        product_formula_unitary(p128),
        dense::evolution_operator(dense::operator_matrix(h), 1.0));
    const double exponent = std::log2(e64 / e128);
    EXPECT_GT(exponent, 0.75);
    EXPECT_LT(exponent, 1.25);
  }
}

TEST(MakePlan, ValidatesTermOrder) {
  const QubitOperator h = x_plus_z();
  EXPECT_THROW(make_plan(h, 1.0, 1, 1, {0, 0}), ValidationError);
  EXPECT_THROW(make_plan(h, 1.0, 1, 0), ValidationError);
  EXPECT_NO_THROW(make_plan(h, 1.0, 2, 3, {1, 0}));
}

}  // namespace
}  // namespace qcw
