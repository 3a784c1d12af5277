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

#include "qcw/measure.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qcw/dense.hpp"
#include "qcw/errors.hpp"
#include "qcw/lattice.hpp"

namespace qcw {
namespace {

TEST(BasisChange, DiagonalGroupNeedsNoGates) {
  EXPECT_EQ(basis_change({PauliTerm::parse("Z0")}, 1).size(), 0u);
}

TEST(BasisChange, XPairGetsHadamards) {
  const Circuit c = basis_change({PauliTerm::parse("X0 X1")}, 2);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.gates[0].kind, GateKind::H);
  EXPECT_EQ(c.gates[1].kind, GateKind::H);
}

TEST(BasisChange, ConjugationDiagonalizesRandomGroups) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 10; ++trial) {
    const QubitOperator op = oracle::random_hermitian_operator(rng, 4, 12);
    for (const auto& group : group_qubitwise_commuting(op)) {
      const Circuit bc = basis_change(group, 4);
      const Eigen::MatrixXcd b = to_matrix(bc);
      for (const auto& term : group) {
        const Eigen::MatrixXcd conj =
            b * oracle::kron_pauli_matrix(term, 4) * b.adjoint();
        Eigen::MatrixXcd off = conj;
        off.diagonal().setZero();
        EXPECT_LT(off.cwiseAbs().maxCoeff(), 1e-10);
      }
    }
  }
}

TEST(BasisChange, RejectsIncompatibleGroups) {
  EXPECT_THROW(
      basis_change({PauliTerm::parse("X0"), PauliTerm::parse("Z0")}, 1),
      ValidationError);
}

TEST(AllocateShots, EvenSplit) {
  std::vector<MeasurementGroup> groups(2);
  groups[0].terms = {PauliTerm::parse("Z0", 1.0)};
  groups[1].terms = {PauliTerm::parse("X0", 1.0)};
  allocate_shots(groups, 100, ShotStrategy::ProportionalL1);
  EXPECT_EQ(groups[0].shots, 50u);
  EXPECT_EQ(groups[1].shots, 50u);
}

TEST(AllocateShots, ProportionalWeights) {
  std::vector<MeasurementGroup> groups(2);
  groups[0].terms = {PauliTerm::parse("Z0", 3.0)};
  groups[1].terms = {PauliTerm::parse("X0", 1.0)};
  allocate_shots(groups, 8, ShotStrategy::ProportionalL1);
  EXPECT_EQ(groups[0].shots, 6u);
  EXPECT_EQ(groups[1].shots, 2u);
}

TEST(AllocateShots, LargestRemainderSumsExactly) {
  std::mt19937_64 rng(54);
  std::uniform_real_distribution<double> w(0.1, 3.0);
  std::vector<MeasurementGroup> groups(7);
  std::vector<double> weights;
  double wsum = 0.0;
  for (auto& g : groups) {
    const double weight = w(rng);
    weights.push_back(weight);
    wsum += weight;
    g.terms = {PauliTerm::parse("Z0", weight)};
  }
  const std::uint64_t total = 1000;
  allocate_shots(groups, total, ShotStrategy::ProportionalL1);
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    sum += groups[i].shots;
    const double exact = total * weights[i] / wsum;
    EXPECT_GE(groups[i].shots + 1, static_cast<std::uint64_t>(exact));
    EXPECT_LE(groups[i].shots, static_cast<std::uint64_t>(exact) + 1);
  }
  EXPECT_EQ(sum, total);

  allocate_shots(groups, 7, ShotStrategy::Uniform);
  for (const auto& g : groups) EXPECT_EQ(g.shots, 1u);
  EXPECT_THROW(allocate_shots(groups, 6, ShotStrategy::Uniform),
               ValidationError);
}

TEST(EstimateExpectation, DeterministicDiagonalCase) {
  QubitOperator op(1);
  op.add(PauliTerm::parse("Z0", 1.0));
  auto groups = make_measurement_groups(op);
  allocate_shots(groups, 100);
  const EstimateReport r = estimate_expectation(StateVec(1), op, groups, 5);
  EXPECT_EQ(r.mean, 1.0);
  EXPECT_EQ(r.stderr_, 0.0);
  EXPECT_EQ(r.total_shots, 100u);
}

TEST(EstimateExpectation, PlusStateXIsExact) {
  QubitOperator op(1);
  op.add(PauliTerm::parse("X0", 1.0));
  Circuit plus(1);
  plus.append(Gate::h(0));
  auto groups = make_measurement_groups(op);
  allocate_shots(groups, 100000);
  const EstimateReport r =
      estimate_expectation(run(plus), op, groups, 11);
  EXPECT_LE(std::abs(r.mean - 1.0), 5.0 * r.stderr_ + 1e-12);
}

TEST(EstimateExpectation, HeisenbergPairWithinFiveSigma) {
  const LatticeSpec lat{LatticeKind::Chain, {2}, {false}};
  const QubitOperator h = heisenberg_model(lat, 1.0);
  std::mt19937_64 rng(58);
  const StateVec psi = oracle::random_state(rng, 2);
  const double exact = expectation(psi, h);

  auto groups = make_measurement_groups(h);
  EXPECT_EQ(groups.size(), 3u);  // all-X, all-Y, all-Z bases
  allocate_shots(groups, 30000);
  const EstimateReport r = estimate_expectation(psi, h, groups, 17);
  EXPECT_LE(std::abs(r.mean - exact), 5.0 * r.stderr_);
  EXPECT_GT(r.stderr_, 0.0);
}

TEST(EstimateExpectation, RejectsCoverageMismatch) {
  QubitOperator op(1);
  op.add(PauliTerm::parse("Z0", 1.0));
  op.add(PauliTerm::parse("X0", 0.5));
  auto groups = make_measurement_groups(op);
  allocate_shots(groups, 100);
  groups.pop_back();
  EXPECT_THROW(estimate_expectation(StateVec(1), op, groups, 0),
               ValidationError);
}

TEST(ShadowEstimate, IdentityIsExact) {
  const QubitOperator op = QubitOperator::identity(2, 1.75);
  const EstimateReport r = shadow_estimate(StateVec(2), op, 200, 3);
  EXPECT_NEAR(r.mean, 1.75, 1e-12);
  EXPECT_NEAR(r.stderr_, 0.0, 1e-12);
}

TEST(ShadowEstimate, SingleZWithinFiveSigma) {
  QubitOperator op(1);
  op.add(PauliTerm::parse("Z0", 1.0));
  const EstimateReport r = shadow_estimate(StateVec(1), op, 10000, 29);
  EXPECT_LE(std::abs(r.mean - 1.0), 5.0 * r.stderr_);
}

// The squared single-sample contribution of a weight-k string is 9^k on a
// 3^-k match probability, so its second moment is 3^k exactly.
TEST(ShadowEstimate, SecondMomentTracksThreeToSupport) {
  std::mt19937_64 rng(60);
  for (const char* s : {"Z0", "X0 Z1", "X0 Y1 Z2"}) {
    const PauliTerm term = PauliTerm::parse(s);
    QubitOperator op(3);
    op.add(term);
    const StateVec psi = oracle::random_state(rng, 3);
    const EstimateReport r = shadow_estimate(psi, op, 20000, 31);
    const double second_moment =
        r.stderr_ * r.stderr_ * 20000.0 + r.mean * r.mean;
    const double expected = std::pow(3.0, term.weight());
    EXPECT_NEAR(second_moment, expected, 0.2 * expected) << s;
  }
}

TEST(ShadowEstimate, TwoLocalTermWithinFiveSigma) {
  std::mt19937_64 rng(62);
  QubitOperator op(3);
  op.add(PauliTerm::parse("X0 Z2", 0.8));
  op.add(PauliTerm::identity(0.3));
  const StateVec psi = oracle::random_state(rng, 3);
  const double exact = expectation(psi, op);
  const EstimateReport r = shadow_estimate(psi, op, 40000, 37);
  EXPECT_LE(std::abs(r.mean - exact), 5.0 * r.stderr_);
}

TEST(ZneExtrapolate, TwoPointLinearFormula) {
  const std::pair<double, double> pts[] = {{1.0, 0.8}, {3.0, 0.5}};
  const double expected = 0.8 + (0.8 - 0.5) / 2.0;
  EXPECT_NEAR(zne_extrapolate(pts, ZneModel::Linear), expected, 1e-12);
}

TEST(ZneExtrapolate, ConstantDataForEveryModel) {
  const std::pair<double, double> pts[] = {{1.0, 0.42}, {3.0, 0.42}, {5.0, 0.42}};
  for (ZneModel m : {ZneModel::Linear, ZneModel::Poly2, ZneModel::Exp}) {
    EXPECT_NEAR(zne_extrapolate(pts, m), 0.42, 1e-9);
  }
}

TEST(ZneExtrapolate, LinearModelExactOnAffineData) {
  const std::pair<double, double> pts[] = {
      {1.0, 0.9}, {2.0, 0.8}, {3.0, 0.7}, {5.0, 0.5}};
  EXPECT_NEAR(zne_extrapolate(pts, ZneModel::Linear), 1.0, 1e-12);
}

TEST(ZneExtrapolate, ExponentialRecovery) {
  // v(f) = 0.9 e^{-0.3 f}: two-point fit is exact.
  const std::pair<double, double> two[] = {{1.0, 0.9 * std::exp(-0.3)},
                                           {3.0, 0.9 * std::exp(-0.9)}};
  EXPECT_NEAR(zne_extrapolate(two, ZneModel::Exp), 0.9, 1e-9);

  const std::pair<double, double> three[] = {{1.0, 0.9 * std::exp(-0.3) + 0.05},
                                             {3.0, 0.9 * std::exp(-0.9) + 0.05},
                                             {5.0, 0.9 * std::exp(-1.5) + 0.05}};
  EXPECT_NEAR(zne_extrapolate(three, ZneModel::Exp), 0.95, 1e-3);
}

TEST(ZneExtrapolate, Validation) {
  const std::pair<double, double> dup[] = {{1.0, 0.5}, {1.0, 0.4}};
  EXPECT_THROW(zne_extrapolate(dup, ZneModel::Linear), ValidationError);
  const std::pair<double, double> two[] = {{1.0, 0.5}, {3.0, 0.4}};
  EXPECT_THROW(zne_extrapolate(two, ZneModel::Poly2), ValidationError);
  const std::pair<double, double> low[] = {{0.5, 0.5}, {3.0, 0.4}};
  EXPECT_THROW(zne_extrapolate(low, ZneModel::Linear), ValidationError);
}

TEST(EstimateExpectation, UnbiasedOverSeededTrials) {
  QubitOperator op(2);
  op.add(PauliTerm::parse("X0 X1", 0.7));
  op.add(PauliTerm::parse("Z0", -0.4));
  std::mt19937_64 rng(64);
  const StateVec psi = oracle::random_state(rng, 2);
  const double exact = expectation(psi, op);

  auto groups = make_measurement_groups(op);
  allocate_shots(groups, 2000);
  const int trials = 50;
  double sum = 0.0, sum_sq = 0.0;
  for (int k = 0; k < trials; ++k) {
    const EstimateReport r = estimate_expectation(psi, op, groups, 1000 + k);
    sum += r.mean;
    sum_sq += r.mean * r.mean;
  }
  const double grand_mean = sum / trials;
  const double grand_var = (sum_sq - sum * sum / trials) / (trials - 1);
  const double grand_se = std::sqrt(grand_var / trials);
  EXPECT_LE(std::abs(grand_mean - exact), 5.0 * grand_se);
}

}  // namespace
}  // namespace qcw
