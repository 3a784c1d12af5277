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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qcw/dense.hpp"
#include "qcw/errors.hpp"

namespace qcw {
namespace {

Eigen::Matrix2cd haar_1q(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::Matrix2cd m;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) m(r, c) = cplx(g(rng), g(rng));
  }
  const Eigen::HouseholderQR<Eigen::Matrix2cd> qr(m);
  return qr.householderQ();
}

Eigen::Matrix4cd haar_2q(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::Matrix4cd m;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) m(r, c) = cplx(g(rng), g(rng));
  }
  const Eigen::HouseholderQR<Eigen::Matrix4cd> qr(m);
  return qr.householderQ();
}

TEST(Apply1q, BitFlipHitsStrideIndex) {
  for (std::uint32_t q = 0; q < 5; ++q) {
    StateVec s(5);
    Eigen::Matrix2cd x;
    x << 0, 1, 1, 0;
    apply_1q(s, x, q);
    EXPECT_NEAR(std::abs(s.amplitude(std::uint64_t{1} << q) - cplx(1, 0)), 0.0,
                1e-15);
  }
}

TEST(Apply1q, HadamardOnSingleQubit) {
  StateVec s(1);
  Eigen::Matrix2cd h;
  h << 1, 1, 1, -1;
  apply_1q(s, h / std::sqrt(2.0), 0);
  EXPECT_NEAR(s.amplitude(0).real(), 1 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(s.amplitude(1).real(), 1 / std::sqrt(2.0), 1e-12);
}

TEST(Apply1q, MatchesKroneckerOracle) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint32_t n = 5;
    StateVec s = oracle::random_state(rng, n);
    const Eigen::VectorXcd before = s.to_vector();
    const Eigen::Matrix2cd u = haar_1q(rng);
    const std::uint32_t q = static_cast<std::uint32_t>(trial % n);
    apply_1q(s, u, q);

    Eigen::MatrixXcd lifted = Eigen::MatrixXcd::Identity(1, 1);
    for (std::uint32_t k = 0; k < n; ++k) {
      const Eigen::MatrixXcd factor =
          k == q ? Eigen::MatrixXcd(u)
                 : Eigen::MatrixXcd(Eigen::Matrix2cd::Identity());
      Eigen::MatrixXcd next(lifted.rows() * 2, lifted.cols() * 2);
      next.setZero();
      for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
          next.block(r * lifted.rows(), c * lifted.cols(), lifted.rows(),
                     lifted.cols()) = factor(r, c) * lifted;
        }
      }
      lifted = next;
    }
    const Eigen::VectorXcd expected = lifted * before;
    EXPECT_LT((s.to_vector() - expected).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Apply1q, Validation) {
  StateVec s(2);
  Eigen::Matrix2cd not_unitary;
  not_unitary << 1, 0, 0, 2;
  EXPECT_THROW(apply_1q(s, not_unitary, 0), ValidationError);
  EXPECT_THROW(apply_1q(s, Eigen::Matrix2cd::Identity(), 2), ValidationError);
}

TEST(Apply2q, ControlledFlipLittleEndian) {
  StateVec s(2, {0, 1, 0, 0});  // |01> = qubit 0 set
  Circuit c(2);
  c.append(Gate::cx(0, 1));
  const StateVec out = run(c, s);
  EXPECT_NEAR(std::abs(out.amplitude(3) - cplx(1, 0)), 0.0, 1e-15);
}

TEST(Apply2q, SwapMatrixMovesAmplitude) {
  StateVec s(2, {0, 0, 1, 0});  // |10> = qubit 1 set
  Eigen::Matrix4cd swap = Eigen::Matrix4cd::Zero();
  swap(0, 0) = swap(3, 3) = 1;
  swap(1, 2) = swap(2, 1) = 1;
  apply_2q(s, swap, 0, 1);
  EXPECT_NEAR(std::abs(s.amplitude(1) - cplx(1, 0)), 0.0, 1e-15);
}

TEST(Apply2q, MatchesDenseOracleIncludingReversedTargets) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint32_t n = 6;
    const StateVec init = oracle::random_state(rng, n);
    const Eigen::Matrix4cd u = haar_2q(rng);
    std::uniform_int_distribution<std::uint32_t> qd(0, n - 1);
    std::uint32_t p = qd(rng), q = qd(rng);
    while (p == q) q = qd(rng);

    StateVec s = init;
    apply_2q(s, u, p, q);

    Circuit c(n);
    c.append(Gate::u2q(p, q, u));
    const Eigen::VectorXcd expected = to_matrix(c) * init.to_vector();
    EXPECT_LT((s.to_vector() - expected).cwiseAbs().maxCoeff(), 1e-10)
        << "p=" << p << " q=" << q;
  }
}

TEST(Apply2q, SwapEqualsRelabeling) {
  std::mt19937_64 rng(6);
  const std::uint32_t n = 5;
  StateVec s = oracle::random_state(rng, n);
  const StateVec before = s;
  Eigen::Matrix4cd swap = Eigen::Matrix4cd::Zero();
  swap(0, 0) = swap(3, 3) = 1;
  swap(1, 2) = swap(2, 1) = 1;
  const std::uint32_t p = 1, q = 3;
  apply_2q(s, swap, p, q);
  for (std::uint64_t i = 0; i < s.dim(); ++i) {
    const std::uint64_t bp = (i >> p) & 1, bq = (i >> q) & 1;
    std::uint64_t j = i & ~((std::uint64_t{1} << p) | (std::uint64_t{1} << q));
    j |= bq << p;
    j |= bp << q;
    EXPECT_NEAR(std::abs(s.amplitude(i) - before.amplitude(j)), 0.0, 1e-15);
  }
}

TEST(Apply2q, Validation) {
  StateVec s(3);
  Eigen::Matrix4cd id = Eigen::Matrix4cd::Identity();
  EXPECT_THROW(apply_2q(s, id, 1, 1), ValidationError);
  EXPECT_THROW(apply_2q(s, id, 0, 3), ValidationError);
}

TEST(Run, GhzChain) {
  Circuit c(4);
  c.append(Gate::h(0));
  for (std::uint32_t q = 0; q + 1 < 4; ++q) c.append(Gate::cx(q, q + 1));
  const StateVec s = run(c);
  EXPECT_NEAR(std::abs(s.amplitude(0)), 1 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(std::abs(s.amplitude(15)), 1 / std::sqrt(2.0), 1e-12);
  double rest = 0.0;
  for (std::uint64_t i = 1; i < 15; ++i) rest += std::norm(s.amplitude(i));
  EXPECT_NEAR(rest, 0.0, 1e-15);
}

TEST(Run, EmptyCircuitKeepsInitialState) {
  std::mt19937_64 rng(8);
  const StateVec init = oracle::random_state(rng, 3);
  const StateVec out = run(Circuit(3), init);
  EXPECT_LT((out.to_vector() - init.to_vector()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Run, RandomCircuitsMatchDenseOracle) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 30; ++trial) {
    const std::uint32_t n = 2 + trial % 4;
    const Circuit c = oracle::random_circuit(rng, n, 25);
    const StateVec init = oracle::random_state(rng, n);
    const StateVec out = run(c, init);
    const Eigen::VectorXcd expected = to_matrix(c) * init.to_vector();
    EXPECT_LT((out.to_vector() - expected).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(Run, NormPreservedOverLongCircuits) {
  std::mt19937_64 rng(12);
  const Circuit c = oracle::random_circuit(rng, 6, 10000);
  const StateVec out = run(c);
  EXPECT_NEAR(out.norm_sq(), 1.0, 1e-9);
}

TEST(Expectation, BasicValues) {
  QubitOperator z(1);
  z.add(PauliTerm::parse("Z0", 1.0));
  EXPECT_NEAR(expectation(StateVec(1), z), 1.0, 1e-12);

  Circuit plus(1);
  plus.append(Gate::h(0));
  EXPECT_NEAR(expectation(run(plus), z), 0.0, 1e-12);
}

TEST(Expectation, MatchesDenseQuadraticForm) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 10; ++trial) {
    const StateVec s = oracle::random_state(rng, 4);
    const QubitOperator op = oracle::random_hermitian_operator(rng, 4, 8);
    const Eigen::VectorXcd v = s.to_vector();
    const double expected =
        (v.adjoint() * oracle::kron_operator_matrix(op, 4) * v)(0).real();
    EXPECT_NEAR(expectation(s, op), expected, 1e-10);
  }
}

TEST(Expectation, RejectsMismatchedSizes) {
  QubitOperator z(3);
  z.add(PauliTerm::parse("Z2", 1.0));
  EXPECT_THROW(expectation(StateVec(2), z), ValidationError);
}

TEST(Sample, DeterministicPointMass) {
  const auto counts = sample(StateVec(3), 500, 42);
  ASSERT_EQ(counts.size(), 1u);
  EXPECT_EQ(counts.at(0), 500u);
}

TEST(Sample, PlusStateFrequencies) {
  Circuit c(1);
  c.append(Gate::h(0));
  const StateVec s = run(c);
  const std::uint64_t shots = 100000;
  const auto counts = sample(s, shots, 7);
  const double f0 = static_cast<double>(counts.at(0)) / shots;
  // 5 sigma binomial window around 1/2.
  EXPECT_NEAR(f0, 0.5, 5.0 * 0.5 / std::sqrt(static_cast<double>(shots)));
}

TEST(Sample, GhzSupportOnly) {
  Circuit c(3);
  c.append(Gate::h(0));
  c.append(Gate::cx(0, 1));
  c.append(Gate::cx(1, 2));
  const auto counts = sample(run(c), 10000, 3);
  for (const auto& [idx, count] : counts) {
    EXPECT_TRUE(idx == 0 || idx == 7) << idx;
  }
}

TEST(Sample, SameSeedSameHistogram) {
  std::mt19937_64 rng(16);
  const StateVec s = oracle::random_state(rng, 4);
  EXPECT_EQ(sample(s, 2000, 99), sample(s, 2000, 99));
  EXPECT_THROW(sample(s, 0, 1), ValidationError);
}

}  // namespace
}  // namespace qcw
