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

#include "qcw/lattice.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "oracles.hpp"
#include "qcw/dense.hpp"
#include "qcw/errors.hpp"

namespace qcw {
namespace {

TEST(Lattice, ChainRingSquareBonds) {
  const LatticeSpec chain{LatticeKind::Chain, {4}, {false}};
  EXPECT_EQ(lattice_bonds(chain).size(), 3u);
  EXPECT_EQ(site_count(chain), 4u);

  const LatticeSpec ring{LatticeKind::Ring, {4}, {true}};
  EXPECT_EQ(lattice_bonds(ring).size(), 4u);

  const LatticeSpec square{LatticeKind::Square, {2, 2}, {false, false}};
  EXPECT_EQ(lattice_bonds(square).size(), 4u);
  EXPECT_EQ(site_count(square), 4u);
}

TEST(Lattice, HoneycombHexagonFlakes) {
  const LatticeSpec one{LatticeKind::Honeycomb, {1, 1}, {false, false}};
  EXPECT_EQ(site_count(one), 6u);
  const auto bonds = lattice_bonds(one);
  ASSERT_EQ(bonds.size(), 6u);
  std::map<Axis, int> per_axis;
  for (const auto& b : bonds) ++per_axis[b.gamma];
  EXPECT_EQ(per_axis[Axis::X], 2);
  EXPECT_EQ(per_axis[Axis::Y], 2);
  EXPECT_EQ(per_axis[Axis::Z], 2);
  // Each site sits on exactly two of the six ring bonds.
  std::map<std::uint32_t, int> degree;
  for (const auto& b : bonds) {
    ++degree[b.a];
    ++degree[b.b];
  }
  for (const auto& [site, d] : degree) EXPECT_EQ(d, 2) << site;

  const LatticeSpec two{LatticeKind::Honeycomb, {2, 1}, {false, false}};
  EXPECT_EQ(site_count(two), 10u);
  EXPECT_EQ(lattice_bonds(two).size(), 11u);  // fused hexagons share one edge

  const LatticeSpec periodic{LatticeKind::Honeycomb, {2, 2}, {true, false}};
  EXPECT_THROW(lattice_bonds(periodic), ValidationError);
}

TEST(JordanWigner, NumberOperatorImage) {
  const FermionTerm n{{1.0, 0.0}, {{0, true}, {0, false}}};
  const QubitOperator op = jordan_wigner(n, 1);
  const Eigen::MatrixXcd m = oracle::kron_operator_matrix(op, 1);
  Eigen::MatrixXcd expected(2, 2);
  expected << 0, 0, 0, 1;
  EXPECT_LT((m - expected).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(JordanWigner, NilpotentAnnihilation) {
  const FermionTerm sq{{1.0, 0.0}, {{0, false}, {0, false}}};
  EXPECT_TRUE(jordan_wigner(sq, 2).empty());
}

TEST(JordanWigner, CanonicalAnticommutators) {
  for (std::uint32_t modes = 2; modes <= 4; ++modes) {
    const std::uint64_t dim = std::uint64_t{1} << modes;
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
    for (std::uint32_t i = 0; i < modes; ++i) {
      for (std::uint32_t j = 0; j < modes; ++j) {
        const auto a_i = oracle::kron_operator_matrix(
            jordan_wigner({{1.0, 0.0}, {{i, false}}}, modes), modes);
        const auto a_j = oracle::kron_operator_matrix(
            jordan_wigner({{1.0, 0.0}, {{j, false}}}, modes), modes);
        const auto a_j_dag = oracle::kron_operator_matrix(
            jordan_wigner({{1.0, 0.0}, {{j, true}}}, modes), modes);

        const Eigen::MatrixXcd mixed = a_i * a_j_dag + a_j_dag * a_i;
        const Eigen::MatrixXcd same = a_i * a_j + a_j * a_i;
        const Eigen::MatrixXcd expected = i == j ? id : Eigen::MatrixXcd::Zero(dim, dim).eval();
        EXPECT_LT((mixed - expected).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_LT(same.cwiseAbs().maxCoeff(), 1e-12);
      }
    }
  }
}

TEST(JordanWigner, MatchesFermionOracleOnRandomQuadratics) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint32_t> mode(0, 3);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<FermionTerm> terms;
    for (int k = 0; k < 4; ++k) {
      const std::uint32_t a = mode(rng), b = mode(rng);
      const double c = coeff(rng);
      terms.push_back({c, {{a, true}, {b, false}}});
      terms.push_back({c, {{b, true}, {a, false}}});
    }
    QubitOperator mapped(4);
    for (const auto& t : terms) mapped.add(jordan_wigner(t, 4));
    const Eigen::MatrixXcd lhs = oracle::kron_operator_matrix(mapped, 4);
    const Eigen::MatrixXcd rhs = oracle::fermion_matrix(terms, 4);
    EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(JordanWigner, RejectsOutOfRangeModes) {
  EXPECT_THROW(jordan_wigner({{1.0, 0.0}, {{3, false}}}, 2), ValidationError);
}

TEST(Hubbard, SingleSiteSpectrum) {
  const LatticeSpec lat{LatticeKind::Chain, {1}, {false}};
  const QubitOperator h = hubbard_hamiltonian(lat, 1.0, 4.0);
  EXPECT_NEAR(exact_spectrum(h, 1)[0], 0.0, 1e-12);
  EXPECT_NEAR(sector_spectrum(h, 2, 1)[0], 4.0, 1e-12);
}

TEST(Hubbard, TwoSiteGroundEnergies) {
  const LatticeSpec lat{LatticeKind::Chain, {2}, {false}};
  for (double u : {0.0, 4.0, 8.0}) {
    const QubitOperator h = hubbard_hamiltonian(lat, 1.0, u);
    const double expected = (u - std::sqrt(u * u + 16.0)) / 2.0;
    EXPECT_NEAR(sector_spectrum(h, 2, 1)[0], expected, 1e-9) << "U=" << u;
  }
}

TEST(Hubbard, MatchesIndependentFermionDiagonalization) {
  const LatticeSpec lat{LatticeKind::Chain, {2}, {false}};
  const QubitOperator h = hubbard_hamiltonian(lat, 1.0, 8.0);

  std::vector<FermionTerm> terms;
  for (std::uint32_t spin = 0; spin < 2; ++spin) {
    terms.push_back({-1.0, {{0 + spin, true}, {2 + spin, false}}});
    terms.push_back({-1.0, {{2 + spin, true}, {0 + spin, false}}});
  }
  for (std::uint32_t site = 0; site < 2; ++site) {
    const std::uint32_t up = 2 * site, down = 2 * site + 1;
    terms.push_back(
        {8.0, {{up, true}, {up, false}, {down, true}, {down, false}}});
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      oracle::fermion_matrix(terms, 4), Eigen::EigenvaluesOnly);
  EXPECT_NEAR(exact_spectrum(h, 1)[0], solver.eigenvalues()(0), 1e-9);
}

TEST(Hubbard, ConservesParticleNumber) {
  const LatticeSpec lat{LatticeKind::Chain, {2}, {false}};
  const QubitOperator h = hubbard_hamiltonian(lat, 1.3, 2.7);
  const Eigen::MatrixXcd hm = dense::operator_matrix(h);
  const Eigen::MatrixXcd nm = dense::operator_matrix(number_operator(4));
  EXPECT_LT((hm * nm - nm * hm).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_TRUE(h.is_hermitian());
}

TEST(Emery, ZeroCouplingsGiveZeroOperator) {
  EXPECT_TRUE(emery_hamiltonian(1, 0, 0, 0, 0, 0, 0).empty());
}

TEST(Emery, ChargeTransferOnlySpectrum) {
  const double delta = 2.5;
  const QubitOperator h = emery_hamiltonian(1, 0, 0, delta, 0, 0, 0);
  // -Delta (n_d_up + n_d_down): distinct eigenvalues {0, -Delta, -2 Delta}.
  const auto spec = exact_spectrum(h, 64);
  std::vector<double> distinct;
  for (double e : spec) {
    if (distinct.empty() || std::abs(e - distinct.back()) > 1e-9) {
      distinct.push_back(e);
    }
  }
  ASSERT_EQ(distinct.size(), 3u);
  EXPECT_NEAR(distinct[0], -2 * delta, 1e-12);
  EXPECT_NEAR(distinct[1], -delta, 1e-12);
  EXPECT_NEAR(distinct[2], 0.0, 1e-12);
}

TEST(Emery, GenericCellIsHermitianAndConservesNumber) {
  const QubitOperator h = emery_hamiltonian(1, 1.3, 0.65, 3.6, 8.4, 4.1, 1.2);
  EXPECT_TRUE(h.is_hermitian());
  const Eigen::MatrixXcd hm = dense::operator_matrix(h);
  const Eigen::MatrixXcd nm = dense::operator_matrix(number_operator(6));
  EXPECT_LT((hm * nm - nm * hm).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(KitaevHeisenberg, HeisenbergLimitMatchesTermByTermBuild) {
  const LatticeSpec hex{LatticeKind::Honeycomb, {1, 1}, {false, false}};
  const QubitOperator kh = kitaev_heisenberg(hex, 2.0, 0.0, 0.0, 0.0);

  QubitOperator reference(site_count(hex));
  for (const Bond& b : lattice_bonds(hex)) {
    reference.add(PauliTerm(0.5, {{b.a, Axis::X}, {b.b, Axis::X}}));
    reference.add(PauliTerm(0.5, {{b.a, Axis::Y}, {b.b, Axis::Y}}));
    reference.add(PauliTerm(0.5, {{b.a, Axis::Z}, {b.b, Axis::Z}}));
  }
  ASSERT_EQ(kh.size(), reference.size());
  for (std::size_t i = 0; i < kh.size(); ++i) {
    EXPECT_TRUE(
        PauliTerm::same_string(kh.terms()[i], reference.terms()[i]));
    EXPECT_NEAR(std::abs(kh.terms()[i].coeff() - reference.terms()[i].coeff()),
                0.0, 1e-12);
  }
}

TEST(KitaevHeisenberg, HexagonTermCountWithFullCouplings) {
  const LatticeSpec hex{LatticeKind::Honeycomb, {1, 1}, {false, false}};
  const QubitOperator h = kitaev_heisenberg(hex, -1.53, -24.4, 5.25, -0.95);
  EXPECT_TRUE(h.is_hermitian());
  // Per bond: 3 Heisenberg strings (one absorbing K), 2 Gamma strings and 4
  // Gamma' strings; six bonds, no sharing between bonds.
  EXPECT_EQ(h.size(), 6u * 9u);
}

TEST(KitaevHeisenberg, SpinFlipSymmetryWithoutOffDiagonalExchange) {
  const LatticeSpec hex{LatticeKind::Honeycomb, {1, 1}, {false, false}};
  const QubitOperator h = kitaev_heisenberg(hex, -1.53, -24.4, 0.0, 0.0);
  const Eigen::MatrixXcd hm = dense::operator_matrix(h);

  QubitOperator flip_op = QubitOperator::identity(6, 1.0);
  QubitOperator xs(6);
  {
    PauliTerm all_x(1.0, {{0, Axis::X},
                          {1, Axis::X},
                          {2, Axis::X},
                          {3, Axis::X},
                          {4, Axis::X},
                          {5, Axis::X}});
    xs.add(all_x);
  }
  const Eigen::MatrixXcd flip = dense::operator_matrix(xs);
  EXPECT_LT((flip * hm * flip - hm).cwiseAbs().maxCoeff(), 1e-10);

  const auto ref = oracle::extreme_eigenvalues(hm);
  EXPECT_NEAR(exact_spectrum(h, 1)[0], ref.first, 1e-8);
}

TEST(KitaevHeisenberg, RejectsNonHoneycomb) {
  const LatticeSpec chain{LatticeKind::Chain, {4}, {false}};
  EXPECT_THROW(kitaev_heisenberg(chain, 1, 0, 0, 0), ValidationError);
}

TEST(ExactSpectrum, SmallExamples) {
  QubitOperator z(1);
  z.add(PauliTerm::parse("Z0", 1.0));
  const auto spec = exact_spectrum(z, 2);
  EXPECT_NEAR(spec[0], -1.0, 1e-12);
  EXPECT_NEAR(spec[1], 1.0, 1e-12);

  const auto id_spec = exact_spectrum(QubitOperator::identity(3, 1.0), 3);
  for (double e : id_spec) EXPECT_NEAR(e, 1.0, 1e-12);
}

TEST(ExactSpectrum, HeisenbergRingMatchesPowerIteration) {
  const LatticeSpec ring{LatticeKind::Ring, {4}, {true}};
  const QubitOperator h = heisenberg_model(ring, 1.0);
  const auto ref =
      oracle::extreme_eigenvalues(oracle::kron_operator_matrix(h, 4));
  EXPECT_NEAR(exact_spectrum(h, 1)[0], ref.first, 1e-9);
}

TEST(ExactSpectrum, Validation) {
  QubitOperator op(1);
  op.add(PauliTerm::parse("X0", cplx(0, 1)));
  EXPECT_THROW(exact_spectrum(op, 1), ValidationError);

  QubitOperator z(1);
  z.add(PauliTerm::parse("Z0", 1.0));
  EXPECT_THROW(exact_spectrum(z, 3), ValidationError);
}

}  // namespace
}  // namespace qcw
