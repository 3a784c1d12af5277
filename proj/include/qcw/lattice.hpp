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
#include <string>
#include <vector>

#include "qcw/pauli.hpp"

namespace qcw {

enum class LatticeKind { Chain, Ring, Square, Honeycomb };

LatticeKind lattice_kind_from_name(const std::string& name);
std::string lattice_kind_name(LatticeKind k);

// Site graphs for the model builders. Chain/ring/square count sites per
// axis, row-major indexing (site = y*nx + x). Honeycomb counts hexagons per
// axis: cells [hx, hy] is a flake of hx*hy edge-sharing hexagons cut from
// the honeycomb lattice, sites numbered in cell-row-major order with the A
// sublattice before B; periodic honeycomb flakes are not supported.
struct LatticeSpec {
  LatticeKind kind = LatticeKind::Chain;
  std::vector<std::uint32_t> cells;
  std::vector<bool> periodic;
};

// gamma labels the bond direction on the honeycomb (x/y/z bonds of the
// three-colored lattice); for other lattices it is fixed to Z and unused.
struct Bond {
  std::uint32_t a;
  std::uint32_t b;
  Axis gamma;
};

std::uint32_t site_count(const LatticeSpec& lat);
std::vector<Bond> lattice_bonds(const LatticeSpec& lat);

// Second-quantized monomial: coeff * prod of creation/annihilation operators
// in listed order. Spin-orbital convention: mode = 2*site + spin, spin up=0,
// down=1.
struct FermionOp {
  std::uint32_t mode;
  bool dagger;
};

struct FermionTerm {
  cplx coeff{1.0, 0.0};
  std::vector<FermionOp> ops;
};

// Jordan-Wigner image: a_j -> (X_j + iY_j)/2 * Z_{j-1}...Z_0 (conjugate for
// the creation operator). Output acts on num_modes qubits, occupation of
// mode j = bit j of the basis index.
QubitOperator jordan_wigner(const FermionTerm& term, std::uint32_t num_modes);

// -t sum_{<ij>, sigma} (a^dag_i a_j + h.c.) + U sum_i n_up n_down, mapped
// through Jordan-Wigner. Two spin-orbitals per site; at most 24 qubits.
QubitOperator hubbard_hamiltonian(const LatticeSpec& lat, double t, double u);

// Three-band (d, px, py per cell) hole Hamiltonian on a chain of cells:
// +t_pd and +t_pp hopping, -Delta_pd on d occupations, U_d/U_p on-orbital
// repulsion, V_pd density-density across d-p bonds.
QubitOperator emery_hamiltonian(std::uint32_t cells, double t_pd, double t_pp,
                                double delta_pd, double u_d, double u_p,
                                double v_pd);

// sum over gamma-bonds of J S.S + K S_g S_g + Gamma (S_a S_b + S_b S_a)
// + Gamma' (S_g S_a + S_g S_b + S_a S_g + S_b S_g), spin-1/2 (S = sigma/2),
// with (a, b) = (x,y), (z,x), (y,z) for gamma = z, y, x. Honeycomb only.
QubitOperator kitaev_heisenberg(const LatticeSpec& lat, double j, double k,
                                double gamma, double gamma_prime);

// J sum_{<ij>} S_i . S_j on any lattice kind.
QubitOperator heisenberg_model(const LatticeSpec& lat, double j);

// k smallest eigenvalues, ascending, degeneracies repeated. Dense
// diagonalization; Hermitian input, at most 12 qubits.
std::vector<double> exact_spectrum(const QubitOperator& op, std::uint32_t k);

// k smallest eigenvalues of the compression onto the subspace of basis
// states with exactly n_particles occupied modes (index popcount).
std::vector<double> sector_spectrum(const QubitOperator& op,
                                    std::uint32_t n_particles,
                                    std::uint32_t k);

}  // namespace qcw
