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
#include <utility>
#include <vector>

#include "qcw/circuit.hpp"
#include "qcw/pauli.hpp"

namespace qcw {

struct Meeting {
  std::uint32_t logical_a;  // smaller logical index
  std::uint32_t logical_b;
  std::uint32_t layer;      // 1-based
  std::uint32_t position;   // left position of the adjacent pair
};

// Odd-even transposition schedule on a line of n positions: n layers of
// disjoint adjacent pairs under which every unordered logical pair becomes
// adjacent exactly once and the final order is reversed.
struct SwapSchedule {
  std::uint32_t n = 0;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> layers;
  std::vector<Meeting> meeting_log;
  std::vector<std::uint32_t> final_order;  // position -> logical
};

SwapSchedule swap_network(std::uint32_t n);

// Compiles a set of commuting ZZ pair interactions onto linear connectivity:
// each scheduled meeting becomes a single two-qubit block RZZ(2 c_ij t)
// merged with the SWAP. Absent pairs reduce to plain SWAPs. The resulting
// unitary equals the qubit-reversal permutation times
// prod exp(-i c_ij t Z_i Z_j), up to global phase.
Circuit compile_dense_interactions(const QubitOperator& zz_terms,
                                   std::uint32_t n, double t);

}  // namespace qcw
