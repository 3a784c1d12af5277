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

#include "qcw/swapnet.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "qcw/errors.hpp"

namespace qcw {

SwapSchedule swap_network(std::uint32_t n) {
  if (n < 2) {
    throw ValidationError("swapnet.too_small", "need at least two qubits");
  }
  SwapSchedule sched;
  sched.n = n;
  std::vector<std::uint32_t> logical(n);
  std::iota(logical.begin(), logical.end(), 0);

  for (std::uint32_t layer = 1; layer <= n; ++layer) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    const std::uint32_t start = layer % 2 == 1 ? 0 : 1;
    for (std::uint32_t p = start; p + 1 < n; p += 2) {
      pairs.emplace_back(p, p + 1);
      const std::uint32_t a = logical[p], b = logical[p + 1];
      sched.meeting_log.push_back(
          {std::min(a, b), std::max(a, b), layer, p});
      std::swap(logical[p], logical[p + 1]);
    }
    sched.layers.push_back(std::move(pairs));
  }
  sched.final_order = std::move(logical);
  return sched;
}

Circuit compile_dense_interactions(const QubitOperator& zz_terms,
                                   std::uint32_t n, double t) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, double> coeffs;
  for (const auto& term : zz_terms.terms()) {
    const auto& f = term.factors();
    if (f.size() != 2 || f[0].axis != Axis::Z || f[1].axis != Axis::Z) {
      throw ValidationError("swapnet.bad_term",
                            "interactions must be two-qubit ZZ terms");
    }
    if (std::abs(term.coeff().imag()) > 1e-12) {
      throw ValidationError("swapnet.bad_term",
                            "interaction coefficients must be real");
    }
    if (f[1].qubit >= n) {
      throw ValidationError("swapnet.bad_term",
                            "interaction acts outside the register");
    }
    coeffs[{f[0].qubit, f[1].qubit}] = term.coeff().real();
  }

  const SwapSchedule sched = swap_network(n);
  Circuit c(n);
  for (const Meeting& m : sched.meeting_log) {
    const auto it = coeffs.find({m.logical_a, m.logical_b});
    const double theta = it == coeffs.end() ? 0.0 : 2.0 * it->second * t;
    // SWAP * RZZ(theta) as one block: RZZ is diagonal, the SWAP permutes
    // sub-indices 1 and 2.
    const cplx lo = std::exp(cplx(0.0, -theta / 2.0));
    const cplx hi = std::exp(cplx(0.0, theta / 2.0));
    Eigen::Matrix4cd block = Eigen::Matrix4cd::Zero();
    block(0, 0) = lo;
    block(2, 1) = hi;
    block(1, 2) = hi;
    block(3, 3) = lo;
    c.append(Gate::u2q(m.position, m.position + 1, block));
  }
  return c;
}

}  // namespace qcw
