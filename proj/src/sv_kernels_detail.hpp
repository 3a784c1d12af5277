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

#include <Eigen/Dense>

#include "qcw/pauli.hpp"

namespace qcw::detail {

// Strided pair/block updates without unitarity validation; the matrices in
// Kraus channels are not unitary.
void sv_kernel_1q(cplx* amps, std::uint64_t dim, const Eigen::Matrix2cd& u,
                  std::uint32_t q);
void sv_kernel_2q(cplx* amps, std::uint64_t dim, const Eigen::Matrix4cd& u,
                  std::uint32_t p, std::uint32_t q);

}  // namespace qcw::detail
