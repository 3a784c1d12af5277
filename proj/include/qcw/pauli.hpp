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

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qcw {

using cplx = std::complex<double>;

enum class Axis : std::uint8_t { X = 1, Y = 2, Z = 3 };

char axis_letter(Axis a);

// One non-identity single-qubit factor of a Pauli string.
struct PauliFactor {
  std::uint32_t qubit;
  Axis axis;

  friend bool operator==(const PauliFactor&, const PauliFactor&) = default;
};

// A weighted Pauli string: coeff * prod_q sigma_{axis(q)}(q). Factors are kept
// sorted by qubit index with no duplicates and no explicit identities; phases
// from products fold into the coefficient.
class PauliTerm {
 public:
  PauliTerm() = default;  // identity with coefficient 1
  PauliTerm(cplx coeff, std::vector<PauliFactor> factors);

  static PauliTerm identity(cplx coeff = 1.0);
  static PauliTerm single(Axis axis, std::uint32_t qubit, cplx coeff = 1.0);
  // Parses "X0 Z3" (empty string = identity).
  static PauliTerm parse(const std::string& pauli, cplx coeff = 1.0);

  const std::vector<PauliFactor>& factors() const { return factors_; }
  cplx coeff() const { return coeff_; }
  void set_coeff(cplx c) { coeff_ = c; }

  bool is_identity() const { return factors_.empty(); }
  std::size_t weight() const { return factors_.size(); }
  // 0 for the identity; otherwise 1 + highest qubit index.
  std::uint32_t min_qubits() const;
  // "X0 Z3" form; "" for the identity.
  std::string pauli_string() const;

  // Orders by factor list only (coefficient ignored); the canonical term
  // order inside QubitOperator.
  static bool string_less(const PauliTerm& a, const PauliTerm& b);
  static bool same_string(const PauliTerm& a, const PauliTerm& b);

 private:
  cplx coeff_{1.0, 0.0};
  std::vector<PauliFactor> factors_;
};

PauliTerm multiply(const PauliTerm& a, const PauliTerm& b);
bool commutes(const PauliTerm& a, const PauliTerm& b);
bool qubitwise_commutes(const PauliTerm& a, const PauliTerm& b);

// Sum of Pauli terms in canonical form: terms sorted by Pauli string, equal
// strings merged, coefficients below kDropTolerance removed.
class QubitOperator {
 public:
  static constexpr double kDropTolerance = 1e-12;

  QubitOperator() = default;
  explicit QubitOperator(std::uint32_t num_qubits);
  QubitOperator(std::uint32_t num_qubits, std::vector<PauliTerm> terms);

  static QubitOperator identity(std::uint32_t num_qubits, cplx coeff = 1.0);

  const std::vector<PauliTerm>& terms() const { return terms_; }
  std::uint32_t num_qubits() const { return num_qubits_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  void add(const PauliTerm& term);
  void add(const QubitOperator& other);
  void scale(cplx factor);

  bool is_hermitian(double tol = 1e-10) const;
  // Drops imaginary coefficient parts (valid once is_hermitian holds).
  QubitOperator real_coefficients() const;

  friend QubitOperator operator+(QubitOperator a, const QubitOperator& b);
  friend QubitOperator operator*(const QubitOperator& a,
                                 const QubitOperator& b);
  friend QubitOperator operator*(cplx c, QubitOperator op);

 private:
  std::uint32_t num_qubits_ = 0;
  std::vector<PauliTerm> terms_;
};

// Pairwise-anticommuting Pauli terms with real coefficients; the unit-norm
// combination (1/combined_norm) * sum_k c_k P_k is Hermitian and unitary.
struct AnticommutingGroup {
  std::vector<PauliTerm> members;
  double combined_norm = 0.0;  // sqrt(sum c_k^2)
};

// Sum of |coeff| over all terms (identity included).
double l1_norm(const QubitOperator& op);

// (E_max - E_min)/2 by dense diagonalization; requires Hermitian input and
// num_qubits <= 12. Never exceeds l1_norm beyond roundoff.
double spectral_halfwidth(const QubitOperator& op);

// Greedy seed-and-grow partition into pairwise-anticommuting groups.
// Requires real coefficients. Sum of combined norms never exceeds l1_norm,
// strictly less whenever some group has two or more members.
std::vector<AnticommutingGroup> group_anticommuting(const QubitOperator& op);

// Partition into pairwise qubitwise-commuting groups via greedy coloring of
// the incompatibility graph, largest-degree-first.
std::vector<std::vector<PauliTerm>> group_qubitwise_commuting(
    const QubitOperator& op);

// Total-occupation operator sum_j (I - Z_j)/2 over all num_modes qubits.
QubitOperator number_operator(std::uint32_t num_modes);

// H + c*(N^2 - n_electrons^2 * I) with N the occupation operator above.
// Acts identically to H on the n_electrons-particle sector.
QubitOperator effective_shift(const QubitOperator& op,
                              std::uint32_t n_electrons, double c);

// Grid argmin of l1_norm(effective_shift(op, n_electrons, c)); ties broken
// toward smallest |c|, then smallest c. Returns (c_best, l1_best).
std::pair<double, double> optimize_shift(const QubitOperator& op,
                                         std::uint32_t n_electrons,
                                         std::span<const double> c_grid);

}  // namespace qcw
