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

#include "qcw/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "qcw/dense.hpp"
#include "qcw/errors.hpp"

namespace qcw {

namespace {

bool factor_qubit_less(const PauliFactor& a, const PauliFactor& b) {
  return a.qubit < b.qubit;
}

// i^g such that axis_a * axis_b = i^g * axis_result on one qubit.
// Cyclic (X->Y->Z->X) products pick up +i, anticyclic -i.
std::pair<cplx, Axis> single_qubit_product(Axis a, Axis b) {
  if (a == b) return {cplx(1.0, 0.0), Axis::X};  // axis unused: identity
  const int ai = static_cast<int>(a), bi = static_cast<int>(b);
  // Remaining axis out of {1,2,3}.
  const Axis rest = static_cast<Axis>(6 - ai - bi);
  const bool cyclic = (bi - ai + 3) % 3 == 1;  // X.Y, Y.Z, Z.X
  return {cyclic ? cplx(0.0, 1.0) : cplx(0.0, -1.0), rest};
}

}  // namespace

char axis_letter(Axis a) {
  switch (a) {
    case Axis::X:
      return 'X';
    case Axis::Y:
      return 'Y';
    case Axis::Z:
      return 'Z';
  }
  return '?';
}

PauliTerm::PauliTerm(cplx coeff, std::vector<PauliFactor> factors)
    : coeff_(coeff), factors_(std::move(factors)) {
  if (!std::isfinite(coeff_.real()) || !std::isfinite(coeff_.imag())) {
    throw ValidationError("pauli.nonfinite_coeff",
                          "Pauli term coefficient must be finite");
  }
  std::sort(factors_.begin(), factors_.end(), factor_qubit_less);
  for (std::size_t i = 1; i < factors_.size(); ++i) {
    if (factors_[i].qubit == factors_[i - 1].qubit) {
      throw ValidationError("pauli.duplicate_qubit",
                            "duplicate qubit index in Pauli term");
    }
  }
}

PauliTerm PauliTerm::identity(cplx coeff) { return PauliTerm(coeff, {}); }

PauliTerm PauliTerm::single(Axis axis, std::uint32_t qubit, cplx coeff) {
  return PauliTerm(coeff, {{qubit, axis}});
}

PauliTerm PauliTerm::parse(const std::string& pauli, cplx coeff) {
  std::vector<PauliFactor> factors;
  std::istringstream in(pauli);
  std::string tok;
  while (in >> tok) {
    Axis axis;
    switch (tok[0]) {
      case 'X':
        axis = Axis::X;
        break;
      case 'Y':
        axis = Axis::Y;
        break;
      case 'Z':
        axis = Axis::Z;
        break;
      default:
        throw ValidationError("pauli.bad_token",
                              "Pauli token must start with X, Y or Z: " + tok);
    }
    std::size_t pos = 0;
    unsigned long idx = 0;
    try {
      idx = std::stoul(tok.substr(1), &pos);
    } catch (const std::exception&) {
      throw ValidationError("pauli.bad_token", "bad qubit index in " + tok);
    }
    if (pos + 1 != tok.size()) {
      throw ValidationError("pauli.bad_token", "bad qubit index in " + tok);
    }
    factors.push_back({static_cast<std::uint32_t>(idx), axis});
  }
  return PauliTerm(coeff, std::move(factors));
}

std::uint32_t PauliTerm::min_qubits() const {
  return factors_.empty() ? 0 : factors_.back().qubit + 1;
}

std::string PauliTerm::pauli_string() const {
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += ' ';
    out += axis_letter(f.axis);
    out += std::to_string(f.qubit);
  }
  return out;
}

bool PauliTerm::string_less(const PauliTerm& a, const PauliTerm& b) {
  return std::lexicographical_compare(
      a.factors_.begin(), a.factors_.end(), b.factors_.begin(),
      b.factors_.end(), [](const PauliFactor& x, const PauliFactor& y) {
        return x.qubit != y.qubit ? x.qubit < y.qubit : x.axis < y.axis;
      });
}

bool PauliTerm::same_string(const PauliTerm& a, const PauliTerm& b) {
  return a.factors_ == b.factors_;
}

PauliTerm multiply(const PauliTerm& a, const PauliTerm& b) {
  cplx coeff = a.coeff() * b.coeff();
  std::vector<PauliFactor> out;
  out.reserve(a.factors().size() + b.factors().size());
  auto ia = a.factors().begin(), ea = a.factors().end();
  auto ib = b.factors().begin(), eb = b.factors().end();
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && ia->qubit < ib->qubit)) {
      out.push_back(*ia++);
    } else if (ia == ea || ib->qubit < ia->qubit) {
      out.push_back(*ib++);
    } else {
      if (ia->axis != ib->axis) {
        auto [phase, axis] = single_qubit_product(ia->axis, ib->axis);
        coeff *= phase;
        out.push_back({ia->qubit, axis});
      }  // same axis: squares to identity
      ++ia;
      ++ib;
    }
  }
  return PauliTerm(coeff, std::move(out));
}

bool commutes(const PauliTerm& a, const PauliTerm& b) {
  int clashes = 0;
  auto ia = a.factors().begin(), ea = a.factors().end();
  auto ib = b.factors().begin(), eb = b.factors().end();
  while (ia != ea && ib != eb) {
    if (ia->qubit < ib->qubit) {
      ++ia;
    } else if (ib->qubit < ia->qubit) {
      ++ib;
    } else {
      if (ia->axis != ib->axis) ++clashes;
      ++ia;
      ++ib;
    }
  }
  return clashes % 2 == 0;
}

bool qubitwise_commutes(const PauliTerm& a, const PauliTerm& b) {
  auto ia = a.factors().begin(), ea = a.factors().end();
  auto ib = b.factors().begin(), eb = b.factors().end();
  while (ia != ea && ib != eb) {
    if (ia->qubit < ib->qubit) {
      ++ia;
    } else if (ib->qubit < ia->qubit) {
      ++ib;
    } else {
      if (ia->axis != ib->axis) return false;
      ++ia;
      ++ib;
    }
  }
  return true;
}

QubitOperator::QubitOperator(std::uint32_t num_qubits)
    : num_qubits_(num_qubits) {}

QubitOperator::QubitOperator(std::uint32_t num_qubits,
                             std::vector<PauliTerm> terms)
    : num_qubits_(num_qubits) {
  for (auto& t : terms) add(t);
}

QubitOperator QubitOperator::identity(std::uint32_t num_qubits, cplx coeff) {
  QubitOperator op(num_qubits);
  op.add(PauliTerm::identity(coeff));
  return op;
}

void QubitOperator::add(const PauliTerm& term) {
  if (term.min_qubits() > num_qubits_) num_qubits_ = term.min_qubits();
  auto it = std::lower_bound(terms_.begin(), terms_.end(), term,
                             PauliTerm::string_less);
  if (it != terms_.end() && PauliTerm::same_string(*it, term)) {
    it->set_coeff(it->coeff() + term.coeff());
    if (std::abs(it->coeff()) < kDropTolerance) terms_.erase(it);
  } else if (std::abs(term.coeff()) >= kDropTolerance) {
    terms_.insert(it, term);
  }
}

void QubitOperator::add(const QubitOperator& other) {
  num_qubits_ = std::max(num_qubits_, other.num_qubits_);
  for (const auto& t : other.terms_) add(t);
}

void QubitOperator::scale(cplx factor) {
  for (auto& t : terms_) t.set_coeff(t.coeff() * factor);
  std::erase_if(terms_, [](const PauliTerm& t) {
    return std::abs(t.coeff()) < kDropTolerance;
  });
}

bool QubitOperator::is_hermitian(double tol) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const PauliTerm& t) {
    return std::abs(t.coeff().imag()) <= tol;
  });
}

QubitOperator QubitOperator::real_coefficients() const {
  QubitOperator out(num_qubits_);
  for (const auto& t : terms_) {
    out.add(PauliTerm(cplx(t.coeff().real(), 0.0), t.factors()));
  }
  return out;
}

QubitOperator operator+(QubitOperator a, const QubitOperator& b) {
  a.add(b);
  return a;
}

QubitOperator operator*(const QubitOperator& a, const QubitOperator& b) {
  QubitOperator out(std::max(a.num_qubits(), b.num_qubits()));
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      out.add(multiply(ta, tb));
    }
  }
  return out;
}

QubitOperator operator*(cplx c, QubitOperator op) {
  op.scale(c);
  return op;
}

double l1_norm(const QubitOperator& op) {
  double sum = 0.0;
  for (const auto& t : op.terms()) sum += std::abs(t.coeff());
  return sum;
}

double spectral_halfwidth(const QubitOperator& op) {
  if (!op.is_hermitian()) {
    throw ValidationError("operator.non_hermitian",
                          "spectral halfwidth needs a Hermitian operator");
  }
  if (op.num_qubits() > 12) {
    throw ValidationError("operator.oversize",
                          "dense diagonalization capped at 12 qubits");
  }
  if (op.empty()) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      dense::operator_matrix(op), Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return (ev(ev.size() - 1) - ev(0)) / 2.0;
}

std::vector<AnticommutingGroup> group_anticommuting(const QubitOperator& op) {
  if (!op.is_hermitian()) {
    throw ValidationError("operator.complex_coeffs",
                          "anticommuting grouping needs real coefficients");
  }
  // Seed order: descending |coeff|, canonical string order on ties.
  std::vector<std::size_t> order(op.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double ma = std::abs(op.terms()[a].coeff());
    const double mb = std::abs(op.terms()[b].coeff());
    return ma != mb ? ma > mb : a < b;
  });

  std::vector<bool> assigned(op.size(), false);
  std::vector<AnticommutingGroup> groups;
  for (std::size_t si = 0; si < order.size(); ++si) {
    if (assigned[order[si]]) continue;
    AnticommutingGroup g;
    g.members.push_back(op.terms()[order[si]]);
    assigned[order[si]] = true;
    for (std::size_t sj = si + 1; sj < order.size(); ++sj) {
      const auto& cand = op.terms()[order[sj]];
      if (assigned[order[sj]]) continue;
      const bool fits =
          std::all_of(g.members.begin(), g.members.end(),
                      [&](const PauliTerm& m) { return !commutes(m, cand); });
      if (fits) {
        g.members.push_back(cand);
        assigned[order[sj]] = true;
      }
    }
    double sq = 0.0;
    for (const auto& m : g.members) sq += m.coeff().real() * m.coeff().real();
    g.combined_norm = std::sqrt(sq);
    groups.push_back(std::move(g));
  }
  return groups;
}

std::vector<std::vector<PauliTerm>> group_qubitwise_commuting(
    const QubitOperator& op) {
  if (!op.is_hermitian()) {
    throw ValidationError("operator.non_hermitian",
                          "measurement grouping needs a Hermitian operator");
  }
  const auto& terms = op.terms();
  const std::size_t n = terms.size();
  std::vector<std::vector<std::size_t>> incompat(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!qubitwise_commutes(terms[i], terms[j])) {
        incompat[i].push_back(j);
        incompat[j].push_back(i);
      }
    }
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return incompat[a].size() != incompat[b].size()
               ? incompat[a].size() > incompat[b].size()
               : a < b;
  });

  constexpr std::size_t kUncolored = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> color(n, kUncolored);
  std::size_t num_colors = 0;
  for (std::size_t v : order) {
    std::vector<bool> used(num_colors + 1, false);
    for (std::size_t w : incompat[v]) {
      if (color[w] != kUncolored) used[color[w]] = true;
    }
    std::size_t c = 0;
    while (used[c]) ++c;
    color[v] = c;
    num_colors = std::max(num_colors, c + 1);
  }

  std::vector<std::vector<PauliTerm>> groups(num_colors);
  for (std::size_t i = 0; i < n; ++i) groups[color[i]].push_back(terms[i]);
  return groups;
}

QubitOperator number_operator(std::uint32_t num_modes) {
  QubitOperator n(num_modes);
  for (std::uint32_t j = 0; j < num_modes; ++j) {
    n.add(PauliTerm::identity(0.5));
    n.add(PauliTerm::single(Axis::Z, j, -0.5));
  }
  return n;
}

QubitOperator effective_shift(const QubitOperator& op,
                              std::uint32_t n_electrons, double c) {
  if (op.num_qubits() == 0) {
    throw ValidationError("operator.empty_register",
                          "effective shift needs at least one mode");
  }
  if (c == 0.0) return op;
  const QubitOperator n = number_operator(op.num_qubits());
  QubitOperator shift = n * n;
  shift.add(QubitOperator::identity(
      op.num_qubits(),
      -static_cast<double>(n_electrons) * static_cast<double>(n_electrons)));
  shift.scale(c);
  return op + shift;
}

std::pair<double, double> optimize_shift(const QubitOperator& op,
                                         std::uint32_t n_electrons,
                                         std::span<const double> c_grid) {
  if (c_grid.empty()) {
    throw ValidationError("shift.empty_grid", "shift grid must be nonempty");
  }
  double best_c = c_grid[0];
  double best_l1 = l1_norm(effective_shift(op, n_electrons, best_c));
  for (std::size_t i = 1; i < c_grid.size(); ++i) {
    const double c = c_grid[i];
    const double v = l1_norm(effective_shift(op, n_electrons, c));
    const bool better =
        v < best_l1 ||
        (v == best_l1 && (std::abs(c) < std::abs(best_c) ||
                          (std::abs(c) == std::abs(best_c) && c < best_c)));
    if (better) {
      best_c = c;
      best_l1 = v;
    }
  }
  return {best_c, best_l1};
}

}  // namespace qcw
