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

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "qcw/dense.hpp"
#include "qcw/errors.hpp"

namespace qcw {

namespace {

// Value of a diagonalized group on an outcome bitstring: every term becomes
// a Z-string on its support after the basis rotation.
double group_value(const std::vector<PauliTerm>& terms, std::uint64_t outcome) {
  double v = 0.0;
  for (const auto& term : terms) {
    std::uint64_t support = 0;
    for (const auto& f : term.factors()) support |= std::uint64_t{1} << f.qubit;
    const int parity = std::popcount(outcome & support) % 2;
    v += term.coeff().real() * (parity == 0 ? 1.0 : -1.0);
  }
  return v;
}

std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (std::uint64_t{out[1]} << 32) | out[0];
}

void check_coverage(const QubitOperator& op,
                    const std::vector<MeasurementGroup>& groups) {
  QubitOperator combined(op.num_qubits());
  for (const auto& g : groups) {
    for (const auto& t : g.terms) combined.add(t);
  }
  if (combined.size() != op.size()) {
    throw ValidationError("measure.coverage_mismatch",
                          "groups do not cover the operator's terms");
  }
  for (std::size_t i = 0; i < op.size(); ++i) {
    if (!PauliTerm::same_string(combined.terms()[i], op.terms()[i]) ||
        std::abs(combined.terms()[i].coeff() - op.terms()[i].coeff()) > 1e-9) {
      throw ValidationError("measure.coverage_mismatch",
                            "groups do not cover the operator's terms");
    }
  }
}

Eigen::VectorXd least_squares(const Eigen::MatrixXd& a,
                              const Eigen::VectorXd& b) {
  return a.jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(b);
}

}  // namespace

Circuit basis_change(const std::vector<PauliTerm>& terms,
                     std::uint32_t num_qubits) {
  std::map<std::uint32_t, Axis> basis;
  for (const auto& term : terms) {
    for (const auto& f : term.factors()) {
      const auto [it, inserted] = basis.emplace(f.qubit, f.axis);
      if (!inserted && it->second != f.axis) {
        throw ValidationError("measure.incompatible_group",
                              "group is not qubitwise-commuting");
      }
      if (f.qubit >= num_qubits) {
        throw ValidationError("measure.qubit_out_of_range",
                              "term acts outside the register");
      }
    }
  }
  Circuit c(num_qubits);
  for (const auto& [q, axis] : basis) {
    if (axis == Axis::X) {
      c.append(Gate::h(q));
    } else if (axis == Axis::Y) {
      c.append(Gate::sdg(q));
      c.append(Gate::h(q));
    }
  }
  return c;
}

std::vector<MeasurementGroup> make_measurement_groups(const QubitOperator& op) {
  std::vector<MeasurementGroup> groups;
  for (auto& terms : group_qubitwise_commuting(op)) {
    MeasurementGroup g;
    g.basis_circuit = basis_change(terms, op.num_qubits());
    g.terms = std::move(terms);
    groups.push_back(std::move(g));
  }
  return groups;
}

void allocate_shots(std::vector<MeasurementGroup>& groups, std::uint64_t total,
                    ShotStrategy strategy) {
  const std::size_t n = groups.size();
  if (n == 0) return;
  if (total < n) {
    throw ValidationError("measure.too_few_shots",
                          "need at least one shot per group");
  }
  std::vector<double> weights(n, 1.0);
  if (strategy == ShotStrategy::ProportionalL1) {
    for (std::size_t i = 0; i < n; ++i) {
      double w = 0.0;
      for (const auto& t : groups[i].terms) w += std::abs(t.coeff());
      weights[i] = w;
    }
  }
  const double wsum = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (wsum <= 0.0) std::fill(weights.begin(), weights.end(), 1.0);
  const double norm = std::accumulate(weights.begin(), weights.end(), 0.0);

  std::vector<double> exact(n);
  std::uint64_t assigned = 0;
  for (std::size_t i = 0; i < n; ++i) {
    exact[i] = static_cast<double>(total) * weights[i] / norm;
    groups[i].shots = static_cast<std::uint64_t>(std::floor(exact[i]));
    assigned += groups[i].shots;
  }
  // Largest remainder first; ties to the lower index.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a,
                                                   std::size_t b) {
    return exact[a] - std::floor(exact[a]) > exact[b] - std::floor(exact[b]);
  });
  for (std::size_t k = 0; assigned < total; ++k) {
    ++groups[order[k % n]].shots;
    ++assigned;
  }
  // Zero-shot groups steal from the largest allocation.
  for (auto& g : groups) {
    if (g.shots == 0) {
      auto donor = std::max_element(
          groups.begin(), groups.end(),
          [](const MeasurementGroup& a, const MeasurementGroup& b) {
            return a.shots < b.shots;
          });
      --donor->shots;
      ++g.shots;
    }
  }
}

EstimateReport estimate_expectation(const StateVec& state,
                                    const QubitOperator& op,
                                    const std::vector<MeasurementGroup>& groups,
                                    std::uint64_t seed) {
  if (!op.is_hermitian()) {
    throw ValidationError("operator.non_hermitian",
                          "estimation needs a Hermitian operator");
  }
  check_coverage(op, groups);

  EstimateReport report;
  report.seed = seed;
  double variance_sum = 0.0;
  bool unbounded = false;
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const auto& g = groups[gi];
    GroupStats stats;
    stats.shots = g.shots;
    if (g.shots == 0) {
      throw ValidationError("measure.too_few_shots",
                            "every group needs at least one shot");
    }
    const StateVec rotated = run(g.basis_circuit, state);
    const auto counts = sample(rotated, g.shots, derived_seed(seed, gi));
    double mean = 0.0;
    for (const auto& [outcome, count] : counts) {
      mean += group_value(g.terms, outcome) * static_cast<double>(count);
    }
    mean /= static_cast<double>(g.shots);
    double var = 0.0;
    if (g.shots > 1) {
      for (const auto& [outcome, count] : counts) {
        const double d = group_value(g.terms, outcome) - mean;
        var += d * d * static_cast<double>(count);
      }
      var /= static_cast<double>(g.shots - 1);
    } else {
      unbounded = true;
    }
    stats.mean = mean;
    stats.variance = var;
    report.per_group.push_back(stats);
    report.mean += mean;
    report.total_shots += g.shots;
    variance_sum += var / static_cast<double>(g.shots);
  }
  report.stderr_ = unbounded ? std::numeric_limits<double>::infinity()
                             : std::sqrt(variance_sum);
  return report;
}

EstimateReport shadow_estimate(const StateVec& state, const QubitOperator& op,
                               std::uint64_t samples, std::uint64_t seed) {
  if (samples < 1) {
    throw ValidationError("measure.too_few_shots",
                          "need at least one shadow sample");
  }
  if (!op.is_hermitian()) {
    throw ValidationError("operator.non_hermitian",
                          "estimation needs a Hermitian operator");
  }
  const std::uint32_t n = state.num_qubits();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> basis_draw(0, 2);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const Axis axes[3] = {Axis::X, Axis::Y, Axis::Z};
  const Eigen::Matrix2cd to_x = gate_matrix_1q(Gate::h(0));
  const Eigen::Matrix2cd to_y = to_x * gate_matrix_1q(Gate::sdg(0));

  double sum = 0.0, sum_sq = 0.0;
  std::vector<Axis> bases(n);
  StateVec rotated = state;
  for (std::uint64_t s = 0; s < samples; ++s) {
    rotated.amplitudes() = state.amplitudes();
    for (std::uint32_t q = 0; q < n; ++q) {
      bases[q] = axes[basis_draw(rng)];
      if (bases[q] == Axis::X) {
        apply_1q(rotated, to_x, q);
      } else if (bases[q] == Axis::Y) {
        apply_1q(rotated, to_y, q);
      }
    }
    // One projective measurement from the shared stream.
    const auto& amps = rotated.amplitudes();
    double r = unif(rng);
    std::uint64_t outcome = rotated.dim() - 1;
    for (std::uint64_t i = 0; i < rotated.dim(); ++i) {
      r -= std::norm(amps[i]);
      if (r <= 0.0) {
        outcome = i;
        break;
      }
    }
    double value = 0.0;
    for (const auto& term : op.terms()) {
      double contrib = term.coeff().real();
      for (const auto& f : term.factors()) {
        if (bases[f.qubit] != f.axis) {
          contrib = 0.0;
          break;
        }
        const bool bit = (outcome >> f.qubit) & 1;
        contrib *= 3.0 * (bit ? -1.0 : 1.0);
      }
      value += contrib;
    }
    sum += value;
    sum_sq += value * value;
  }
  EstimateReport report;
  report.seed = seed;
  report.total_shots = samples;
  report.mean = sum / static_cast<double>(samples);
  if (samples > 1) {
    const double var =
        (sum_sq - sum * sum / static_cast<double>(samples)) /
        static_cast<double>(samples - 1);
    report.stderr_ = std::sqrt(std::max(0.0, var) /
                               static_cast<double>(samples));
  } else {
    report.stderr_ = std::numeric_limits<double>::infinity();
  }
  return report;
}

ZneModel zne_model_from_name(const std::string& name) {
  if (name == "linear") return ZneModel::Linear;
  if (name == "poly2") return ZneModel::Poly2;
  if (name == "exp") return ZneModel::Exp;
  throw ValidationError("zne.unknown_model", "unknown ZNE model: " + name);
}

double zne_extrapolate(std::span<const std::pair<double, double>> points,
                       ZneModel model) {
  const std::size_t n = points.size();
  const std::size_t need = model == ZneModel::Poly2 ? 3 : 2;
  if (n < need) {
    throw ValidationError("zne.too_few_points",
                          "not enough points for the requested model");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (points[i].first < 1.0) {
      throw ValidationError("zne.bad_factor", "noise factors must be >= 1");
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (points[i].first == points[j].first) {
        throw ValidationError("zne.degenerate", "noise factors must differ");
      }
    }
  }
  Eigen::VectorXd b(n);
  for (std::size_t i = 0; i < n; ++i) b(i) = points[i].second;

  if (model == ZneModel::Linear || model == ZneModel::Poly2) {
    const int cols = model == ZneModel::Linear ? 2 : 3;
    Eigen::MatrixXd a(n, cols);
    for (std::size_t i = 0; i < n; ++i) {
      const double f = points[i].first;
      a(i, 0) = 1.0;
      a(i, 1) = f;
      if (cols == 3) a(i, 2) = f * f;
    }
    return least_squares(a, b)(0);
  }

  // Exponential: v = a e^{-b f} + c. Two points pin c = 0 and solve
  // exactly; otherwise scan the decay rate and solve (a, c) linearly.
  if (n == 2) {
    const auto [f1, v1] = points[0];
    const auto [f2, v2] = points[1];
    if (v1 == v2) return v1;
    if (v1 == 0.0 || v2 == 0.0 || (v1 > 0) != (v2 > 0)) {
      throw ValidationError("zne.degenerate",
                            "two-point exponential fit needs same-sign values");
    }
    const double rate = std::log(v1 / v2) / (f2 - f1);
    return v1 * std::exp(rate * f1);
  }
  double best_rate = 0.0, best_residual = std::numeric_limits<double>::max();
  Eigen::Vector2d best_ac = Eigen::Vector2d::Zero();
  for (int step = 0; step <= 4000; ++step) {
    const double rate = step * 0.005;  // [0, 20]
    Eigen::MatrixXd a(n, 2);
    for (std::size_t i = 0; i < n; ++i) {
      a(i, 0) = std::exp(-rate * points[i].first);
      a(i, 1) = 1.0;
    }
    const Eigen::VectorXd ac = least_squares(a, b);
    const double res = (a * ac - b).squaredNorm();
    if (res < best_residual - 1e-15) {
      best_residual = res;
      best_rate = rate;
      best_ac = ac;
    }
  }
  (void)best_rate;
  return best_ac(0) + best_ac(1);  // value at factor 0
}

}  // namespace qcw
