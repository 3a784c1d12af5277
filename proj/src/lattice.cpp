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

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include <Eigen/Eigenvalues>

#include "qcw/dense.hpp"
#include "qcw/errors.hpp"

namespace qcw {

namespace {

constexpr std::uint32_t kMaxModelQubits = 24;
constexpr std::uint32_t kMaxDenseQubits = 12;

void require_axes(const LatticeSpec& lat, std::size_t n) {
  if (lat.cells.size() != n || (lat.periodic.size() != n)) {
    throw ValidationError("lattice.bad_dimensions",
                          "lattice needs " + std::to_string(n) +
                              " axis count(s) and periodic flag(s)");
  }
  for (std::uint32_t c : lat.cells) {
    if (c == 0) {
      throw ValidationError("lattice.bad_dimensions",
                            "axis counts must be positive");
    }
  }
}

// Chain/ring/square nearest-neighbor pairs; wrap bonds skipped for axes of
// length <= 2 to avoid duplicate edges.
std::vector<Bond> grid_bonds(const LatticeSpec& lat) {
  std::vector<Bond> bonds;
  if (lat.kind == LatticeKind::Chain || lat.kind == LatticeKind::Ring) {
    require_axes(lat, 1);
    const std::uint32_t n = lat.cells[0];
    const bool wrap = lat.kind == LatticeKind::Ring || lat.periodic[0];
    for (std::uint32_t i = 0; i + 1 < n; ++i) {
      bonds.push_back({i, i + 1, Axis::Z});
    }
    if (wrap && n > 2) bonds.push_back({n - 1, 0, Axis::Z});
    return bonds;
  }
  require_axes(lat, 2);
  const std::uint32_t nx = lat.cells[0], ny = lat.cells[1];
  const auto idx = [nx](std::uint32_t x, std::uint32_t y) {
    return y * nx + x;
  };
  for (std::uint32_t y = 0; y < ny; ++y) {
    for (std::uint32_t x = 0; x < nx; ++x) {
      if (x + 1 < nx) bonds.push_back({idx(x, y), idx(x + 1, y), Axis::Z});
      if (y + 1 < ny) bonds.push_back({idx(x, y), idx(x, y + 1), Axis::Z});
    }
  }
  if (lat.periodic[0] && nx > 2) {
    for (std::uint32_t y = 0; y < ny; ++y) {
      bonds.push_back({idx(nx - 1, y), idx(0, y), Axis::Z});
    }
  }
  if (lat.periodic[1] && ny > 2) {
    for (std::uint32_t x = 0; x < nx; ++x) {
      bonds.push_back({idx(x, ny - 1), idx(x, 0), Axis::Z});
    }
  }
  return bonds;
}

// Raw honeycomb cell-grid site id over an (hx+1) x (hy+1) grid of two-site
// cells; sub 0 = A, 1 = B.
struct HoneycombFlake {
  std::vector<std::uint32_t> sites;              // raw ids, ascending
  std::vector<std::tuple<std::uint32_t, std::uint32_t, Axis>> edges;  // raw
};

HoneycombFlake honeycomb_flake(std::uint32_t hx, std::uint32_t hy) {
  const std::uint32_t cols = hx + 1;  // cell-grid width
  const auto raw = [cols](std::uint32_t cx, std::uint32_t cy,
                          std::uint32_t sub) {
    return 2 * (cy * cols + cx) + sub;
  };
  std::set<std::uint32_t> sites;
  std::set<std::tuple<std::uint32_t, std::uint32_t, Axis>> edges;
  const auto add_edge = [&](std::uint32_t u, std::uint32_t v, Axis g) {
    edges.insert({std::min(u, v), std::max(u, v), g});
  };
  for (std::uint32_t i = 0; i < hx; ++i) {
    for (std::uint32_t j = 0; j < hy; ++j) {
      const std::uint32_t hex[6] = {raw(i, j, 1),     raw(i + 1, j, 0),
                                    raw(i + 1, j, 1), raw(i + 1, j + 1, 0),
                                    raw(i, j + 1, 1), raw(i, j + 1, 0)};
      for (std::uint32_t s : hex) sites.insert(s);
      add_edge(hex[0], hex[1], Axis::X);
      add_edge(hex[1], hex[2], Axis::Z);
      add_edge(hex[2], hex[3], Axis::Y);
      add_edge(hex[4], hex[3], Axis::X);
      add_edge(hex[5], hex[4], Axis::Z);
      add_edge(hex[0], hex[5], Axis::Y);
    }
  }
  HoneycombFlake flake;
  flake.sites.assign(sites.begin(), sites.end());
  flake.edges.assign(edges.begin(), edges.end());
  return flake;
}

std::vector<Bond> honeycomb_bonds(const LatticeSpec& lat) {
  require_axes(lat, 2);
  if (lat.periodic[0] || lat.periodic[1]) {
    throw ValidationError("lattice.unsupported",
                          "periodic honeycomb flakes are not supported");
  }
  const HoneycombFlake flake = honeycomb_flake(lat.cells[0], lat.cells[1]);
  std::map<std::uint32_t, std::uint32_t> compact;
  for (std::uint32_t s : flake.sites) {
    compact.emplace(s, static_cast<std::uint32_t>(compact.size()));
  }
  std::vector<Bond> bonds;
  bonds.reserve(flake.edges.size());
  for (const auto& [u, v, g] : flake.edges) {
    bonds.push_back({compact.at(u), compact.at(v), g});
  }
  return bonds;
}

void add_hopping(std::vector<FermionTerm>& terms, double amplitude,
                 std::uint32_t site_a, std::uint32_t site_b) {
  if (amplitude == 0.0) return;
  for (std::uint32_t spin = 0; spin < 2; ++spin) {
    const std::uint32_t ma = 2 * site_a + spin, mb = 2 * site_b + spin;
    terms.push_back({amplitude, {{ma, true}, {mb, false}}});
    terms.push_back({amplitude, {{mb, true}, {ma, false}}});
  }
}

void add_onsite_repulsion(std::vector<FermionTerm>& terms, double u,
                          std::uint32_t site) {
  if (u == 0.0) return;
  const std::uint32_t up = 2 * site, down = 2 * site + 1;
  terms.push_back(
      {u, {{up, true}, {up, false}, {down, true}, {down, false}}});
}

QubitOperator map_terms(const std::vector<FermionTerm>& terms,
                        std::uint32_t num_modes) {
  QubitOperator h(num_modes);
  for (const auto& t : terms) h.add(jordan_wigner(t, num_modes));
  return h;
}

Eigen::MatrixXcd dense_checked(const QubitOperator& op) {
  if (!op.is_hermitian()) {
    throw ValidationError("operator.non_hermitian",
                          "spectrum needs a Hermitian operator");
  }
  if (op.num_qubits() > kMaxDenseQubits) {
    throw ValidationError("operator.oversize",
                          "dense diagonalization capped at 12 qubits");
  }
  return dense::operator_matrix(op);
}

}  // namespace

LatticeKind lattice_kind_from_name(const std::string& name) {
  if (name == "chain") return LatticeKind::Chain;
  if (name == "ring") return LatticeKind::Ring;
  if (name == "square") return LatticeKind::Square;
  if (name == "honeycomb") return LatticeKind::Honeycomb;
  throw ValidationError("lattice.unknown_kind", "unknown lattice kind: " + name);
}

std::string lattice_kind_name(LatticeKind k) {
  switch (k) {
    case LatticeKind::Chain:
      return "chain";
    case LatticeKind::Ring:
      return "ring";
    case LatticeKind::Square:
      return "square";
    case LatticeKind::Honeycomb:
      return "honeycomb";
  }
  return "?";
}

std::uint32_t site_count(const LatticeSpec& lat) {
  switch (lat.kind) {
    case LatticeKind::Chain:
    case LatticeKind::Ring:
      require_axes(lat, 1);
      return lat.cells[0];
    case LatticeKind::Square:
      require_axes(lat, 2);
      return lat.cells[0] * lat.cells[1];
    case LatticeKind::Honeycomb: {
      require_axes(lat, 2);
      return static_cast<std::uint32_t>(
          honeycomb_flake(lat.cells[0], lat.cells[1]).sites.size());
    }
  }
  throw ValidationError("lattice.unknown_kind", "unknown lattice kind");
}

std::vector<Bond> lattice_bonds(const LatticeSpec& lat) {
  return lat.kind == LatticeKind::Honeycomb ? honeycomb_bonds(lat)
                                            : grid_bonds(lat);
}

QubitOperator jordan_wigner(const FermionTerm& term, std::uint32_t num_modes) {
  QubitOperator result = QubitOperator::identity(num_modes, term.coeff);
  for (const auto& op : term.ops) {
    if (op.mode >= num_modes) {
      throw ValidationError("fermion.mode_out_of_range",
                            "mode index exceeds register");
    }
    std::vector<PauliFactor> string_factors;
    for (std::uint32_t j = 0; j < op.mode; ++j) {
      string_factors.push_back({j, Axis::Z});
    }
    // (X + iY)/2 annihilates; the creation operator flips the Y sign.
    const cplx y_coeff = op.dagger ? cplx(0.0, -0.5) : cplx(0.0, 0.5);
    QubitOperator ladder(num_modes);
    auto x_factors = string_factors;
    x_factors.push_back({op.mode, Axis::X});
    ladder.add(PauliTerm(0.5, std::move(x_factors)));
    auto y_factors = std::move(string_factors);
    y_factors.push_back({op.mode, Axis::Y});
    ladder.add(PauliTerm(y_coeff, std::move(y_factors)));
    result = result * ladder;
  }
  return result;
}

QubitOperator hubbard_hamiltonian(const LatticeSpec& lat, double t, double u) {
  const std::uint32_t sites = site_count(lat);
  const std::uint32_t modes = 2 * sites;
  if (modes > kMaxModelQubits) {
    throw ValidationError("lattice.oversize",
                          "Hubbard model capped at 24 spin-orbitals");
  }
  std::vector<FermionTerm> terms;
  for (const Bond& b : lattice_bonds(lat)) add_hopping(terms, -t, b.a, b.b);
  for (std::uint32_t i = 0; i < sites; ++i) add_onsite_repulsion(terms, u, i);
  return map_terms(terms, modes);
}

QubitOperator emery_hamiltonian(std::uint32_t cells, double t_pd, double t_pp,
                                double delta_pd, double u_d, double u_p,
                                double v_pd) {
  if (cells == 0) {
    throw ValidationError("lattice.bad_dimensions", "need at least one cell");
  }
  const std::uint32_t orbitals = 3 * cells;
  const std::uint32_t modes = 2 * orbitals;
  if (modes > kMaxModelQubits) {
    throw ValidationError("lattice.oversize",
                          "Emery chain capped at 24 spin-orbitals");
  }
  const auto d_orb = [](std::uint32_t c) { return 3 * c; };
  const auto px_orb = [](std::uint32_t c) { return 3 * c + 1; };
  const auto py_orb = [](std::uint32_t c) { return 3 * c + 2; };

  std::vector<std::pair<std::uint32_t, std::uint32_t>> pd_bonds, pp_bonds;
  for (std::uint32_t c = 0; c < cells; ++c) {
    pd_bonds.emplace_back(d_orb(c), px_orb(c));
    pd_bonds.emplace_back(d_orb(c), py_orb(c));
    pp_bonds.emplace_back(px_orb(c), py_orb(c));
    if (c + 1 < cells) {
      pd_bonds.emplace_back(px_orb(c), d_orb(c + 1));  // bridging oxygen
      pp_bonds.emplace_back(px_orb(c), py_orb(c + 1));
    }
  }

  std::vector<FermionTerm> terms;
  for (const auto& [a, b] : pd_bonds) add_hopping(terms, t_pd, a, b);
  for (const auto& [a, b] : pp_bonds) add_hopping(terms, t_pp, a, b);
  if (delta_pd != 0.0) {
    for (std::uint32_t c = 0; c < cells; ++c) {
      for (std::uint32_t spin = 0; spin < 2; ++spin) {
        const std::uint32_t m = 2 * d_orb(c) + spin;
        terms.push_back({-delta_pd, {{m, true}, {m, false}}});
      }
    }
  }
  for (std::uint32_t c = 0; c < cells; ++c) {
    add_onsite_repulsion(terms, u_d, d_orb(c));
    add_onsite_repulsion(terms, u_p, px_orb(c));
    add_onsite_repulsion(terms, u_p, py_orb(c));
  }
  if (v_pd != 0.0) {
    for (const auto& [d, p] : pd_bonds) {
      for (std::uint32_t sigma = 0; sigma < 2; ++sigma) {
        for (std::uint32_t tau = 0; tau < 2; ++tau) {
          const std::uint32_t md = 2 * d + sigma, mp = 2 * p + tau;
          terms.push_back(
              {v_pd, {{md, true}, {md, false}, {mp, true}, {mp, false}}});
        }
      }
    }
  }
  return map_terms(terms, modes);
}

QubitOperator kitaev_heisenberg(const LatticeSpec& lat, double j, double k,
                                double gamma, double gamma_prime) {
  if (lat.kind != LatticeKind::Honeycomb) {
    throw ValidationError("lattice.wrong_kind",
                          "Kitaev-Heisenberg model needs a honeycomb lattice");
  }
  const std::uint32_t spins = site_count(lat);
  if (spins > kMaxModelQubits) {
    throw ValidationError("lattice.oversize", "spin model capped at 24 spins");
  }
  QubitOperator h(spins);
  const auto pair_term = [&](Axis ax_a, std::uint32_t qa, Axis ax_b,
                             std::uint32_t qb, double coeff) {
    if (coeff == 0.0) return;
    // S = sigma/2 on both sites.
    h.add(PauliTerm(coeff / 4.0, {{qa, ax_a}, {qb, ax_b}}));
  };
  for (const Bond& bond : lattice_bonds(lat)) {
    Axis alpha, beta;
    switch (bond.gamma) {
      case Axis::Z:
        alpha = Axis::X;
        beta = Axis::Y;
        break;
      case Axis::Y:
        alpha = Axis::Z;
        beta = Axis::X;
        break;
      default:  // X
        alpha = Axis::Y;
        beta = Axis::Z;
        break;
    }
    for (Axis ax : {Axis::X, Axis::Y, Axis::Z}) {
      pair_term(ax, bond.a, ax, bond.b, j);
    }
    pair_term(bond.gamma, bond.a, bond.gamma, bond.b, k);
    pair_term(alpha, bond.a, beta, bond.b, gamma);
    pair_term(beta, bond.a, alpha, bond.b, gamma);
    pair_term(bond.gamma, bond.a, alpha, bond.b, gamma_prime);
    pair_term(bond.gamma, bond.a, beta, bond.b, gamma_prime);
    pair_term(alpha, bond.a, bond.gamma, bond.b, gamma_prime);
    pair_term(beta, bond.a, bond.gamma, bond.b, gamma_prime);
  }
  return h;
}

QubitOperator heisenberg_model(const LatticeSpec& lat, double j) {
  const std::uint32_t spins = site_count(lat);
  if (spins > kMaxModelQubits) {
    throw ValidationError("lattice.oversize", "spin model capped at 24 spins");
  }
  QubitOperator h(spins);
  for (const Bond& bond : lattice_bonds(lat)) {
    for (Axis ax : {Axis::X, Axis::Y, Axis::Z}) {
      h.add(PauliTerm(j / 4.0, {{bond.a, ax}, {bond.b, ax}}));
    }
  }
  return h;
}

std::vector<double> exact_spectrum(const QubitOperator& op, std::uint32_t k) {
  const Eigen::MatrixXcd m = dense_checked(op);
  if (k > m.rows()) {
    throw ValidationError("spectrum.k_too_large",
                          "requested more eigenvalues than the dimension");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m,
                                                         Eigen::EigenvaluesOnly);
  std::vector<double> out(k);
  for (std::uint32_t i = 0; i < k; ++i) out[i] = solver.eigenvalues()(i);
  return out;
}

std::vector<double> sector_spectrum(const QubitOperator& op,
                                    std::uint32_t n_particles,
                                    std::uint32_t k) {
  const Eigen::MatrixXcd m = dense_checked(op);
  std::vector<std::uint64_t> basis;
  for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(m.rows()); ++i) {
    if (std::popcount(i) == static_cast<int>(n_particles)) basis.push_back(i);
  }
  if (basis.empty() || k > basis.size()) {
    throw ValidationError("spectrum.k_too_large",
                          "requested more eigenvalues than the sector holds");
  }
  Eigen::MatrixXcd block(basis.size(), basis.size());
  for (std::size_t r = 0; r < basis.size(); ++r) {
    for (std::size_t c = 0; c < basis.size(); ++c) {
      block(r, c) = m(basis[r], basis[c]);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(block,
                                                         Eigen::EigenvaluesOnly);
  std::vector<double> out(k);
  for (std::uint32_t i = 0; i < k; ++i) out[i] = solver.eigenvalues()(i);
  return out;
}

}  // namespace qcw
