// Copyright 2026 The rykick Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rykick/crystal_modes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Dense>

#include "rykick/constants.hpp"
#include "rykick/error.hpp"

namespace rykick {

const char* to_string(Direction d) {
  switch (d) {
    case Direction::kX: return "x";
    case Direction::kY: return "y";
    case Direction::kZ: return "z";
  }
  return "?";
}

CrystalState CrystalState::all_ground(int n_ions, IonSpecies species, RydbergStateInfo state) {
  if (n_ions < 1) throw Error(ErrorCode::kValidation, "crystal needs at least one ion");
  return {std::vector<InternalState>(static_cast<std::size_t>(n_ions), InternalState::kGround),
          std::move(species), std::move(state)};
}

namespace {

// Dimensionless axial force on each ion: u_m - sum_p sign(u_m - u_p) / (u_m - u_p)^2.
Eigen::VectorXd axial_force(const Eigen::VectorXd& u) {
  const Eigen::Index n = u.size();
  Eigen::VectorXd f = u;
  for (Eigen::Index m = 0; m < n; ++m) {
    for (Eigen::Index p = 0; p < n; ++p) {
      if (p == m) continue;
      const double d = u[m] - u[p];
      f[m] -= (d > 0 ? 1.0 : -1.0) / (d * d);
    }
  }
  return f;
}

// Coulomb part of B^(z) plus the unit trap term: the Jacobian of axial_force.
Eigen::MatrixXd coulomb_hessian(const std::vector<double>& u) {
  const auto n = static_cast<Eigen::Index>(u.size());
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index m = 0; m < n; ++m) {
    for (Eigen::Index p = 0; p < n; ++p) {
      if (p == m) continue;
      const double inv3 = 1.0 / std::pow(std::abs(u[m] - u[p]), 3);
      b(m, p) = -2.0 * inv3;
      b(m, m) += 2.0 * inv3;
    }
  }
  return b;
}

bool strictly_increasing(const Eigen::VectorXd& u) {
  for (Eigen::Index i = 1; i < u.size(); ++i)
    if (!(u[i] > u[i - 1])) return false;
  return true;
}

}  // namespace

double equilibrium_residual(const std::vector<double>& u) {
  const Eigen::Map<const Eigen::VectorXd> v(u.data(), static_cast<Eigen::Index>(u.size()));
  return axial_force(v).cwiseAbs().maxCoeff();
}

EquilibriumPositions equilibrium_positions(int n_ions, double omega_z, const IonSpecies& species,
                                           const EquilibriumOptions& options) {
  if (n_ions < 1) throw Error(ErrorCode::kValidation, "n_ions must be >= 1");
  if (!(omega_z > 0.0)) throw Error(ErrorCode::kValidation, "omega_z must be > 0");
  validate(species);

  EquilibriumPositions out;
  const double e = species.charge;
  out.length_scale =
      std::cbrt(constants::kCoulomb * e * e / (species.mass * omega_z * omega_z));

  const Eigen::Index n = n_ions;
  if (n == 1) {
    out.u = {0.0};
    return out;
  }

  // Quasi-uniform seed with the empirical minimum spacing 2.018 N^-0.559.
  const double spacing = 2.018 * std::pow(static_cast<double>(n), -0.559);
  Eigen::VectorXd u(n);
  for (Eigen::Index i = 0; i < n; ++i) u[i] = (static_cast<double>(i) - 0.5 * (n - 1)) * spacing;

  Eigen::VectorXd f = axial_force(u);
  double norm = f.cwiseAbs().maxCoeff();
  int iter = 0;
  for (; iter < options.max_iterations && norm > options.tolerance; ++iter) {
    std::vector<double> uv(u.data(), u.data() + n);
    Eigen::MatrixXd jac = coulomb_hessian(uv);
    jac.diagonal().array() += 1.0;
    const Eigen::VectorXd step = jac.ldlt().solve(-f);
    double damping = 1.0;
    bool accepted = false;
    for (int k = 0; k < 60; ++k, damping *= 0.5) {
      Eigen::VectorXd trial = u + damping * step;
      if (!strictly_increasing(trial)) continue;
      Eigen::VectorXd ft = axial_force(trial);
      const double nt = ft.cwiseAbs().maxCoeff();
      if (nt < norm || nt <= options.tolerance) {
        u = std::move(trial);
        f = std::move(ft);
        norm = nt;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
  }
  if (!(norm <= options.tolerance)) {
    // Newton can stall a few ulps above a very tight tolerance; accept the
    // floating-point floor but not a genuine failure.
    if (!(norm < 1e-12)) {
      std::ostringstream msg;
      msg << "equilibrium solver stopped after " << iter << " iterations with residual " << norm;
      throw Error(ErrorCode::kNoConvergence, msg.str());
    }
  }
  // Remove the tiny centre-of-charge drift left by the solver.
  u.array() -= u.mean();
  out.u.assign(u.data(), u.data() + n);
  return out;
}

Eigen::MatrixXd hessian(Direction direction, const CrystalState& crystal,
                        const TrapParameters& trap, const EquilibriumPositions& positions) {
  const int n = crystal.n_ions();
  if (n < 1) throw Error(ErrorCode::kValidation, "crystal has no ions");
  if (static_cast<int>(positions.u.size()) != n)
    throw Error(ErrorCode::kValidation, "equilibrium positions do not match crystal size");

  const SquaredFrequencies bare = bare_frequencies_squared(trap, crystal.species);
  const SquaredFrequencies ryd =
      shifted_frequencies_squared(trap, crystal.species, crystal.rydberg_state.polarizability);
  const double wz2 = bare.z;

  Eigen::MatrixXd bz = coulomb_hessian(positions.u);
  for (int m = 0; m < n; ++m) {
    const bool r = crystal.internal[static_cast<std::size_t>(m)] == InternalState::kRydberg;
    bz(m, m) += (r ? ryd.z : bare.z) / wz2;
  }
  if (direction == Direction::kZ) return bz;

  Eigen::MatrixXd b = -0.5 * bz;
  for (int m = 0; m < n; ++m) {
    const bool r = crystal.internal[static_cast<std::size_t>(m)] == InternalState::kRydberg;
    const SquaredFrequencies& s = r ? ryd : bare;
    const double radial = direction == Direction::kX ? s.x : s.y;
    b(m, m) += (2.0 * radial + s.z) / (2.0 * wz2);
  }
  return b;
}

ModeStructure mode_structure(Direction direction, const CrystalState& crystal,
                             const TrapParameters& trap) {
  const SecularFrequencies bare = bare_frequencies(trap, crystal.species);
  const EquilibriumPositions pos =
      equilibrium_positions(crystal.n_ions(), bare.omega_z, crystal.species);
  return mode_structure(direction, crystal, trap, pos);
}

ModeStructure mode_structure(Direction direction, const CrystalState& crystal,
                             const TrapParameters& trap, const EquilibriumPositions& positions) {
  const SecularFrequencies bare = bare_frequencies(trap, crystal.species);
  for (auto s : crystal.internal) {
    if (s == InternalState::kRydberg) {
      shifted_frequencies(trap, crystal.species, crystal.rydberg_state);
      break;
    }
  }
  const Eigen::MatrixXd b = hessian(direction, crystal, trap, positions);
  const Eigen::MatrixXd sym = 0.5 * (b + b.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorCode::kNoConvergence, "Hessian eigensolver failed");

  const Eigen::Index n = sym.rows();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  const Eigen::VectorXd& mu = solver.eigenvalues();
  if (direction == Direction::kZ) {
    std::sort(order.begin(), order.end(), [&](auto a, auto c) { return mu[a] < mu[c]; });
  } else {
    std::sort(order.begin(), order.end(), [&](auto a, auto c) { return mu[a] > mu[c]; });
  }

  ModeStructure out;
  out.direction = direction;
  out.crystal = crystal;
  out.frequencies.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    if (!(mu[src] > 0.0)) {
      std::ostringstream msg;
      msg << "mode " << k + 1 << " along " << to_string(direction)
          << " has non-positive Hessian eigenvalue " << mu[src];
      throw Error(ErrorCode::kLinearInstability, msg.str());
    }
    out.frequencies[k] = std::sqrt(mu[src]) * bare.omega_z;
    Eigen::VectorXd v = solver.eigenvectors().col(src);
    Eigen::Index imax = 0;
    double vmax = -1.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      // Ties (e.g. the COM mode) resolve to the lowest index.
      if (std::abs(v[i]) > vmax * (1.0 + 1e-12)) {
        vmax = std::abs(v[i]);
        imax = i;
      }
    }
    if (v[imax] < 0.0) v = -v;
    out.eigenvectors.col(k) = v;
  }
  return out;
}

std::vector<ModeForce> mode_force_factors(const ModeStructure& modes, const IonSpecies& species) {
  std::vector<ModeForce> out;
  out.reserve(static_cast<std::size_t>(modes.n_modes()));
  const double scale = std::sqrt(static_cast<double>(modes.n_modes()));
  for (int k = 0; k < modes.n_modes(); ++k) {
    double w = modes.eigenvectors.col(k).sum();
    // Mirror-symmetric configurations give exactly antisymmetric modes; snap
    // the rounding residue so their closure rows vanish identically.
    if (std::abs(w) < 1e-12 * scale) w = 0.0;
    out.push_back({w, std::sqrt(constants::kHbar / (species.mass * modes.frequencies[k]))});
  }
  return out;
}

double lowest_transverse_ratio(int n_ions, double kappa) {
  if (n_ions < 1) throw Error(ErrorCode::kValidation, "n_ions must be >= 1");
  if (!(kappa > 0.0)) throw Error(ErrorCode::kValidation, "kappa must be > 0");
  IonSpecies unit{1.0, 1.0, {}};
  // Dimensionless positions do not depend on omega_z; any positive value works.
  const EquilibriumPositions pos = equilibrium_positions(n_ions, 1.0, unit);
  Eigen::MatrixXd bz = coulomb_hessian(pos.u);
  bz.diagonal().array() += 1.0;
  // Ground-state transverse Hessian in units of omega_x^2:
  // kappa * [(1/kappa + 1/2) I - B^(z)/2].
  Eigen::MatrixXd bx = -0.5 * kappa * bz;
  bx.diagonal().array() += 1.0 + 0.5 * kappa;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(bx, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double critical_anisotropy(int n_ions, double relative_tolerance) {
  if (n_ions < 2)
    throw Error(ErrorCode::kValidation, "a single ion has no zigzag transition");
  double lo = 1e-6;
  double hi = 1.0;
  while (lowest_transverse_ratio(n_ions, hi) > 0.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e6) throw Error(ErrorCode::kNoConvergence, "no zigzag point found");
  }
  int iter = 0;
  while ((hi - lo) > relative_tolerance * 0.5 * lo) {
    const double mid = 0.5 * (lo + hi);
    if (lowest_transverse_ratio(n_ions, mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (++iter > 200) throw Error(ErrorCode::kNoConvergence, "kappa bisection did not converge");
  }
  return 0.5 * (lo + hi);
}

TrapParameters with_anisotropy(const TrapParameters& trap, const IonSpecies& species,
                               double kappa) {
  if (!(kappa > 0.0)) throw Error(ErrorCode::kValidation, "kappa must be > 0");
  const SecularFrequencies bare = bare_frequencies(trap, species);
  const double wx2 = bare.omega_x * bare.omega_x;
  const double e = species.charge;
  const double m = species.mass;
  TrapParameters out = trap;
  out.gamma_dc = kappa * wx2 * m / (4.0 * e);
  const double rf_term = wx2 + 2.0 * e * out.gamma_dc * (1.0 + trap.epsilon) / m;
  out.gamma_rf = std::sqrt(rf_term * m * m * trap.omega_rf * trap.omega_rf / (2.0 * e * e));
  bare_frequencies(out, species);
  return out;
}

TrapParameters with_axial_anisotropy(const TrapParameters& trap, const IonSpecies& species,
                                     double kappa) {
  if (!(kappa > 0.0)) throw Error(ErrorCode::kValidation, "kappa must be > 0");
  validate(trap);
  validate(species);
  const double e = species.charge;
  const double m = species.mass;
  // omega_z^2 = 4 e g / M and omega_x^2 = R - 2 e g (1 + eps) / M; solve for g.
  const double rf_term =
      2.0 * e * e * trap.gamma_rf * trap.gamma_rf / (m * m * trap.omega_rf * trap.omega_rf);
  TrapParameters out = trap;
  out.gamma_dc = kappa * rf_term * m / (e * (4.0 + 2.0 * kappa * (1.0 + trap.epsilon)));
  bare_frequencies(out, species);
  return out;
}

}  // namespace rykick
