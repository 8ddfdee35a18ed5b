// Copyright 2026 The spinforge authors
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

#include <Eigen/Dense>

#include "spinforge/pauli.hpp"
#include "spinforge/statevector.hpp"

namespace spinforge {

/// Qubit ceiling for dense realizations. Defaults to 12; the
/// SPINFORGE_DENSE_LIMIT environment variable overrides it.
std::size_t dense_qubit_limit();

/// Exact 2^n x 2^n matrix of a Pauli sum. Throws a resource error above the
/// dense limit.
Eigen::MatrixXcd to_dense(const PauliSum& a);

/// Full spectrum of a Hermitian Pauli sum, eigenvalues ascending and
/// eigenvectors orthonormal (columns).
struct Spectrum {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXcd eigenvectors;

  std::size_t dim() const { return static_cast<std::size_t>(eigenvalues.size()); }
  StateVector eigenstate(std::size_t i) const;
  /// Number of eigenvalues within degeneracy_tol of the lowest.
  std::size_t ground_degeneracy(double degeneracy_tol = 1e-8) const;
  /// <psi| P0 |psi> where P0 projects onto the ground eigenspace.
  double ground_weight(const StateVector& psi, double degeneracy_tol = 1e-8) const;
  /// tr(P0 A)/tr(P0): sector average of an observable over the ground space.
  double ground_average(const Eigen::MatrixXcd& a_dense,
                        double degeneracy_tol = 1e-8) const;
};

Spectrum diagonalize(const PauliSum& h);
Spectrum diagonalize_dense(const Eigen::MatrixXcd& h);

/// e^{-iHt}|psi> via dense diagonalization (oracle path).
StateVector exact_evolve(const StateVector& psi, const PauliSum& h, double t);

/// Renormalized e^{-H tau}|psi>; `weight` receives ||e^{-H tau} psi||^2.
StateVector imaginary_time_evolve(const StateVector& psi, const PauliSum& h,
                                  double tau, double* weight = nullptr);

/// <psi| P0 |psi> against the ground eigenspace of H (degenerate levels are
/// grouped within degeneracy_tol).
double ground_subspace_fidelity(const StateVector& psi, const PauliSum& h,
                                double degeneracy_tol = 1e-8);

Eigen::VectorXcd to_eigen(const StateVector& psi);
StateVector from_eigen(std::size_t n_qubits, const Eigen::VectorXcd& v);

/// Orthonormal basis (columns) of the joint eigenspace S^2 = s2_value,
/// Sz = sz_value. Returns a dim x k matrix (k may be 0).
Eigen::MatrixXcd sector_basis(const PauliSum& s2, const PauliSum& sz,
                              double s2_value, double sz_value,
                              double value_tol = 1e-6);

/// Lowest eigenvalue of H restricted to the given sector basis.
double sector_ground_energy(const PauliSum& h, const Eigen::MatrixXcd& basis);

/// Ground eigenvector of H restricted to the sector, mapped back to the full
/// space. Throws on an empty sector.
StateVector sector_ground_state(const PauliSum& h, const Eigen::MatrixXcd& basis);

}  // namespace spinforge
