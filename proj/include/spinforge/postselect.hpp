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

#include "spinforge/spin.hpp"
#include "spinforge/statevector.hpp"

namespace spinforge {

/// Wigner rotation element d^s_{s_z, s}(theta) between |s, s_z> and the
/// stretched state |s, s> under a spin-y rotation:
/// sqrt((2s)!/((s+s_z)!(s-s_z)!)) cos^{s+s_z}(theta/2) sin^{s-s_z}(theta/2).
double wigner_d(HalfInt s, HalfInt s_z, double theta);

/// Angle maximizing wigner_d(s, s_z, .)^2: 2 arcsin sqrt((s - s_z)/(2s)).
/// Returns 0 for s = 0 (no rotation needed).
double theta_opt(HalfInt s, HalfInt s_z);

/// Peak projection weight wigner_d(s, s_z, theta_opt)^2 in the closed form
/// (2s)!/((s+s_z)!(s-s_z)!) (s+s_z)^{s+s_z}(s-s_z)^{s-s_z}/(2s)^{2s}, 0^0 = 1.
double wigner_weight(HalfInt s, HalfInt s_z);

struct RotationPlan {
  HalfInt s_star;
  HalfInt s_z_star;
  double theta;
  double expected_weight;

  static RotationPlan make(HalfInt s_star, HalfInt s_z_star);
};

/// Global spin-y rotation e^{-i theta S_y}: a product of per-site rotations
/// (single-qubit for spin-1/2 sites, dense per-site exponentials for binary
/// sites). Commutes with S^2, so the spin-magnitude sector is preserved.
StateVector global_y_rotation(const StateVector& psi, const SpinRegister& reg,
                              double theta);

struct Projection {
  StateVector state;
  double probability;
};

/// Keeps amplitudes whose basis index has the given popcount, renormalizes,
/// and returns the kept probability mass.
Projection hamming_project_direct(const StateVector& psi, std::size_t weight);

/// Ancilla-circuit realization of the Hamming-weight projection:
/// m = ceil(log2 n) ancillas, Hadamards, phase gates
/// theta_k = 2^{k-m} pi n, controlled phases phi_k = -2^{k-m} pi from every
/// system qubit (k = 1..m), inverse QFT, post-selection on the outcome
/// (n - weight) mod 2^m. Distinct weights congruent mod 2^m alias to the same
/// outcome; an input with mass on an aliased weight raises a weight-aliasing
/// error instead of a wrong projection.
Projection hamming_project_circuit(const StateVector& psi, std::size_t weight);

/// Ancilla measurement outcome the circuit assigns to a Hamming weight.
std::size_t hamming_circuit_outcome(std::size_t n_qubits, std::size_t weight);

struct SzProjection {
  StateVector state;
  double probability;
  /// Amplitude mass removed from unphysical site levels.
  double leakage;
};

/// Projection onto the total-Sz eigenspace of an encoded register (direct
/// substitute for the circuit on binary encodings). Unphysical amplitude is
/// removed and reported as leakage rather than renormalized away silently.
SzProjection project_sz_encoded(const StateVector& psi, const SpinRegister& reg,
                                HalfInt s_z);

struct PostselectOutcome {
  StateVector state;
  double theta;
  double predicted_weight;
  double probability;
  double leakage;  // encoded registers only
};

/// Stage-two pipeline: rotate by theta_opt(s*, s_z*) and project onto the
/// target Sz. Spin-1/2 registers use the Hamming-weight path (circuit or
/// direct); mixed/binary registers use project_sz_encoded.
PostselectOutcome rotate_and_project(const StateVector& psi, const SpinRegister& reg,
                                     HalfInt s_star, HalfInt s_z_star,
                                     bool use_circuit = true);

}  // namespace spinforge
