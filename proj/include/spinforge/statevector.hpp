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

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "spinforge/pauli.hpp"

namespace spinforge {

/// Normalized complex amplitude vector over the 2^n computational basis.
/// Basis index bit q corresponds to qubit q (LSB = qubit 0). Statevectors are
/// capped at 30 qubits; symbolic Pauli algebra alone extends to 64.
class StateVector {
 public:
  static StateVector basis(std::size_t n_qubits, std::uint64_t index);
  /// Normalizes the input; throws if the norm is (near) zero.
  static StateVector from_amplitudes(std::size_t n_qubits,
                                     std::vector<Complex> amplitudes);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  std::vector<Complex>& amplitudes() { return amps_; }
  Complex amplitude(std::uint64_t index) const { return amps_[index]; }

  double norm() const;
  void renormalize();

  Complex inner(const StateVector& other) const;
  /// |<this|other>|^2.
  double overlap(const StateVector& other) const;

  /// index,re,im rows (no header); the inverse of read_amplitude_csv.
  void write_amplitude_csv(std::ostream& os) const;
  static StateVector read_amplitude_csv(std::istream& is);

 private:
  StateVector(std::size_t n_qubits, std::vector<Complex> amps)
      : n_qubits_(n_qubits), amps_(std::move(amps)) {}

  std::size_t n_qubits_;
  std::vector<Complex> amps_;
};

/// P|psi> for a bare Pauli string.
StateVector apply_pauli_string(const StateVector& psi, const PauliString& p);

/// exp(-i theta P)|psi>, exact via P^2 = I (cos theta I - i sin theta P).
StateVector apply_pauli_rotation(const StateVector& psi, const PauliString& p,
                                 double theta);

/// First-order product formula: applies exp(-i c_k P_k t) over H's terms in
/// canonical order. Exact when all terms commute.
StateVector trotter_step(const StateVector& psi, const PauliSum& h, double t);

/// <psi|A|psi> for Hermitian A. The imaginary residue is checked against the
/// 1e-8 contract and then discarded.
double expectation(const StateVector& psi, const PauliSum& a);
Complex expectation_complex(const StateVector& psi, const PauliSum& a);

// Elementary gates (used by the Hamming-weight projection circuit).
StateVector apply_hadamard(const StateVector& psi, std::size_t qubit);
/// diag(1, e^{i lambda}) on one qubit.
StateVector apply_phase(const StateVector& psi, std::size_t qubit, double lambda);
/// Phase e^{i lambda} when both qubits are |1>.
StateVector apply_cphase(const StateVector& psi, std::size_t a, std::size_t b,
                         double lambda);

/// Applies a dense unitary on the contiguous qubit span [offset, offset+count).
/// `u` is a row-major (2^count)^2 matrix with local bit q = span qubit q.
StateVector apply_local_unitary(const StateVector& psi, std::size_t offset,
                                std::size_t count, const std::vector<Complex>& u);

namespace detail {
// In-place kernels shared by the evolution drivers.
void apply_pauli_rotation_inplace(std::vector<Complex>& amps, const PauliString& p,
                                  double theta);
void trotter_step_inplace(std::vector<Complex>& amps, const PauliSum& h, double t);
Complex expectation_raw(const std::vector<Complex>& amps, const PauliSum& a);
}  // namespace detail

}  // namespace spinforge
