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

#include <random>

#include "spinforge/dense.hpp"
#include "spinforge/pauli.hpp"
#include "spinforge/statevector.hpp"

namespace spinforge::testing {

inline PauliString random_string(std::mt19937& rng, std::size_t n_qubits) {
  std::uniform_int_distribution<int> letter(0, 3);
  std::uint64_t x = 0, z = 0;
  for (std::size_t q = 0; q < n_qubits; ++q) {
    const int l = letter(rng);
    if (l == 1 || l == 2) x |= std::uint64_t{1} << q;
    if (l == 2 || l == 3) z |= std::uint64_t{1} << q;
  }
  return PauliString::from_masks(n_qubits, x, z);
}

inline PauliSum random_sum(std::mt19937& rng, std::size_t n_qubits,
                           std::size_t n_terms, bool hermitian) {
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  PauliSum out(n_qubits);
  for (std::size_t i = 0; i < n_terms; ++i) {
    const Complex c = hermitian ? Complex{coeff(rng), 0.0}
                                : Complex{coeff(rng), coeff(rng)};
    out.add_term(random_string(rng, n_qubits), c);
  }
  return out;
}

inline StateVector random_state(std::mt19937& rng, std::size_t n_qubits) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Complex> amps(std::size_t{1} << n_qubits);
  for (auto& a : amps) a = Complex{g(rng), g(rng)};
  return StateVector::from_amplitudes(n_qubits, std::move(amps));
}

inline double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline double state_distance(const StateVector& a, const StateVector& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::norm(a.amplitude(i) - b.amplitude(i));
  return std::sqrt(s);
}

}  // namespace spinforge::testing
