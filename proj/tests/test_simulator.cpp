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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <sstream>

#include "spinforge/spin.hpp"
#include "test_helpers.hpp"

using namespace spinforge;
using namespace spinforge::testing;

namespace {

StateVector dense_rotation(const StateVector& psi, const PauliString& p, double theta) {
  const PauliSum as_sum = PauliSum::term(p, 1.0);
  return exact_evolve(psi, as_sum, theta);
}

}  // namespace

TEST_CASE("pauli string action matches the dense matrix") {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const StateVector psi = random_state(rng, 3);
    const PauliString p = random_string(rng, 3);
    const StateVector applied = apply_pauli_string(psi, p);
    const Eigen::VectorXcd expected = to_dense(PauliSum::term(p, 1.0)) * to_eigen(psi);
    CHECK(state_distance(applied, from_eigen(3, expected)) < 1e-14);
  }
}

TEST_CASE("pauli rotation basics") {
  std::mt19937 rng(3);
  const StateVector psi = random_state(rng, 3);
  const PauliString p = random_string(rng, 3);

  CHECK(state_distance(apply_pauli_rotation(psi, p, 0.0), psi) == 0.0);

  const StateVector zero = StateVector::basis(1, 0);
  const StateVector rotated =
      apply_pauli_rotation(zero, PauliString::single(1, 0, Pauli::Z), 0.7);
  CHECK(std::abs(rotated.amplitude(0) - std::polar(1.0, -0.7)) < 1e-15);
  CHECK(std::abs(rotated.amplitude(1)) == 0.0);
}

TEST_CASE("pauli rotation matches the dense exponential") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const StateVector psi = random_state(rng, 3);
    const PauliString p = random_string(rng, 3);
    const double theta = 2.0 * (trial - 12) / 7.0;
    CHECK(state_distance(apply_pauli_rotation(psi, p, theta),
                         dense_rotation(psi, p, theta)) < 1e-10);
  }
}

TEST_CASE("trotter_step is exact for single and commuting terms") {
  std::mt19937 rng(13);
  const StateVector psi = random_state(rng, 3);

  PauliSum single(3);
  single.add_term(random_string(rng, 3), 0.83);
  CHECK(state_distance(trotter_step(psi, single, 0.31),
                       exact_evolve(psi, single, 0.31)) < 1e-12);

  // All-Z sums commute termwise.
  PauliSum commuting(3);
  commuting.add_term(PauliString::from_letters("ZII"), 0.4);
  commuting.add_term(PauliString::from_letters("IZZ"), -0.9);
  commuting.add_term(PauliString::from_letters("ZZZ"), 0.2);
  CHECK(state_distance(trotter_step(psi, commuting, 0.5),
                       exact_evolve(psi, commuting, 0.5)) < 1e-10);

  PauliSum non_hermitian(3);
  non_hermitian.add_term(PauliString::from_letters("XII"), Complex{0, 1});
  CHECK_THROWS_AS(trotter_step(psi, non_hermitian, 0.1), Error);
}

TEST_CASE("trotter error scales as the step squared") {
  const PauliSum h = heisenberg_ring(4, 2.0);
  std::mt19937 rng(19);
  const StateVector psi = random_state(rng, 4);

  // Single-step error drops ~4x when the step is halved.
  const double e1 = state_distance(trotter_step(psi, h, 0.01), exact_evolve(psi, h, 0.01));
  const double e2 = state_distance(trotter_step(psi, h, 0.005), exact_evolve(psi, h, 0.005));
  CHECK(e1 / e2 > 3.0);
  CHECK(e1 / e2 < 5.0);

  // Fixed total time: halving the step halves the error (first order).
  auto composed = [&](int k) {
    StateVector out = psi;
    for (int i = 0; i < k; ++i) out = trotter_step(out, h, 0.2 / k);
    return state_distance(out, exact_evolve(psi, h, 0.2));
  };
  const double ratio = composed(8) / composed(16);
  CHECK(ratio > 1.8);
  CHECK(ratio < 2.2);
}

TEST_CASE("exact_evolve basics") {
  std::mt19937 rng(23);
  const StateVector psi = random_state(rng, 3);
  const PauliSum h = random_sum(rng, 3, 8, true);

  CHECK(state_distance(exact_evolve(psi, h, 0.0), psi) < 1e-14);

  // H = Z0 on |+> for t = pi/2 gives |-> up to a global phase.
  std::vector<Complex> plus = {Complex{1 / std::sqrt(2.0), 0},
                               Complex{1 / std::sqrt(2.0), 0}};
  const StateVector start = StateVector::from_amplitudes(1, plus);
  const StateVector end =
      exact_evolve(start, PauliSum::single(1, 0, Pauli::Z), std::numbers::pi / 2);
  std::vector<Complex> minus = {Complex{1 / std::sqrt(2.0), 0},
                                Complex{-1 / std::sqrt(2.0), 0}};
  CHECK(end.overlap(StateVector::from_amplitudes(1, minus)) ==
        doctest::Approx(1.0).epsilon(1e-12));

  // Norm preservation.
  CHECK(exact_evolve(psi, h, 1.7).norm() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("exact_evolve agrees with many composed trotter steps") {
  std::mt19937 rng(29);
  const StateVector psi = random_state(rng, 4);
  PauliSum h = random_sum(rng, 4, 10, true);
  h *= Complex{0.5, 0};
  StateVector out = psi;
  const int k = 1000;
  for (int i = 0; i < k; ++i) out = trotter_step(out, h, 0.4 / k);
  CHECK(state_distance(out, exact_evolve(psi, h, 0.4)) < 1e-4);
}

TEST_CASE("expectation values") {
  CHECK(expectation(StateVector::basis(1, 0), PauliSum::single(1, 0, Pauli::Z)) ==
        doctest::Approx(1.0));

  const auto total = total_spin_operators(SpinRegister::spin_half_chain(2));
  // Singlet (|01> - |10>)/sqrt(2) has S^2 = 0.
  std::vector<Complex> singlet(4, Complex{0, 0});
  singlet[1] = 1 / std::sqrt(2.0);
  singlet[2] = -1 / std::sqrt(2.0);
  CHECK(expectation(StateVector::from_amplitudes(2, singlet), total.s2) ==
        doctest::Approx(0.0).epsilon(1e-12));
  // |00> is the triplet top: S^2 = 2.
  CHECK(expectation(StateVector::basis(2, 0), total.s2) == doctest::Approx(2.0));

  PauliSum non_hermitian(2);
  non_hermitian.add_term(PauliString::from_letters("XI"), Complex{0.3, 0.4});
  std::mt19937 rng(31);
  CHECK_THROWS_AS(expectation(random_state(rng, 2), non_hermitian), Error);
}

TEST_CASE("diagonalize basics and consistency") {
  const Spectrum z = diagonalize(PauliSum::single(1, 0, Pauli::Z));
  CHECK(z.eigenvalues[0] == doctest::Approx(-1.0));
  CHECK(z.eigenvalues[1] == doctest::Approx(1.0));

  // Heisenberg pair sigma0.sigma1: singlet -3, triplet +1.
  PauliSum pair(2);
  for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
    const auto prod = pauli_mul(PauliString::single(2, 0, p), PauliString::single(2, 1, p));
    pair.add_term(prod.string, prod.phase);
  }
  const Spectrum spec = diagonalize(pair);
  CHECK(spec.eigenvalues[0] == doctest::Approx(-3.0));
  for (int i = 1; i < 4; ++i) CHECK(spec.eigenvalues[i] == doctest::Approx(1.0));

  // Orthonormality and eigen-residuals.
  std::mt19937 rng(37);
  const PauliSum h = random_sum(rng, 3, 10, true);
  const Spectrum hs = diagonalize(h);
  CHECK(max_abs_diff(hs.eigenvectors.adjoint() * hs.eigenvectors,
                     Eigen::MatrixXcd::Identity(8, 8)) < 1e-10);
  const Eigen::MatrixXcd hd = to_dense(h);
  for (int i = 0; i < 8; ++i) {
    const Eigen::VectorXcd r =
        hd * hs.eigenvectors.col(i) - hs.eigenvalues[i] * hs.eigenvectors.col(i);
    CHECK(r.cwiseAbs().maxCoeff() < 1e-8);
  }
  // Reconstruction sum_i E_i |v_i><v_i| matches the dense matrix.
  Eigen::MatrixXcd rebuilt = Eigen::MatrixXcd::Zero(8, 8);
  for (int i = 0; i < 8; ++i) {
    rebuilt += hs.eigenvalues[i] * hs.eigenvectors.col(i) *
               hs.eigenvectors.col(i).adjoint();
  }
  CHECK(max_abs_diff(rebuilt, hd) < 1e-8);
}

TEST_CASE("ground subspace fidelity") {
  std::mt19937 rng(41);
  const PauliSum h = random_sum(rng, 3, 10, true);
  const Spectrum spec = diagonalize(h);
  CHECK(ground_subspace_fidelity(spec.eigenstate(0), h) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ground_subspace_fidelity(spec.eigenstate(5), h) ==
        doctest::Approx(0.0).epsilon(1e-12));

  // Equal superposition of ground and first excited -> 0.5.
  std::vector<Complex> amps(8);
  for (int i = 0; i < 8; ++i) {
    amps[i] = (spec.eigenvectors(i, 0) + spec.eigenvectors(i, 1)) / std::sqrt(2.0);
  }
  CHECK(ground_subspace_fidelity(StateVector::from_amplitudes(3, amps), h) ==
        doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("unitary operations preserve the norm") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    StateVector psi = random_state(rng, 4);
    psi = apply_pauli_rotation(psi, random_string(rng, 4), 0.9);
    psi = trotter_step(psi, random_sum(rng, 4, 6, true), 0.2);
    psi = apply_hadamard(psi, trial % 4);
    psi = apply_phase(psi, (trial + 1) % 4, 0.4);
    psi = apply_cphase(psi, 0, 2, -0.8);
    CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("dense imaginary-time map never raises the energy") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    const PauliSum h = random_sum(rng, 4, 12, true);
    StateVector psi = random_state(rng, 4);
    double prev = expectation(psi, h);
    for (int k = 0; k < 5; ++k) {
      psi = imaginary_time_evolve(psi, h, 0.3);
      const double e = expectation(psi, h);
      CHECK(e <= prev + 1e-10);
      prev = e;
    }
  }
}

TEST_CASE("amplitude CSV round-trips") {
  std::mt19937 rng(53);
  const StateVector psi = random_state(rng, 3);
  std::stringstream ss;
  psi.write_amplitude_csv(ss);
  const StateVector back = StateVector::read_amplitude_csv(ss);
  CHECK(state_distance(psi, back) < 1e-12);
}
