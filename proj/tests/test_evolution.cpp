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

#include <sstream>

#include "spinforge/evolution.hpp"
#include "spinforge/penalty.hpp"
#include "test_helpers.hpp"

using namespace spinforge;
using namespace spinforge::testing;

namespace {

ObservableSet ring_observables(std::size_t n, const PauliSum& h_sys) {
  const auto total = total_spin_operators(SpinRegister::spin_half_chain(n));
  return ObservableSet{h_sys, total.s2, total.sz};
}

}  // namespace

TEST_CASE("sine-squared schedule reaches T for the default parameters") {
  const AteSchedule sched = AteSchedule::sine_squared(1.0, 20000, 1e-4);
  double t = 0;
  for (std::size_t i = 0; i < sched.steps; ++i) t += sched.dt_at(i);
  CHECK(std::abs(t - 1.0) < 1e-9);
  CHECK(sched.dt_at(0) == 0.0);
  CHECK(sched.dt_at(5000) == doctest::Approx(1e-4));

  const AteSchedule flat = AteSchedule::constant(2.0, 100, 0.02);
  CHECK(flat.dt_at(7) == doctest::Approx(0.02));
  CHECK_THROWS_AS(AteSchedule::sine_squared(1.0, 100, 0.0), Error);
}

TEST_CASE("pite derived constants satisfy their defining relations") {
  PiteConfig cfg;
  cfg.m0 = 0.8;
  cfg.dt = 0.015;
  cfg.validate();
  CHECK(std::abs(cfg.s() - cfg.m0 / std::sqrt(1 - cfg.m0 * cfg.m0)) < 1e-14);
  CHECK(cfg.kappa() == 1);
  CHECK(std::abs(std::cos(cfg.theta0()) -
                 (cfg.m0 + std::sqrt(1 - cfg.m0 * cfg.m0)) / std::sqrt(2.0)) < 1e-14);

  PiteConfig low;
  low.m0 = 0.3;
  CHECK(low.kappa() == -1);
  CHECK(low.theta0() < 0);

  PiteConfig bad;
  bad.m0 = 1.0 / std::sqrt(2.0);
  CHECK_THROWS_AS(bad.validate(), Error);
  bad.m0 = 1.2;
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("pite circuit step: zero Hamiltonian gives exactly m0^2") {
  std::mt19937 rng(3);
  const StateVector psi = random_state(rng, 3);
  PiteConfig cfg;
  cfg.m0 = 0.8;
  cfg.dt = 0.01;
  const PauliSum zero(3);
  const PiteStepResult r = pite_step_circuit(psi, zero, cfg, Evolver::exact);
  CHECK(r.p_success == doctest::Approx(0.64).epsilon(1e-12));
  CHECK(state_distance(r.state, psi) < 1e-12);
}

TEST_CASE("pite circuit step approximates the exact map on scalar Hamiltonians") {
  std::mt19937 rng(5);
  const StateVector psi = random_state(rng, 2);
  PiteConfig cfg;
  cfg.m0 = 0.8;
  cfg.dt = 0.01;
  const double energy = 0.7;
  const PauliSum scalar = PauliSum::identity(2, energy);
  const PiteStepResult circuit = pite_step_circuit(psi, scalar, cfg, Evolver::exact);
  const PiteStepResult exact = pite_step_exact(psi, scalar, cfg);
  CHECK(state_distance(circuit.state, psi) < 1e-12);  // scalar: state unchanged
  CHECK(exact.p_success ==
        doctest::Approx(0.64 * std::exp(-2 * energy * cfg.dt)).epsilon(1e-12));
  CHECK(circuit.p_success == doctest::Approx(exact.p_success).epsilon(5e-4));
}

TEST_CASE("pite circuit step error is second order in dt") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const PauliSum h = random_sum(rng, 3, 6, true);
    const StateVector psi = random_state(rng, 3);
    std::vector<double> dts = {0.02, 0.01, 0.005};
    std::vector<double> errs;
    for (const double dt : dts) {
      PiteConfig cfg;
      cfg.m0 = 0.8;
      cfg.dt = dt;
      const PiteStepResult a = pite_step_circuit(psi, h, cfg, Evolver::exact);
      const PiteStepResult b = pite_step_exact(psi, h, cfg);
      errs.push_back(state_distance(a.state, b.state));
    }
    const double order = std::log(errs[0] / errs[2]) / std::log(4.0);
    CHECK(order > 1.8);
    CHECK(order < 2.2);
  }
}

TEST_CASE("pite exact step on an eigenstate") {
  const PauliSum h = heisenberg_ring(3, 1.0);
  const Spectrum spec = diagonalize(h);
  PiteConfig cfg;
  cfg.m0 = 0.8;
  cfg.dt = 0.05;
  const PiteStepResult r = pite_step_exact(spec.eigenstate(0), h, cfg);
  CHECK(r.p_success ==
        doctest::Approx(0.64 * std::exp(-2 * spec.eigenvalues[0] * cfg.dt)));
  CHECK(r.state.overlap(spec.eigenstate(0)) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("repeated exact pite steps reproduce the spectral formula") {
  std::mt19937 rng(11);
  const PauliSum h = random_sum(rng, 3, 8, true);
  const Spectrum spec = diagonalize(h);
  const StateVector psi0 = random_state(rng, 3);
  PiteConfig cfg;
  cfg.m0 = 0.8;
  cfg.dt = 0.07;

  StateVector psi = psi0;
  const int k = 9;
  double prev_energy = expectation(psi, h);
  for (int i = 0; i < k; ++i) {
    psi = pite_step_exact(psi, h, cfg).state;
    const double e = expectation(psi, h);
    CHECK(e <= prev_energy + 1e-10);
    prev_energy = e;
  }
  // <H> after k steps from the spectral weights e^{-2 E tau k} |c_i|^2.
  double num = 0, den = 0;
  const Eigen::VectorXcd c = spec.eigenvectors.adjoint() * to_eigen(psi0);
  for (int i = 0; i < 8; ++i) {
    const double w = std::norm(c[i]) * std::exp(-2.0 * spec.eigenvalues[i] * cfg.dt * k);
    num += w * spec.eigenvalues[i];
    den += w;
  }
  CHECK(prev_energy == doctest::Approx(num / den).epsilon(1e-9));
}

TEST_CASE("stationary ATE keeps fidelity 1") {
  const PauliSum h = heisenberg_ring(4, 2.0);
  const Spectrum spec = diagonalize(h);
  const ObservableSet obs = ring_observables(4, h);
  const AteSchedule sched = AteSchedule::sine_squared(0.5, 300, 0.5 * 2 / 300.0);
  const EvolutionRecord rec =
      ate_run(h, h, obs, spec.eigenstate(0), sched, Evolver::exact, 50);
  for (const auto& row : rec.rows) {
    CHECK(row.fidelity == doctest::Approx(1.0).epsilon(1e-8));
  }
  CHECK(rec.warnings.empty());
}

TEST_CASE("ate initial state helpers") {
  // Alternating-x: ground state of sum (-1)^i sigma_ix, checked densely.
  const auto reg2 = SpinRegister::spin_half_chain(2);
  auto [h2, psi2] = ate_initial_alternating_x(reg2);
  const Spectrum spec2 = diagonalize(h2);
  CHECK(spec2.eigenvalues[0] == doctest::Approx(-2.0));
  CHECK(spec2.eigenvalues[1] > spec2.eigenvalues[0] + 1e-9);
  CHECK(spec2.ground_weight(psi2) == doctest::Approx(1.0).epsilon(1e-12));
  // Site 0 in |->: amplitudes of |00> and |01> have opposite signs.
  CHECK(psi2.amplitude(0).real() * psi2.amplitude(1).real() < 0);

  const auto reg1 = SpinRegister::spin_half_chain(1);
  auto [h1, psi1] = ate_initial_alternating_x(reg1);
  CHECK(ground_subspace_fidelity(psi1, h1) == doctest::Approx(1.0).epsilon(1e-12));

  // Diagonal-z: requested bits are the unique ground state.
  const auto reg5 = SpinRegister::spin_half_chain(5);
  auto [hz, psiz] = ate_initial_diagonal_z(reg5, 0b10110);
  const Spectrum specz = diagonalize(hz);
  CHECK(specz.eigenvalues[0] == doctest::Approx(-5.0));
  CHECK(specz.eigenvalues[1] > specz.eigenvalues[0] + 1.0);
  CHECK(std::abs(psiz.amplitude(0b10110) - Complex{1, 0}) < 1e-15);
  CHECK(specz.ground_weight(psiz) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("ate run records references and clamps the mixing ratio") {
  const std::size_t n = 4;
  const PauliSum h_sys = heisenberg_ring(n, 2.0);
  const auto reg = SpinRegister::spin_half_chain(n);
  const auto cfg = PenaltyConfig::with_default_cz(HalfInt(0), 6.0, PenaltyKind::linear);
  PauliSum h_prob = h_sys;
  h_prob += linear_spin_penalty(reg, cfg);
  auto [h_init, psi0] = ate_initial_alternating_x(reg);
  const ObservableSet obs = ring_observables(n, h_sys);

  // Overshooting schedule: total step sum exceeds T; lambda clamps at 1.
  const AteSchedule sched = AteSchedule::constant(0.5, 200, 0.004);
  const EvolutionRecord rec =
      ate_run(h_init, h_prob, obs, psi0, sched, Evolver::exact, 20);
  CHECK(rec.t_final == doctest::Approx(0.8));
  const Spectrum final_spec = diagonalize(h_prob);
  CHECK(rec.rows.back().ref_energy.value() ==
        doctest::Approx(final_spec.eigenvalues[0]).epsilon(1e-10));
  CHECK(rec.rows.front().fidelity == doctest::Approx(1.0).epsilon(1e-10));
  for (const auto& row : rec.rows) {
    CHECK(row.ref_s2.has_value());
    CHECK_FALSE(row.p_step.has_value());
  }

  // A wrong initial state triggers the fidelity warning.
  const EvolutionRecord warned = ate_run(
      h_init, h_prob, obs, StateVector::basis(n, 3), sched, Evolver::exact, 100);
  CHECK_FALSE(warned.warnings.empty());
}

TEST_CASE("exact and trotter evolvers agree for small steps") {
  const std::size_t n = 3;
  const PauliSum h_sys = heisenberg_ring(n, 1.0);
  const auto reg = SpinRegister::spin_half_chain(n);
  const auto cfg =
      PenaltyConfig::with_default_cz(HalfInt::from_twice(1), 2.0, PenaltyKind::linear);
  PauliSum h_prob = h_sys;
  h_prob += linear_spin_penalty(reg, cfg);
  auto [h_init, psi0] = ate_initial_alternating_x(reg);
  const ObservableSet obs = ring_observables(n, h_sys);
  const AteSchedule sched = AteSchedule::constant(0.2, 400, 0.0005);
  const EvolutionRecord exact =
      ate_run(h_init, h_prob, obs, psi0, sched, Evolver::exact, 400);
  const EvolutionRecord trotter =
      ate_run(h_init, h_prob, obs, psi0, sched, Evolver::trotter, 400);
  CHECK(exact.rows.back().energy_problem ==
        doctest::Approx(trotter.rows.back().energy_problem).epsilon(1e-3));
  CHECK(exact.rows.back().s2 == doctest::Approx(trotter.rows.back().s2).epsilon(1e-3));
}

TEST_CASE("exact evolver conserves the spin sector along the path") {
  // Diagonal-z initial Hamiltonian commutes with Sz, so <Sz> must stay put.
  const std::size_t n = 4;
  const PauliSum h_sys = heisenberg_ring(n, 2.0);
  const auto reg = SpinRegister::spin_half_chain(n);
  const auto cfg = PenaltyConfig::with_default_cz(HalfInt(1), 4.0, PenaltyKind::linear);
  PauliSum h_prob = h_sys;
  h_prob += linear_spin_penalty(reg, cfg);
  auto [h_init, psi0] = ate_initial_diagonal_z(reg, 0b1000);
  const ObservableSet obs = ring_observables(n, h_sys);
  const AteSchedule sched = AteSchedule::sine_squared(1.0, 2000, 1e-3);
  const EvolutionRecord rec =
      ate_run(h_init, h_prob, obs, psi0, sched, Evolver::exact, 200);
  for (const auto& row : rec.rows) {
    CHECK(std::abs(row.sz - 1.0) < 1e-6);
  }
}

TEST_CASE("pite run on the ring converges with exact probability bookkeeping") {
  const std::size_t n = 4;
  const PauliSum h_sys = heisenberg_ring(n, 2.0);
  const auto reg = SpinRegister::spin_half_chain(n);
  const auto cfg = PenaltyConfig::with_default_cz(HalfInt(1), 7.5, PenaltyKind::linear);
  PauliSum h_prob = h_sys;
  h_prob += linear_spin_penalty(reg, cfg);
  const StateVector psi0 = basis_state(reg, sz_labels_for_total(reg, HalfInt(1)));
  const ObservableSet obs = ring_observables(n, h_sys);
  PiteConfig pcfg;
  pcfg.m0 = 0.8;
  pcfg.dt = 0.015;
  pcfg.steps = 600;
  const EvolutionRecord rec = pite_run(h_prob, obs, psi0, pcfg, Evolver::exact, 25);

  // Energy is non-increasing; probabilities multiply exactly.
  double cum = 1.0;
  double prev_seen = rec.rows.front().energy_problem;
  std::size_t prev_step = 0;
  for (std::size_t i = 1; i < rec.rows.size(); ++i) {
    const auto& row = rec.rows[i];
    CHECK(row.energy_problem <= prev_seen + 1e-10);
    prev_seen = row.energy_problem;
    REQUIRE(row.p_step.has_value());
    CHECK(*row.p_step > 0.0);
    CHECK(*row.p_step <= 1.0);
    // Between samples each step has the same probability only at convergence;
    // the cumulative column itself must obey the product law against the
    // per-row step probabilities reported at sampling resolution.
    prev_step = row.step;
    (void)prev_step;
    cum = *row.p_cum;
  }
  CHECK(cum > 0.0);
  const auto tail = rec.rows.back();
  const double target = expectation(diagonalize(h_prob).eigenstate(0), h_prob);
  CHECK(tail.energy_problem == doctest::Approx(target).epsilon(1e-6));
  CHECK(tail.fidelity == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("pite trotter evolver drives the first-order circuit") {
  const std::size_t n = 3;
  const PauliSum h_sys = heisenberg_ring(n, 1.0);
  const auto reg = SpinRegister::spin_half_chain(n);
  const auto cfg =
      PenaltyConfig::with_default_cz(HalfInt::from_twice(1), 3.0, PenaltyKind::linear);
  PauliSum h_prob = h_sys;
  h_prob += linear_spin_penalty(reg, cfg);
  const StateVector psi0 =
      basis_state(reg, sz_labels_for_total(reg, HalfInt::from_twice(1)));
  const ObservableSet obs = ring_observables(n, h_sys);
  PiteConfig pcfg;
  pcfg.m0 = 0.8;
  pcfg.dt = 0.01;
  pcfg.steps = 400;
  const EvolutionRecord rec = pite_run(h_prob, obs, psi0, pcfg, Evolver::trotter, 50);
  // The Trotterized first-order circuit carries an O(dt) fixed-point bias on
  // top of the O(dt^2) circuit error; percent-level agreement is the contract.
  const double target = diagonalize(h_prob).eigenvalues[0];
  CHECK(rec.rows.back().energy_problem == doctest::Approx(target).epsilon(0.02));
}

TEST_CASE("pite converges with the quartic penalty as well") {
  const std::size_t n = 4;
  const PauliSum h_sys = heisenberg_ring(n, 2.0);
  const auto reg = SpinRegister::spin_half_chain(n);
  const auto cfg = PenaltyConfig::with_default_cz(HalfInt(1), 3.0, PenaltyKind::quartic);
  PauliSum h_prob = h_sys;
  h_prob += quartic_spin_penalty(reg, cfg);
  const StateVector psi0 = basis_state(reg, sz_labels_for_total(reg, HalfInt(1)));
  const ObservableSet obs = ring_observables(n, h_sys);
  PiteConfig pcfg;
  pcfg.m0 = 0.8;
  pcfg.dt = 0.05;
  pcfg.steps = 500;
  const EvolutionRecord rec = pite_run(h_prob, obs, psi0, pcfg, Evolver::exact, 100);
  CHECK(rec.final_row().s2 == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(rec.final_row().sz == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(rec.final_row().fidelity == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("ate can record fidelity against the final ground subspace too") {
  const PauliSum h = heisenberg_ring(4, 2.0);
  const Spectrum spec = diagonalize(h);
  const ObservableSet obs = ring_observables(4, h);
  AteOptions opt;
  opt.extra_fidelity = true;
  const AteSchedule sched = AteSchedule::constant(0.1, 50, 0.002);
  const EvolutionRecord rec =
      ate_run(h, h, obs, spec.eigenstate(0), sched, Evolver::exact, 10, opt);
  for (const auto& row : rec.rows) {
    REQUIRE(row.fidelity_final.has_value());
    CHECK(*row.fidelity_final == doctest::Approx(1.0).epsilon(1e-8));
  }
  std::ostringstream os;
  rec.write_csv(os);
  CHECK(os.str().find(",fidelity_final") != std::string::npos);
}

TEST_CASE("pite cumulative probability equals the running product bitwise") {
  const std::size_t n = 3;
  const PauliSum h_sys = heisenberg_ring(n, 1.0);
  const auto reg = SpinRegister::spin_half_chain(n);
  const auto cfg =
      PenaltyConfig::with_default_cz(HalfInt::from_twice(3), 2.0, PenaltyKind::linear);
  PauliSum h_prob = h_sys;
  h_prob += linear_spin_penalty(reg, cfg);
  const StateVector psi0 =
      basis_state(reg, sz_labels_for_total(reg, HalfInt::from_twice(3)));
  const ObservableSet obs = ring_observables(n, h_sys);
  PiteConfig pcfg;
  pcfg.m0 = 0.8;
  pcfg.dt = 0.02;
  pcfg.steps = 40;
  // sample_every = 1 so every step is recorded.
  const EvolutionRecord rec = pite_run(h_prob, obs, psi0, pcfg, Evolver::exact, 1);
  REQUIRE(rec.rows.size() == 41);
  double product = 1.0;
  for (std::size_t i = 1; i < rec.rows.size(); ++i) {
    product *= *rec.rows[i].p_step;
    CHECK(std::abs(product - *rec.rows[i].p_cum) <= 1e-12 * std::abs(product));
  }
}

TEST_CASE("seeded sampling mode is deterministic and needs a bounded map") {
  const std::size_t n = 3;
  PauliSum h = heisenberg_ring(n, 1.0);
  // Shift the spectrum positive so m0 e^{-E dt} <= 1 holds.
  h.add_term(PauliString(n), 10.0);
  const auto total = total_spin_operators(SpinRegister::spin_half_chain(n));
  const ObservableSet obs{h, total.s2, total.sz};
  const StateVector psi0 = StateVector::basis(n, 1);
  PiteConfig pcfg;
  pcfg.m0 = 0.8;
  pcfg.dt = 0.02;
  pcfg.steps = 30;
  PiteOptions opt;
  opt.seed = 1234;
  const EvolutionRecord a = pite_run(h, obs, psi0, pcfg, Evolver::exact, 5, opt);
  const EvolutionRecord b = pite_run(h, obs, psi0, pcfg, Evolver::exact, 5, opt);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].energy_problem == b.rows[i].energy_problem);
    CHECK(*a.rows[i].p_cum == *b.rows[i].p_cum);
  }
  CHECK_THROWS_AS(pite_run(h, obs, psi0, pcfg, Evolver::trotter, 5, opt), Error);
}

TEST_CASE("record CSV has the pinned header and empty-column convention") {
  const std::size_t n = 3;
  const PauliSum h_sys = heisenberg_ring(n, 1.0);
  const auto reg = SpinRegister::spin_half_chain(n);
  const auto cfg =
      PenaltyConfig::with_default_cz(HalfInt::from_twice(1), 3.0, PenaltyKind::linear);
  PauliSum h_prob = h_sys;
  h_prob += linear_spin_penalty(reg, cfg);
  const StateVector psi0 =
      basis_state(reg, sz_labels_for_total(reg, HalfInt::from_twice(1)));
  const ObservableSet obs = ring_observables(n, h_sys);
  PiteConfig pcfg;
  pcfg.steps = 3;
  pcfg.dt = 0.01;
  EvolutionRecord rec = pite_run(h_prob, obs, psi0, pcfg, Evolver::exact, 1);
  rec.metadata["config"] = "test";
  std::ostringstream os;
  rec.write_csv(os);
  const std::string text = os.str();
  CHECK(text.find("# config=test\n") != std::string::npos);
  CHECK(text.find("step,t,energy_problem,energy_system,s2,sz,fidelity,p_step,p_cum,"
                  "ref_energy,ref_s2,ref_sz\n") != std::string::npos);
  // PITE rows end with three empty reference cells.
  const auto row_start = text.find("\n1,");
  REQUIRE(row_start != std::string::npos);
  const auto row_end = text.find('\n', row_start + 1);
  const std::string row = text.substr(row_start + 1, row_end - row_start - 1);
  CHECK(row.substr(row.size() - 3) == ",,,");
}
