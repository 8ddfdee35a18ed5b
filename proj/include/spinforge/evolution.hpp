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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spinforge/pauli.hpp"
#include "spinforge/spin.hpp"
#include "spinforge/statevector.hpp"

namespace spinforge {

/// How e^{-iHt} factors are applied inside the drivers: `exact` uses dense
/// machine-precision propagation, `trotter` a first-order product formula in
/// canonical term order.
enum class Evolver { exact, trotter };

std::string evolver_name(Evolver e);
Evolver evolver_from_name(const std::string& name);

/// Time-step rule for adiabatic runs.
///
/// sine_squared: dt_i = amplitude * sin^2(pi * 2 i / n). Summed over the run
/// this gives t_final = amplitude * n / 2 (1.0 for the default amplitude 1e-4
/// and n = 2e4), and the accumulated time enters the mixing ratio, which is
/// clamped to [0, 1] if the schedule overshoots total_time.
struct AteSchedule {
  enum class Rule { sine_squared, constant };

  double total_time = 1.0;
  std::size_t steps = 20000;
  Rule rule = Rule::sine_squared;
  /// sine_squared: peak step size; constant: the fixed step size.
  double amplitude = 1e-4;

  static AteSchedule sine_squared(double total_time, std::size_t steps,
                                  double amplitude);
  static AteSchedule constant(double total_time, std::size_t steps, double dt);

  double dt_at(std::size_t i) const;
  void validate() const;
};

/// Probabilistic imaginary-time step parameters with the derived constants
/// s = m0/sqrt(1-m0^2), kappa = sgn(m0 - 1/sqrt(2)),
/// theta0 = kappa * arccos((m0 + sqrt(1-m0^2))/sqrt(2)).
struct PiteConfig {
  double m0 = 0.8;
  double dt = 0.015;
  std::size_t steps = 2000;

  double s() const;
  int kappa() const;
  double theta0() const;
  void validate() const;
};

/// Observables recorded alongside the driving Hamiltonian.
struct ObservableSet {
  PauliSum h_system;
  PauliSum s2;
  PauliSum sz;
};

struct EvolutionRow {
  std::size_t step = 0;
  double t = 0;
  double energy_problem = 0;
  double energy_system = 0;
  double s2 = 0;
  double sz = 0;
  double fidelity = 0;
  std::optional<double> p_step;
  std::optional<double> p_cum;
  std::optional<double> ref_energy;
  std::optional<double> ref_s2;
  std::optional<double> ref_sz;
  std::optional<double> fidelity_final;
};

/// Time series of an evolution run. The CSV header is fixed:
/// step,t,energy_problem,energy_system,s2,sz,fidelity,p_step,p_cum,
/// ref_energy,ref_s2,ref_sz  (PITE leaves ref_* empty, ATE leaves p_* empty;
/// a fidelity_final column is appended when requested).
struct EvolutionRecord {
  std::vector<EvolutionRow> rows;
  std::map<std::string, std::string> metadata;
  std::vector<std::string> warnings;
  double t_final = 0;
  bool extra_fidelity = false;
  std::optional<StateVector> final_state;

  const EvolutionRow& final_row() const;
  void write_csv(std::ostream& os) const;
};

struct AteOptions {
  bool extra_fidelity = false;
  double degeneracy_tol = 1e-8;
};

/// Adiabatic drive H(t) = (1 - t/T) H_initial + (t/T) H_problem. Reference
/// columns come from exact diagonalization of the instantaneous Hamiltonian
/// at every sampled step; the fidelity column is measured against its ground
/// subspace (and optionally against the final H_problem ground subspace).
EvolutionRecord ate_run(const PauliSum& h_initial, const PauliSum& h_problem,
                        const ObservableSet& obs, const StateVector& psi0,
                        const AteSchedule& sched, Evolver evolver,
                        std::size_t sample_every, const AteOptions& opt = {});

/// H_initial = sum_i (-1)^i sigma_ix on a spin-1/2 register, with its exact
/// ground state (|-> on even sites, |+> on odd sites).
std::pair<PauliSum, StateVector> ate_initial_alternating_x(const SpinRegister& reg);

/// Diagonal H_initial = sum_q (-1)^{f(q)} sigma_qz with f derived from the
/// requested start bits so that the start state is the unique ground state.
std::pair<PauliSum, StateVector> ate_initial_diagonal_z(const SpinRegister& reg,
                                                        std::uint64_t start_bits);

struct PiteStepResult {
  StateVector state;
  double p_success = 0;
};

/// One step of the one-ancilla circuit: (WH x I), controlled e^{-/+ i H s dt},
/// (W^dag Rz(-2 theta0) x I), post-selected on ancilla |0>. The success branch
/// equals m0 e^{-H dt} |psi> up to O(dt^2).
PiteStepResult pite_step_circuit(const StateVector& psi, const PauliSum& h,
                                 const PiteConfig& cfg, Evolver evolver);

/// Exact non-unitary map M = m0 e^{-H dt} (dense oracle).
PiteStepResult pite_step_exact(const StateVector& psi, const PauliSum& h,
                               const PiteConfig& cfg);

struct PiteOptions {
  /// Seeded sampling demonstration: measurement outcomes are drawn instead of
  /// following the success branch deterministically (exact evolver only).
  std::optional<std::uint64_t> seed;
};

/// Deterministic trace of the always-success branch with exact per-step
/// probabilities. evolver = exact drives with the exact map m0 e^{-H dt};
/// evolver = trotter drives with the first-order circuit whose internal
/// real-time evolutions are Trotterized.
EvolutionRecord pite_run(const PauliSum& h_problem, const ObservableSet& obs,
                         const StateVector& psi0, const PiteConfig& cfg,
                         Evolver evolver, std::size_t sample_every,
                         const PiteOptions& opt = {});

}  // namespace spinforge
