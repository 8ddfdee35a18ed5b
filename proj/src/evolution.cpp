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

#include "spinforge/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "spinforge/dense.hpp"

namespace spinforge {

std::string evolver_name(Evolver e) {
  return e == Evolver::exact ? "exact" : "trotter";
}

Evolver evolver_from_name(const std::string& name) {
  if (name == "exact") return Evolver::exact;
  if (name == "trotter") return Evolver::trotter;
  throw Error(ErrorKind::invalid_config, "unknown evolver '" + name + "'");
}

AteSchedule AteSchedule::sine_squared(double total_time, std::size_t steps,
                                      double amplitude) {
  AteSchedule s;
  s.total_time = total_time;
  s.steps = steps;
  s.rule = Rule::sine_squared;
  s.amplitude = amplitude;
  s.validate();
  return s;
}

AteSchedule AteSchedule::constant(double total_time, std::size_t steps, double dt) {
  AteSchedule s;
  s.total_time = total_time;
  s.steps = steps;
  s.rule = Rule::constant;
  s.amplitude = dt;
  s.validate();
  return s;
}

void AteSchedule::validate() const {
  require(total_time > 0, ErrorKind::invalid_config, "AteSchedule: T must be positive");
  require(steps >= 1, ErrorKind::invalid_config, "AteSchedule: steps must be >= 1");
  require(amplitude > 0, ErrorKind::invalid_config,
          "AteSchedule: step amplitude must be positive");
}

double AteSchedule::dt_at(std::size_t i) const {
  if (rule == Rule::constant) return amplitude;
  const double phase =
      2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(steps);
  const double s = std::sin(phase);
  return amplitude * s * s;
}

double PiteConfig::s() const { return m0 / std::sqrt(1.0 - m0 * m0); }

int PiteConfig::kappa() const { return m0 > 1.0 / std::sqrt(2.0) ? 1 : -1; }

double PiteConfig::theta0() const {
  return kappa() * std::acos((m0 + std::sqrt(1.0 - m0 * m0)) / std::sqrt(2.0));
}

void PiteConfig::validate() const {
  require(m0 > 0 && m0 < 1, ErrorKind::invalid_config,
          "PiteConfig: m0 must lie in (0, 1)");
  require(std::abs(m0 - 1.0 / std::sqrt(2.0)) > 1e-12, ErrorKind::invalid_config,
          "PiteConfig: m0 = 1/sqrt(2) is excluded");
  require(dt > 0, ErrorKind::invalid_config, "PiteConfig: dt must be positive");
  require(steps >= 1, ErrorKind::invalid_config, "PiteConfig: steps must be >= 1");
}

const EvolutionRow& EvolutionRecord::final_row() const {
  require(!rows.empty(), ErrorKind::contract_violation,
          "EvolutionRecord: no rows recorded");
  return rows.back();
}

namespace {

void write_opt(std::ostream& os, const std::optional<double>& v) {
  os << ',';
  if (v) os << *v;
}

}  // namespace

void EvolutionRecord::write_csv(std::ostream& os) const {
  os.precision(12);
  for (const auto& [k, v] : metadata) os << "# " << k << '=' << v << '\n';
  for (const auto& w : warnings) os << "# warning " << w << '\n';
  os << "step,t,energy_problem,energy_system,s2,sz,fidelity,p_step,p_cum,"
        "ref_energy,ref_s2,ref_sz";
  if (extra_fidelity) os << ",fidelity_final";
  os << '\n';
  for (const auto& r : rows) {
    os << r.step << ',' << r.t << ',' << r.energy_problem << ',' << r.energy_system
       << ',' << r.s2 << ',' << r.sz << ',' << r.fidelity;
    write_opt(os, r.p_step);
    write_opt(os, r.p_cum);
    write_opt(os, r.ref_energy);
    write_opt(os, r.ref_s2);
    write_opt(os, r.ref_sz);
    if (extra_fidelity) write_opt(os, r.fidelity_final);
    os << '\n';
  }
}

namespace {

// Applies exp(-i H(lambda) dt) to machine precision via a shifted adaptive
// Taylor series; H(lambda) = A + lambda (B - A). Dense matrices are cached
// once, with a real fast path when both endpoints are real (true whenever
// every Pauli term has an even number of Y letters, which covers all model
// Hamiltonians here).
class MixedPropagator {
 public:
  MixedPropagator(const PauliSum& h_initial, const PauliSum& h_problem) {
    const Eigen::MatrixXcd a = to_dense(h_initial);
    const Eigen::MatrixXcd b = to_dense(h_problem);
    real_ = a.imag().cwiseAbs().maxCoeff() < 1e-12 &&
            b.imag().cwiseAbs().maxCoeff() < 1e-12;
    dim_ = a.rows();
    if (real_) {
      a_re_ = a.real();
      c_re_ = (b - a).real();
      h_re_.resize(dim_, dim_);
      for (Eigen::VectorXd* v : {&tre_, &tim_, &acc_re_, &acc_im_, &ure_, &uim_}) {
        v->resize(dim_);
      }
    } else {
      a_c_ = a;
      c_c_ = b - a;
    }
  }

  void step(std::vector<Complex>& amps, double lambda, double dt) {
    if (dt == 0.0) return;
    if (real_) {
      step_real(amps, lambda, dt);
    } else {
      step_complex(amps, lambda, dt);
    }
  }

 private:
  void step_real(std::vector<Complex>& amps, double lambda, double dt) {
    h_re_ = a_re_;
    h_re_.noalias() += lambda * c_re_;
    const double mu = 0.5 * (h_re_.diagonal().maxCoeff() + h_re_.diagonal().minCoeff());
    h_re_.diagonal().array() -= mu;
    for (Eigen::Index i = 0; i < dim_; ++i) {
      tre_[i] = amps[i].real();
      tim_[i] = amps[i].imag();
    }
    acc_re_ = tre_;
    acc_im_ = tim_;
    bool converged = false;
    for (int k = 1; k <= 80; ++k) {
      ure_.noalias() = h_re_ * tre_;
      uim_.noalias() = h_re_ * tim_;
      const double f = dt / k;
      // term <- (-i dt / k) * u
      tre_ = f * uim_;
      tim_ = -f * ure_;
      acc_re_ += tre_;
      acc_im_ += tim_;
      if (tre_.squaredNorm() + tim_.squaredNorm() < 1e-32) {
        converged = true;
        break;
      }
    }
    require(converged, ErrorKind::contract_violation,
            "exact propagator: Taylor series did not converge (step too large)");
    const Complex phase = std::polar(1.0, -mu * dt);
    for (Eigen::Index i = 0; i < dim_; ++i) {
      amps[i] = phase * Complex{acc_re_[i], acc_im_[i]};
    }
  }

  void step_complex(std::vector<Complex>& amps, double lambda, double dt) {
    Eigen::MatrixXcd h = a_c_ + lambda * c_c_;
    const double mu =
        0.5 * (h.diagonal().real().maxCoeff() + h.diagonal().real().minCoeff());
    h.diagonal().array() -= mu;
    Eigen::VectorXcd term(dim_), acc(dim_), u(dim_);
    for (Eigen::Index i = 0; i < dim_; ++i) term[i] = amps[i];
    acc = term;
    bool converged = false;
    for (int k = 1; k <= 80; ++k) {
      u.noalias() = h * term;
      term = u * (Complex{0, -1} * (dt / k));
      acc += term;
      if (term.squaredNorm() < 1e-32) {
        converged = true;
        break;
      }
    }
    require(converged, ErrorKind::contract_violation,
            "exact propagator: Taylor series did not converge (step too large)");
    const Complex phase = std::polar(1.0, -mu * dt);
    for (Eigen::Index i = 0; i < dim_; ++i) amps[i] = phase * acc[i];
  }

  bool real_ = false;
  Eigen::Index dim_ = 0;
  Eigen::MatrixXd a_re_, c_re_, h_re_;
  Eigen::VectorXd tre_, tim_, acc_re_, acc_im_, ure_, uim_;
  Eigen::MatrixXcd a_c_, c_c_;
};

// Union term list for Trotterized mixing: coefficient (1-lambda) a + lambda b
// per string, applied in canonical order.
class TrotterMix {
 public:
  TrotterMix(const PauliSum& h_initial, const PauliSum& h_problem)
      : width_(h_initial.n_qubits()) {
    std::map<PauliString, std::pair<double, double>> merged;
    for (const auto& [s, c] : h_initial.terms()) merged[s].first = c.real();
    for (const auto& [s, c] : h_problem.terms()) merged[s].second = c.real();
    terms_.assign(merged.begin(), merged.end());
  }

  void step(std::vector<Complex>& amps, double lambda, double dt) const {
    for (const auto& [s, ab] : terms_) {
      const double coeff = (1.0 - lambda) * ab.first + lambda * ab.second;
      if (coeff == 0.0) continue;
      detail::apply_pauli_rotation_inplace(amps, s, coeff * dt);
    }
  }

 private:
  std::size_t width_;
  std::vector<std::pair<PauliString, std::pair<double, double>>> terms_;
};

PauliSum mix_sums(const PauliSum& a, const PauliSum& b, double lambda) {
  PauliSum h = a;
  h *= Complex{1.0 - lambda, 0};
  PauliSum hb = b;
  hb *= Complex{lambda, 0};
  h += hb;
  return h;
}

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

struct SampledObservables {
  double energy_problem, energy_system, s2, sz;
};

SampledObservables sample_observables(const std::vector<Complex>& amps,
                                      const PauliSum& h_problem,
                                      const ObservableSet& obs) {
  auto real_part = [&](const PauliSum& op) {
    const Complex v = detail::expectation_raw(amps, op);
    require(std::abs(v.imag()) <= 1e-8, ErrorKind::contract_violation,
            "expectation: imaginary residue exceeds 1e-8");
    return v.real();
  };
  return SampledObservables{real_part(h_problem), real_part(obs.h_system),
                            real_part(obs.s2), real_part(obs.sz)};
}

}  // namespace

EvolutionRecord ate_run(const PauliSum& h_initial, const PauliSum& h_problem,
                        const ObservableSet& obs, const StateVector& psi0,
                        const AteSchedule& sched, Evolver evolver,
                        std::size_t sample_every, const AteOptions& opt) {
  sched.validate();
  require(sample_every >= 1, ErrorKind::invalid_config,
          "ate_run: sample_every must be >= 1");
  require(h_initial.n_qubits() == h_problem.n_qubits() &&
              psi0.n_qubits() == h_problem.n_qubits(),
          ErrorKind::dimension_mismatch, "ate_run: dimensions differ");
  require(h_initial.is_hermitian() && h_problem.is_hermitian(),
          ErrorKind::contract_violation, "ate_run: Hamiltonians must be Hermitian");

  EvolutionRecord rec;
  rec.extra_fidelity = opt.extra_fidelity;

  // Dense observables for ground-subspace averages at the sampled steps.
  const Eigen::MatrixXcd s2_dense = to_dense(obs.s2);
  const Eigen::MatrixXcd sz_dense = to_dense(obs.sz);

  {
    const Spectrum init_spec = diagonalize(h_initial);
    const double f0 = init_spec.ground_weight(psi0, opt.degeneracy_tol);
    if (f0 < 0.99) {
      std::ostringstream os;
      os << "initial state has ground fidelity " << f0
         << " against H_initial (expected ~1)";
      rec.warnings.push_back(os.str());
    }
  }

  std::optional<Spectrum> final_spec;
  if (opt.extra_fidelity) final_spec = diagonalize(h_problem);

  std::optional<MixedPropagator> exact_prop;
  std::optional<TrotterMix> trotter_prop;
  if (evolver == Evolver::exact) {
    exact_prop.emplace(h_initial, h_problem);
  } else {
    trotter_prop.emplace(h_initial, h_problem);
  }

  StateVector psi = psi0;
  double t = 0;

  auto record_row = [&](std::size_t step_index) {
    const double lambda = clamp01(t / sched.total_time);
    EvolutionRow row;
    row.step = step_index;
    row.t = t;
    const SampledObservables v = sample_observables(psi.amplitudes(), h_problem, obs);
    row.energy_problem = v.energy_problem;
    row.energy_system = v.energy_system;
    row.s2 = v.s2;
    row.sz = v.sz;
    const PauliSum h_t = mix_sums(h_initial, h_problem, lambda);
    const Spectrum spec = diagonalize(h_t);
    row.fidelity = spec.ground_weight(psi, opt.degeneracy_tol);
    row.ref_energy = spec.eigenvalues[0];
    row.ref_s2 = spec.ground_average(s2_dense, opt.degeneracy_tol);
    row.ref_sz = spec.ground_average(sz_dense, opt.degeneracy_tol);
    if (final_spec) {
      row.fidelity_final = final_spec->ground_weight(psi, opt.degeneracy_tol);
    }
    rec.rows.push_back(row);
  };

  record_row(0);
  for (std::size_t i = 0; i < sched.steps; ++i) {
    const double lambda = clamp01(t / sched.total_time);
    const double dt = sched.dt_at(i);
    if (evolver == Evolver::exact) {
      exact_prop->step(psi.amplitudes(), lambda, dt);
    } else {
      trotter_prop->step(psi.amplitudes(), lambda, dt);
    }
    t += dt;
    const std::size_t done = i + 1;
    if (done % sample_every == 0 || done == sched.steps) record_row(done);
  }
  rec.t_final = t;
  rec.final_state = std::move(psi);
  {
    std::ostringstream os;
    os.precision(12);
    os << t;
    rec.metadata["t_final"] = os.str();
  }
  return rec;
}

std::pair<PauliSum, StateVector> ate_initial_alternating_x(const SpinRegister& reg) {
  require(reg.all_spin_half(), ErrorKind::invalid_config,
          "ate_initial_alternating_x: spin-1/2 register required");
  const std::size_t n = reg.n_qubits();
  PauliSum h(n);
  std::uint64_t minus_mask = 0;  // sites prepared in |->
  for (std::size_t i = 0; i < n; ++i) {
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    h.add_term(PauliString::single(n, i, Pauli::X), sign);
    if (i % 2 == 0) minus_mask |= std::uint64_t{1} << i;
  }
  // Ground state of +sigma_x is |->, of -sigma_x is |+>.
  const std::size_t dim = std::size_t{1} << n;
  std::vector<Complex> amps(dim);
  const double scale = std::pow(2.0, -0.5 * static_cast<double>(n));
  for (std::uint64_t b = 0; b < dim; ++b) {
    const int parity = std::popcount(b & minus_mask) & 1;
    amps[b] = parity ? -scale : scale;
  }
  return {h, StateVector::from_amplitudes(n, std::move(amps))};
}

std::pair<PauliSum, StateVector> ate_initial_diagonal_z(const SpinRegister& reg,
                                                        std::uint64_t start_bits) {
  const std::size_t n = reg.n_qubits();
  require(n >= 64 || start_bits < (std::uint64_t{1} << n), ErrorKind::invalid_config,
          "ate_initial_diagonal_z: start bits outside register");
  PauliSum h(n);
  for (std::size_t q = 0; q < n; ++q) {
    // f(q) = 1 - bit_q makes the start state the unique ground state.
    const double sign = ((start_bits >> q) & 1) ? 1.0 : -1.0;
    h.add_term(PauliString::single(n, q, Pauli::Z), sign);
  }
  return {h, StateVector::basis(n, start_bits)};
}

namespace {

// Success-branch operator of the one-ancilla circuit:
//   (1/sqrt2)[e^{i th0} (1-i)/2 U_- + e^{-i th0} (1+i)/2 U_+] with U_∓ the
// controlled real-time blocks. U_- acts on the ancilla-0 branch.
PiteStepResult pite_circuit_apply(const StateVector& psi, const PauliSum& h,
                                  const PiteConfig& cfg, Evolver evolver,
                                  const Spectrum* cached_spec) {
  const double tau = cfg.s() * cfg.dt;
  StateVector minus_branch = psi;
  StateVector plus_branch = psi;
  if (evolver == Evolver::exact) {
    const Spectrum* spec = cached_spec;
    Spectrum local{Eigen::VectorXd(), Eigen::MatrixXcd()};
    if (spec == nullptr) {
      local = diagonalize(h);
      spec = &local;
    }
    auto rotate = [&](StateVector& v, double sign) {
      Eigen::VectorXcd c = spec->eigenvectors.adjoint() * to_eigen(v);
      for (Eigen::Index i = 0; i < c.size(); ++i) {
        c[i] *= std::polar(1.0, sign * spec->eigenvalues[i] * tau);
      }
      v = from_eigen(v.n_qubits(), spec->eigenvectors * c);
    };
    rotate(minus_branch, -1.0);
    rotate(plus_branch, 1.0);
  } else {
    // U_- = prod_k exp(-i c_k tau P_k) in canonical order; U_+ is its exact
    // adjoint (reversed order, opposite signs).
    detail::trotter_step_inplace(minus_branch.amplitudes(), h, tau);
    auto& amps = plus_branch.amplitudes();
    const auto& terms = h.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      detail::apply_pauli_rotation_inplace(amps, it->first, -it->second.real() * tau);
    }
  }
  const double th0 = cfg.theta0();
  const Complex ca = std::polar(1.0 / std::sqrt(2.0), th0) * Complex{0.5, -0.5};
  const Complex cb = std::polar(1.0 / std::sqrt(2.0), -th0) * Complex{0.5, 0.5};
  std::vector<Complex> out(psi.dim());
  double norm2 = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = ca * minus_branch.amplitude(i) + cb * plus_branch.amplitude(i);
    norm2 += std::norm(out[i]);
  }
  if (norm2 < 1e-12) {
    throw Error(ErrorKind::failure_dominated,
                "pite_step_circuit: success probability below 1e-12");
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& a : out) a *= inv;
  return PiteStepResult{StateVector::from_amplitudes(psi.n_qubits(), std::move(out)),
                        norm2};
}

}  // namespace

PiteStepResult pite_step_circuit(const StateVector& psi, const PauliSum& h,
                                 const PiteConfig& cfg, Evolver evolver) {
  cfg.validate();
  require(psi.n_qubits() == h.n_qubits(), ErrorKind::dimension_mismatch,
          "pite_step_circuit: dimensions differ");
  require(h.is_hermitian(), ErrorKind::contract_violation,
          "pite_step_circuit: Hamiltonian must be Hermitian");
  return pite_circuit_apply(psi, h, cfg, evolver, nullptr);
}

PiteStepResult pite_step_exact(const StateVector& psi, const PauliSum& h,
                               const PiteConfig& cfg) {
  cfg.validate();
  require(psi.n_qubits() == h.n_qubits(), ErrorKind::dimension_mismatch,
          "pite_step_exact: dimensions differ");
  double weight = 0;
  StateVector out = imaginary_time_evolve(psi, h, cfg.dt, &weight);
  const double p = cfg.m0 * cfg.m0 * weight;
  if (p < 1e-12) {
    throw Error(ErrorKind::failure_dominated,
                "pite_step_exact: success probability below 1e-12");
  }
  return PiteStepResult{std::move(out), p};
}

EvolutionRecord pite_run(const PauliSum& h_problem, const ObservableSet& obs,
                         const StateVector& psi0, const PiteConfig& cfg,
                         Evolver evolver, std::size_t sample_every,
                         const PiteOptions& opt) {
  cfg.validate();
  require(sample_every >= 1, ErrorKind::invalid_config,
          "pite_run: sample_every must be >= 1");
  require(psi0.n_qubits() == h_problem.n_qubits(), ErrorKind::dimension_mismatch,
          "pite_run: dimensions differ");
  require(h_problem.is_hermitian(), ErrorKind::contract_violation,
          "pite_run: Hamiltonian must be Hermitian");
  require(!opt.seed || evolver == Evolver::exact, ErrorKind::invalid_config,
          "pite_run: sampling mode requires the exact evolver");

  const Spectrum spec = diagonalize(h_problem);

  EvolutionRecord rec;
  StateVector psi = psi0;
  double p_cum = 1.0;
  double p_last = 1.0;

  auto record_row = [&](std::size_t step_index) {
    EvolutionRow row;
    row.step = step_index;
    row.t = cfg.dt * static_cast<double>(step_index);
    const SampledObservables v = sample_observables(psi.amplitudes(), h_problem, obs);
    row.energy_problem = v.energy_problem;
    row.energy_system = v.energy_system;
    row.s2 = v.s2;
    row.sz = v.sz;
    row.fidelity = spec.ground_weight(psi);
    row.p_step = p_last;
    row.p_cum = p_cum;
    rec.rows.push_back(row);
  };

  std::optional<std::mt19937_64> rng;
  if (opt.seed) rng.emplace(*opt.seed);

  record_row(0);
  if (evolver == Evolver::exact && !rng) {
    // Step in the eigenbasis; transform back only at sampled steps.
    Eigen::VectorXcd c = spec.eigenvectors.adjoint() * to_eigen(psi);
    const double m0sq = cfg.m0 * cfg.m0;
    for (std::size_t k = 1; k <= cfg.steps; ++k) {
      double w = 0;
      for (Eigen::Index i = 0; i < c.size(); ++i) {
        c[i] *= std::exp(-spec.eigenvalues[i] * cfg.dt);
        w += std::norm(c[i]);
      }
      const double p = m0sq * w;
      if (p < 1e-12) {
        throw Error(ErrorKind::failure_dominated,
                    "pite_run: success probability below 1e-12");
      }
      c /= std::sqrt(w);
      p_last = p;
      p_cum *= p;
      if (k % sample_every == 0 || k == cfg.steps) {
        psi = from_eigen(psi.n_qubits(), spec.eigenvectors * c);
        record_row(k);
      }
    }
  } else if (rng) {
    // Seeded sampling demonstration: draw each ancilla outcome. Requires
    // m0^2 e^{-2 E dt} <= 1 over the spectrum so the failure branch exists.
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double m0sq = cfg.m0 * cfg.m0;
    require(m0sq * std::exp(-2.0 * spec.eigenvalues[0] * cfg.dt) <= 1.0 + 1e-12,
            ErrorKind::contract_violation,
            "pite_run: sampling mode needs m0^2 e^{-2 E0 dt} <= 1 "
            "(shift the Hamiltonian spectrum)");
    Eigen::VectorXcd c = spec.eigenvectors.adjoint() * to_eigen(psi);
    for (std::size_t k = 1; k <= cfg.steps; ++k) {
      Eigen::VectorXcd succ = c;
      double w = 0;
      for (Eigen::Index i = 0; i < c.size(); ++i) {
        succ[i] *= cfg.m0 * std::exp(-spec.eigenvalues[i] * cfg.dt);
        w += std::norm(succ[i]);
      }
      const double p_success = w;
      double p_outcome;
      if (unif(*rng) < p_success) {
        c = succ / std::sqrt(w);
        p_outcome = p_success;
      } else {
        double wf = 0;
        for (Eigen::Index i = 0; i < c.size(); ++i) {
          const double m = cfg.m0 * std::exp(-spec.eigenvalues[i] * cfg.dt);
          c[i] *= std::sqrt(std::max(0.0, 1.0 - m * m));
          wf += std::norm(c[i]);
        }
        require(wf > 1e-300, ErrorKind::failure_dominated,
                "pite_run: failure branch annihilated the state");
        c /= std::sqrt(wf);
        p_outcome = 1.0 - p_success;
      }
      p_last = p_outcome;
      p_cum *= p_outcome;
      if (k % sample_every == 0 || k == cfg.steps) {
        psi = from_eigen(psi.n_qubits(), spec.eigenvectors * c);
        record_row(k);
      }
    }
  } else {
    for (std::size_t k = 1; k <= cfg.steps; ++k) {
      PiteStepResult step = pite_circuit_apply(psi, h_problem, cfg, evolver, &spec);
      psi = std::move(step.state);
      p_last = step.p_success;
      p_cum *= p_last;
      if (k % sample_every == 0 || k == cfg.steps) record_row(k);
    }
  }
  rec.t_final = cfg.dt * static_cast<double>(cfg.steps);
  rec.final_state = std::move(psi);
  return rec;
}

}  // namespace spinforge
