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

#include "spinforge/postselect.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "spinforge/dense.hpp"

namespace spinforge {

namespace {

void check_quantum_numbers(const char* op, HalfInt s, HalfInt s_z) {
  require(s.twice >= 0, ErrorKind::invalid_config,
          std::string(op) + ": s must be non-negative");
  require(std::abs(s_z.twice) <= s.twice, ErrorKind::invalid_config,
          std::string(op) + ": |s_z| <= s required");
  require(((s.twice - s_z.twice) & 1) == 0, ErrorKind::invalid_config,
          std::string(op) + ": s - s_z must be an integer");
}

double log_factorial(int n) { return std::lgamma(n + 1.0); }

}  // namespace

double wigner_d(HalfInt s, HalfInt s_z, double theta) {
  check_quantum_numbers("wigner_d", s, s_z);
  const int up = (s.twice + s_z.twice) / 2;    // s + s_z
  const int down = (s.twice - s_z.twice) / 2;  // s - s_z
  const double log_binom =
      0.5 * (log_factorial(up + down) - log_factorial(up) - log_factorial(down));
  const double c = std::cos(0.5 * theta);
  const double si = std::sin(0.5 * theta);
  return std::exp(log_binom) * std::pow(c, up) * std::pow(si, down);
}

double theta_opt(HalfInt s, HalfInt s_z) {
  check_quantum_numbers("theta_opt", s, s_z);
  if (s.twice == 0) return 0.0;  // rotation unnecessary
  const double frac =
      static_cast<double>(s.twice - s_z.twice) / (2.0 * static_cast<double>(s.twice));
  return 2.0 * std::asin(std::sqrt(frac));
}

double wigner_weight(HalfInt s, HalfInt s_z) {
  check_quantum_numbers("wigner_weight", s, s_z);
  const int up = (s.twice + s_z.twice) / 2;
  const int down = (s.twice - s_z.twice) / 2;
  const int total = up + down;  // 2s
  if (total == 0) return 1.0;
  auto xlogx = [](int k) { return k == 0 ? 0.0 : k * std::log(static_cast<double>(k)); };
  const double log_w = log_factorial(total) - log_factorial(up) - log_factorial(down) +
                       xlogx(up) + xlogx(down) - xlogx(total);
  return std::exp(log_w);
}

RotationPlan RotationPlan::make(HalfInt s_star, HalfInt s_z_star) {
  check_quantum_numbers("RotationPlan", s_star, s_z_star);
  return RotationPlan{s_star, s_z_star, theta_opt(s_star, s_z_star),
                      wigner_weight(s_star, s_z_star)};
}

StateVector global_y_rotation(const StateVector& psi, const SpinRegister& reg,
                              double theta) {
  require(psi.n_qubits() == reg.n_qubits(), ErrorKind::dimension_mismatch,
          "global_y_rotation: dimensions differ");
  StateVector out = psi;
  for (std::size_t i = 0; i < reg.n_sites(); ++i) {
    const SpinSite& site = reg.site(i);
    if (site.spin.twice == 1) {
      // exp(-i theta sigma_y / 2) on the site's qubit.
      out = apply_pauli_rotation(
          out, PauliString::single(reg.n_qubits(), site.qubit_offset, Pauli::Y),
          0.5 * theta);
      continue;
    }
    // Dense per-site exponential; the zero-padded generator leaves the
    // unphysical levels untouched (identity block), so the map is unitary.
    const SpinOperators ops = site_spin_operators(reg, i);
    const std::size_t d = std::size_t{1} << site.qubit_count;
    Eigen::MatrixXcd sy = Eigen::MatrixXcd::Zero(d, d);
    for (const auto& [str, coeff] : ops.sy.terms()) {
      const std::uint64_t x = str.x_mask() >> site.qubit_offset;
      const std::uint64_t z = str.z_mask() >> site.qubit_offset;
      static const Complex kI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      const int base = std::popcount(x & z) & 3;
      for (std::uint64_t b = 0; b < d; ++b) {
        const int e = (base + 2 * (std::popcount(z & b) & 1)) & 3;
        sy(b ^ x, b) += coeff * kI[e];
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sy);
    Eigen::VectorXcd ph(d);
    for (std::size_t k = 0; k < d; ++k) {
      ph[k] = std::polar(1.0, -theta * solver.eigenvalues()[k]);
    }
    const Eigen::MatrixXcd u =
        solver.eigenvectors() * ph.asDiagonal() * solver.eigenvectors().adjoint();
    std::vector<Complex> u_flat(d * d);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) u_flat[r * d + c] = u(r, c);
    }
    out = apply_local_unitary(out, site.qubit_offset, site.qubit_count, u_flat);
  }
  return out;
}

Projection hamming_project_direct(const StateVector& psi, std::size_t weight) {
  require(weight <= psi.n_qubits(), ErrorKind::invalid_config,
          "hamming_project_direct: weight out of range");
  std::vector<Complex> amps(psi.dim(), Complex{0, 0});
  double kept = 0;
  for (std::uint64_t b = 0; b < psi.dim(); ++b) {
    if (static_cast<std::size_t>(std::popcount(b)) == weight) {
      amps[b] = psi.amplitude(b);
      kept += std::norm(amps[b]);
    }
  }
  if (kept < 1e-12) {
    throw EmptySectorError("hamming_project_direct: no amplitude at weight " +
                           std::to_string(weight));
  }
  const double inv = 1.0 / std::sqrt(kept);
  for (auto& a : amps) a *= inv;
  return Projection{StateVector::from_amplitudes(psi.n_qubits(), std::move(amps)),
                    kept};
}

std::size_t hamming_circuit_outcome(std::size_t n_qubits, std::size_t weight) {
  std::size_t m = 0;
  while ((std::size_t{1} << m) < n_qubits) ++m;
  const std::size_t modulus = std::size_t{1} << m;
  return (n_qubits - weight) % modulus;
}

Projection hamming_project_circuit(const StateVector& psi, std::size_t weight) {
  const std::size_t n = psi.n_qubits();
  require(weight <= n, ErrorKind::invalid_config,
          "hamming_project_circuit: weight out of range");
  std::size_t m = 0;
  while ((std::size_t{1} << m) < n) ++m;
  require(m >= 1, ErrorKind::invalid_config,
          "hamming_project_circuit: need at least 2 system qubits");
  const std::size_t modulus = std::size_t{1} << m;

  // Weights congruent modulo 2^m land on the same ancilla outcome. Refuse to
  // project when the input carries mass on an aliased weight.
  for (std::size_t w = weight % modulus; w <= n; w += modulus) {
    if (w == weight) continue;
    double mass = 0;
    for (std::uint64_t b = 0; b < psi.dim(); ++b) {
      if (static_cast<std::size_t>(std::popcount(b)) == w) {
        mass += std::norm(psi.amplitude(b));
      }
    }
    if (mass > 1e-12) {
      throw Error(ErrorKind::weight_aliasing,
                  "hamming_project_circuit: weights " + std::to_string(weight) +
                      " and " + std::to_string(w) +
                      " share an ancilla outcome (mass " + std::to_string(mass) +
                      " on the alias); use the direct projector");
    }
  }

  // Joint register: system qubits 0..n-1, ancilla j at qubit n+j (j = k-1).
  StateVector joint = StateVector::basis(n + m, 0);
  {
    auto& amps = joint.amplitudes();
    for (std::uint64_t b = 0; b < psi.dim(); ++b) amps[b] = psi.amplitude(b);
  }
  const double pi = std::numbers::pi;
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t anc = n + j;
    const int k = static_cast<int>(j) + 1;
    const double scale = std::pow(2.0, static_cast<double>(k) - static_cast<double>(m));
    joint = apply_hadamard(joint, anc);
    joint = apply_phase(joint, anc, scale * pi * static_cast<double>(n));
    for (std::size_t q = 0; q < n; ++q) {
      joint = apply_cphase(joint, q, anc, -scale * pi);
    }
  }

  // Inverse QFT on the ancilla register (value A = sum_j a_j 2^j).
  {
    const auto& in = joint.amplitudes();
    std::vector<Complex> transformed(in.size(), Complex{0, 0});
    const double inv_root = 1.0 / std::sqrt(static_cast<double>(modulus));
    for (std::uint64_t sys = 0; sys < psi.dim(); ++sys) {
      for (std::size_t y = 0; y < modulus; ++y) {
        Complex acc{0, 0};
        for (std::size_t a = 0; a < modulus; ++a) {
          const double ang = -2.0 * pi * static_cast<double>(a * y) /
                             static_cast<double>(modulus);
          acc += std::polar(1.0, ang) * in[(static_cast<std::uint64_t>(a) << n) | sys];
        }
        transformed[(static_cast<std::uint64_t>(y) << n) | sys] = acc * inv_root;
      }
    }
    joint = StateVector::from_amplitudes(n + m, std::move(transformed));
  }

  const std::size_t outcome = hamming_circuit_outcome(n, weight);
  std::vector<Complex> amps(psi.dim());
  double kept = 0;
  for (std::uint64_t b = 0; b < psi.dim(); ++b) {
    amps[b] = joint.amplitude((static_cast<std::uint64_t>(outcome) << n) | b);
    kept += std::norm(amps[b]);
  }
  if (kept < 1e-12) {
    throw EmptySectorError("hamming_project_circuit: no amplitude at weight " +
                           std::to_string(weight));
  }
  const double inv = 1.0 / std::sqrt(kept);
  for (auto& a : amps) a *= inv;
  return Projection{StateVector::from_amplitudes(n, std::move(amps)), kept};
}

SzProjection project_sz_encoded(const StateVector& psi, const SpinRegister& reg,
                                HalfInt s_z) {
  require(psi.n_qubits() == reg.n_qubits(), ErrorKind::dimension_mismatch,
          "project_sz_encoded: dimensions differ");
  std::vector<Complex> amps(psi.dim(), Complex{0, 0});
  double kept = 0;
  double leakage = 0;
  for (std::uint64_t b = 0; b < psi.dim(); ++b) {
    const double mass = std::norm(psi.amplitude(b));
    if (mass == 0.0) continue;
    const std::optional<HalfInt> sz = reg.basis_sz(b);
    if (!sz) {
      leakage += mass;
      continue;
    }
    if (*sz == s_z) {
      amps[b] = psi.amplitude(b);
      kept += mass;
    }
  }
  if (kept < 1e-12) {
    throw EmptySectorError(
        "project_sz_encoded: no amplitude in the Sz = " + s_z.str() +
            " sector (leakage " + std::to_string(leakage) + ")",
        leakage);
  }
  const double inv = 1.0 / std::sqrt(kept);
  for (auto& a : amps) a *= inv;
  return SzProjection{StateVector::from_amplitudes(psi.n_qubits(), std::move(amps)),
                      kept, leakage};
}

PostselectOutcome rotate_and_project(const StateVector& psi, const SpinRegister& reg,
                                     HalfInt s_star, HalfInt s_z_star,
                                     bool use_circuit) {
  const RotationPlan plan = RotationPlan::make(s_star, s_z_star);
  const StateVector rotated = global_y_rotation(psi, reg, plan.theta);
  if (reg.all_spin_half()) {
    // Sz = n/2 - weight on a spin-1/2 register.
    const int weight_twice = static_cast<int>(reg.n_sites()) - s_z_star.twice;
    require(weight_twice >= 0 && (weight_twice & 1) == 0 &&
                weight_twice <= 2 * static_cast<int>(reg.n_sites()),
            ErrorKind::invalid_config,
            "rotate_and_project: target Sz unreachable for this register");
    const std::size_t weight = static_cast<std::size_t>(weight_twice) / 2;
    const Projection proj = use_circuit ? hamming_project_circuit(rotated, weight)
                                        : hamming_project_direct(rotated, weight);
    return PostselectOutcome{proj.state, plan.theta, plan.expected_weight,
                             proj.probability, 0.0};
  }
  const SzProjection proj = project_sz_encoded(rotated, reg, s_z_star);
  return PostselectOutcome{proj.state, plan.theta, plan.expected_weight,
                           proj.probability, proj.leakage};
}

}  // namespace spinforge
