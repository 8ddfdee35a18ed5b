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

#include "spinforge/statevector.hpp"

#include <bit>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace spinforge {

namespace {

void check_state_width(const char* op, std::size_t n_state, std::size_t n_op) {
  if (n_state != n_op) {
    throw Error(ErrorKind::dimension_mismatch,
                std::string(op) + ": state has " + std::to_string(n_state) +
                    " qubits, operator has " + std::to_string(n_op));
  }
}

}  // namespace

StateVector StateVector::basis(std::size_t n_qubits, std::uint64_t index) {
  require(n_qubits >= 1 && n_qubits <= 30, ErrorKind::resource_limit,
          "StateVector: qubit count must be in [1, 30]");
  require(index < (std::uint64_t{1} << n_qubits), ErrorKind::invalid_config,
          "StateVector::basis: index out of range");
  std::vector<Complex> amps(std::size_t{1} << n_qubits, Complex{0, 0});
  amps[index] = 1.0;
  return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::size_t n_qubits,
                                         std::vector<Complex> amplitudes) {
  require(n_qubits >= 1 && n_qubits <= 30, ErrorKind::resource_limit,
          "StateVector: qubit count must be in [1, 30]");
  require(amplitudes.size() == (std::size_t{1} << n_qubits),
          ErrorKind::dimension_mismatch,
          "StateVector::from_amplitudes: length must be 2^n_qubits");
  StateVector psi(n_qubits, std::move(amplitudes));
  const double n = psi.norm();
  require(n > 1e-12, ErrorKind::contract_violation,
          "StateVector::from_amplitudes: zero-norm input");
  if (std::abs(n - 1.0) > 1e-14) {
    for (auto& a : psi.amps_) a /= n;
  }
  return psi;
}

double StateVector::norm() const {
  double s = 0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void StateVector::renormalize() {
  const double n = norm();
  require(n > 1e-12, ErrorKind::contract_violation,
          "StateVector::renormalize: zero-norm state");
  for (auto& a : amps_) a /= n;
}

Complex StateVector::inner(const StateVector& other) const {
  check_state_width("StateVector::inner", n_qubits_, other.n_qubits_);
  Complex s{0, 0};
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    s += std::conj(amps_[i]) * other.amps_[i];
  }
  return s;
}

double StateVector::overlap(const StateVector& other) const {
  return std::norm(inner(other));
}

void StateVector::write_amplitude_csv(std::ostream& os) const {
  os.precision(17);
  os << "index,re,im\n";
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    os << i << ',' << amps_[i].real() << ',' << amps_[i].imag() << '\n';
  }
}

StateVector StateVector::read_amplitude_csv(std::istream& is) {
  std::vector<Complex> amps;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("index", 0) == 0) continue;
    std::istringstream ls(line);
    std::string cell;
    std::uint64_t idx = 0;
    double re = 0, im = 0;
    if (!std::getline(ls, cell, ',')) continue;
    idx = std::stoull(cell);
    if (!std::getline(ls, cell, ',')) {
      throw Error(ErrorKind::invalid_config, "amplitude CSV: malformed row");
    }
    re = std::stod(cell);
    if (!std::getline(ls, cell, ',')) {
      throw Error(ErrorKind::invalid_config, "amplitude CSV: malformed row");
    }
    im = std::stod(cell);
    if (idx >= amps.size()) amps.resize(idx + 1, Complex{0, 0});
    amps[idx] = Complex{re, im};
  }
  require(!amps.empty(), ErrorKind::invalid_config, "amplitude CSV: empty file");
  std::size_t n = 0;
  while ((std::size_t{1} << n) < amps.size()) ++n;
  amps.resize(std::size_t{1} << n, Complex{0, 0});
  return from_amplitudes(n, std::move(amps));
}

namespace detail {

void apply_pauli_string_inplace(std::vector<Complex>& amps, const PauliString& p) {
  const std::uint64_t x = p.x_mask();
  const std::uint64_t z = p.z_mask();
  const int base = std::popcount(x & z) & 3;
  static const Complex kI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  if (x == 0) {
    for (std::uint64_t b = 0; b < amps.size(); ++b) {
      const int e = (base + 2 * (std::popcount(z & b) & 1)) & 3;
      amps[b] *= kI[e];
    }
    return;
  }
  for (std::uint64_t b = 0; b < amps.size(); ++b) {
    const std::uint64_t partner = b ^ x;
    if (partner < b) continue;
    const Complex va = amps[b];
    const Complex vb = amps[partner];
    const int ea = (base + 2 * (std::popcount(z & b) & 1)) & 3;        // b -> partner
    const int eb = (base + 2 * (std::popcount(z & partner) & 1)) & 3;  // partner -> b
    amps[partner] = kI[ea] * va;
    amps[b] = kI[eb] * vb;
  }
}

void apply_pauli_rotation_inplace(std::vector<Complex>& amps, const PauliString& p,
                                  double theta) {
  const std::uint64_t x = p.x_mask();
  const std::uint64_t z = p.z_mask();
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const Complex eminus{c, -s};  // e^{-i theta}
  const Complex eplus{c, s};
  if (x == 0) {
    // Diagonal string: phase e^{-i theta (+/-1)} per basis state.
    for (std::uint64_t b = 0; b < amps.size(); ++b) {
      amps[b] *= (std::popcount(z & b) & 1) ? eplus : eminus;
    }
    return;
  }
  const int base = std::popcount(x & z) & 3;
  static const Complex kI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const Complex mis{0, -s};  // -i sin(theta)
  for (std::uint64_t b = 0; b < amps.size(); ++b) {
    const std::uint64_t partner = b ^ x;
    if (partner < b) continue;
    const Complex va = amps[b];
    const Complex vb = amps[partner];
    const Complex alpha = kI[(base + 2 * (std::popcount(z & b) & 1)) & 3];
    const Complex beta = kI[(base + 2 * (std::popcount(z & partner) & 1)) & 3];
    amps[b] = c * va + mis * beta * vb;
    amps[partner] = c * vb + mis * alpha * va;
  }
}

void trotter_step_inplace(std::vector<Complex>& amps, const PauliSum& h, double t) {
  for (const auto& [s, coeff] : h.terms()) {
    apply_pauli_rotation_inplace(amps, s, coeff.real() * t);
  }
}

Complex expectation_raw(const std::vector<Complex>& amps, const PauliSum& a) {
  static const Complex kI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  Complex total{0, 0};
  for (const auto& [s, coeff] : a.terms()) {
    const std::uint64_t x = s.x_mask();
    const std::uint64_t z = s.z_mask();
    const int base = std::popcount(x & z) & 3;
    Complex acc{0, 0};
    for (std::uint64_t b = 0; b < amps.size(); ++b) {
      const int e = (base + 2 * (std::popcount(z & b) & 1)) & 3;
      acc += std::conj(amps[b ^ x]) * kI[e] * amps[b];
    }
    total += coeff * acc;
  }
  return total;
}

}  // namespace detail

StateVector apply_pauli_string(const StateVector& psi, const PauliString& p) {
  check_state_width("apply_pauli_string", psi.n_qubits(), p.n_qubits());
  StateVector out = psi;
  detail::apply_pauli_string_inplace(out.amplitudes(), p);
  return out;
}

StateVector apply_pauli_rotation(const StateVector& psi, const PauliString& p,
                                 double theta) {
  check_state_width("apply_pauli_rotation", psi.n_qubits(), p.n_qubits());
  StateVector out = psi;
  detail::apply_pauli_rotation_inplace(out.amplitudes(), p, theta);
  return out;
}

StateVector trotter_step(const StateVector& psi, const PauliSum& h, double t) {
  check_state_width("trotter_step", psi.n_qubits(), h.n_qubits());
  require(h.is_hermitian(), ErrorKind::contract_violation,
          "trotter_step: Hamiltonian must be Hermitian");
  StateVector out = psi;
  detail::trotter_step_inplace(out.amplitudes(), h, t);
  return out;
}

Complex expectation_complex(const StateVector& psi, const PauliSum& a) {
  check_state_width("expectation", psi.n_qubits(), a.n_qubits());
  return detail::expectation_raw(psi.amplitudes(), a);
}

double expectation(const StateVector& psi, const PauliSum& a) {
  check_state_width("expectation", psi.n_qubits(), a.n_qubits());
  require(a.is_hermitian(), ErrorKind::contract_violation,
          "expectation: operator must be Hermitian");
  const Complex v = detail::expectation_raw(psi.amplitudes(), a);
  if (std::abs(v.imag()) > 1e-8) {
    throw Error(ErrorKind::contract_violation,
                "expectation: imaginary residue " + std::to_string(v.imag()) +
                    " exceeds 1e-8");
  }
  return v.real();
}

StateVector apply_hadamard(const StateVector& psi, std::size_t qubit) {
  StateVector out = psi;
  auto& amps = out.amplitudes();
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  const double inv = 1.0 / std::sqrt(2.0);
  for (std::uint64_t b = 0; b < amps.size(); ++b) {
    if (b & bit) continue;
    const Complex v0 = amps[b];
    const Complex v1 = amps[b | bit];
    amps[b] = inv * (v0 + v1);
    amps[b | bit] = inv * (v0 - v1);
  }
  return out;
}

StateVector apply_phase(const StateVector& psi, std::size_t qubit, double lambda) {
  StateVector out = psi;
  auto& amps = out.amplitudes();
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  const Complex ph = std::polar(1.0, lambda);
  for (std::uint64_t b = 0; b < amps.size(); ++b) {
    if (b & bit) amps[b] *= ph;
  }
  return out;
}

StateVector apply_cphase(const StateVector& psi, std::size_t a, std::size_t b,
                         double lambda) {
  StateVector out = psi;
  auto& amps = out.amplitudes();
  const std::uint64_t mask = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
  const Complex ph = std::polar(1.0, lambda);
  for (std::uint64_t idx = 0; idx < amps.size(); ++idx) {
    if ((idx & mask) == mask) amps[idx] *= ph;
  }
  return out;
}

StateVector apply_local_unitary(const StateVector& psi, std::size_t offset,
                                std::size_t count, const std::vector<Complex>& u) {
  const std::size_t d = std::size_t{1} << count;
  require(u.size() == d * d, ErrorKind::dimension_mismatch,
          "apply_local_unitary: matrix size mismatch");
  require(offset + count <= psi.n_qubits(), ErrorKind::dimension_mismatch,
          "apply_local_unitary: span outside register");
  StateVector out = psi;
  auto& amps = out.amplitudes();
  const std::uint64_t low_mask = (std::uint64_t{1} << offset) - 1;
  const std::size_t outer_count = amps.size() >> count;
  std::vector<Complex> block(d);
  for (std::uint64_t outer = 0; outer < outer_count; ++outer) {
    const std::uint64_t lo = outer & low_mask;
    const std::uint64_t hi = (outer & ~low_mask) << count;
    const std::uint64_t base = hi | lo;
    for (std::size_t k = 0; k < d; ++k) {
      block[k] = amps[base | (static_cast<std::uint64_t>(k) << offset)];
    }
    for (std::size_t r = 0; r < d; ++r) {
      Complex acc{0, 0};
      const Complex* row = &u[r * d];
      for (std::size_t k = 0; k < d; ++k) acc += row[k] * block[k];
      amps[base | (static_cast<std::uint64_t>(r) << offset)] = acc;
    }
  }
  return out;
}

}  // namespace spinforge
