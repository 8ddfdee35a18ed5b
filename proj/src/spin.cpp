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

#include "spinforge/spin.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>

namespace spinforge {

HalfInt HalfInt::parse(const std::string& text) {
  require(!text.empty(), ErrorKind::invalid_config, "HalfInt: empty value");
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const int num = std::stoi(text.substr(0, slash));
    const int den = std::stoi(text.substr(slash + 1));
    require(den == 2, ErrorKind::invalid_config,
            "HalfInt: denominator must be 2 in '" + text + "'");
    return from_twice(num);
  }
  const double v = std::stod(text);
  const double t = 2.0 * v;
  const double rounded = std::round(t);
  require(std::abs(t - rounded) < 1e-9, ErrorKind::invalid_config,
          "HalfInt: '" + text + "' is not a half-integer");
  return from_twice(static_cast<int>(rounded));
}

std::string HalfInt::str() const {
  if ((twice & 1) == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

namespace {

std::size_t qubits_for(HalfInt spin) {
  const std::size_t levels = static_cast<std::size_t>(spin.twice) + 1;
  std::size_t q = 0;
  while ((std::size_t{1} << q) < levels) ++q;
  return std::max<std::size_t>(q, 1);
}

}  // namespace

SpinRegister SpinRegister::spin_half_chain(std::size_t n_sites) {
  std::vector<HalfInt> spins(n_sites, HalfInt::from_twice(1));
  return from_spins(spins);
}

SpinRegister SpinRegister::from_spins(const std::vector<HalfInt>& spins) {
  require(!spins.empty(), ErrorKind::invalid_config,
          "SpinRegister: at least one site required");
  SpinRegister reg;
  std::size_t offset = 0;
  for (const HalfInt s : spins) {
    require(s.twice >= 1, ErrorKind::invalid_config,
            "SpinRegister: spin magnitude must be >= 1/2");
    SpinSite site;
    site.spin = s;
    site.encoding = (s.twice == 1) ? SpinEncoding::direct : SpinEncoding::binary;
    site.qubit_offset = offset;
    site.qubit_count = qubits_for(s);
    offset += site.qubit_count;
    reg.sites_.push_back(site);
  }
  require(offset <= PauliString::kMaxQubits, ErrorKind::resource_limit,
          "SpinRegister: register exceeds 64 qubits");
  reg.n_qubits_ = offset;
  return reg;
}

bool SpinRegister::all_spin_half() const {
  for (const auto& s : sites_) {
    if (s.spin.twice != 1) return false;
  }
  return true;
}

HalfInt SpinRegister::max_total_spin() const {
  int twice = 0;
  for (const auto& s : sites_) twice += s.spin.twice;
  return HalfInt::from_twice(twice);
}

std::size_t SpinRegister::site_level(std::uint64_t basis_index, std::size_t site) const {
  const SpinSite& s = sites_[site];
  const std::uint64_t mask = (std::uint64_t{1} << s.qubit_count) - 1;
  return static_cast<std::size_t>((basis_index >> s.qubit_offset) & mask);
}

std::optional<HalfInt> SpinRegister::basis_sz(std::uint64_t basis_index) const {
  int twice = 0;
  for (std::size_t i = 0; i < sites_.size(); ++i) {
    const std::size_t level = site_level(basis_index, i);
    if (level >= sites_[i].levels()) return std::nullopt;
    twice += sites_[i].spin.twice - 2 * static_cast<int>(level);
  }
  return HalfInt::from_twice(twice);
}

bool SpinRegister::basis_is_physical(std::uint64_t basis_index) const {
  return basis_sz(basis_index).has_value();
}

namespace {

// Dense site matrix in the padded 2^m-dim qubit basis; rows/columns of
// unphysical levels stay zero.
std::vector<Complex> padded_site_matrix(const SpinSite& site, char which) {
  const std::size_t d = site.levels();
  const std::size_t dim = std::size_t{1} << site.qubit_count;
  const double s = site.spin.value();
  std::vector<Complex> m(dim * dim, Complex{0, 0});
  auto at = [&](std::size_t r, std::size_t c) -> Complex& { return m[r * dim + c]; };
  if (which == 'z') {
    for (std::size_t k = 0; k < d; ++k) at(k, k) = s - static_cast<double>(k);
    return m;
  }
  // Raising element: S+ maps level k -> k-1 with sqrt(s(s+1) - m(m+1)), m = s-k.
  for (std::size_t k = 1; k < d; ++k) {
    const double mval = s - static_cast<double>(k);
    const double amp = std::sqrt(s * (s + 1) - mval * (mval + 1));
    if (which == 'x') {
      at(k - 1, k) += 0.5 * amp;
      at(k, k - 1) += 0.5 * amp;
    } else {  // 'y': (S+ - S-)/(2i)
      at(k - 1, k) += Complex{0, -0.5} * amp;
      at(k, k - 1) += Complex{0, 0.5} * amp;
    }
  }
  return m;
}

// Pauli decomposition of a 2^m-dim matrix, embedded at qubit_offset.
PauliSum decompose_embedded(const std::vector<Complex>& m, std::size_t local_qubits,
                            std::size_t qubit_offset, std::size_t total_qubits) {
  const std::size_t dim = std::size_t{1} << local_qubits;
  static const Complex kI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  PauliSum out(total_qubits);
  for (std::uint64_t x = 0; x < dim; ++x) {
    for (std::uint64_t z = 0; z < dim; ++z) {
      const int p = std::popcount(x & z) & 3;
      Complex tr{0, 0};
      for (std::uint64_t c = 0; c < dim; ++c) {
        const int e = (p + 2 * (std::popcount(z & c) & 1)) & 3;
        tr += kI[e] * m[c * dim + (c ^ x)];
      }
      const Complex coeff = tr / static_cast<double>(dim);
      if (std::abs(coeff) <= kCoeffTolerance) continue;
      out.add_term(PauliString::from_masks(total_qubits, x << qubit_offset,
                                           z << qubit_offset),
                   coeff);
    }
  }
  return out;
}

}  // namespace

SpinOperators site_spin_operators(const SpinRegister& reg, std::size_t site_index) {
  require(site_index < reg.n_sites(), ErrorKind::invalid_config,
          "site_spin_operators: site index out of range");
  const SpinSite& site = reg.site(site_index);
  require(site.encoding == SpinEncoding::binary || site.spin.twice == 1,
          ErrorKind::invalid_config,
          "site_spin_operators: direct encoding requires spin 1/2");
  SpinOperators ops{
      decompose_embedded(padded_site_matrix(site, 'x'), site.qubit_count,
                         site.qubit_offset, reg.n_qubits()),
      decompose_embedded(padded_site_matrix(site, 'y'), site.qubit_count,
                         site.qubit_offset, reg.n_qubits()),
      decompose_embedded(padded_site_matrix(site, 'z'), site.qubit_count,
                         site.qubit_offset, reg.n_qubits()),
  };
  return ops;
}

TotalSpinOperators total_spin_operators(const SpinRegister& reg) {
  PauliSum sx(reg.n_qubits()), sy(reg.n_qubits()), sz(reg.n_qubits());
  for (std::size_t i = 0; i < reg.n_sites(); ++i) {
    const SpinOperators ops = site_spin_operators(reg, i);
    sx += ops.sx;
    sy += ops.sy;
    sz += ops.sz;
  }
  PauliSum s2 = sx * sx;
  s2 += sy * sy;
  s2 += sz * sz;
  return TotalSpinOperators{std::move(sx), std::move(sy), std::move(sz), std::move(s2)};
}

PauliSum heisenberg_ring(std::size_t n_sites, const std::vector<double>& j) {
  require(n_sites >= 2, ErrorKind::invalid_config, "heisenberg_ring: n >= 2 required");
  require(j.size() == n_sites, ErrorKind::invalid_config,
          "heisenberg_ring: need one coupling per bond");
  PauliSum h(n_sites);
  for (std::size_t i = 0; i < n_sites; ++i) {
    const std::size_t k = (i + 1) % n_sites;
    for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
      PauliString s(n_sites);
      const PauliProduct prod =
          pauli_mul(PauliString::single(n_sites, i, p), PauliString::single(n_sites, k, p));
      h.add_term(prod.string, 0.5 * j[i] * prod.phase);
    }
  }
  return h;
}

PauliSum heisenberg_ring(std::size_t n_sites, double j) {
  return heisenberg_ring(n_sites, std::vector<double>(n_sites, j));
}

TrimerModel mn_trimer(double j01, double j12, double j20) {
  const SpinRegister reg = SpinRegister::from_spins(
      {HalfInt::from_twice(5), HalfInt::from_twice(5), HalfInt::from_twice(4)});
  const SpinOperators s0 = site_spin_operators(reg, 0);
  const SpinOperators s1 = site_spin_operators(reg, 1);
  const SpinOperators s2 = site_spin_operators(reg, 2);
  auto dot = [](const SpinOperators& a, const SpinOperators& b) {
    PauliSum d = a.sx * b.sx;
    d += a.sy * b.sy;
    d += a.sz * b.sz;
    return d;
  };
  PauliSum h(reg.n_qubits());
  h += dot(s0, s1) * Complex{-2.0 * j01, 0};
  h += dot(s1, s2) * Complex{-2.0 * j12, 0};
  h += dot(s2, s0) * Complex{-2.0 * j20, 0};
  return TrimerModel{std::move(h), reg};
}

std::uint64_t basis_index_of(const SpinRegister& reg, const std::vector<HalfInt>& sz_labels) {
  require(sz_labels.size() == reg.n_sites(), ErrorKind::invalid_config,
          "basis_state: one Sz label per site required");
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < reg.n_sites(); ++i) {
    const SpinSite& site = reg.site(i);
    const HalfInt m = sz_labels[i];
    const int level_twice = site.spin.twice - m.twice;
    require(level_twice >= 0 && (level_twice & 1) == 0 &&
                m.twice >= -site.spin.twice,
            ErrorKind::invalid_config,
            "basis_state: Sz label " + m.str() + " invalid for spin " +
                site.spin.str());
    index |= static_cast<std::uint64_t>(level_twice / 2) << site.qubit_offset;
  }
  return index;
}

StateVector basis_state(const SpinRegister& reg, const std::vector<HalfInt>& sz_labels) {
  return StateVector::basis(reg.n_qubits(), basis_index_of(reg, sz_labels));
}

StateVector basis_state_bits(const SpinRegister& reg, std::uint64_t bits) {
  require(reg.basis_is_physical(bits), ErrorKind::invalid_config,
          "basis_state_bits: configuration has an unphysical site level");
  return StateVector::basis(reg.n_qubits(), bits);
}

std::vector<HalfInt> sz_labels_for_total(const SpinRegister& reg, HalfInt target) {
  std::vector<HalfInt> labels(reg.n_sites());
  int remaining = target.twice;
  int tail = 0;  // sum of spins of the sites still unassigned
  for (std::size_t i = 0; i < reg.n_sites(); ++i) tail += reg.site(i).spin.twice;
  for (std::size_t i = 0; i < reg.n_sites(); ++i) {
    const int s = reg.site(i).spin.twice;
    tail -= s;
    int m = std::min(s, remaining + tail);
    m = std::max(m, -s);
    // Keep (s - m) even so the label maps onto a level.
    if (((s - m) & 1) != 0) --m;
    require(m >= -s, ErrorKind::invalid_config,
            "sz_labels_for_total: target unreachable");
    labels[i] = HalfInt::from_twice(m);
    remaining -= m;
  }
  require(remaining == 0, ErrorKind::invalid_config,
          "sz_labels_for_total: target Sz " + target.str() + " unreachable");
  return labels;
}

}  // namespace spinforge
