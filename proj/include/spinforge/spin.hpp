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

#include <optional>
#include <string>
#include <vector>

#include "spinforge/pauli.hpp"
#include "spinforge/statevector.hpp"

namespace spinforge {

/// Half-integer quantum number stored as twice its value.
struct HalfInt {
  int twice = 0;

  constexpr HalfInt() = default;
  constexpr HalfInt(int whole) : twice(2 * whole) {}
  static constexpr HalfInt from_twice(int t) {
    HalfInt h;
    h.twice = t;
    return h;
  }
  /// Accepts "2", "-1", "5/2", "1.5".
  static HalfInt parse(const std::string& text);

  double value() const { return twice / 2.0; }
  /// s(s+1).
  double casimir() const { return twice * (twice + 2) / 4.0; }
  bool is_integer() const { return (twice & 1) == 0; }
  std::string str() const;

  friend constexpr bool operator==(HalfInt a, HalfInt b) { return a.twice == b.twice; }
  friend constexpr auto operator<=>(HalfInt a, HalfInt b) { return a.twice <=> b.twice; }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice + b.twice); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice - b.twice); }
  friend constexpr HalfInt operator-(HalfInt a) { return from_twice(-a.twice); }
};

enum class SpinEncoding { direct, binary };

/// One spin site: magnitude, encoding, and its qubit span within the register.
struct SpinSite {
  HalfInt spin;
  SpinEncoding encoding;
  std::size_t qubit_offset;
  std::size_t qubit_count;

  /// Number of physical levels, 2s+1. Level k carries Sz = s - k and is
  /// encoded as the binary code of k (qubit 0 of the site = LSB).
  std::size_t levels() const { return static_cast<std::size_t>(spin.twice) + 1; }
};

/// Ordered spin sites with contiguous, non-overlapping qubit spans covering
/// [0, n_qubits).
class SpinRegister {
 public:
  static SpinRegister spin_half_chain(std::size_t n_sites);
  /// Binary encoding for s > 1/2, direct for s = 1/2.
  static SpinRegister from_spins(const std::vector<HalfInt>& spins);

  std::size_t n_sites() const { return sites_.size(); }
  std::size_t n_qubits() const { return n_qubits_; }
  const SpinSite& site(std::size_t i) const { return sites_[i]; }
  const std::vector<SpinSite>& sites() const { return sites_; }

  bool all_spin_half() const;
  HalfInt max_total_spin() const;

  /// Encoded level of one site within a basis index (may be unphysical).
  std::size_t site_level(std::uint64_t basis_index, std::size_t site) const;
  /// Sum of per-site Sz values; nullopt if any site level is unphysical.
  std::optional<HalfInt> basis_sz(std::uint64_t basis_index) const;
  bool basis_is_physical(std::uint64_t basis_index) const;

 private:
  std::vector<SpinSite> sites_;
  std::size_t n_qubits_ = 0;
};

struct SpinOperators {
  PauliSum sx, sy, sz;
};

struct TotalSpinOperators {
  PauliSum sx, sy, sz, s2;
};

/// Spin operators of one site embedded in the full register (support only on
/// the site's qubit span). Built generically from the ladder matrices in the
/// level basis, zero-padded over unphysical levels, and decomposed into Pauli
/// strings by trace inner products.
SpinOperators site_spin_operators(const SpinRegister& reg, std::size_t site);

TotalSpinOperators total_spin_operators(const SpinRegister& reg);

/// Spin-1/2 ring, H = (1/2) sum_i J_i sigma_i . sigma_{i+1} with periodic
/// closure. Exactly 3n non-identity terms for n >= 3.
PauliSum heisenberg_ring(std::size_t n_sites, const std::vector<double>& j);
PauliSum heisenberg_ring(std::size_t n_sites, double j);

struct TrimerModel {
  PauliSum h_system;
  SpinRegister reg;
};

/// Spin trimer with magnitudes (5/2, 5/2, 2) on 9 qubits,
/// H = -2 J01 S0.S1 - 2 J12 S1.S2 - 2 J20 S2.S0.
TrimerModel mn_trimer(double j01, double j12, double j20);

/// Computational basis state from per-site Sz labels (Table-ordering levels).
StateVector basis_state(const SpinRegister& reg, const std::vector<HalfInt>& sz_labels);
/// Computational basis state from raw bits (bit q of `bits` = qubit q); the
/// configuration must be physical on every site.
StateVector basis_state_bits(const SpinRegister& reg, std::uint64_t bits);

/// Per-site Sz labels with total Sz = target, filling maximal m site by site.
std::vector<HalfInt> sz_labels_for_total(const SpinRegister& reg, HalfInt target);

std::uint64_t basis_index_of(const SpinRegister& reg, const std::vector<HalfInt>& sz_labels);

}  // namespace spinforge
