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

#include "spinforge/penalty.hpp"

#include <cmath>
#include <sstream>

#include "spinforge/dense.hpp"

namespace spinforge {

std::string penalty_kind_name(PenaltyKind k) {
  return k == PenaltyKind::linear ? "linear" : "quartic";
}

PenaltyKind penalty_kind_from_name(const std::string& name) {
  if (name == "linear") return PenaltyKind::linear;
  if (name == "quartic") return PenaltyKind::quartic;
  throw Error(ErrorKind::invalid_config, "unknown penalty kind '" + name + "'");
}

PenaltyConfig PenaltyConfig::with_default_cz(HalfInt s_star, double c_s,
                                             PenaltyKind kind) {
  PenaltyConfig cfg;
  cfg.s_star = s_star;
  cfg.s_z_star = s_star;
  cfg.c_s = c_s;
  cfg.c_z = c_s * (s_star.twice + 1.0);  // C_S (2 s* + 1)
  cfg.kind = kind;
  return cfg;
}

void PenaltyConfig::validate() const {
  require(s_star.twice >= 0, ErrorKind::invalid_config,
          "PenaltyConfig: s* must be non-negative");
  require(std::abs(s_z_star.twice) <= s_star.twice, ErrorKind::invalid_config,
          "PenaltyConfig: |s_z*| <= s* required");
  require(((s_star.twice - s_z_star.twice) & 1) == 0, ErrorKind::invalid_config,
          "PenaltyConfig: s* - s_z* must be an integer");
  require(c_s > 0, ErrorKind::invalid_config, "PenaltyConfig: C_S must be positive");
  require(c_z >= 0, ErrorKind::invalid_config, "PenaltyConfig: C_z must be non-negative");
}

RatioCheck validate_ratio(const PenaltyConfig& cfg) {
  require(cfg.c_s > 0, ErrorKind::invalid_config, "validate_ratio: C_S must be positive");
  const double ratio = cfg.c_z / cfg.c_s;
  const double low = cfg.s_star.twice;         // 2 s*
  const double high = cfg.s_star.twice + 2.0;  // 2 (s* + 1)
  std::ostringstream os;
  os << "C_z/C_S = " << ratio << ", window (" << low << ", " << high << ")";
  if (!(ratio > low)) {
    os << ": at or below the lower bound (sector s*-1 not penalized)";
    return {false, os.str()};
  }
  if (!(ratio < high)) {
    os << ": at or above the upper bound (sector s*+1 not penalized)";
    return {false, os.str()};
  }
  os << ": ok";
  return {true, os.str()};
}

PauliSum linear_spin_penalty(const SpinRegister& reg, const PenaltyConfig& cfg,
                             RatioPolicy policy) {
  cfg.validate();
  require(cfg.kind == PenaltyKind::linear, ErrorKind::invalid_config,
          "linear_spin_penalty: config kind is not linear");
  require(cfg.s_z_star == cfg.s_star, ErrorKind::invalid_config,
          "linear_spin_penalty: requires s_z* = s* (maximal-Sz stage)");
  require(cfg.s_star <= reg.max_total_spin(), ErrorKind::invalid_config,
          "linear_spin_penalty: s* exceeds the register's maximal spin");
  if (policy == RatioPolicy::enforce) {
    const RatioCheck check = validate_ratio(cfg);
    require(check.ok, ErrorKind::invalid_config,
            "linear_spin_penalty: " + check.diagnostic);
  }
  const TotalSpinOperators total = total_spin_operators(reg);
  PauliSum h = total.s2;
  h.add_term(PauliString(reg.n_qubits()), -cfg.s_star.casimir());
  h *= Complex{cfg.c_s, 0};
  PauliSum z = total.sz;
  z.add_term(PauliString(reg.n_qubits()), -cfg.s_star.value());
  z *= Complex{-cfg.c_z, 0};
  h += z;
  return h;
}

PauliSum quartic_spin_penalty(const SpinRegister& reg, const PenaltyConfig& cfg) {
  cfg.validate();
  require(cfg.kind == PenaltyKind::quartic, ErrorKind::invalid_config,
          "quartic_spin_penalty: config kind is not quartic");
  require(cfg.s_star <= reg.max_total_spin(), ErrorKind::invalid_config,
          "quartic_spin_penalty: s* exceeds the register's maximal spin");
  const TotalSpinOperators total = total_spin_operators(reg);
  PauliSum s2_shift = total.s2;
  s2_shift.add_term(PauliString(reg.n_qubits()), -cfg.s_star.casimir());
  PauliSum h = s2_shift * s2_shift;
  h *= Complex{cfg.c_s, 0};
  PauliSum z_shift = total.sz;
  z_shift.add_term(PauliString(reg.n_qubits()), -cfg.s_z_star.value());
  PauliSum z2 = z_shift * z_shift;
  z2 *= Complex{cfg.c_z, 0};
  h += z2;
  return h;
}

PauliSum spin_penalty(const SpinRegister& reg, const PenaltyConfig& cfg) {
  return cfg.kind == PenaltyKind::linear ? linear_spin_penalty(reg, cfg)
                                         : quartic_spin_penalty(reg, cfg);
}

double penalty_eigenvalue(HalfInt s, HalfInt s_z, const PenaltyConfig& cfg) {
  require(std::abs(s_z.twice) <= s.twice, ErrorKind::invalid_config,
          "penalty_eigenvalue: |s_z| <= s required");
  const double s2_shift = s.casimir() - cfg.s_star.casimir();
  if (cfg.kind == PenaltyKind::linear) {
    return cfg.c_s * s2_shift - cfg.c_z * (s_z.value() - cfg.s_star.value());
  }
  const double z_shift = s_z.value() - cfg.s_z_star.value();
  return cfg.c_s * s2_shift * s2_shift + cfg.c_z * z_shift * z_shift;
}

PauliSum swap_expansion(const SpinRegister& reg) {
  require(reg.all_spin_half(), ErrorKind::invalid_config,
          "swap_expansion: all sites must be spin-1/2");
  const std::size_t n = reg.n_sites();
  const double nd = static_cast<double>(n);
  PauliSum h = PauliSum::identity(reg.n_qubits(), nd * (4.0 - nd) / 4.0);
  // U^S_ij = (I + sigma_i . sigma_j) / 2 over all pairs i > j.
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      h.add_term(PauliString(reg.n_qubits()), 0.5);
      for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
        const PauliProduct prod = pauli_mul(PauliString::single(n, i, p),
                                            PauliString::single(n, j, p));
        h.add_term(prod.string, 0.5 * prod.phase);
      }
    }
  }
  return h;
}

PenaltyGapDiagnostic penalty_gap_diagnostic(const PenaltyConfig& cfg,
                                            const PauliSum& h_system) {
  const double ratio = cfg.c_z / cfg.c_s;
  const double gap =
      cfg.c_s * std::min(cfg.s_star.twice + 2.0 - ratio, ratio - cfg.s_star.twice);
  const Spectrum spec = diagonalize(h_system);
  const double spread =
      spec.eigenvalues[spec.eigenvalues.size() - 1] - spec.eigenvalues[0];
  return PenaltyGapDiagnostic{gap, spread, gap >= spread};
}

}  // namespace spinforge
