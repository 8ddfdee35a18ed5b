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

#include <string>

#include "spinforge/pauli.hpp"
#include "spinforge/spin.hpp"

namespace spinforge {

enum class PenaltyKind { linear, quartic };

std::string penalty_kind_name(PenaltyKind k);
PenaltyKind penalty_kind_from_name(const std::string& name);

/// Target spin sector and penalty strengths.
///
/// linear : C_S (S^2 - s*(s*+1)) - C_z (Sz - s*), requires s_z* = s* and the
///          ratio window 2 s* < C_z/C_S < 2 (s*+1).
/// quartic: C_S (S^2 - s*(s*+1))^2 + C_z (Sz - s_z*)^2.
struct PenaltyConfig {
  HalfInt s_star;
  HalfInt s_z_star;
  double c_s = 1.0;
  double c_z = 1.0;
  PenaltyKind kind = PenaltyKind::linear;

  /// Midpoint of the ratio window: C_z = C_S (2 s* + 1).
  static PenaltyConfig with_default_cz(HalfInt s_star, double c_s, PenaltyKind kind);

  void validate() const;
};

struct RatioCheck {
  bool ok;
  std::string diagnostic;
};

/// Strict window 2 s* < C_z/C_S < 2 (s*+1) for the linear penalty.
RatioCheck validate_ratio(const PenaltyConfig& cfg);

/// Controls whether the ratio window is enforced at build time. Running the
/// linear penalty outside the window selects a wrong ground sector, so the
/// default is a hard failure.
enum class RatioPolicy { enforce, allow_out_of_window };

PauliSum linear_spin_penalty(const SpinRegister& reg, const PenaltyConfig& cfg,
                             RatioPolicy policy = RatioPolicy::enforce);
PauliSum quartic_spin_penalty(const SpinRegister& reg, const PenaltyConfig& cfg);
PauliSum spin_penalty(const SpinRegister& reg, const PenaltyConfig& cfg);

/// Closed-form penalty eigenvalue on the |s, s_z> sector.
double penalty_eigenvalue(HalfInt s, HalfInt s_z, const PenaltyConfig& cfg);

/// S^2 for a spin-1/2 register via the swap-operator identity
/// S^2 = n(4-n)/4 + sum_{i>j} U^S_ij with U^S_ij = (I + sigma_i.sigma_j)/2.
PauliSum swap_expansion(const SpinRegister& reg);

/// Compares the closed-form penalty gap C_S min(2s*+2 - r, r - 2s*) with the
/// dense spectral spread of the system Hamiltonian. `adequate` is false when
/// the penalty gap is smaller, i.e. the strengths likely need raising.
struct PenaltyGapDiagnostic {
  double penalty_gap;
  double system_spread;
  bool adequate;
};

PenaltyGapDiagnostic penalty_gap_diagnostic(const PenaltyConfig& cfg,
                                            const PauliSum& h_system);

}  // namespace spinforge
