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

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spinforge/pauli.hpp"
#include "spinforge/penalty.hpp"

namespace spinforge {

/// CNOT-ladder cost model for exp(-i theta P) per term: a weight-w term costs
/// 2(w-1) CNOTs and spans 2(w-1)+1 gate slots. Depth uses greedy first-fit
/// layering: terms with disjoint qubit support share a layer, each layer
/// contributes its widest term's span.
struct GateCost {
  std::size_t cnot_count = 0;
  std::size_t depth = 0;
};

GateCost gate_cost(const PauliSum& h);

struct PowerLawFit {
  double prefactor = 0;  // a in y = a x^b
  double exponent = 0;   // b
};

/// Least squares on (log x, log y); requires positive data and >= 2 points.
PowerLawFit power_law_fit(const std::vector<std::pair<double, double>>& points);

struct ScalingRow {
  std::size_t n_spin;
  PenaltyKind kind;
  std::size_t terms;
  std::size_t cnots;
  std::size_t depth;
};

struct ScalingRecord {
  std::vector<ScalingRow> rows;
  /// Keyed "<kind>/<metric>" with metric in {terms, cnots, depth}; fitted on
  /// the n_spin >= 8 points.
  std::map<std::string, PowerLawFit> fits;
  std::map<std::string, std::string> metadata;

  const PowerLawFit& fit(PenaltyKind kind, const std::string& metric) const;
  void write_csv(std::ostream& os) const;    // n,kind,terms,cnots,depth
  std::string fit_summary_json() const;      // {"series": [{...}]}
};

/// Penalty-term scaling study over spin-1/2 registers: per n, builds both
/// penalty kinds at the given target sector (C_z by the default ratio rule)
/// and records term counts plus the modeled cost of exp(-i H_penalty s dt).
/// The rotation angle does not affect counts in this model; C_S, dt, m0 are
/// recorded as metadata for provenance.
ScalingRecord scaling_sweep(const std::vector<std::size_t>& n_list, HalfInt s_star,
                            double c_s, double dt, double m0,
                            const std::vector<PenaltyKind>& kinds);

}  // namespace spinforge
