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

#include <initializer_list>
#include <utility>

#include "spinforge/dense.hpp"
#include "spinforge/pauli.hpp"

namespace spinforge::testing {

// Reference transcriptions of the published binary-encoded spin operators for
// S = 5/2 and S = 2 on three qubits, used as golden oracles for the generic
// ladder-based construction. The published forms act nontrivially on some
// unphysical levels, so comparisons restrict to the physical block.
//
// Letter strings are written with qubit 0 first, so e.g. the product Z2 Z0
// is "ZIZ".

inline PauliSum transcribed(std::size_t n,
                            std::initializer_list<std::pair<const char*, double>> terms) {
  PauliSum out(n);
  for (const auto& [letters, coeff] : terms) {
    out.add_term(PauliString::from_letters(letters), coeff);
  }
  return out;
}

inline const double kRoot5 = std::sqrt(5.0);
inline const double kRoot8 = std::sqrt(8.0);
inline const double kRoot32 = std::sqrt(1.5);

inline PauliSum five_half_sx_reference() {
  return transcribed(3, {
      {"XII", (3 + 2 * kRoot5) / 8},
      {"XZI", (-3 + 2 * kRoot5) / 8},
      {"XIZ", 3.0 / 8},
      {"XZZ", -3.0 / 8},
      {"XXI", 1 / kRoot8},
      {"YYI", 1 / kRoot8},
      {"XXX", 1 / kRoot8},
      {"YYX", -1 / kRoot8},
      {"YXY", 1 / kRoot8},
      {"XYY", 1 / kRoot8},
      {"XXZ", 1 / kRoot8},
      {"YYZ", 1 / kRoot8},
  });
}

inline PauliSum five_half_sy_reference() {
  return transcribed(3, {
      {"YII", (3 + 2 * kRoot5) / 8},
      {"YZI", (-3 + 2 * kRoot5) / 8},
      {"YIZ", 3.0 / 8},
      {"YZZ", -3.0 / 8},
      {"XYI", 1 / kRoot8},
      {"YXI", -1 / kRoot8},
      {"YYY", -1 / kRoot8},
      {"XXY", 1 / kRoot8},
      {"XYX", -1 / kRoot8},
      {"YXX", -1 / kRoot8},
      {"XYZ", 1 / kRoot8},
      {"YXZ", -1 / kRoot8},
  });
}

inline PauliSum five_half_sz_reference() {
  return transcribed(3, {
      {"ZIZ", 1.0 / 8},
      {"ZZI", 1.0 / 8},
      {"ZZZ", -1.0 / 8},
      {"ZII", 3.0 / 8},
      {"IIZ", 1.0},
      {"IZZ", 1.0},
  });
}

inline PauliSum spin_two_sx_reference() {
  return transcribed(3, {
      {"XII", (1 + kRoot32) / 4},
      {"XIZ", (1 + kRoot32) / 4},
      {"XZI", (1 - kRoot32) / 4},
      {"XZZ", (1 - kRoot32) / 4},
      {"XXI", kRoot32 / 4},
      {"YYI", kRoot32 / 4},
      {"XXZ", kRoot32 / 4},
      {"YYZ", kRoot32 / 4},
      {"XXX", 1.0 / 4},
      {"YYX", -1.0 / 4},
      {"YXY", 1.0 / 4},
      {"XYY", 1.0 / 4},
  });
}

inline PauliSum spin_two_sy_reference() {
  return transcribed(3, {
      {"YII", (1 + kRoot32) / 4},
      {"YIZ", (1 + kRoot32) / 4},
      {"YZI", (1 - kRoot32) / 4},
      {"YZZ", (1 - kRoot32) / 4},
      {"XYI", kRoot32 / 4},
      {"YXI", -kRoot32 / 4},
      {"XYZ", kRoot32 / 4},
      {"YXZ", -kRoot32 / 4},
      {"XXY", 1.0 / 4},
      {"YXX", -1.0 / 4},
      {"XYX", -1.0 / 4},
      {"YYY", -1.0 / 4},
  });
}

inline PauliSum spin_two_sz_reference() {
  return transcribed(3, {
      {"IZI", 1.0 / 4},
      {"ZZI", -1.0 / 4},
      {"ZZZ", 1.0 / 4},
      {"IIZ", 1.0 / 2},
      {"ZIZ", 1.0 / 2},
      {"IZZ", 3.0 / 4},
  });
}

/// Max |difference| between two 3-qubit operators over the leading
/// `levels` x `levels` (physical) block.
inline double physical_block_diff(const PauliSum& a, const PauliSum& b,
                                  std::size_t levels) {
  const Eigen::MatrixXcd da = to_dense(a);
  const Eigen::MatrixXcd db = to_dense(b);
  double m = 0;
  for (std::size_t r = 0; r < levels; ++r) {
    for (std::size_t c = 0; c < levels; ++c) {
      m = std::max(m, std::abs(da(r, c) - db(r, c)));
    }
  }
  return m;
}

}  // namespace spinforge::testing
