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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "spinforge/complexity.hpp"
#include "test_helpers.hpp"

using namespace spinforge;
using namespace spinforge::testing;

TEST_CASE("gate cost of single terms") {
  PauliSum w1(4);
  w1.add_term(PauliString::from_letters("IZII"), 0.5);
  const GateCost c1 = gate_cost(w1);
  CHECK(c1.cnot_count == 0);
  CHECK(c1.depth == 1);

  PauliSum w3(4);
  w3.add_term(PauliString::from_letters("XIZY"), 0.5);
  const GateCost c3 = gate_cost(w3);
  CHECK(c3.cnot_count == 4);
  CHECK(c3.depth == 5);

  // Identity terms cost nothing.
  PauliSum id = PauliSum::identity(4, 2.0);
  const GateCost c0 = gate_cost(id);
  CHECK(c0.cnot_count == 0);
  CHECK(c0.depth == 0);
}

TEST_CASE("disjoint terms share a layer") {
  PauliSum h(4);
  h.add_term(PauliString::from_letters("XXII"), 1.0);
  h.add_term(PauliString::from_letters("IIYY"), 1.0);
  const GateCost c = gate_cost(h);
  CHECK(c.cnot_count == 4);
  CHECK(c.depth == 3);  // one layer, widest span 3

  h.add_term(PauliString::from_letters("IXXI"), 1.0);  // overlaps both
  const GateCost c2 = gate_cost(h);
  CHECK(c2.depth == 6);
}

TEST_CASE("gate cost is deterministic and bounded by serialization") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const PauliSum h = random_sum(rng, 8, 40, true);
    const GateCost a = gate_cost(h);
    const GateCost b = gate_cost(h);
    CHECK(a.cnot_count == b.cnot_count);
    CHECK(a.depth == b.depth);
    CHECK(a.depth <= a.cnot_count + h.term_count());
  }
}

TEST_CASE("power law fit") {
  std::vector<std::pair<double, double>> cubic;
  for (double x : {2.0, 3.0, 5.0, 8.0}) cubic.emplace_back(x, 2.0 * x * x * x);
  const PowerLawFit fit = power_law_fit(cubic);
  CHECK(fit.prefactor == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(fit.exponent == doctest::Approx(3.0).epsilon(1e-10));

  std::vector<std::pair<double, double>> flat = {{1, 4}, {2, 4}, {7, 4}};
  CHECK(power_law_fit(flat).exponent == doctest::Approx(0.0).epsilon(1e-12));

  CHECK_THROWS_AS(power_law_fit({{1.0, 2.0}}), Error);
  CHECK_THROWS_AS(power_law_fit({{1.0, 2.0}, {-1.0, 3.0}}), Error);
}

TEST_CASE("linear penalty term count closed form") {
  for (const std::size_t n : {4, 6, 8, 10, 12, 14}) {
    const auto reg = SpinRegister::spin_half_chain(n);
    const auto cfg = PenaltyConfig::with_default_cz(HalfInt(0), 7.5, PenaltyKind::linear);
    const PauliSum h = spin_penalty(reg, cfg);
    const std::size_t expected = 3 * (n * (n - 1) / 2) + n + 1;
    CHECK(h.term_count() == expected);
  }
}

TEST_CASE("scaling sweep structure and exponents") {
  const ScalingRecord rec =
      scaling_sweep({4, 6, 8, 10, 12, 14}, HalfInt(0), 7.5, 0.015, 0.8,
                    {PenaltyKind::linear, PenaltyKind::quartic});
  REQUIRE(rec.rows.size() == 12);
  for (std::size_t i = 1; i < 6; ++i) {
    CHECK(rec.rows[i].n_spin > rec.rows[i - 1].n_spin);
  }

  CHECK(rec.fit(PenaltyKind::linear, "terms").exponent > 1.9);
  CHECK(rec.fit(PenaltyKind::linear, "terms").exponent < 2.1);
  CHECK(rec.fit(PenaltyKind::quartic, "terms").exponent >= 3.8);

  // Quartic / linear count ratio at n = 12 exceeds 20.
  std::size_t lin12 = 0, qua12 = 0;
  for (const auto& row : rec.rows) {
    if (row.n_spin == 12 && row.kind == PenaltyKind::linear) lin12 = row.terms;
    if (row.n_spin == 12 && row.kind == PenaltyKind::quartic) qua12 = row.terms;
  }
  CHECK(qua12 > 20 * lin12);

  std::ostringstream csv;
  rec.write_csv(csv);
  CHECK(csv.str().find("n,kind,terms,cnots,depth\n") != std::string::npos);
  CHECK(csv.str().find("4,linear,") != std::string::npos);
  const std::string json = rec.fit_summary_json();
  CHECK(json.find("\"series\"") != std::string::npos);
  CHECK(json.find("linear/terms") != std::string::npos);

  CHECK_THROWS_AS(scaling_sweep({6, 4}, HalfInt(0), 1.0, 0.1, 0.8,
                                {PenaltyKind::linear}),
                  Error);
}
