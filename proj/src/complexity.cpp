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

#include "spinforge/complexity.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace spinforge {

GateCost gate_cost(const PauliSum& h) {
  GateCost cost;
  struct Layer {
    std::uint64_t support = 0;
    std::size_t span = 0;
  };
  std::vector<Layer> layers;
  for (const auto& [s, c] : h.terms()) {
    if (s.is_identity()) continue;
    const std::size_t w = s.weight();
    const std::size_t span = 2 * (w - 1) + 1;
    cost.cnot_count += 2 * (w - 1);
    const std::uint64_t support = s.support();
    bool placed = false;
    for (auto& layer : layers) {
      if ((layer.support & support) == 0) {
        layer.support |= support;
        layer.span = std::max(layer.span, span);
        placed = true;
        break;
      }
    }
    if (!placed) layers.push_back(Layer{support, span});
  }
  for (const auto& layer : layers) cost.depth += layer.span;
  return cost;
}

PowerLawFit power_law_fit(const std::vector<std::pair<double, double>>& points) {
  require(points.size() >= 2, ErrorKind::invalid_config,
          "power_law_fit: need at least 2 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : points) {
    require(x > 0 && y > 0, ErrorKind::invalid_config,
            "power_law_fit: data must be positive");
    const double lx = std::log(x);
    const double ly = std::log(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double n = static_cast<double>(points.size());
  const double denom = n * sxx - sx * sx;
  require(std::abs(denom) > 1e-12, ErrorKind::invalid_config,
          "power_law_fit: degenerate abscissae");
  const double b = (n * sxy - sx * sy) / denom;
  const double log_a = (sy - b * sx) / n;
  return PowerLawFit{std::exp(log_a), b};
}

const PowerLawFit& ScalingRecord::fit(PenaltyKind kind, const std::string& metric) const {
  const std::string key = penalty_kind_name(kind) + "/" + metric;
  auto it = fits.find(key);
  require(it != fits.end(), ErrorKind::invalid_config,
          "ScalingRecord: no fit for series " + key);
  return it->second;
}

void ScalingRecord::write_csv(std::ostream& os) const {
  for (const auto& [k, v] : metadata) os << "# " << k << '=' << v << '\n';
  os << "n,kind,terms,cnots,depth\n";
  for (const auto& r : rows) {
    os << r.n_spin << ',' << penalty_kind_name(r.kind) << ',' << r.terms << ','
       << r.cnots << ',' << r.depth << '\n';
  }
}

std::string ScalingRecord::fit_summary_json() const {
  nlohmann::json series = nlohmann::json::array();
  for (const auto& [key, fit] : fits) {
    const auto slash = key.find('/');
    series.push_back({{"series", key},
                      {"kind", key.substr(0, slash)},
                      {"metric", key.substr(slash + 1)},
                      {"a", fit.prefactor},
                      {"b", fit.exponent}});
  }
  nlohmann::json out{{"series", series}, {"metadata", metadata}};
  return out.dump(2);
}

ScalingRecord scaling_sweep(const std::vector<std::size_t>& n_list, HalfInt s_star,
                            double c_s, double dt, double m0,
                            const std::vector<PenaltyKind>& kinds) {
  require(!n_list.empty(), ErrorKind::invalid_config, "scaling_sweep: empty n list");
  for (std::size_t i = 1; i < n_list.size(); ++i) {
    require(n_list[i] > n_list[i - 1], ErrorKind::invalid_config,
            "scaling_sweep: n list must be strictly ascending");
  }
  ScalingRecord rec;
  {
    std::ostringstream os;
    os << "c_s=" << c_s << " dt=" << dt << " m0=" << m0 << " s_star=" << s_star.str()
       << " angle_note=rotation angle does not enter the per-term cost model";
    rec.metadata["sweep"] = os.str();
  }
  for (const PenaltyKind kind : kinds) {
    std::vector<std::pair<double, double>> terms_pts, cnots_pts, depth_pts;
    for (const std::size_t n : n_list) {
      const SpinRegister reg = SpinRegister::spin_half_chain(n);
      const PenaltyConfig cfg = PenaltyConfig::with_default_cz(s_star, c_s, kind);
      const PauliSum h = spin_penalty(reg, cfg);
      const GateCost cost = gate_cost(h);
      rec.rows.push_back(ScalingRow{n, kind, h.term_count(), cost.cnot_count,
                                    cost.depth});
      if (n >= 8) {
        const double nd = static_cast<double>(n);
        terms_pts.emplace_back(nd, static_cast<double>(h.term_count()));
        cnots_pts.emplace_back(nd, static_cast<double>(cost.cnot_count));
        depth_pts.emplace_back(nd, static_cast<double>(cost.depth));
      }
    }
    const std::string prefix = penalty_kind_name(kind) + "/";
    if (terms_pts.size() >= 2) {
      rec.fits[prefix + "terms"] = power_law_fit(terms_pts);
      rec.fits[prefix + "cnots"] = power_law_fit(cnots_pts);
      rec.fits[prefix + "depth"] = power_law_fit(depth_pts);
    }
  }
  return rec;
}

}  // namespace spinforge
