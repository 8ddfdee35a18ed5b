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

#include "spinforge/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "spinforge/complexity.hpp"
#include "spinforge/dense.hpp"
#include "spinforge/evolution.hpp"
#include "spinforge/penalty.hpp"
#include "spinforge/postselect.hpp"
#include "spinforge/spin.hpp"

namespace spinforge::cli {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

RunConfig RunConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorKind::invalid_config, "cannot open config file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

RunConfig RunConfig::parse(const std::string& text) {
  RunConfig cfg;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    require(eq != std::string::npos, ErrorKind::invalid_config,
            "config line missing '=': " + stripped);
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    require(!key.empty(), ErrorKind::invalid_config, "config line with empty key");
    cfg.kv_[key] = value;
  }
  return cfg;
}

std::string RunConfig::get(const std::string& key, const std::string& fallback) const {
  auto it = kv_.find(key);
  return it == kv_.end() ? fallback : it->second;
}

std::string RunConfig::require_key(const std::string& key) const {
  auto it = kv_.find(key);
  require(it != kv_.end(), ErrorKind::invalid_config,
          "missing required config key '" + key + "'");
  return it->second;
}

double RunConfig::get_double(const std::string& key, double fallback) const {
  auto it = kv_.find(key);
  if (it == kv_.end()) return fallback;
  try {
    return std::stod(it->second);
  } catch (const std::exception&) {
    throw Error(ErrorKind::invalid_config,
                "config key '" + key + "' is not a number: " + it->second);
  }
}

std::size_t RunConfig::get_size(const std::string& key, std::size_t fallback) const {
  auto it = kv_.find(key);
  if (it == kv_.end()) return fallback;
  try {
    const long long v = std::stoll(it->second);
    require(v >= 0, ErrorKind::invalid_config, "config key '" + key + "' is negative");
    return static_cast<std::size_t>(v);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorKind::invalid_config,
                "config key '" + key + "' is not an integer: " + it->second);
  }
}

bool RunConfig::get_bool(const std::string& key, bool fallback) const {
  auto it = kv_.find(key);
  if (it == kv_.end()) return fallback;
  const std::string& v = it->second;
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw Error(ErrorKind::invalid_config, "config key '" + key + "' is not boolean: " + v);
}

std::string RunConfig::serialize() const {
  std::ostringstream os;
  for (const auto& [k, v] : kv_) os << k << '=' << v << '\n';
  return os.str();
}

std::uint64_t RunConfig::hash() const {
  const std::string text = serialize();
  std::uint64_t h = 1469598103934665603ull;
  for (const unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::invalid_config:
    case ErrorKind::dimension_mismatch:
    case ErrorKind::resource_limit:
      return 2;
    case ErrorKind::contract_violation:
      return 3;
    case ErrorKind::empty_sector:
    case ErrorKind::failure_dominated:
    case ErrorKind::weight_aliasing:
      return 4;
  }
  return 3;
}

namespace {

struct Model {
  std::string name;
  SpinRegister reg;
  PauliSum h_system;
};

Model build_model(const RunConfig& cfg, RunConfig& resolved) {
  const std::string model = cfg.get("model", "ring");
  resolved.set("model", model);
  if (model == "ring") {
    const std::size_t n = cfg.get_size("n", 6);
    const double j = cfg.get_double("j", 2.0);
    resolved.set("n", std::to_string(n));
    {
      std::ostringstream os;
      os << j;
      resolved.set("j", os.str());
    }
    return Model{model, SpinRegister::spin_half_chain(n), heisenberg_ring(n, j)};
  }
  if (model == "mn") {
    const double j01 = cfg.get_double("j01", -1.0);
    const double j12 = cfg.get_double("j12", -50.0);
    const double j20 = cfg.get_double("j20", -50.0);
    auto setd = [&](const char* key, double v) {
      std::ostringstream os;
      os << v;
      resolved.set(key, os.str());
    };
    setd("j01", j01);
    setd("j12", j12);
    setd("j20", j20);
    TrimerModel trimer = mn_trimer(j01, j12, j20);
    return Model{model, trimer.reg, std::move(trimer.h_system)};
  }
  throw Error(ErrorKind::invalid_config, "unknown model '" + model + "'");
}

double default_cs(const std::string& experiment, const std::string& model) {
  if (model == "mn") return 3.0;
  return experiment == "ate" ? 10.0 : 7.5;
}

PenaltyConfig build_penalty(const RunConfig& cfg, const Model& model,
                            const std::string& experiment, RunConfig& resolved) {
  const HalfInt s_star = HalfInt::parse(cfg.require_key("s_star"));
  const PenaltyKind kind = penalty_kind_from_name(cfg.get("penalty_kind", "linear"));
  const double c_s = cfg.get_double("c_s", default_cs(experiment, model.name));
  PenaltyConfig pc = PenaltyConfig::with_default_cz(s_star, c_s, kind);
  if (cfg.has("s_z_star")) pc.s_z_star = HalfInt::parse(cfg.require_key("s_z_star"));
  if (cfg.has("c_z")) pc.c_z = cfg.get_double("c_z", pc.c_z);
  pc.validate();
  resolved.set("s_star", pc.s_star.str());
  resolved.set("s_z_star", pc.s_z_star.str());
  resolved.set("penalty_kind", penalty_kind_name(kind));
  auto setd = [&](const char* key, double v) {
    std::ostringstream os;
    os << v;
    resolved.set(key, os.str());
  };
  setd("c_s", pc.c_s);
  setd("c_z", pc.c_z);
  return pc;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), ErrorKind::invalid_config, "cannot open output file " + path);
  out << text;
  require(out.good(), ErrorKind::invalid_config, "failed writing " + path);
}

// One `config.<key>` metadata line per entry, so the emitted block can be
// parsed back into the exact resolved configuration.
void attach_metadata(EvolutionRecord& rec, const RunConfig& resolved) {
  rec.metadata["version"] = kVersion;
  std::ostringstream hash;
  hash << std::hex << resolved.hash();
  rec.metadata["config_hash"] = hash.str();
  for (const auto& [k, v] : resolved.entries()) {
    rec.metadata["config." + k] = v;
  }
}

StateVector initial_basis_state(const Model& model, HalfInt s_star,
                                const RunConfig& cfg, RunConfig& resolved,
                                std::uint64_t* bits_out) {
  std::vector<HalfInt> labels;
  if (cfg.has("initial_sz")) {
    std::istringstream is(cfg.require_key("initial_sz"));
    std::string cell;
    while (std::getline(is, cell, ',')) labels.push_back(HalfInt::parse(trim(cell)));
  } else {
    labels = sz_labels_for_total(model.reg, s_star);
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) os << ',';
    os << labels[i].str();
  }
  resolved.set("initial_sz", os.str());
  const std::uint64_t bits = basis_index_of(model.reg, labels);
  if (bits_out != nullptr) *bits_out = bits;
  return basis_state(model.reg, labels);
}

RunResult run_evolution(const RunConfig& cfg, const std::string& experiment) {
  RunConfig resolved;
  resolved.set("experiment", experiment);
  const Model model = build_model(cfg, resolved);
  const PenaltyConfig pc = build_penalty(cfg, model, experiment, resolved);
  const Evolver evolver = evolver_from_name(cfg.get("evolver", "exact"));
  resolved.set("evolver", evolver_name(evolver));
  const std::size_t sample_every = cfg.get_size("sample_every", 50);
  resolved.set("sample_every", std::to_string(sample_every));
  const std::string output = cfg.require_key("output");
  resolved.set("output", output);

  const PauliSum penalty = spin_penalty(model.reg, pc);
  PauliSum h_problem = model.h_system;
  h_problem += penalty;
  const TotalSpinOperators total = total_spin_operators(model.reg);
  const ObservableSet obs{model.h_system, total.s2, total.sz};

  EvolutionRecord rec;
  if (experiment == "ate") {
    const double t = cfg.get_double("t", 1.0);
    const std::size_t steps = cfg.get_size("steps", 20000);
    const std::string rule = cfg.get("dt_rule", "sine_squared");
    AteSchedule sched;
    if (rule == "sine_squared") {
      sched = AteSchedule::sine_squared(t, steps, cfg.get_double("dt_amplitude", 1e-4));
    } else if (rule == "constant") {
      sched = AteSchedule::constant(t, steps, cfg.get_double("dt", t / steps));
    } else {
      throw Error(ErrorKind::invalid_config, "unknown dt_rule '" + rule + "'");
    }
    {
      std::ostringstream os;
      os << sched.amplitude;
      resolved.set(rule == "constant" ? "dt" : "dt_amplitude", os.str());
    }
    resolved.set("dt_rule", rule);
    resolved.set("t", cfg.get("t", "1"));
    resolved.set("steps", std::to_string(steps));

    AteOptions opt;
    opt.extra_fidelity = cfg.get_bool("extra_fidelity", false);
    resolved.set("extra_fidelity", opt.extra_fidelity ? "1" : "0");

    PauliSum h_initial(model.reg.n_qubits());
    StateVector psi0 = StateVector::basis(model.reg.n_qubits(), 0);
    if (model.name == "ring") {
      auto [h, psi] = ate_initial_alternating_x(model.reg);
      h_initial = std::move(h);
      psi0 = std::move(psi);
      resolved.set("initial", "alternating_x");
    } else {
      std::uint64_t bits = 0;
      initial_basis_state(model, pc.s_star, cfg, resolved, &bits);
      auto [h, psi] = ate_initial_diagonal_z(model.reg, bits);
      h_initial = std::move(h);
      psi0 = std::move(psi);
      resolved.set("initial", "diagonal_z");
    }
    rec = ate_run(h_initial, h_problem, obs, psi0, sched, evolver, sample_every, opt);
  } else {
    PiteConfig pcfg;
    pcfg.m0 = cfg.get_double("m0", 0.8);
    pcfg.dt = cfg.get_double("dt", model.name == "mn" ? 0.008 : 0.015);
    pcfg.steps = cfg.get_size("steps", 2000);
    pcfg.validate();
    resolved.set("m0", cfg.get("m0", "0.8"));
    {
      std::ostringstream os;
      os << pcfg.dt;
      resolved.set("dt", os.str());
    }
    resolved.set("steps", std::to_string(pcfg.steps));
    const StateVector psi0 = initial_basis_state(model, pc.s_star, cfg, resolved, nullptr);
    PiteOptions opt;
    if (cfg.has("seed")) {
      opt.seed = cfg.get_size("seed", 0);
      resolved.set("seed", std::to_string(*opt.seed));
    }
    rec = pite_run(h_problem, obs, psi0, pcfg, evolver, sample_every, opt);
  }

  attach_metadata(rec, resolved);
  {
    std::ostringstream os;
    rec.write_csv(os);
    write_text_file(output, os.str());
  }
  RunResult result;
  result.artifacts.push_back(output);
  if (cfg.has("dump_hamiltonian")) {
    const std::string path = cfg.require_key("dump_hamiltonian");
    write_text_file(path, h_problem.to_text());
    result.artifacts.push_back(path);
  }
  if (cfg.has("dump_state")) {
    const std::string path = cfg.require_key("dump_state");
    std::ostringstream os;
    rec.final_state->write_amplitude_csv(os);
    write_text_file(path, os.str());
    result.artifacts.push_back(path);
  }
  {
    PenaltyGapDiagnostic diag = penalty_gap_diagnostic(pc, model.h_system);
    std::ostringstream os;
    os.precision(6);
    os << experiment << " " << model.name << " s*=" << pc.s_star.str()
       << ": final energy " << rec.final_row().energy_problem << ", <S^2> "
       << rec.final_row().s2 << ", <Sz> " << rec.final_row().sz << ", fidelity "
       << rec.final_row().fidelity;
    if (!diag.adequate) {
      os << " [warning: penalty gap " << diag.penalty_gap
         << " below system spectral spread " << diag.system_spread << "]";
    }
    for (const auto& w : rec.warnings) os << " [warning: " << w << "]";
    result.message = os.str();
  }
  result.resolved = resolved;
  return result;
}

RunResult run_spectrum(const RunConfig& cfg) {
  RunConfig resolved;
  resolved.set("experiment", "spectrum");
  const Model model = build_model(cfg, resolved);
  const std::size_t count = cfg.get_size("levels", 12);
  resolved.set("levels", std::to_string(count));
  const Spectrum spec = diagonalize(model.h_system);
  const TotalSpinOperators total = total_spin_operators(model.reg);

  std::ostringstream table;
  table.precision(10);
  table << "index,energy,s2,sz,s_label\n";
  const std::size_t shown = std::min(count, spec.dim());
  for (std::size_t i = 0; i < shown; ++i) {
    const StateVector v = spec.eigenstate(i);
    const double s2 = expectation(v, total.s2);
    const double sz = expectation(v, total.sz);
    const double s = 0.5 * (-1.0 + std::sqrt(1.0 + 4.0 * std::max(0.0, s2)));
    const double s_rounded = std::round(2.0 * s) / 2.0;
    table << i << ',' << spec.eigenvalues[i] << ',' << s2 << ',' << sz << ','
          << s_rounded << '\n';
  }
  RunResult result;
  result.message = table.str();
  if (cfg.has("output")) {
    const std::string output = cfg.require_key("output");
    resolved.set("output", output);
    std::ostringstream os;
    os << "# version=" << kVersion << '\n';
    os << table.str();
    write_text_file(output, os.str());
    result.artifacts.push_back(output);
  }
  if (cfg.has("dump_hamiltonian")) {
    const std::string path = cfg.require_key("dump_hamiltonian");
    write_text_file(path, model.h_system.to_text());
    result.artifacts.push_back(path);
  }
  result.resolved = resolved;
  return result;
}

RunResult run_postselect(const RunConfig& cfg) {
  RunConfig resolved;
  resolved.set("experiment", "postselect");
  const Model model = build_model(cfg, resolved);
  const HalfInt s_star = HalfInt::parse(cfg.require_key("s_star"));
  const HalfInt s_z_star = HalfInt::parse(cfg.require_key("s_z_star"));
  resolved.set("s_star", s_star.str());
  resolved.set("s_z_star", s_z_star.str());
  const std::string input = cfg.require_key("input");
  const std::string output = cfg.require_key("output");
  resolved.set("input", input);
  resolved.set("output", output);
  const bool use_circuit = cfg.get_bool("circuit", true);
  resolved.set("circuit", use_circuit ? "1" : "0");

  std::ifstream in(input);
  require(in.good(), ErrorKind::invalid_config, "cannot open state file " + input);
  const StateVector psi = StateVector::read_amplitude_csv(in);
  require(psi.n_qubits() == model.reg.n_qubits(), ErrorKind::dimension_mismatch,
          "postselect: state size does not match the model register");

  const PostselectOutcome out =
      rotate_and_project(psi, model.reg, s_star, s_z_star, use_circuit);
  {
    std::ostringstream os;
    out.state.write_amplitude_csv(os);
    write_text_file(output, os.str());
  }
  RunResult result;
  result.artifacts.push_back(output);
  std::ostringstream os;
  os.precision(10);
  os << "theta_opt " << out.theta << "\npredicted_probability " << out.predicted_weight
     << "\nrealized_probability " << out.probability;
  if (out.leakage > 0) os << "\nleakage " << out.leakage;
  result.message = os.str();
  result.resolved = resolved;
  return result;
}

std::vector<std::size_t> parse_n_list(const std::string& text) {
  std::vector<std::size_t> out;
  const auto range = text.find("..");
  if (range != std::string::npos) {
    const std::size_t lo = std::stoull(text.substr(0, range));
    const std::size_t hi = std::stoull(text.substr(range + 2));
    require(lo >= 2 && hi >= lo, ErrorKind::invalid_config,
            "scaling: bad n range '" + text + "'");
    for (std::size_t n = lo; n <= hi; n += 2) out.push_back(n);
    return out;
  }
  std::istringstream is(text);
  std::string cell;
  while (std::getline(is, cell, ',')) out.push_back(std::stoull(trim(cell)));
  return out;
}

RunResult run_scaling(const RunConfig& cfg) {
  RunConfig resolved;
  resolved.set("experiment", "scaling");
  const std::string n_text = cfg.get("n", "4..14");
  resolved.set("n", n_text);
  const HalfInt s_star = HalfInt::parse(cfg.get("s_star", "0"));
  resolved.set("s_star", s_star.str());
  const double c_s = cfg.get_double("c_s", 7.5);
  const double dt = cfg.get_double("dt", 0.015);
  const double m0 = cfg.get_double("m0", 0.8);
  const std::string output = cfg.require_key("output");
  resolved.set("output", output);

  ScalingRecord rec = scaling_sweep(parse_n_list(n_text), s_star, c_s, dt, m0,
                                    {PenaltyKind::linear, PenaltyKind::quartic});
  rec.metadata["version"] = kVersion;
  {
    std::ostringstream hash;
    hash << std::hex << resolved.hash();
    rec.metadata["config_hash"] = hash.str();
  }
  for (const auto& [k, v] : resolved.entries()) rec.metadata["config." + k] = v;
  {
    std::ostringstream os;
    rec.write_csv(os);
    write_text_file(output, os.str());
  }
  const std::string fit_path = cfg.get("fit_output", output + ".fits.json");
  resolved.set("fit_output", fit_path);
  write_text_file(fit_path, rec.fit_summary_json() + "\n");

  RunResult result;
  result.artifacts = {output, fit_path};
  std::ostringstream os;
  os.precision(4);
  os << "terms exponent linear " << rec.fit(PenaltyKind::linear, "terms").exponent
     << ", quartic " << rec.fit(PenaltyKind::quartic, "terms").exponent;
  result.message = os.str();
  result.resolved = resolved;
  return result;
}

}  // namespace

RunResult run(const RunConfig& config) {
  const std::string experiment = config.require_key("experiment");
  if (experiment == "ate" || experiment == "pite") {
    return run_evolution(config, experiment);
  }
  if (experiment == "spectrum") return run_spectrum(config);
  if (experiment == "postselect") return run_postselect(config);
  if (experiment == "scaling") return run_scaling(config);
  throw Error(ErrorKind::invalid_config, "unknown experiment '" + experiment + "'");
}

std::vector<SweepEntry> sweep(const std::vector<std::string>& config_paths,
                              std::size_t parallelism,
                              const std::string& index_path) {
  require(parallelism >= 1, ErrorKind::invalid_config,
          "sweep: parallelism must be >= 1");
  std::vector<RunConfig> configs;
  configs.reserve(config_paths.size());
  std::set<std::string> outputs;
  for (const auto& path : config_paths) {
    RunConfig cfg = RunConfig::from_file(path);
    if (cfg.has("output")) {
      const std::string out = cfg.require_key("output");
      require(outputs.insert(out).second, ErrorKind::invalid_config,
              "sweep: output path collision on " + out);
    }
    configs.push_back(std::move(cfg));
  }

  std::vector<SweepEntry> entries(config_paths.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= configs.size()) break;
      SweepEntry entry;
      entry.config_path = config_paths[i];
      entry.output = configs[i].get("output", "");
      try {
        run(configs[i]);
        entry.status = "ok";
      } catch (const std::exception& e) {
        entry.status = "failed";
        entry.message = e.what();
      }
      entries[i] = std::move(entry);
    }
  };
  std::vector<std::thread> threads;
  const std::size_t workers = std::min(parallelism, std::max<std::size_t>(configs.size(), 1));
  for (std::size_t i = 0; i < workers; ++i) threads.emplace_back(worker);
  for (auto& t : threads) t.join();

  std::sort(entries.begin(), entries.end(),
            [](const SweepEntry& a, const SweepEntry& b) {
              return a.config_path < b.config_path;
            });
  std::ostringstream os;
  os << "config,output,status,message\n";
  for (const auto& e : entries) {
    std::string msg = e.message;
    std::replace(msg.begin(), msg.end(), ',', ';');
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    os << e.config_path << ',' << e.output << ',' << e.status << ',' << msg << '\n';
  }
  write_text_file(index_path, os.str());
  return entries;
}

}  // namespace spinforge::cli
