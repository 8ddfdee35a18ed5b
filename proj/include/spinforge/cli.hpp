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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spinforge/error.hpp"

namespace spinforge::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Flat key=value run description. Files use one `key = value` pair per line
/// ('#' comments allowed); command-line flags override file values.
class RunConfig {
 public:
  RunConfig() = default;
  explicit RunConfig(std::map<std::string, std::string> kv) : kv_(std::move(kv)) {}

  static RunConfig from_file(const std::string& path);
  static RunConfig parse(const std::string& text);

  void set(const std::string& key, const std::string& value) { kv_[key] = value; }
  bool has(const std::string& key) const { return kv_.count(key) > 0; }

  std::string get(const std::string& key, const std::string& fallback) const;
  std::string require_key(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  std::size_t get_size(const std::string& key, std::size_t fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;

  const std::map<std::string, std::string>& entries() const { return kv_; }

  /// Sorted `key=value` lines; parse(serialize(c)) == c.
  std::string serialize() const;
  /// FNV-1a over the serialized form.
  std::uint64_t hash() const;

  friend bool operator==(const RunConfig& a, const RunConfig& b) {
    return a.kv_ == b.kv_;
  }

 private:
  std::map<std::string, std::string> kv_;
};

struct RunResult {
  std::string message;
  std::vector<std::string> artifacts;
  /// Fully resolved configuration (defaults materialized) as emitted into the
  /// output metadata.
  RunConfig resolved;
};

/// Executes one experiment (ate | pite | postselect | scaling | spectrum).
/// Validation failures throw Error(invalid_config); the binary maps error
/// kinds onto exit codes.
RunResult run(const RunConfig& config);

struct SweepEntry {
  std::string config_path;
  std::string output;
  std::string status;  // "ok" | "failed"
  std::string message;
};

/// Runs the configs with up to `parallelism` workers and writes an index CSV
/// (config,output,status,message) sorted by config path. Output paths must be
/// disjoint.
std::vector<SweepEntry> sweep(const std::vector<std::string>& config_paths,
                              std::size_t parallelism,
                              const std::string& index_path);

int exit_code_for(const Error& e);

}  // namespace spinforge::cli
