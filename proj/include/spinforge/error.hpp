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

#include <stdexcept>
#include <string>

namespace spinforge {

/// Error categories. The CLI maps them onto process exit codes:
/// config-like failures -> 2, numerical-contract failures -> 3,
/// post-selection failures -> 4.
enum class ErrorKind {
  dimension_mismatch,
  invalid_config,
  resource_limit,
  contract_violation,
  empty_sector,
  failure_dominated,
  weight_aliasing,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// Empty post-selection sector; carries the removed unphysical mass when the
/// projection involves an encoded register.
class EmptySectorError : public Error {
 public:
  explicit EmptySectorError(const std::string& what, double leakage = 0.0)
      : Error(ErrorKind::empty_sector, what), leakage_(leakage) {}

  double leakage() const { return leakage_; }

 private:
  double leakage_;
};

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) throw Error(kind, what);
}

}  // namespace spinforge
