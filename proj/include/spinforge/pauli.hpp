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

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include "spinforge/error.hpp"

namespace spinforge {

using Complex = std::complex<double>;

/// Pruning tolerance for canonical form: coefficients at or below this
/// magnitude are dropped after every sum/product.
inline constexpr double kCoeffTolerance = 1e-12;

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_letter(Pauli p);
Pauli pauli_from_letter(char c);

/// Tensor product of single-qubit Pauli letters. Phase-free by construction;
/// phases produced by multiplication live in PauliSum coefficients.
///
/// Internally a pair of bit masks (x, z): the letter on qubit q is read off
/// bits q of both masks as I=(0,0), X=(1,0), Y=(1,1), Z=(0,1), i.e. the
/// operator is i^{|x&z|} X^x Z^z.
class PauliString {
 public:
  static constexpr std::size_t kMaxQubits = 64;

  explicit PauliString(std::size_t n_qubits);  // identity string

  static PauliString single(std::size_t n_qubits, std::size_t qubit, Pauli p);
  static PauliString from_masks(std::size_t n_qubits, std::uint64_t x, std::uint64_t z);
  /// Parses e.g. "XIZY"; the letter at string index q acts on qubit q.
  static PauliString from_letters(std::string_view letters);

  std::size_t n_qubits() const { return n_qubits_; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }

  Pauli letter(std::size_t qubit) const;
  std::string letters() const;

  bool is_identity() const { return (x_ | z_) == 0; }
  /// Number of non-identity letters.
  std::size_t weight() const;
  /// Mask of qubits the string acts on.
  std::uint64_t support() const { return x_ | z_; }

  bool commutes_with(const PauliString& other) const;

  friend bool operator==(const PauliString& a, const PauliString& b) {
    return a.n_qubits_ == b.n_qubits_ && a.x_ == b.x_ && a.z_ == b.z_;
  }

  /// Lexicographic over letters from qubit 0, with I < X < Y < Z.
  friend bool operator<(const PauliString& a, const PauliString& b);

 private:
  std::size_t n_qubits_;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

struct PauliProduct {
  Complex phase;  // one of {1, i, -1, -i}
  PauliString string;
};

/// Operator product a*b as (phase, string); phase * string == a*b as matrices.
PauliProduct pauli_mul(const PauliString& a, const PauliString& b);

/// Finite linear combination of Pauli strings with complex coefficients,
/// kept in canonical form: terms ordered lexicographically, no coefficient
/// with magnitude <= kCoeffTolerance.
class PauliSum {
 public:
  using TermMap = std::map<PauliString, Complex>;

  explicit PauliSum(std::size_t n_qubits);

  static PauliSum zero(std::size_t n_qubits) { return PauliSum(n_qubits); }
  static PauliSum identity(std::size_t n_qubits, Complex coeff = 1.0);
  static PauliSum term(const PauliString& s, Complex coeff);
  static PauliSum single(std::size_t n_qubits, std::size_t qubit, Pauli p,
                         Complex coeff = 1.0);

  std::size_t n_qubits() const { return n_qubits_; }
  const TermMap& terms() const { return terms_; }

  /// Number of nonzero terms, identity included.
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// All Pauli strings are Hermitian, so the sum is Hermitian iff every
  /// coefficient is real (within tol).
  bool is_hermitian(double tol = kCoeffTolerance) const;

  Complex coefficient(const PauliString& s) const;

  void add_term(const PauliString& s, Complex coeff);

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(Complex scalar);

  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(PauliSum a, Complex scalar) { return a *= scalar; }
  friend PauliSum operator*(Complex scalar, PauliSum a) { return a *= scalar; }

  /// Distributed operator product with phases folded into coefficients.
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

  PauliSum adjoint() const;

  /// Re-applies coefficient pruning. Canonical form is maintained by every
  /// mutating operation, so this is idempotent.
  PauliSum simplified(double tol = kCoeffTolerance) const;

  /// One term per line: "<coeff_re> <coeff_im> <letters>".
  std::string to_text() const;
  static PauliSum from_text(std::string_view text);

 private:
  void prune();

  std::size_t n_qubits_;
  TermMap terms_;
};

PauliSum commutator(const PauliSum& a, const PauliSum& b);

std::ostream& operator<<(std::ostream& os, const PauliSum& sum);

}  // namespace spinforge
