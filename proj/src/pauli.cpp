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

#include "spinforge/pauli.hpp"

#include <bit>
#include <cmath>
#include <ostream>
#include <sstream>

namespace spinforge {

namespace {

const Complex kPhaseTable[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void check_same_width(const char* op, std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorKind::dimension_mismatch,
                std::string(op) + ": qubit counts differ (" +
                    std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

char pauli_letter(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

Pauli pauli_from_letter(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default:
      throw Error(ErrorKind::invalid_config,
                  std::string("unknown Pauli letter '") + c + "'");
  }
}

PauliString::PauliString(std::size_t n_qubits) : n_qubits_(n_qubits) {
  require(n_qubits >= 1 && n_qubits <= kMaxQubits, ErrorKind::invalid_config,
          "PauliString: qubit count must be in [1, 64]");
}

PauliString PauliString::single(std::size_t n_qubits, std::size_t qubit, Pauli p) {
  PauliString s(n_qubits);
  require(qubit < n_qubits, ErrorKind::invalid_config,
          "PauliString::single: qubit index out of range");
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  if (p == Pauli::X || p == Pauli::Y) s.x_ |= bit;
  if (p == Pauli::Y || p == Pauli::Z) s.z_ |= bit;
  return s;
}

PauliString PauliString::from_masks(std::size_t n_qubits, std::uint64_t x, std::uint64_t z) {
  PauliString s(n_qubits);
  const std::uint64_t valid =
      n_qubits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_qubits) - 1);
  require((x | z) == ((x | z) & valid), ErrorKind::invalid_config,
          "PauliString::from_masks: mask outside register");
  s.x_ = x;
  s.z_ = z;
  return s;
}

PauliString PauliString::from_letters(std::string_view letters) {
  PauliString s(letters.size());
  for (std::size_t q = 0; q < letters.size(); ++q) {
    const Pauli p = pauli_from_letter(letters[q]);
    const std::uint64_t bit = std::uint64_t{1} << q;
    if (p == Pauli::X || p == Pauli::Y) s.x_ |= bit;
    if (p == Pauli::Y || p == Pauli::Z) s.z_ |= bit;
  }
  return s;
}

Pauli PauliString::letter(std::size_t qubit) const {
  const bool x = (x_ >> qubit) & 1;
  const bool z = (z_ >> qubit) & 1;
  if (x && z) return Pauli::Y;
  if (x) return Pauli::X;
  if (z) return Pauli::Z;
  return Pauli::I;
}

std::string PauliString::letters() const {
  std::string out(n_qubits_, 'I');
  for (std::size_t q = 0; q < n_qubits_; ++q) out[q] = pauli_letter(letter(q));
  return out;
}

std::size_t PauliString::weight() const {
  return static_cast<std::size_t>(std::popcount(x_ | z_));
}

bool PauliString::commutes_with(const PauliString& other) const {
  check_same_width("commutes_with", n_qubits_, other.n_qubits_);
  const int anti = std::popcount(x_ & other.z_) + std::popcount(z_ & other.x_);
  return (anti & 1) == 0;
}

bool operator<(const PauliString& a, const PauliString& b) {
  if (a.n_qubits_ != b.n_qubits_) return a.n_qubits_ < b.n_qubits_;
  // Letter rank I=0, X=1, Y=2, Z=3; qubit 0 is the most significant position.
  auto rank = [](const PauliString& s, std::size_t q) -> int {
    const int x = static_cast<int>((s.x_ >> q) & 1);
    const int z = static_cast<int>((s.z_ >> q) & 1);
    return x ? (z ? 2 : 1) : (z ? 3 : 0);
  };
  const std::uint64_t differ = (a.x_ ^ b.x_) | (a.z_ ^ b.z_);
  if (differ == 0) return false;
  const std::size_t q = static_cast<std::size_t>(std::countr_zero(differ));
  // Bits below q agree, so the first differing letter is at qubit q.
  return rank(a, q) < rank(b, q);
}

PauliProduct pauli_mul(const PauliString& a, const PauliString& b) {
  check_same_width("pauli_mul", a.n_qubits(), b.n_qubits());
  const std::uint64_t x3 = a.x_mask() ^ b.x_mask();
  const std::uint64_t z3 = a.z_mask() ^ b.z_mask();
  // letter(x,z) = i^{xz} X^x Z^z, so per qubit
  //   a*b = i^{x1 z1 + x2 z2 - x3 z3 + 2 z1 x2} letter(x3, z3).
  int e = std::popcount(a.x_mask() & a.z_mask()) +
          std::popcount(b.x_mask() & b.z_mask()) -
          std::popcount(x3 & z3) +
          2 * std::popcount(a.z_mask() & b.x_mask());
  e &= 3;
  return PauliProduct{kPhaseTable[e],
                      PauliString::from_masks(a.n_qubits(), x3, z3)};
}

PauliSum::PauliSum(std::size_t n_qubits) : n_qubits_(n_qubits) {
  require(n_qubits >= 1 && n_qubits <= PauliString::kMaxQubits,
          ErrorKind::invalid_config, "PauliSum: qubit count must be in [1, 64]");
}

PauliSum PauliSum::identity(std::size_t n_qubits, Complex coeff) {
  PauliSum s(n_qubits);
  s.add_term(PauliString(n_qubits), coeff);
  return s;
}

PauliSum PauliSum::term(const PauliString& str, Complex coeff) {
  PauliSum s(str.n_qubits());
  s.add_term(str, coeff);
  return s;
}

PauliSum PauliSum::single(std::size_t n_qubits, std::size_t qubit, Pauli p,
                          Complex coeff) {
  return term(PauliString::single(n_qubits, qubit, p), coeff);
}

bool PauliSum::is_hermitian(double tol) const {
  for (const auto& [s, c] : terms_) {
    if (std::abs(c.imag()) > tol) return false;
  }
  return true;
}

Complex PauliSum::coefficient(const PauliString& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Complex{0, 0} : it->second;
}

void PauliSum::add_term(const PauliString& s, Complex coeff) {
  check_same_width("PauliSum::add_term", n_qubits_, s.n_qubits());
  auto [it, inserted] = terms_.try_emplace(s, coeff);
  if (!inserted) it->second += coeff;
  if (std::abs(it->second) <= kCoeffTolerance) terms_.erase(it);
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  check_same_width("PauliSum::operator+=", n_qubits_, other.n_qubits_);
  for (const auto& [s, c] : other.terms_) add_term(s, c);
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  check_same_width("PauliSum::operator-=", n_qubits_, other.n_qubits_);
  for (const auto& [s, c] : other.terms_) add_term(s, -c);
  return *this;
}

PauliSum& PauliSum::operator*=(Complex scalar) {
  if (std::abs(scalar) <= kCoeffTolerance) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, c] : terms_) c *= scalar;
  prune();
  return *this;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  check_same_width("PauliSum::operator*", a.n_qubits(), b.n_qubits());
  PauliSum out(a.n_qubits());
  for (const auto& [sa, ca] : a.terms()) {
    for (const auto& [sb, cb] : b.terms()) {
      const PauliProduct p = pauli_mul(sa, sb);
      out.terms_[p.string] += ca * cb * p.phase;
    }
  }
  out.prune();
  return out;
}

PauliSum PauliSum::adjoint() const {
  PauliSum out(n_qubits_);
  for (const auto& [s, c] : terms_) out.terms_.emplace(s, std::conj(c));
  return out;
}

PauliSum PauliSum::simplified(double tol) const {
  PauliSum out(n_qubits_);
  for (const auto& [s, c] : terms_) {
    if (std::abs(c) > tol) out.terms_.emplace(s, c);
  }
  return out;
}

void PauliSum::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) <= kCoeffTolerance) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

std::string PauliSum::to_text() const {
  std::ostringstream os;
  os.precision(17);
  for (const auto& [s, c] : terms_) {
    os << c.real() << ' ' << c.imag() << ' ' << s.letters() << '\n';
  }
  return os.str();
}

PauliSum PauliSum::from_text(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  PauliSum* out = nullptr;
  PauliSum result(1);
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    double re = 0, im = 0;
    std::string letters;
    if (!(ls >> re >> im >> letters)) {
      throw Error(ErrorKind::invalid_config,
                  "PauliSum::from_text: malformed line '" + line + "'");
    }
    const PauliString s = PauliString::from_letters(letters);
    if (out == nullptr) {
      result = PauliSum(s.n_qubits());
      out = &result;
    }
    out->add_term(s, Complex{re, im});
  }
  require(out != nullptr, ErrorKind::invalid_config,
          "PauliSum::from_text: no terms found");
  return result;
}

PauliSum commutator(const PauliSum& a, const PauliSum& b) {
  return a * b - b * a;
}

std::ostream& operator<<(std::ostream& os, const PauliSum& sum) {
  return os << sum.to_text();
}

}  // namespace spinforge
