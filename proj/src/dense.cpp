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

#include "spinforge/dense.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>

namespace spinforge {

std::size_t dense_qubit_limit() {
  static const std::size_t limit = [] {
    if (const char* env = std::getenv("SPINFORGE_DENSE_LIMIT")) {
      const long v = std::strtol(env, nullptr, 10);
      if (v >= 1 && v <= 24) return static_cast<std::size_t>(v);
    }
    return std::size_t{12};
  }();
  return limit;
}

namespace {

void check_dense_limit(const char* op, std::size_t n_qubits) {
  if (n_qubits > dense_qubit_limit()) {
    throw Error(ErrorKind::resource_limit,
                std::string(op) + ": " + std::to_string(n_qubits) +
                    " qubits exceeds the dense limit of " +
                    std::to_string(dense_qubit_limit()));
  }
}

void check_hermitian(const char* op, const PauliSum& h) {
  if (!h.is_hermitian()) {
    throw Error(ErrorKind::contract_violation,
                std::string(op) + ": operator must be Hermitian");
  }
}

}  // namespace

Eigen::MatrixXcd to_dense(const PauliSum& a) {
  check_dense_limit("to_dense", a.n_qubits());
  const std::size_t dim = std::size_t{1} << a.n_qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  static const Complex kI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (const auto& [s, c] : a.terms()) {
    const std::uint64_t x = s.x_mask();
    const std::uint64_t z = s.z_mask();
    const int base = std::popcount(x & z) & 3;
    for (std::uint64_t b = 0; b < dim; ++b) {
      const int e = (base + 2 * (std::popcount(z & b) & 1)) & 3;
      m(b ^ x, b) += c * kI[e];
    }
  }
  return m;
}

StateVector Spectrum::eigenstate(std::size_t i) const {
  std::size_t n = 0;
  while ((std::size_t{1} << n) < dim()) ++n;
  std::vector<Complex> amps(dim());
  for (std::size_t r = 0; r < dim(); ++r) amps[r] = eigenvectors(r, i);
  return StateVector::from_amplitudes(n, std::move(amps));
}

std::size_t Spectrum::ground_degeneracy(double degeneracy_tol) const {
  std::size_t k = 1;
  while (k < dim() && eigenvalues[k] - eigenvalues[0] < degeneracy_tol) ++k;
  return k;
}

double Spectrum::ground_weight(const StateVector& psi, double degeneracy_tol) const {
  const std::size_t k = ground_degeneracy(degeneracy_tol);
  const Eigen::VectorXcd v = to_eigen(psi);
  double w = 0;
  for (std::size_t i = 0; i < k; ++i) {
    w += std::norm(eigenvectors.col(i).dot(v));
  }
  return w;
}

double Spectrum::ground_average(const Eigen::MatrixXcd& a_dense,
                                double degeneracy_tol) const {
  const std::size_t k = ground_degeneracy(degeneracy_tol);
  Complex acc{0, 0};
  for (std::size_t i = 0; i < k; ++i) {
    acc += eigenvectors.col(i).dot(a_dense * eigenvectors.col(i));
  }
  return acc.real() / static_cast<double>(k);
}

Spectrum diagonalize_dense(const Eigen::MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  require(solver.info() == Eigen::Success, ErrorKind::contract_violation,
          "diagonalize: eigensolver failed to converge");
  return Spectrum{solver.eigenvalues(), solver.eigenvectors()};
}

Spectrum diagonalize(const PauliSum& h) {
  check_dense_limit("diagonalize", h.n_qubits());
  check_hermitian("diagonalize", h);
  return diagonalize_dense(to_dense(h));
}

Eigen::VectorXcd to_eigen(const StateVector& psi) {
  Eigen::VectorXcd v(psi.dim());
  for (std::size_t i = 0; i < psi.dim(); ++i) v[i] = psi.amplitude(i);
  return v;
}

StateVector from_eigen(std::size_t n_qubits, const Eigen::VectorXcd& v) {
  std::vector<Complex> amps(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) amps[i] = v[i];
  return StateVector::from_amplitudes(n_qubits, std::move(amps));
}

StateVector exact_evolve(const StateVector& psi, const PauliSum& h, double t) {
  require(psi.n_qubits() == h.n_qubits(), ErrorKind::dimension_mismatch,
          "exact_evolve: dimensions differ");
  check_hermitian("exact_evolve", h);
  const Spectrum spec = diagonalize(h);
  Eigen::VectorXcd c = spec.eigenvectors.adjoint() * to_eigen(psi);
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    c[i] *= std::polar(1.0, -spec.eigenvalues[i] * t);
  }
  return from_eigen(psi.n_qubits(), spec.eigenvectors * c);
}

StateVector imaginary_time_evolve(const StateVector& psi, const PauliSum& h,
                                  double tau, double* weight) {
  require(psi.n_qubits() == h.n_qubits(), ErrorKind::dimension_mismatch,
          "imaginary_time_evolve: dimensions differ");
  check_hermitian("imaginary_time_evolve", h);
  const Spectrum spec = diagonalize(h);
  Eigen::VectorXcd c = spec.eigenvectors.adjoint() * to_eigen(psi);
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    c[i] *= std::exp(-spec.eigenvalues[i] * tau);
  }
  const double w = c.squaredNorm();
  if (weight != nullptr) *weight = w;
  require(w > 1e-300, ErrorKind::contract_violation,
          "imaginary_time_evolve: state annihilated");
  return from_eigen(psi.n_qubits(), spec.eigenvectors * (c / std::sqrt(w)));
}

double ground_subspace_fidelity(const StateVector& psi, const PauliSum& h,
                                double degeneracy_tol) {
  const Spectrum spec = diagonalize(h);
  return spec.ground_weight(psi, degeneracy_tol);
}

Eigen::MatrixXcd sector_basis(const PauliSum& s2, const PauliSum& sz,
                              double s2_value, double sz_value, double value_tol) {
  const Spectrum sz_spec = diagonalize(sz);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < sz_spec.eigenvalues.size(); ++i) {
    if (std::abs(sz_spec.eigenvalues[i] - sz_value) < value_tol) keep.push_back(i);
  }
  const std::size_t dim = sz_spec.dim();
  if (keep.empty()) return Eigen::MatrixXcd(dim, 0);
  Eigen::MatrixXcd b(dim, keep.size());
  for (std::size_t j = 0; j < keep.size(); ++j) b.col(j) = sz_spec.eigenvectors.col(keep[j]);

  const Eigen::MatrixXcd s2_restricted = b.adjoint() * to_dense(s2) * b;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(s2_restricted);
  std::vector<Eigen::Index> keep2;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    if (std::abs(solver.eigenvalues()[i] - s2_value) < value_tol) keep2.push_back(i);
  }
  Eigen::MatrixXcd out(dim, keep2.size());
  for (std::size_t j = 0; j < keep2.size(); ++j) {
    out.col(j) = b * solver.eigenvectors().col(keep2[j]);
  }
  return out;
}

double sector_ground_energy(const PauliSum& h, const Eigen::MatrixXcd& basis) {
  require(basis.cols() > 0, ErrorKind::empty_sector,
          "sector_ground_energy: empty sector");
  const Eigen::MatrixXcd restricted = basis.adjoint() * to_dense(h) * basis;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(restricted);
  return solver.eigenvalues()[0];
}

StateVector sector_ground_state(const PauliSum& h, const Eigen::MatrixXcd& basis) {
  require(basis.cols() > 0, ErrorKind::empty_sector,
          "sector_ground_state: empty sector");
  const Eigen::MatrixXcd restricted = basis.adjoint() * to_dense(h) * basis;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(restricted);
  const Eigen::VectorXcd full = basis * solver.eigenvectors().col(0);
  return from_eigen(h.n_qubits(), full);
}

}  // namespace spinforge
