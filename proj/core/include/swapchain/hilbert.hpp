// Copyright 2026 The swapchain authors.
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
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace swapchain {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Max-norm tolerance below which a matrix is accepted as Hermitian.
inline constexpr double kHermTol = 1e-10;
/// Eigenvalues above this (negative) threshold are clipped to zero in PSD
/// routines; anything below is an error.
inline constexpr double kPsdClip = -1e-10;

/// Ordered photon labels; position k of the list is tensor slot k, and the
/// leftmost label owns the most significant index bit (H=0, V=1).
class QubitRegister {
 public:
  QubitRegister() = default;
  explicit QubitRegister(std::vector<int> labels);

  /// Register labeled first..first+n-1 in order.
  static QubitRegister range(int first, int n);

  int size() const { return static_cast<int>(labels_.size()); }
  long dim() const { return 1L << labels_.size(); }
  const std::vector<int>& labels() const { return labels_; }
  int label(int position) const { return labels_.at(position); }

  /// Position of a label; throws if absent.
  int position_of(int label) const;
  bool contains(int label) const;

  bool operator==(const QubitRegister&) const = default;

 private:
  std::vector<int> labels_;
};

/// Normalized complex amplitude vector over a labeled register.
struct PureState {
  Vector amps;
  QubitRegister reg;
};

/// Hermitian PSD trace-1 matrix over a labeled register.
struct DensityMatrix {
  Matrix mat;
  QubitRegister reg;
};

DensityMatrix projector(const PureState& psi);

bool is_hermitian(const Matrix& m, double tol = kHermTol);

/// Kronecker product; register order of `a` precedes `b`.
Matrix tensor(const Matrix& a, const Matrix& b);
Vector tensor(const Vector& a, const Vector& b);

/// Trace out every qubit not listed in `keep` (0-based positions). The result
/// register is the kept positions in their original order.
Matrix partial_trace(const Matrix& rho, int n_qubits,
                     std::span<const int> keep);
DensityMatrix partial_trace(const DensityMatrix& rho,
                            std::span<const int> keep);

/// Tr(rho * obs) for Hermitian obs; the imaginary residue must stay below
/// 1e-10 or the observable is rejected as non-Hermitian.
double expect(const Matrix& rho, const Matrix& obs);
double expect(const DensityMatrix& rho, const Matrix& obs);

struct EighResult {
  Eigen::VectorXd eigenvalues;  // sorted descending
  Matrix eigenvectors;          // orthonormal columns, same order
};

/// Hermitian eigendecomposition; input must be Hermitian within kHermTol.
EighResult eigh(const Matrix& m);

/// Principal square root of a Hermitian PSD matrix. Eigenvalues in
/// [kPsdClip, 0) are clipped to zero; below kPsdClip is an error.
Matrix psd_sqrt(const Matrix& m);

/// Reorder tensor slots of a state: perm[new_position] = old_position.
Vector permute_qubits(const Vector& amps, int n_qubits,
                      std::span<const int> perm);
Matrix permute_qubits(const Matrix& m, int n_qubits,
                      std::span<const int> perm);

}  // namespace swapchain
