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

#include "swapchain/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace swapchain {

QubitRegister::QubitRegister(std::vector<int> labels)
    : labels_(std::move(labels)) {
  std::unordered_set<int> seen;
  for (int l : labels_)
    if (!seen.insert(l).second)
      throw std::invalid_argument("duplicate label in qubit register");
}

QubitRegister QubitRegister::range(int first, int n) {
  std::vector<int> labels(n);
  for (int k = 0; k < n; ++k) labels[k] = first + k;
  return QubitRegister(std::move(labels));
}

int QubitRegister::position_of(int label) const {
  for (int k = 0; k < size(); ++k)
    if (labels_[k] == label) return k;
  throw std::invalid_argument("label not in register");
}

bool QubitRegister::contains(int label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

DensityMatrix projector(const PureState& psi) {
  return {psi.amps * psi.amps.adjoint(), psi.reg};
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Matrix tensor(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols())
    throw std::invalid_argument("tensor: operands must be square");
  const long da = a.rows(), db = b.rows();
  Matrix out(da * db, da * db);
  for (long i = 0; i < da; ++i)
    for (long j = 0; j < da; ++j)
      out.block(i * db, j * db, db, db) = a(i, j) * b;
  return out;
}

Vector tensor(const Vector& a, const Vector& b) {
  const long da = a.size(), db = b.size();
  Vector out(da * db);
  for (long i = 0; i < da; ++i) out.segment(i * db, db) = a(i) * b;
  return out;
}

Matrix partial_trace(const Matrix& rho, int n_qubits,
                     std::span<const int> keep) {
  if (rho.rows() != rho.cols() || rho.rows() != (1L << n_qubits))
    throw std::invalid_argument("partial_trace: dimension mismatch");
  if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep set");

  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end())
    throw std::invalid_argument("partial_trace: duplicate keep position");
  if (kept.front() < 0 || kept.back() >= n_qubits)
    throw std::invalid_argument("partial_trace: keep position out of range");

  std::vector<int> traced;
  for (int q = 0; q < n_qubits; ++q)
    if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);

  const int nk = static_cast<int>(kept.size());
  const int nt = static_cast<int>(traced.size());
  const long dk = 1L << nk, dt = 1L << nt;

  // Position p owns bit (n_qubits - 1 - p) of the row/column index.
  auto scatter = [n_qubits](long sub, const std::vector<int>& pos) {
    long idx = 0;
    const int m = static_cast<int>(pos.size());
    for (int b = 0; b < m; ++b) {
      const long bit = (sub >> (m - 1 - b)) & 1;
      idx |= bit << (n_qubits - 1 - pos[b]);
    }
    return idx;
  };

  Matrix out = Matrix::Zero(dk, dk);
  for (long r = 0; r < dk; ++r) {
    const long rb = scatter(r, kept);
    for (long c = 0; c < dk; ++c) {
      const long cb = scatter(c, kept);
      Complex sum = 0.0;
      for (long t = 0; t < dt; ++t) {
        const long tb = scatter(t, traced);
        sum += rho(rb | tb, cb | tb);
      }
      out(r, c) = sum;
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho,
                            std::span<const int> keep) {
  Matrix m = partial_trace(rho.mat, rho.reg.size(), keep);
  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  std::vector<int> labels;
  labels.reserve(kept.size());
  for (int p : kept) labels.push_back(rho.reg.label(p));
  return {std::move(m), QubitRegister(std::move(labels))};
}

double expect(const Matrix& rho, const Matrix& obs) {
  if (rho.rows() != obs.rows() || rho.cols() != obs.cols())
    throw std::invalid_argument("expect: dimension mismatch");
  const Complex tr = (rho * obs).trace();
  if (std::abs(tr.imag()) > kHermTol)
    throw std::invalid_argument(
        "expect: imaginary residue above tolerance (non-Hermitian observable?)");
  return tr.real();
}

double expect(const DensityMatrix& rho, const Matrix& obs) {
  return expect(rho.mat, obs);
}

EighResult eigh(const Matrix& m) {
  if (!is_hermitian(m))
    throw std::invalid_argument("eigh: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigh: eigensolver failed to converge");
  const long d = m.rows();
  EighResult out;
  out.eigenvalues.resize(d);
  out.eigenvectors.resize(d, d);
  // Eigen sorts ascending; flip to descending.
  for (long i = 0; i < d; ++i) {
    out.eigenvalues(i) = solver.eigenvalues()(d - 1 - i);
    out.eigenvectors.col(i) = solver.eigenvectors().col(d - 1 - i);
  }
  return out;
}

Matrix psd_sqrt(const Matrix& m) {
  EighResult es = eigh(m);
  // Eigenvalues at roundoff scale are exact zeros of the underlying operator;
  // taking their square root would inject sqrt(eps)-sized noise.
  const double zero_floor =
      1e-13 * std::max(1.0, std::abs(es.eigenvalues(0)));
  Eigen::VectorXd roots(es.eigenvalues.size());
  for (long i = 0; i < es.eigenvalues.size(); ++i) {
    double ev = es.eigenvalues(i);
    if (ev < kPsdClip)
      throw std::invalid_argument("psd_sqrt: eigenvalue below PSD tolerance");
    roots(i) = ev > zero_floor ? std::sqrt(ev) : 0.0;
  }
  return es.eigenvectors * roots.asDiagonal() * es.eigenvectors.adjoint();
}

namespace {

std::vector<long> permutation_index_map(int n_qubits,
                                        std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != n_qubits)
    throw std::invalid_argument("permute_qubits: permutation size mismatch");
  std::vector<bool> used(n_qubits, false);
  for (int p : perm) {
    if (p < 0 || p >= n_qubits || used[p])
      throw std::invalid_argument("permute_qubits: not a permutation");
    used[p] = true;
  }
  const long dim = 1L << n_qubits;
  std::vector<long> new_of_old(dim);
  for (long old = 0; old < dim; ++old) {
    long idx = 0;
    for (int k = 0; k < n_qubits; ++k) {
      const long bit = (old >> (n_qubits - 1 - perm[k])) & 1;
      idx |= bit << (n_qubits - 1 - k);
    }
    new_of_old[old] = idx;
  }
  return new_of_old;
}

}  // namespace

Vector permute_qubits(const Vector& amps, int n_qubits,
                      std::span<const int> perm) {
  const auto map = permutation_index_map(n_qubits, perm);
  Vector out(amps.size());
  for (long i = 0; i < amps.size(); ++i) out(map[i]) = amps(i);
  return out;
}

Matrix permute_qubits(const Matrix& m, int n_qubits,
                      std::span<const int> perm) {
  const auto map = permutation_index_map(n_qubits, perm);
  Matrix out(m.rows(), m.cols());
  for (long r = 0; r < m.rows(); ++r)
    for (long c = 0; c < m.cols(); ++c) out(map[r], map[c]) = m(r, c);
  return out;
}

}  // namespace swapchain
