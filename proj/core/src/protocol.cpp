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

#include "swapchain/protocol.hpp"

#include <cmath>
#include <stdexcept>

namespace swapchain {

Matrix bsm_element(DetectorPattern pattern, double visibility) {
  if (!(visibility >= 0.0 && visibility <= 1.0))
    throw std::invalid_argument("bsm_element: visibility out of [0,1]");
  Matrix m = Matrix::Zero(4, 4);
  const double s = pattern.coherence_sign();
  // Index 0 = HH, 3 = VV over (HH, HV, VH, VV).
  m(0, 0) = 0.25;
  m(3, 3) = 0.25;
  m(0, 3) = 0.25 * s * visibility;
  m(3, 0) = 0.25 * s * visibility;
  return m;
}

namespace {

// Permutation bringing positions (pi, pj) to the front, remaining positions
// in original order; returns perm with perm[new] = old.
std::vector<int> front_permutation(int n, int pi, int pj) {
  std::vector<int> perm;
  perm.reserve(n);
  perm.push_back(pi);
  perm.push_back(pj);
  for (int p = 0; p < n; ++p)
    if (p != pi && p != pj) perm.push_back(p);
  return perm;
}

}  // namespace

std::pair<DensityMatrix, double> apply_bsm(const DensityMatrix& rho,
                                           const BsmSpec& spec) {
  const int n = rho.reg.size();
  if (n < 3)
    throw std::invalid_argument("apply_bsm: register must keep at least one photon");
  if (spec.photon_i == spec.photon_j)
    throw std::invalid_argument("apply_bsm: target photons must differ");
  const int pi = rho.reg.position_of(spec.photon_i);
  const int pj = rho.reg.position_of(spec.photon_j);

  const Matrix m = bsm_element(spec.pattern, spec.visibility);
  const Matrix root = psd_sqrt(m);

  // Work with the targets in the two leading slots; the remaining register
  // keeps its original order, so no back-permutation is needed.
  const std::vector<int> perm = front_permutation(n, pi, pj);
  const Matrix reordered = permute_qubits(rho.mat, n, perm);

  const long dr = reordered.rows() / 4;  // dimension of the rest register

  // p = Tr[(M x I) rho] = sum_{a,c} M(a,c) Tr rho(c,a)
  Complex p_c = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int c = 0; c < 4; ++c) {
      if (m(a, c) == 0.0) continue;
      p_c += m(a, c) * reordered.block(c * dr, a * dr, dr, dr).trace();
    }
  const double p = p_c.real();
  if (p < 1e-12)
    throw std::runtime_error(
        "apply_bsm: outcome probability below 1e-12 (state orthogonal to pattern)");

  // Conditional state on the rest register:
  // Tr_front[(S x I) rho (S x I)] = sum_a [sum_c S(a,c) rho(c,d) S*(a,d)]
  Matrix rest = Matrix::Zero(dr, dr);
  for (int a = 0; a < 4; ++a) {
    for (int c = 0; c < 4; ++c) {
      if (root(a, c) == 0.0) continue;
      for (int d = 0; d < 4; ++d) {
        const Complex w = root(a, c) * std::conj(root(a, d));
        if (w == 0.0) continue;
        rest.noalias() += w * reordered.block(c * dr, d * dr, dr, dr);
      }
    }
  }
  rest /= p;

  std::vector<int> labels;
  labels.reserve(n - 2);
  for (int p2 = 0; p2 < n; ++p2)
    if (p2 != pi && p2 != pj) labels.push_back(rho.reg.label(p2));

  return {{std::move(rest), QubitRegister(std::move(labels))}, p};
}

SwapResult run_chain(int n_pairs, std::span<const BsmSpec> specs,
                     const NoiseModel& source_noise) {
  if (n_pairs < 2) throw std::invalid_argument("run_chain: n_pairs must be >= 2");
  source_noise.validate(n_pairs);
  if (static_cast<int>(specs.size()) != n_pairs - 1)
    throw std::invalid_argument("run_chain: need one BSM spec per stage");
  for (int k = 0; k < n_pairs - 1; ++k) {
    if (specs[k].photon_i != 2 * k + 2 || specs[k].photon_j != 2 * k + 3)
      throw std::invalid_argument(
          "run_chain: BSM specs must target photons (2,3), (4,5), ... in order");
  }

  // Initial chain: tensor product of per-pair source states.
  Matrix rho = werner(1.0 - source_noise.source_whiteness[0]);
  for (int k = 1; k < n_pairs; ++k)
    rho = tensor(rho, werner(1.0 - source_noise.source_whiteness[k]));
  DensityMatrix state{std::move(rho), QubitRegister::range(1, 2 * n_pairs)};

  SwapResult result;
  result.success_probability = 1.0;
  for (const BsmSpec& spec : specs) {
    auto [next, p] = apply_bsm(state, spec);
    state = std::move(next);
    result.success_probability *= p;
    result.stage_log.push_back({spec.photon_i, spec.photon_j, spec.pattern,
                                spec.visibility, p});
  }
  result.final_state = std::move(state);
  return result;
}

SwapResult run_chain(int n_pairs, const NoiseModel& noise) {
  noise.validate(n_pairs);
  std::vector<BsmSpec> specs;
  for (int k = 0; k < n_pairs - 1; ++k)
    specs.push_back({2 * k + 2, 2 * k + 3, DetectorPattern{Diag::Plus, Diag::Plus},
                     noise.bsm_visibility[k]});
  return run_chain(n_pairs, specs, noise);
}

namespace {

// Bell kinds as Pauli labels modulo phase: Phi+<->I, Psi+<->X, Phi-<->Z,
// Psi-<->Y. Composition is the Klein four-group (componentwise XOR).
std::pair<int, int> bell_bits(BellKind k) {
  switch (k) {
    case BellKind::PhiPlus: return {0, 0};
    case BellKind::PsiPlus: return {1, 0};
    case BellKind::PhiMinus: return {0, 1};
    case BellKind::PsiMinus: return {1, 1};
  }
  throw std::invalid_argument("unknown BellKind");
}

BellKind bell_from_bits(int x, int z) {
  if (x == 0 && z == 0) return BellKind::PhiPlus;
  if (x == 1 && z == 0) return BellKind::PsiPlus;
  if (x == 0 && z == 1) return BellKind::PhiMinus;
  return BellKind::PsiMinus;
}

}  // namespace

BellKind outcome_bookkeeping(int n_pairs, std::span<const BellKind> outcomes) {
  if (n_pairs < 2) throw std::invalid_argument("outcome_bookkeeping: n_pairs >= 2");
  if (static_cast<int>(outcomes.size()) != n_pairs - 1)
    throw std::invalid_argument("outcome_bookkeeping: outcomes length mismatch");
  // n singlets compose with every intermediate outcome.
  int x = n_pairs & 1, z = n_pairs & 1;
  for (BellKind k : outcomes) {
    auto [ox, oz] = bell_bits(k);
    x ^= ox;
    z ^= oz;
  }
  return bell_from_bits(x, z);
}

}  // namespace swapchain
