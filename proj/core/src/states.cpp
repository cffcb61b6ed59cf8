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

#include "swapchain/states.hpp"

#include <cmath>
#include <stdexcept>

namespace swapchain {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const Complex kI{0.0, 1.0};
}  // namespace

std::string to_string(BellKind kind) {
  switch (kind) {
    case BellKind::PsiPlus: return "Psi+";
    case BellKind::PsiMinus: return "Psi-";
    case BellKind::PhiPlus: return "Phi+";
    case BellKind::PhiMinus: return "Phi-";
  }
  throw std::invalid_argument("unknown BellKind");
}

char axis_char(Axis a) {
  switch (a) {
    case Axis::Z: return 'Z';
    case Axis::X: return 'X';
    case Axis::Y: return 'Y';
  }
  throw std::invalid_argument("unknown Axis");
}

Axis axis_from_char(char c) {
  switch (c) {
    case 'Z': return Axis::Z;
    case 'X': return Axis::X;
    case 'Y': return Axis::Y;
    default: throw std::invalid_argument("unknown axis character");
  }
}

Vector ket(Pol label) {
  Vector v(2);
  switch (label) {
    case Pol::H: v << 1.0, 0.0; break;
    case Pol::V: v << 0.0, 1.0; break;
    case Pol::Plus: v << kInvSqrt2, kInvSqrt2; break;
    case Pol::Minus: v << kInvSqrt2, -kInvSqrt2; break;
    case Pol::L: v << kInvSqrt2, kI * kInvSqrt2; break;
    case Pol::R: v << kInvSqrt2, -kI * kInvSqrt2; break;
    default: throw std::invalid_argument("unknown polarization label");
  }
  return v;
}

Vector bell(BellKind kind) {
  Vector v = Vector::Zero(4);
  switch (kind) {
    case BellKind::PsiPlus: v(1) = kInvSqrt2; v(2) = kInvSqrt2; break;
    case BellKind::PsiMinus: v(1) = kInvSqrt2; v(2) = -kInvSqrt2; break;
    case BellKind::PhiPlus: v(0) = kInvSqrt2; v(3) = kInvSqrt2; break;
    case BellKind::PhiMinus: v(0) = kInvSqrt2; v(3) = -kInvSqrt2; break;
  }
  return v;
}

Matrix bell_projector(BellKind kind) {
  const Vector v = bell(kind);
  return v * v.adjoint();
}

Matrix pauli(Axis axis) {
  Matrix m(2, 2);
  switch (axis) {
    case Axis::Z: m << 1.0, 0.0, 0.0, -1.0; break;
    case Axis::X: m << 0.0, 1.0, 1.0, 0.0; break;
    case Axis::Y: m << 0.0, -kI, kI, 0.0; break;
  }
  return m;
}

Vector axis_eigenvector(Axis axis, bool plus) {
  switch (axis) {
    case Axis::Z: return ket(plus ? Pol::H : Pol::V);
    case Axis::X: return ket(plus ? Pol::Plus : Pol::Minus);
    case Axis::Y: return ket(plus ? Pol::L : Pol::R);
  }
  throw std::invalid_argument("unknown Axis");
}

ChainState chain_initial(int n_pairs) {
  if (n_pairs < 1) throw std::invalid_argument("chain_initial: n_pairs must be >= 1");
  Vector amps = bell(BellKind::PsiMinus);
  for (int k = 1; k < n_pairs; ++k) amps = tensor(amps, bell(BellKind::PsiMinus));
  ChainState chain;
  chain.pure = {std::move(amps), QubitRegister::range(1, 2 * n_pairs)};
  chain.pair_kinds.assign(n_pairs, BellKind::PsiMinus);
  return chain;
}

BellCoefficients bell_coefficients(const PureState& state,
                                   std::pair<int, int> first_pair,
                                   std::pair<int, int> second_pair) {
  if (state.reg.size() != 4)
    throw std::invalid_argument("bell_coefficients: state must be 4 qubits");
  const std::array<int, 4> labels = {first_pair.first, first_pair.second,
                                     second_pair.first, second_pair.second};
  // The pairing must partition the register.
  std::array<int, 4> positions{};
  std::array<bool, 4> covered{};
  for (int k = 0; k < 4; ++k) {
    positions[k] = state.reg.position_of(labels[k]);  // throws if absent
    if (covered[positions[k]])
      throw std::invalid_argument("bell_coefficients: pairing is not a partition");
    covered[positions[k]] = true;
  }

  // Reorder the state so positions read (a, b, c, d).
  const Vector reordered = permute_qubits(state.amps, 4, positions);

  BellCoefficients table{};
  for (int k1 = 0; k1 < 4; ++k1) {
    for (int k2 = 0; k2 < 4; ++k2) {
      const Vector bra = tensor(bell(kBellKinds[k1]), bell(kBellKinds[k2]));
      table[k1][k2] = bra.dot(reordered);  // dot conjugates the left argument
    }
  }
  return table;
}

}  // namespace swapchain
