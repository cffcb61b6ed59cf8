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

#include "swapchain/noise.hpp"

#include <stdexcept>

#include "swapchain/states.hpp"

namespace swapchain {

namespace {
void check_unit_range(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0))
    throw std::invalid_argument(std::string(what) + " out of [0,1]");
}
}  // namespace

NoiseModel NoiseModel::ideal(int n_pairs) {
  return shared(n_pairs, 0.0, 1.0, 0.0, 0.0);
}

NoiseModel NoiseModel::shared(int n_pairs, double whiteness, double visibility,
                              double background, double dark) {
  if (n_pairs < 1) throw std::invalid_argument("NoiseModel: n_pairs must be >= 1");
  NoiseModel nm;
  nm.source_whiteness.assign(n_pairs, whiteness);
  nm.bsm_visibility.assign(n_pairs > 1 ? n_pairs - 1 : 0, visibility);
  nm.background_fraction = background;
  nm.dark_count_prob = dark;
  nm.validate(n_pairs);
  return nm;
}

void NoiseModel::validate(int n_pairs) const {
  if (static_cast<int>(source_whiteness.size()) != n_pairs)
    throw std::invalid_argument("NoiseModel: source_whiteness size mismatch");
  if (static_cast<int>(bsm_visibility.size()) != n_pairs - 1)
    throw std::invalid_argument("NoiseModel: bsm_visibility size mismatch");
  for (double w : source_whiteness) check_unit_range(w, "source_whiteness");
  for (double v : bsm_visibility) check_unit_range(v, "bsm_visibility");
  check_unit_range(background_fraction, "background_fraction");
  if (dark_count_prob < 0.0 || dark_count_prob > 1.0)
    throw std::invalid_argument("dark_count_prob out of [0,1]");
}

Matrix werner(double p) {
  check_unit_range(p, "werner parameter");
  return p * bell_projector(BellKind::PsiMinus) +
         (1.0 - p) * Matrix::Identity(4, 4) / 4.0;
}

Matrix mix_white(const Matrix& rho, double w) {
  check_unit_range(w, "white-noise weight");
  const double dim = static_cast<double>(rho.rows());
  return (1.0 - w) * rho + w * Matrix::Identity(rho.rows(), rho.cols()) / dim;
}

Matrix add_background(const Matrix& rho, double f) {
  check_unit_range(f, "background fraction");
  if (rho.rows() != 4 || rho.cols() != 4)
    throw std::invalid_argument("add_background: expects a two-qubit state");
  return (1.0 - f) * rho + f * Matrix::Identity(4, 4) / 4.0;
}

}  // namespace swapchain
