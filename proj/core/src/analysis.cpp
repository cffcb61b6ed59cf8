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

#include "swapchain/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "swapchain/rng.hpp"

namespace swapchain {

namespace {

constexpr double kProbFloor = 1e-12;

int axis_index(Axis a) {
  switch (a) {
    case Axis::X: return 1;
    case Axis::Y: return 2;
    case Axis::Z: return 3;
  }
  throw std::invalid_argument("unknown Axis");
}

}  // namespace

std::string setting_label(Setting s) {
  return {axis_char(s.first), axis_char(s.second)};
}

Setting setting_from_label(const std::string& label) {
  if (label.size() != 2)
    throw std::invalid_argument("setting label must be two axis characters");
  return {axis_from_char(label[0]), axis_from_char(label[1])};
}

std::vector<Setting> witness_settings() {
  return {{Axis::Z, Axis::Z}, {Axis::X, Axis::X}, {Axis::Y, Axis::Y}};
}

std::vector<Setting> tomography_settings() {
  std::vector<Setting> out;
  for (Axis a : kAxes)
    for (Axis b : kAxes) out.push_back({a, b});
  return out;
}

Matrix outcome_projector(Setting s, int k) {
  if (k < 0 || k > 3) throw std::invalid_argument("outcome index out of range");
  const Vector va = axis_eigenvector(s.first, k < 2);
  const Vector vb = axis_eigenvector(s.second, k % 2 == 0);
  const Vector v = tensor(va, vb);
  return v * v.adjoint();
}

std::array<double, 4> outcome_probabilities(const Matrix& rho, Setting s) {
  std::array<double, 4> probs{};
  for (int k = 0; k < 4; ++k) {
    const Vector va = axis_eigenvector(s.first, k < 2);
    const Vector vb = axis_eigenvector(s.second, k % 2 == 0);
    const Vector v = tensor(va, vb);
    probs[k] = std::real((v.adjoint() * rho * v)(0, 0));
  }
  return probs;
}

const WitnessOperator& witness_operator() {
  static const WitnessOperator op = [] {
    auto proj2 = [](Pol a, Pol b) {
      const Vector v = tensor(ket(a), ket(b));
      return Matrix(v * v.adjoint());
    };
    WitnessOperator w{Matrix::Zero(4, 4),
                      {WitnessOperator::Term{proj2(Pol::H, Pol::H), +1.0, "HH"},
                       WitnessOperator::Term{proj2(Pol::V, Pol::V), +1.0, "VV"},
                       WitnessOperator::Term{proj2(Pol::Plus, Pol::Plus), +1.0, "++"},
                       WitnessOperator::Term{proj2(Pol::Minus, Pol::Minus), +1.0, "--"},
                       WitnessOperator::Term{proj2(Pol::R, Pol::L), -1.0, "RL"},
                       WitnessOperator::Term{proj2(Pol::L, Pol::R), -1.0, "LR"}}};
    for (const auto& term : w.terms)
      w.matrix += 0.5 * term.sign * term.projector;
    return w;
  }();
  return op;
}

double witness_value(const Matrix& rho) {
  return expect(rho, witness_operator().matrix);
}

double witness_value(const DensityMatrix& rho) { return witness_value(rho.mat); }

WitnessEstimate witness_from_counts(const SettingOutcome& zz,
                                    const SettingOutcome& xx,
                                    const SettingOutcome& yy) {
  if (zz.setting != Setting{Axis::Z, Axis::Z} ||
      xx.setting != Setting{Axis::X, Axis::X} ||
      yy.setting != Setting{Axis::Y, Axis::Y})
    throw std::invalid_argument("witness_from_counts: expects ZZ, XX, YY outcomes");
  for (const auto* s : {&zz, &xx, &yy})
    if (s->total() <= 0)
      throw std::invalid_argument("witness_from_counts: zero total in a setting");

  const double nz = static_cast<double>(zz.total());
  const double nx = static_cast<double>(xx.total());
  const double ny = static_cast<double>(yy.total());

  // Z: + = H; X: + = |+>; Y: + = |L>, so RL is (-,+) and LR is (+,-).
  const double p_hh = zz.counts[0] / nz, p_vv = zz.counts[3] / nz;
  const double p_pp = xx.counts[0] / nx, p_mm = xx.counts[3] / nx;
  const double p_rl = yy.counts[2] / ny, p_lr = yy.counts[1] / ny;

  WitnessEstimate est;
  est.value = 0.5 * (p_hh + p_vv + p_pp + p_mm - p_rl - p_lr);

  // Within one setting only the sum of the two selected fractions enters, so
  // each setting contributes a binomial variance q(1-q)/N.
  const double qz = p_hh + p_vv, qx = p_pp + p_mm, qy = p_rl + p_lr;
  const double var =
      qz * (1.0 - qz) / nz + qx * (1.0 - qx) / nx + qy * (1.0 - qy) / ny;
  est.stderr_value = 0.5 * std::sqrt(std::max(var, 0.0));
  return est;
}

namespace {

Eigen::Vector4d wootters_lambdas(const Matrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4)
    throw std::invalid_argument("concurrence: expects a two-qubit state");
  static const Matrix spin_flip = tensor(pauli(Axis::Y), pauli(Axis::Y));
  const Matrix root = psd_sqrt(rho);
  const Matrix m = root * spin_flip * rho.conjugate() * spin_flip * root;
  // m is Hermitian PSD up to roundoff; its eigenvalues are the squared
  // Wootters lambdas. Roundoff-scale eigenvalues are genuine zeros and must
  // not leak sqrt(eps) into the lambda differences.
  const EighResult es = eigh(0.5 * (m + m.adjoint()));
  const double zero_floor = 1e-13 * std::max(1.0, std::abs(es.eigenvalues(0)));
  Eigen::Vector4d lambdas;
  for (int i = 0; i < 4; ++i)
    lambdas(i) =
        es.eigenvalues(i) > zero_floor ? std::sqrt(es.eigenvalues(i)) : 0.0;
  return lambdas;  // descending, inherited from eigh
}

}  // namespace

double concurrence_premax(const Matrix& rho) {
  const Eigen::Vector4d l = wootters_lambdas(rho);
  return l(0) - l(1) - l(2) - l(3);
}

double concurrence(const Matrix& rho) {
  return std::max(0.0, concurrence_premax(rho));
}

namespace {

const std::array<Matrix, 4>& pauli_basis() {
  static const std::array<Matrix, 4> basis = {
      Matrix::Identity(2, 2), pauli(Axis::X), pauli(Axis::Y), pauli(Axis::Z)};
  return basis;
}

}  // namespace

PauliTable pauli_expectations(const Matrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4)
    throw std::invalid_argument("pauli_expectations: expects a two-qubit state");
  PauliTable table{};
  const auto& basis = pauli_basis();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      table[i][j] = expect(rho, tensor(basis[i], basis[j]));
  return table;
}

Matrix linear_inversion(const PauliTable& correlations) {
  if (std::abs(correlations[0][0] - 1.0) > 1e-9)
    throw std::invalid_argument("linear_inversion: <II> must be 1");
  Matrix rho = Matrix::Zero(4, 4);
  const auto& basis = pauli_basis();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      rho += 0.25 * correlations[i][j] * tensor(basis[i], basis[j]);
  return rho;
}

Matrix psd_project(const Matrix& hermitian) {
  const EighResult es = eigh(hermitian);
  Eigen::VectorXd clipped = es.eigenvalues.cwiseMax(0.0);
  const double total = clipped.sum();
  if (total <= 0.0)
    return Matrix::Identity(hermitian.rows(), hermitian.cols()) /
           static_cast<double>(hermitian.rows());
  clipped /= total;
  return es.eigenvectors * clipped.asDiagonal() * es.eigenvectors.adjoint();
}

PauliTable correlations_from_counts(
    const std::vector<SettingOutcome>& settings) {
  if (settings.size() != 9)
    throw std::invalid_argument("correlations_from_counts: expects 9 settings");
  std::array<std::array<const SettingOutcome*, 3>, 3> by_axis{};
  for (const auto& s : settings) {
    auto& slot =
        by_axis[axis_index(s.setting.first) - 1][axis_index(s.setting.second) - 1];
    if (slot != nullptr)
      throw std::invalid_argument("correlations_from_counts: duplicate setting");
    if (s.total() <= 0)
      throw std::invalid_argument("correlations_from_counts: zero total in " +
                                  setting_label(s.setting));
    slot = &s;
  }

  PauliTable table{};
  table[0][0] = 1.0;
  // Two-qubit correlators: (++) - (+-) - (-+) + (--).
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const SettingOutcome& s = *by_axis[a][b];
      const double n = static_cast<double>(s.total());
      table[a + 1][b + 1] =
          (s.counts[0] - s.counts[1] - s.counts[2] + s.counts[3]) / n;
    }
  // Single-qubit correlators: averaged over the settings sharing that axis.
  for (int a = 0; a < 3; ++a) {
    double first_sum = 0.0, second_sum = 0.0;
    for (int b = 0; b < 3; ++b) {
      const SettingOutcome& sf = *by_axis[a][b];
      first_sum += (sf.counts[0] + sf.counts[1] - sf.counts[2] - sf.counts[3]) /
                   static_cast<double>(sf.total());
      const SettingOutcome& ss = *by_axis[b][a];
      second_sum += (ss.counts[0] - ss.counts[1] + ss.counts[2] - ss.counts[3]) /
                    static_cast<double>(ss.total());
    }
    table[a + 1][0] = first_sum / 3.0;
    table[0][a + 1] = second_sum / 3.0;
  }
  return table;
}

// --- maximum-likelihood reconstruction ---------------------------------------

namespace {

// Lower-triangular parameter layout: theta[0..3] real diagonal, then
// (re, im) for entries (1,0), (2,0), (2,1), (3,0), (3,1), (3,2).
constexpr std::array<std::pair<int, int>, 6> kLowerEntries = {
    std::pair<int, int>{1, 0}, {2, 0}, {2, 1}, {3, 0}, {3, 1}, {3, 2}};

Matrix t_from_theta(const std::array<double, 16>& theta) {
  Matrix t = Matrix::Zero(4, 4);
  for (int d = 0; d < 4; ++d) t(d, d) = theta[d];
  for (int e = 0; e < 6; ++e) {
    const auto [r, c] = kLowerEntries[e];
    t(r, c) = Complex(theta[4 + 2 * e], theta[5 + 2 * e]);
  }
  return t;
}

struct MleData {
  std::vector<Vector> vectors;       // outcome eigenvectors
  std::vector<double> counts;        // matching event counts
  double total = 0.0;
};

MleData build_mle_data(const std::vector<SettingOutcome>& settings) {
  MleData data;
  for (const auto& s : settings) {
    for (int k = 0; k < 4; ++k) {
      const Vector v = tensor(axis_eigenvector(s.setting.first, k < 2),
                              axis_eigenvector(s.setting.second, k % 2 == 0));
      data.vectors.push_back(v);
      data.counts.push_back(static_cast<double>(s.counts[k]));
      data.total += static_cast<double>(s.counts[k]);
    }
  }
  if (data.total <= 0.0)
    throw std::invalid_argument("mle: no events in the dataset");
  return data;
}

double nll_per_event(const MleData& data, const Matrix& rho) {
  double nll = 0.0;
  for (std::size_t k = 0; k < data.vectors.size(); ++k) {
    if (data.counts[k] == 0.0) continue;
    const Vector& v = data.vectors[k];
    double p = std::real((v.adjoint() * rho * v)(0, 0));
    p = std::max(p, kProbFloor);
    nll -= data.counts[k] * std::log(p);
  }
  return nll / data.total;
}

std::array<double, 16> nll_gradient(const MleData& data,
                                    const std::array<double, 16>& theta) {
  const Matrix t = t_from_theta(theta);
  const Matrix a = t.adjoint() * t;
  const double tau = a.trace().real();
  if (tau < 1e-300) throw std::runtime_error("mle: degenerate parameter point");
  const Matrix rho = a / tau;

  // dNLL/drho, per event.
  Matrix g = Matrix::Zero(4, 4);
  for (std::size_t k = 0; k < data.vectors.size(); ++k) {
    if (data.counts[k] == 0.0) continue;
    const Vector& v = data.vectors[k];
    double p = std::real((v.adjoint() * rho * v)(0, 0));
    p = std::max(p, kProbFloor);
    g.noalias() -= (data.counts[k] / p) * (v * v.adjoint());
  }
  g /= data.total;

  const double trace_grho = (g * rho).trace().real();
  const Matrix h = (g - trace_grho * Matrix::Identity(4, 4)) / tau;
  const Matrix x = h * t.adjoint();  // d f = 2 Re tr(x dT)

  std::array<double, 16> grad{};
  for (int d = 0; d < 4; ++d) grad[d] = 2.0 * std::real(x(d, d));
  for (int e = 0; e < 6; ++e) {
    const auto [r, c] = kLowerEntries[e];
    grad[4 + 2 * e] = 2.0 * std::real(x(c, r));
    grad[5 + 2 * e] = -2.0 * std::imag(x(c, r));
  }
  return grad;
}

double max_abs(const std::array<double, 16>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

Matrix mle_state_from_parameters(const std::array<double, 16>& theta) {
  const Matrix t = t_from_theta(theta);
  const Matrix a = t.adjoint() * t;
  const double tau = a.trace().real();
  if (tau < 1e-300) throw std::runtime_error("mle: degenerate parameter point");
  return a / tau;
}

std::array<double, 16> mle_parameters_from_state(const Matrix& rho) {
  if (!is_hermitian(rho, 1e-9))
    throw std::invalid_argument("mle_parameters_from_state: not Hermitian");
  // Want lower-triangular T with T^dag T = rho. Flip both indices, Cholesky,
  // flip back: with J the index-reversal permutation, T = J C^dag J where
  // C C^dag = J rho J.
  Matrix flipped(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) flipped(r, c) = rho(3 - r, 3 - c);
  Eigen::LLT<Matrix> llt(flipped);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("mle_parameters_from_state: state not positive definite");
  const Matrix cl = llt.matrixL();
  Matrix t(4, 4);
  const Matrix cd = cl.adjoint();
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) t(r, c) = cd(3 - r, 3 - c);

  std::array<double, 16> theta{};
  for (int d = 0; d < 4; ++d) {
    // The flipped Cholesky leaves the diagonal real and positive but guard
    // against a stray phase by folding it into the row.
    theta[d] = std::abs(t(d, d));
    if (std::abs(t(d, d)) > 0) {
      const Complex phase = t(d, d) / std::abs(t(d, d));
      t.row(d) /= phase;
    }
  }
  for (int e = 0; e < 6; ++e) {
    const auto [r, c] = kLowerEntries[e];
    theta[4 + 2 * e] = std::real(t(r, c));
    theta[5 + 2 * e] = std::imag(t(r, c));
  }
  return theta;
}

double mle_nll(const std::vector<SettingOutcome>& settings,
               const std::array<double, 16>& theta) {
  const MleData data = build_mle_data(settings);
  return nll_per_event(data, mle_state_from_parameters(theta));
}

std::array<double, 16> mle_gradient(const std::vector<SettingOutcome>& settings,
                                    const std::array<double, 16>& theta) {
  const MleData data = build_mle_data(settings);
  return nll_gradient(data, theta);
}

namespace {

struct BootstrapStats {
  PauliTable correlation_stderr{};
  double premax_stderr = 0.0;
};

BootstrapStats bootstrap_errors(const std::vector<SettingOutcome>& settings,
                                int resamples, std::uint64_t seed) {
  BootstrapStats stats{};
  if (resamples < 2) return stats;

  std::vector<PauliTable> tables;
  std::vector<double> premaxes;
  tables.reserve(resamples);
  premaxes.reserve(resamples);

  for (int r = 0; r < resamples; ++r) {
    Rng rng(derive_seed(seed, "bootstrap:" + std::to_string(r)));
    std::vector<SettingOutcome> resampled = settings;
    for (auto& s : resampled) {
      const double n = static_cast<double>(s.total());
      std::array<double, 4> probs{};
      for (int k = 0; k < 4; ++k) probs[k] = s.counts[k] / n;
      const auto draw = multinomial(rng, s.total(), probs);
      for (int k = 0; k < 4; ++k) s.counts[k] = draw[k];
    }
    const PauliTable table = correlations_from_counts(resampled);
    tables.push_back(table);
    premaxes.push_back(concurrence_premax(psd_project(linear_inversion(table))));
  }

  auto sample_std = [](const std::vector<double>& xs) {
    const double n = static_cast<double>(xs.size());
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= n;
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / (n - 1.0));
  };

  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      std::vector<double> xs;
      xs.reserve(resamples);
      for (const auto& t : tables) xs.push_back(t[i][j]);
      stats.correlation_stderr[i][j] = sample_std(xs);
    }
  stats.premax_stderr = sample_std(premaxes);
  return stats;
}

}  // namespace

TomographyResult mle_reconstruct(const std::vector<SettingOutcome>& settings,
                                 const MleOptions& options) {
  const MleData data = build_mle_data(settings);
  const PauliTable measured = correlations_from_counts(settings);

  // Deterministic start: PSD-projected linear inversion, ridged so the
  // Cholesky factor exists.
  Matrix rho0 = psd_project(linear_inversion(measured));
  rho0 = 0.999999 * rho0 + 1e-6 * Matrix::Identity(4, 4) / 4.0;
  std::array<double, 16> theta = mle_parameters_from_state(rho0);

  double f = nll_per_event(data, mle_state_from_parameters(theta));
  std::array<double, 16> grad = nll_gradient(data, theta);

  TomographyResult result;
  result.converged = false;
  result.iterations = 0;

  std::array<double, 16> prev_theta{}, prev_grad{};
  double step = 1.0 / std::max(max_abs(grad), 1.0);

  for (int it = 0; it < options.max_iterations; ++it) {
    const double gnorm = max_abs(grad);
    result.final_gradient_norm = gnorm;
    if (gnorm < options.gradient_tolerance) {
      result.converged = true;
      break;
    }

    if (it > 0) {
      // Barzilai-Borwein step, clamped to a sane range.
      double sy = 0.0, ss = 0.0;
      for (int i = 0; i < 16; ++i) {
        const double s = theta[i] - prev_theta[i];
        const double y = grad[i] - prev_grad[i];
        sy += s * y;
        ss += s * s;
      }
      if (sy > 1e-18) step = std::clamp(ss / sy, 1e-10, 1e6);
    }

    prev_theta = theta;
    prev_grad = grad;

    // Armijo backtracking.
    double g2 = 0.0;
    for (double g : grad) g2 += g * g;
    double alpha = step;
    bool accepted = false;
    for (int bt = 0; bt < 60; ++bt) {
      std::array<double, 16> cand{};
      for (int i = 0; i < 16; ++i) cand[i] = theta[i] - alpha * grad[i];
      const double fc = nll_per_event(data, mle_state_from_parameters(cand));
      if (fc <= f - 1e-4 * alpha * g2) {
        theta = cand;
        f = fc;
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    ++result.iterations;
    if (!accepted) break;  // step collapsed; gradient norm reported as-is
    grad = nll_gradient(data, theta);
  }
  result.final_gradient_norm = max_abs(grad);
  if (result.final_gradient_norm < options.gradient_tolerance)
    result.converged = true;

  Matrix rho = mle_state_from_parameters(theta);
  rho = 0.5 * (rho + rho.adjoint());  // scrub roundoff skew

  result.correlations = measured;
  result.rho = {rho, QubitRegister({1, 6})};
  result.concurrence_premax = concurrence_premax(rho);
  result.concurrence = std::max(0.0, result.concurrence_premax);
  result.log_likelihood = -f * data.total;

  const BootstrapStats stats = bootstrap_errors(
      settings, options.bootstrap_resamples, options.bootstrap_seed);
  result.correlation_stderr = stats.correlation_stderr;
  result.concurrence_premax_stderr = stats.premax_stderr;
  return result;
}

double fidelity(const Matrix& rho, const Matrix& sigma) {
  const Matrix root = psd_sqrt(rho);
  const Matrix inner = psd_sqrt(root * sigma * root);
  const double tr = inner.trace().real();
  return tr * tr;
}

double fidelity_pure(const Vector& psi, const Matrix& rho) {
  return std::real((psi.adjoint() * rho * psi)(0, 0));
}

}  // namespace swapchain
