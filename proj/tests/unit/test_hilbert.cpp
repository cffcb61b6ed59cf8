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

#include <doctest.h>

#include "oracles.hpp"
#include "swapchain/hilbert.hpp"
#include "swapchain/rng.hpp"
#include "swapchain/states.hpp"

using namespace swapchain;

namespace {
double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}
}  // namespace

TEST_CASE("QubitRegister rejects duplicate labels and resolves positions") {
  CHECK_THROWS_AS(QubitRegister({1, 2, 1}), std::invalid_argument);
  const QubitRegister reg = QubitRegister::range(1, 4);
  CHECK(reg.position_of(1) == 0);
  CHECK(reg.position_of(4) == 3);
  CHECK(reg.dim() == 16);
  CHECK_THROWS_AS(reg.position_of(9), std::invalid_argument);
}

TEST_CASE("tensor: identity case") {
  const Matrix i2 = Matrix::Identity(2, 2);
  CHECK(max_abs_diff(tensor(i2, i2), Matrix::Identity(4, 4)) == 0.0);
}

TEST_CASE("tensor: basis ordering puts |H><H| x |V><V| at index 1") {
  const Vector h = ket(Pol::H), v = ket(Pol::V);
  const Matrix p = tensor(Matrix(h * h.adjoint()), Matrix(v * v.adjoint()));
  Matrix expected = Matrix::Zero(4, 4);
  expected(1, 1) = 1.0;
  CHECK(max_abs_diff(p, expected) == 0.0);
}

TEST_CASE("tensor matches the elementwise oracle on random operands") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = oracle::random_hermitian(rng, 2);
    const Matrix b = oracle::random_hermitian(rng, 2);
    CHECK(max_abs_diff(tensor(a, b), oracle::kron(a, b)) == 0.0);
  }
}

TEST_CASE("tensor is associative") {
  // Exact equality on operands whose entry products are exact in binary
  // floating point (Paulis, half-projectors)...
  const Matrix x = pauli(Axis::X), y = pauli(Axis::Y);
  Matrix half = Matrix::Zero(2, 2);
  half(0, 0) = 0.5;
  half(1, 1) = -0.25;
  CHECK(max_abs_diff(tensor(tensor(x, y), half), tensor(x, tensor(y, half))) ==
        0.0);

  // ...and to one rounding step on arbitrary operands.
  Rng rng(12);
  const Matrix a = oracle::random_hermitian(rng, 2);
  const Matrix b = oracle::random_hermitian(rng, 2);
  const Matrix c = oracle::random_hermitian(rng, 2);
  CHECK(max_abs_diff(tensor(tensor(a, b), c), tensor(a, tensor(b, c))) < 1e-15);
}

TEST_CASE("tensor rejects non-square operands") {
  const Matrix rect = Matrix::Zero(2, 3);
  const Matrix square = Matrix::Identity(2, 2);
  CHECK_THROWS_AS(tensor(rect, square), std::invalid_argument);
}

TEST_CASE("partial_trace of the singlet leaves a maximally mixed qubit") {
  const Vector psi = bell(BellKind::PsiMinus);
  const Matrix rho = psi * psi.adjoint();
  const std::vector<int> keep = {0};
  const Matrix reduced = partial_trace(rho, 2, keep);
  CHECK(max_abs_diff(reduced, Matrix::Identity(2, 2) / 2.0) < 1e-14);
  CHECK(max_abs_diff(reduced, oracle::partial_trace(rho, 2, keep)) < 1e-15);
}

TEST_CASE("partial_trace factors product states") {
  Rng rng(13);
  const Matrix a = random_density_matrix(rng, 2);
  const Matrix b = random_density_matrix(rng, 4);
  const Matrix rho = tensor(a, b);
  const std::vector<int> keep_a = {0};
  CHECK(max_abs_diff(partial_trace(rho, 3, keep_a), a) < 1e-14);
  const std::vector<int> keep_b = {1, 2};
  CHECK(max_abs_diff(partial_trace(rho, 3, keep_b), b) < 1e-14);
}

TEST_CASE("partial_trace preserves trace and composes over subsets") {
  Rng rng(14);
  const Matrix rho = random_density_matrix(rng, 8);
  const std::vector<int> keep01 = {0, 1};
  const Matrix r01 = partial_trace(rho, 3, keep01);
  CHECK(std::abs(r01.trace().real() - rho.trace().real()) < 1e-13);
  CHECK(r01.imag().trace() == doctest::Approx(0.0).epsilon(1e-13));

  // Tracing out {2} then {1} equals tracing out {1,2}.
  const std::vector<int> keep0 = {0};
  const Matrix via_two_steps = partial_trace(r01, 2, keep0);
  const Matrix direct = partial_trace(rho, 3, keep0);
  CHECK(max_abs_diff(via_two_steps, direct) < 1e-14);

  CHECK(max_abs_diff(r01, oracle::partial_trace(rho, 3, keep01)) < 1e-14);
}

TEST_CASE("partial_trace relabels the kept register") {
  Rng rng(15);
  DensityMatrix rho{random_density_matrix(rng, 8), QubitRegister({1, 4, 6})};
  const std::vector<int> keep = {2, 0};
  const DensityMatrix reduced = partial_trace(rho, keep);
  CHECK(reduced.reg.labels() == std::vector<int>{1, 6});
}

TEST_CASE("partial_trace rejects bad keep sets") {
  const Matrix rho = Matrix::Identity(4, 4) / 4.0;
  const std::vector<int> empty;
  CHECK_THROWS_AS(partial_trace(rho, 2, empty), std::invalid_argument);
  const std::vector<int> oob = {2};
  CHECK_THROWS_AS(partial_trace(rho, 2, oob), std::invalid_argument);
}

TEST_CASE("expect: trace normalization and conventions") {
  CHECK(expect(Matrix(Matrix::Identity(4, 4) / 4.0), Matrix::Identity(4, 4)) ==
        doctest::Approx(1.0).epsilon(1e-14));
  const Vector h = ket(Pol::H);
  CHECK(expect(Matrix(h * h.adjoint()), pauli(Axis::Z)) ==
        doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("expect on the singlet matches the explicit sum oracle") {
  const Vector psi = bell(BellKind::PsiMinus);
  const Matrix rho = psi * psi.adjoint();
  const Matrix zz = tensor(pauli(Axis::Z), pauli(Axis::Z));
  CHECK(expect(rho, zz) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(expect(rho, zz) ==
        doctest::Approx(oracle::trace_product(rho, zz).real()).epsilon(1e-14));
}

TEST_CASE("expect is linear in the observable") {
  Rng rng(16);
  const Matrix rho = random_density_matrix(rng, 4);
  const Matrix a = oracle::random_hermitian(rng, 4);
  const Matrix b = oracle::random_hermitian(rng, 4);
  CHECK(expect(rho, Matrix(0.3 * a + 0.7 * b)) ==
        doctest::Approx(0.3 * expect(rho, a) + 0.7 * expect(rho, b))
            .epsilon(1e-12));
}

TEST_CASE("expect rejects dimension mismatch and non-Hermitian residue") {
  const Matrix rho = Matrix::Identity(4, 4) / 4.0;
  CHECK_THROWS_AS(expect(rho, Matrix::Identity(2, 2)), std::invalid_argument);
  Rng rng(17);
  Matrix skew = Matrix::Zero(4, 4);
  skew(0, 1) = Complex(0.0, 1.0);  // anti-Hermitian piece
  const Matrix rho2 = random_density_matrix(rng, 4);
  CHECK_THROWS_AS(expect(rho2, skew), std::invalid_argument);
}

TEST_CASE("eigh: fixed spectra") {
  const EighResult z = eigh(pauli(Axis::Z));
  CHECK(z.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(z.eigenvalues(1) == doctest::Approx(-1.0).epsilon(1e-14));

  const EighResult id = eigh(Matrix(Matrix::Identity(4, 4) / 4.0));
  for (int i = 0; i < 4; ++i)
    CHECK(id.eigenvalues(i) == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("eigh reconstructs random Hermitian matrices") {
  Rng rng(18);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix m = oracle::random_hermitian(rng, 8);
    const EighResult es = eigh(m);
    const Matrix rebuilt = es.eigenvectors *
                           es.eigenvalues.cast<Complex>().asDiagonal() *
                           es.eigenvectors.adjoint();
    CHECK(max_abs_diff(m, rebuilt) < 1e-9);
    CHECK(std::abs(es.eigenvalues.sum() - m.trace().real()) < 1e-9);
    for (long i = 1; i < es.eigenvalues.size(); ++i)
      CHECK(es.eigenvalues(i - 1) >= es.eigenvalues(i));
    CHECK(max_abs_diff(es.eigenvectors.adjoint() * es.eigenvectors,
                       Matrix::Identity(8, 8)) < 1e-10);
  }
}

TEST_CASE("eigh rejects non-Hermitian input") {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(eigh(m), std::invalid_argument);
}

TEST_CASE("psd_sqrt: identity, scaled projectors, squaring oracle") {
  CHECK(max_abs_diff(psd_sqrt(Matrix::Identity(4, 4)), Matrix::Identity(4, 4)) <
        1e-12);

  const Vector psi = bell(BellKind::PhiPlus);
  const Matrix p = psi * psi.adjoint();
  CHECK(max_abs_diff(psd_sqrt(Matrix(4.0 * p)), Matrix(2.0 * p)) < 1e-12);

  Rng rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix rho = random_density_matrix(rng, 8);
    const Matrix root = psd_sqrt(rho);
    CHECK(max_abs_diff(root * root, rho) < 1e-9);
  }
}

TEST_CASE("psd_sqrt rejects genuinely negative matrices") {
  CHECK_THROWS_AS(psd_sqrt(pauli(Axis::Z)), std::invalid_argument);
}

TEST_CASE("permute_qubits swaps tensor factors") {
  Rng rng(20);
  const Vector a = random_pure_state(rng, 2);
  const Vector b = random_pure_state(rng, 2);
  const std::vector<int> swap = {1, 0};
  CHECK((permute_qubits(tensor(a, b), 2, swap) - tensor(b, a)).cwiseAbs().maxCoeff() <
        1e-15);

  const Matrix ma = oracle::random_hermitian(rng, 2);
  const Matrix mb = oracle::random_hermitian(rng, 2);
  CHECK(max_abs_diff(permute_qubits(tensor(ma, mb), 2, swap), tensor(mb, ma)) <
        1e-15);
}

TEST_CASE("permute_qubits round-trips through the inverse permutation") {
  Rng rng(21);
  const Vector v = random_pure_state(rng, 8);
  const std::vector<int> perm = {2, 0, 1};
  std::vector<int> inverse(3);
  for (int k = 0; k < 3; ++k) inverse[perm[k]] = k;
  CHECK((permute_qubits(permute_qubits(v, 3, perm), 3, inverse) - v)
            .cwiseAbs()
            .maxCoeff() < 1e-15);
}
