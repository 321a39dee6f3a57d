#include "pbtsim/states.hpp"

#include "oracles.hpp"
#include "pbtsim/linalg.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace pbtsim;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("bell vectors") {
  // Orthonormal, and generated from the k = 0 vector by a Pauli on the first qubit.
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 4; ++k) {
      const Complex overlap = bell_vector(j).adjoint() * bell_vector(k);
      CHECK(std::abs(overlap - (j == k ? Complex(1.0) : Complex(0.0))) < 1e-15);
    }
    Eigen::Vector4cd expected =
        kron(pauli_matrix(j), pauli_matrix(0)) * bell_vector(0);
    CHECK((bell_vector(j) - expected).cwiseAbs().maxCoeff() < 1e-15);
  }

  const Complex i(0.0, 1.0);
  Eigen::Vector4cd psi2;
  psi2 << 0, -i, i, 0;
  psi2 /= std::sqrt(2.0);
  CHECK((bell_vector(2) - psi2).cwiseAbs().maxCoeff() < 1e-15);

  CHECK_THROWS_AS(bell_vector(4), std::invalid_argument);
}

TEST_CASE("bell and schmidt states") {
  for (int k = 0; k < 4; ++k) {
    CHECK(negativity(bell_state(k)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(max_abs(bell_state(k).density() -
                  bell_vector(k) * bell_vector(k).adjoint()) < 1e-15);
  }

  // Entanglement of the Schmidt family is sin(theta).
  for (double theta : {0.0, 0.3, 0.8, pi / 2}) {
    CHECK(negativity(schmidt_state(theta)) ==
          doctest::Approx(std::sin(theta)).epsilon(1e-12));
  }
  CHECK(max_abs(schmidt_state(pi / 2).density() - bell_state(0).density()) < 1e-15);
  CHECK(negativity(schmidt_state(0.8)) ==
        doctest::Approx(0.7173560908995228).epsilon(1e-14));

  CHECK_THROWS_AS(schmidt_state(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(schmidt_state(2.0), std::invalid_argument);
}

TEST_CASE("state validation") {
  ComplexMatrix half = 0.5 * ComplexMatrix::Identity(4, 4);
  CHECK_THROWS_AS(TwoQubitState{half}, std::invalid_argument);  // trace 2

  ComplexMatrix skew = ComplexMatrix::Zero(4, 4);
  skew(0, 0) = 1.0;
  skew(0, 1) = 0.5;
  CHECK_THROWS_AS(TwoQubitState{skew}, std::invalid_argument);

  ComplexMatrix indefinite = ComplexMatrix::Zero(4, 4);
  indefinite(0, 0) = 1.5;
  indefinite(1, 1) = -0.5;
  CHECK_THROWS_AS(TwoQubitState{indefinite}, std::invalid_argument);

  std::mt19937_64 rng(41);
  ComplexMatrix ok = oracles::random_density(4, rng);
  CHECK(max_abs(TwoQubitState(ok).density() - ok) == 0.0);
}

TEST_CASE("euler rotations") {
  CHECK(max_abs(euler_rotation(0, 0, 0) - ComplexMatrix::Identity(2, 2)) < 1e-15);

  // Rz(a) Rz(b) = Rz(a + b); middle angle pi gives -i sigma_y.
  CHECK(max_abs(euler_rotation(0.3, 0, 0.4) - euler_rotation(0.7, 0, 0)) < 1e-15);
  ComplexMatrix minus_i_sy(2, 2);
  minus_i_sy << 0, -1, 1, 0;
  CHECK(max_abs(euler_rotation(0, pi, 0) - minus_i_sy) < 1e-15);

  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    ComplexMatrix u = euler_rotation(6.0 * oracles::uniform01(rng),
                                     6.0 * oracles::uniform01(rng),
                                     6.0 * oracles::uniform01(rng));
    CHECK(max_abs(u.adjoint() * u - ComplexMatrix::Identity(2, 2)) < 1e-14);
  }
}

TEST_CASE("general pure states") {
  CHECK(max_abs(general_pure_state(pi / 2, EulerAngles{}).density() -
                bell_state(0).density()) < 1e-15);

  // Local rotations never change the entanglement.
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    const double theta = (pi / 2) * oracles::uniform01(rng);
    EulerAngles angles{2 * pi * oracles::uniform01(rng), 2 * pi * oracles::uniform01(rng),
                       2 * pi * oracles::uniform01(rng), 2 * pi * oracles::uniform01(rng),
                       2 * pi * oracles::uniform01(rng)};
    CHECK(negativity(general_pure_state(theta, angles)) ==
          doctest::Approx(std::sin(theta)).epsilon(1e-10));
  }
  CHECK_THROWS_AS(general_pure_state(3.0, EulerAngles{}), std::invalid_argument);
}

TEST_CASE("negativity") {
  // Werner family: q Bell + (1 - q) I/4 has negativity max(0, (3q - 1)/2).
  for (double q : {0.0, 0.2, 1.0 / 3.0, 0.5, 0.9, 1.0}) {
    ComplexMatrix rho = q * bell_state(0).density() +
                        (1.0 - q) * 0.25 * ComplexMatrix::Identity(4, 4);
    CHECK(negativity(TwoQubitState(rho)) ==
          doctest::Approx(std::max(0.0, (3.0 * q - 1.0) / 2.0)).epsilon(1e-12));
  }

  std::mt19937_64 rng(53);
  ComplexMatrix prod = kron(oracles::random_density(2, rng), oracles::random_density(2, rng));
  CHECK(negativity(TwoQubitState(prod)) == doctest::Approx(0.0).epsilon(1e-12));

  for (int trial = 0; trial < 50; ++trial) {
    ComplexMatrix rho = oracles::random_density(4, rng);
    CHECK(negativity(TwoQubitState(rho)) ==
          doctest::Approx(oracles::reference_negativity(rho)).epsilon(1e-10));
  }
}

TEST_CASE("twirl invariance of the reference bell state") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 10; ++trial) {
    ComplexMatrix u = oracles::random_unitary2(rng);
    Eigen::Vector4cd twirled = kron(u.conjugate(), u) * bell_vector(0);
    CHECK((twirled - bell_vector(0)).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("boundary states") {
  const double theta = 0.8;

  // Lower-boundary state written out in the Hadamard basis.
  Eigen::Vector4cd plus_plus, minus_minus;
  plus_plus << 1, 1, 1, 1;
  minus_minus << 1, -1, -1, 1;
  Eigen::Vector4cd psi = 0.5 * std::cos(theta / 2) * plus_plus +
                         Complex(0, 0.5) * std::sin(theta / 2) * minus_minus;
  CHECK(max_abs(boundary_state_low(theta).density() - psi * psi.adjoint()) < 1e-15);

  // It is the Schmidt state dressed with specific local rotations.
  CHECK(max_abs(boundary_state_low(theta).density() -
                general_pure_state(theta, EulerAngles{0, pi / 2, pi / 2, 0, pi / 2})
                    .density()) < 1e-14);

  CHECK(max_abs(boundary_state_up(theta).density() - schmidt_state(theta).density()) <
        1e-15);
  CHECK(negativity(boundary_state_low(theta)) ==
        doctest::Approx(std::sin(theta)).epsilon(1e-12));
}
