#include "pbtsim/states.hpp"

#include <cmath>
#include <stdexcept>

namespace pbtsim {

namespace {

TwoQubitState pure(const Eigen::Vector4cd& v) {
  return TwoQubitState(ComplexMatrix(v * v.adjoint()));
}

void check_theta(double theta, const char* who) {
  constexpr double half_pi = 1.5707963267948966;
  if (theta < -1e-12 || theta > half_pi + 1e-12)
    throw std::invalid_argument(std::string(who) + ": theta must lie in [0, pi/2]");
}

}  // namespace

TwoQubitState::TwoQubitState(ComplexMatrix density) : density_(std::move(density)) {
  if (density_.rows() != 4 || density_.cols() != 4)
    throw std::invalid_argument("TwoQubitState: density matrix must be 4x4");
  if (std::abs(density_.trace() - Complex(1.0)) > 1e-10)
    throw std::invalid_argument("TwoQubitState: trace must be one");
  EigenSystem es = hermitian_eigs(density_);  // rejects non-Hermitian input
  if (es.values.minCoeff() < -1e-10)
    throw std::invalid_argument("TwoQubitState: density matrix is not positive semidefinite");
}

Eigen::Vector4cd bell_vector(int k) {
  Eigen::Vector4cd base;
  base << 1, 0, 0, 1;
  base /= std::sqrt(2.0);
  ComplexMatrix op = kron(pauli_matrix(k), pauli_matrix(0));
  return op * base;
}

TwoQubitState bell_state(int k) { return pure(bell_vector(k)); }

TwoQubitState schmidt_state(double theta) {
  check_theta(theta, "schmidt_state");
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  v(0) = std::cos(theta / 2.0);
  v(3) = std::sin(theta / 2.0);
  return pure(v);
}

ComplexMatrix euler_rotation(double a1, double a2, double a3) {
  const Complex i(0.0, 1.0);
  ComplexMatrix rz1(2, 2), ry(2, 2), rz2(2, 2);
  rz1 << std::exp(-i * (a1 / 2.0)), 0, 0, std::exp(i * (a1 / 2.0));
  ry << std::cos(a2 / 2.0), -std::sin(a2 / 2.0), std::sin(a2 / 2.0), std::cos(a2 / 2.0);
  rz2 << std::exp(-i * (a3 / 2.0)), 0, 0, std::exp(i * (a3 / 2.0));
  return rz1 * ry * rz2;
}

TwoQubitState general_pure_state(double theta, const EulerAngles& angles) {
  check_theta(theta, "general_pure_state");
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  v(0) = std::cos(theta / 2.0);
  v(3) = std::sin(theta / 2.0);
  ComplexMatrix ua = euler_rotation(angles.alpha1, angles.alpha2, angles.gamma);
  ComplexMatrix ub = euler_rotation(angles.beta1, angles.beta2, 0.0);
  return pure(kron(ua, ub) * v);
}

double negativity(const TwoQubitState& rho) {
  ComplexMatrix pt = partial_transpose(rho.density(), {2, 2}, 0);
  EigenSystem es = hermitian_eigs(pt);
  return std::max(0.0, -2.0 * es.values.minCoeff());
}

TwoQubitState boundary_state_low(double theta) {
  check_theta(theta, "boundary_state_low");
  const Complex i(0.0, 1.0);
  Eigen::Vector4cd plus_plus, minus_minus;
  plus_plus << 1, 1, 1, 1;
  minus_minus << 1, -1, -1, 1;
  Eigen::Vector4cd v = std::cos(theta / 2.0) * plus_plus / 2.0 +
                       i * std::sin(theta / 2.0) * minus_minus / 2.0;
  return pure(v);
}

TwoQubitState boundary_state_up(double theta) { return schmidt_state(theta); }

}  // namespace pbtsim
