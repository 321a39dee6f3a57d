#pragma once

#include "pbtsim/linalg.hpp"

namespace pbtsim {

/// Local-unitary parameters for a general two-qubit pure state: Z-Y-Z
/// Euler angles (alpha1, alpha2, gamma) on the first qubit and a Z-Y
/// pair (beta1, beta2) on the second.
struct EulerAngles {
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double gamma = 0.0;
  double beta1 = 0.0;
  double beta2 = 0.0;
};

/// A validated 4x4 density matrix: unit trace, Hermitian and positive
/// semidefinite within tolerance.
class TwoQubitState {
 public:
  explicit TwoQubitState(ComplexMatrix density);
  const ComplexMatrix& density() const { return density_; }

 private:
  ComplexMatrix density_;
};

/// Bell basis vector |psi_k> = (sigma_k x sigma_0)|psi_0> with
/// |psi_0> = (|00> + |11>)/sqrt(2), phases included.
Eigen::Vector4cd bell_vector(int k);

/// Projector onto bell_vector(k).
TwoQubitState bell_state(int k);

/// Schmidt-form pure state cos(t/2)|00> + sin(t/2)|11>.
TwoQubitState schmidt_state(double theta);

/// Z-Y-Z rotation Rz(a1) Ry(a2) Rz(a3) with Rz(a) = diag(e^{-ia/2}, e^{ia/2}).
ComplexMatrix euler_rotation(double a1, double a2, double a3);

/// Schmidt state of angle theta dressed with local unitaries: the first
/// qubit gets the full Euler triple, the second the Z-Y pair.
TwoQubitState general_pure_state(double theta, const EulerAngles& angles);

/// Negativity-style entanglement measure: twice the magnitude of the
/// most negative partial-transpose eigenvalue, floored at zero.
double negativity(const TwoQubitState& rho);

/// Pure state saturating the lower entanglement bound under two-sided
/// phase flips: cos(t/2)|++> + i sin(t/2)|-->.
TwoQubitState boundary_state_low(double theta);

/// Pure state saturating the upper bound (the bare Schmidt state).
TwoQubitState boundary_state_up(double theta);

}  // namespace pbtsim
