#pragma once

#include "pbtsim/pauli.hpp"

namespace pbtsim {

/// Entanglement threshold: pure states with initial entanglement above
/// this survive every local Pauli channel pair of mean error rate
/// omega. Diverges at omega = 2/3 (throws there).
double critical_m0(double omega);

/// Guaranteed remaining entanglement for any pure state of initial
/// entanglement m0 through two local Pauli channels of mean rate omega.
double m_low(double m0, double omega);

/// Largest remaining entanglement over the same family of channels.
double m_up(double m0, double omega);

/// Remaining entanglement under two-sided depolarizing noise of mean
/// rate omega (state-independent given m0).
double m_dep(double m0, double omega);

/// Negativity of a two-qubit state after the same Pauli channel acts on
/// each qubit.
double entanglement_after_local_noise(const TwoQubitState& rho,
                                      const PauliChannelParams& channel);

}  // namespace pbtsim
