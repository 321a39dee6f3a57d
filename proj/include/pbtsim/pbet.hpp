#pragma once

#include "pbtsim/noise_bounds.hpp"
#include "pbtsim/pbt_core.hpp"

namespace pbtsim {

/// Entanglement teleportation setup: each qubit of `input` travels
/// through its own N-port teleportation channel, both built from the
/// same (ports, noise).
struct PbetSetting {
  int ports = 1;
  PauliChannelParams noise;
  TwoQubitState input{bell_vector(0) * bell_vector(0).adjoint()};
};

/// Push the two-qubit state through both teleportation channels.
TwoQubitState apply_pbet(const PbetSetting& s);

/// Same, reusing an already-built channel (allows injected survival
/// factors).
TwoQubitState apply_pbet(const PbtChannel& ch, const TwoQubitState& input);

enum class Bound { low, up };

/// Entanglement of a teleported pure state over noiseless resources:
/// max[0, -1/2 + q_N^2 (m0 + 1/2)].
double m_free(int ports, double m0);

/// Entanglement of the resource pair itself under two-sided
/// depolarizing noise of parameter p: max[0, (3(1-p)^2 - 1)/2].
double n_dep(double p);

/// Teleported entanglement when the resource noise is depolarizing:
/// max[0, -1/2 + q_N^2 ((1 + 2 n_dep)/3)^2 (m0 + 1/2)].
double m_dep_pbet(int ports, double p, double m0);

/// Entanglement boundary of teleportation over general Pauli noise with
/// mean survival q_avg: the single-pair bound at omega = 1 - q_avg,
/// scaled by q_N^2 with the port-limit penalty (1 - q_N^2)/2.
double m_bound_pbet(int ports, double q_avg, double m0, Bound which);

/// Convenience overload deriving q_avg from the noise parameters.
double m_bound_pbet(int ports, const PauliChannelParams& noise, double m0, Bound which);

/// True when the effective environment channel of mean survival q_avg
/// is realisable as a phase flip, i.e. q_avg in [2/3, 1]; outside this
/// range the closed-form boundaries are unvalidated.
bool phase_flip_representable(double q_avg);

/// Large-N, small-omega approximations of the two boundaries.
struct AsymptoticBounds {
  double low = 0.0;
  double up = 0.0;
};

AsymptoticBounds asymptotic_bounds(int ports, double omega, double m0);

}  // namespace pbtsim
