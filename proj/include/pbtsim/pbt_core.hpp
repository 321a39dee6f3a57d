#pragma once

#include "pbtsim/pauli.hpp"

namespace pbtsim {

/// Exact entanglement fidelity of the standard N-port protocol:
/// (1/2^{N+3}) sum_k [(N-2k-1)/sqrt(k+1) + (N-2k+1)/sqrt(N-k+1)]^2 C(N,k).
double entanglement_fidelity(int ports);

/// Average teleportation fidelity (2F+1)/3 of the same protocol.
double teleportation_fidelity(int ports);

/// Port-limit survival factor q_N = 2f - 1 (zero for a single port).
double port_survival(int ports);

/// Bell-diagonal mixture: weights in the Bell basis ordered by the
/// Pauli label of the basis vector.
struct BellMixture {
  std::array<double, 4> weights{1.0, 0.0, 0.0, 0.0};
};

/// Resource pair after the same Pauli channel hits both halves of a
/// Bell state; weights are (sum_k p_k p_{k*j})/16 in the scaled
/// parameters.
BellMixture noisy_resource_state(const PauliChannelParams& p);

/// Noise survival factors of the effective teleportation map: q_axis[j]
/// scales the response to sigma_{j+1} errors and q_avg is their mean.
struct EffectiveParams {
  double q_avg = 1.0;
  std::array<double, 3> q_axis{1.0, 1.0, 1.0};
};

/// Evaluate the closed-form survival factors and cross-check them
/// against the resource-state mixture identity q_axis[j] = 1 - 4 w_{j+1};
/// throws std::logic_error if the two routes disagree.
EffectiveParams effective_params(const PauliChannelParams& p);

/// The single-qubit channel realised by N-port teleportation across a
/// noisy resource: identity weight (1 + 3 q_N q_avg)/4 and sigma_j
/// weights (1 - q_N q_axis[j])/4.
class PbtChannel {
 public:
  /// Channel of the N-port protocol over resource pairs degraded by
  /// `noise` on both halves.
  PbtChannel(int ports, const PauliChannelParams& noise);

  /// Same channel with an injected survival factor instead of the exact
  /// N-port value (asymptotic studies and tests); ports() reports 0.
  static PbtChannel with_port_survival(double q_n, const PauliChannelParams& noise);

  int ports() const { return ports_; }
  const PauliChannelParams& noise() const { return noise_; }
  double q_n() const { return q_n_; }
  double q_avg() const { return effective_.q_avg; }
  const std::array<double, 3>& q_axis() const { return effective_.q_axis; }

  /// The induced single-qubit Pauli map.
  const PauliChannelParams& induced_channel() const { return induced_; }

  /// Entanglement fidelity 1/4 + (3/4) q_N q_avg of the noisy protocol.
  double entanglement_fidelity() const;

  /// Teleportation fidelity 1/2 + (1/2) q_N q_avg.
  double teleportation_fidelity() const;

 private:
  PbtChannel(int ports, double q_n, const PauliChannelParams& noise);

  int ports_;
  double q_n_;
  PauliChannelParams noise_;
  EffectiveParams effective_;
  PauliChannelParams induced_;
};

/// Push a single-qubit state through the noisy-PBT channel.
ComplexMatrix apply_noisy_pbt(const PbtChannel& ch, const ComplexMatrix& rho);

/// Split of the noisy-PBT channel into a port-limit depolarizing factor
/// (parameter 1 - q_N) and an environment factor with scaled triple
/// (1 - q_axis[j]); the factors commute and compose to the full map.
struct ChainDecomposition {
  PauliChannelParams port_part;
  PauliChannelParams environment_part;
};

ChainDecomposition chain_decomposition(const PbtChannel& ch);

}  // namespace pbtsim
