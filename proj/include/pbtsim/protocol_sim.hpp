#pragma once

#include "pbtsim/pbt_core.hpp"

#include <vector>

namespace pbtsim {

/// Largest port count the dense simulator accepts: POVM elements live on
/// N+1 qubits and we keep 2^{N+1} <= 256.
inline constexpr int max_sim_ports = 7;

/// A small protocol instance: N ports whose resource pairs are degraded
/// by the same channel on both halves.
struct PortConfig {
  int ports = 1;
  PauliChannelParams noise;
};

/// Full 2N-qubit resource state, wire order (B_1..B_N, A_1..A_N):
/// a product of (possibly noisy) Bell pairs across the B_i A_i cut.
/// Dense, so capped at 5 ports.
ComplexMatrix resource_state(const PortConfig& cfg);

/// Signal state of port i (1-based) on wires (A_1..A_N, C): a Bell pair
/// between A_i and C with the remaining ports maximally mixed.
ComplexMatrix signal_state(int ports, int port_index);

/// Square-root-measurement POVM on wires (A_1..A_N, C). The completion
/// term (1/N)(I - sum of bare SRM elements) is spread equally over all
/// outcomes so the elements resolve the identity.
std::vector<ComplexMatrix> srm_povm(int ports);

/// Choi matrix (output wire first, reference second) of the channel the
/// protocol realises, obtained by actually measuring: half a Bell pair
/// enters input C, each outcome keeps its port B_j as the output.
ComplexMatrix simulate_channel_choi(const PortConfig& cfg);

/// Choi matrix predicted by the closed-form channel.
ComplexMatrix analytic_choi(const PbtChannel& ch);
ComplexMatrix analytic_choi(const PortConfig& cfg);

}  // namespace pbtsim
