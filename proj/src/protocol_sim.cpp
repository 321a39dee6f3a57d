#include "pbtsim/protocol_sim.hpp"

#include <stdexcept>
#include <vector>

namespace pbtsim {

namespace {

void check_ports(int ports, const char* who) {
  if (ports < 1 || ports > max_sim_ports)
    throw std::invalid_argument(std::string(who) + ": ports must lie in 1..7");
}

std::vector<int> qubit_dims(int n) { return std::vector<int>(static_cast<std::size_t>(n), 2); }

ComplexMatrix maximally_mixed(int qubits) {
  const Eigen::Index dim = Eigen::Index{1} << qubits;
  return ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim);
}

}  // namespace

ComplexMatrix resource_state(const PortConfig& cfg) {
  if (cfg.ports < 1 || cfg.ports > 5)
    throw std::invalid_argument("resource_state: dense 2N-qubit state capped at 5 ports");
  const int n = cfg.ports;
  const ComplexMatrix pair =
      apply_local(cfg.noise, cfg.noise, bell_state(0)).density();

  // Build in pair order (B_1,A_1,...,B_N,A_N), then pull the B wires to
  // the front: position k takes old wire 2k (B_{k+1}) and position N+k
  // takes old wire 2k+1 (A_{k+1}).
  ComplexMatrix state = pair;
  for (int i = 1; i < n; ++i) state = kron(state, pair);

  std::vector<int> perm(2 * static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    perm[static_cast<std::size_t>(k)] = 2 * k;
    perm[static_cast<std::size_t>(n + k)] = 2 * k + 1;
  }
  const auto dims = qubit_dims(2 * n);
  return permute_subsystems(state, dims, perm);
}

ComplexMatrix signal_state(int ports, int port_index) {
  check_ports(ports, "signal_state");
  if (port_index < 1 || port_index > ports)
    throw std::invalid_argument("signal_state: port index out of range");
  const int n = ports;

  // Base wire order (A_i, C, other ports ascending); then permute to
  // (A_1..A_N, C).
  ComplexMatrix base = bell_state(0).density();
  if (n > 1) base = kron(base, maximally_mixed(n - 1));

  std::vector<int> perm(static_cast<std::size_t>(n) + 1);
  int next_other = 2;
  for (int k = 0; k < n; ++k)
    perm[static_cast<std::size_t>(k)] = (k + 1 == port_index) ? 0 : next_other++;
  perm[static_cast<std::size_t>(n)] = 1;  // C
  const auto dims = qubit_dims(n + 1);
  return permute_subsystems(base, dims, perm);
}

std::vector<ComplexMatrix> srm_povm(int ports) {
  check_ports(ports, "srm_povm");
  const int n = ports;
  const Eigen::Index dim = Eigen::Index{1} << (n + 1);

  std::vector<ComplexMatrix> tau;
  tau.reserve(static_cast<std::size_t>(n));
  ComplexMatrix total = ComplexMatrix::Zero(dim, dim);
  for (int i = 1; i <= n; ++i) {
    tau.push_back(signal_state(n, i));
    total += tau.back();
  }

  const ComplexMatrix root = psd_inv_sqrt(total);
  std::vector<ComplexMatrix> povm;
  povm.reserve(tau.size());
  ComplexMatrix bare_sum = ComplexMatrix::Zero(dim, dim);
  for (const auto& t : tau) {
    ComplexMatrix el = root * t * root;
    el = 0.5 * (el + el.adjoint());
    bare_sum += el;
    povm.push_back(std::move(el));
  }

  // T generally has a kernel, on which the bare SRM elements vanish;
  // share the missing projector equally between the outcomes.
  const ComplexMatrix completion =
      (ComplexMatrix::Identity(dim, dim) - bare_sum) / static_cast<double>(n);
  ComplexMatrix check = ComplexMatrix::Zero(dim, dim);
  for (auto& el : povm) {
    el += completion;
    check += el;
  }
  if (max_abs(check - ComplexMatrix::Identity(dim, dim)) > 1e-9)
    throw std::runtime_error("srm_povm: POVM does not resolve the identity");
  return povm;
}

ComplexMatrix simulate_channel_choi(const PortConfig& cfg) {
  check_ports(cfg.ports, "simulate_channel_choi");
  const int n = cfg.ports;
  const ComplexMatrix pair = apply_local(cfg.noise, cfg.noise, bell_state(0)).density();
  const ComplexMatrix reference_pair = bell_state(0).density();
  const std::vector<ComplexMatrix> povm = srm_povm(n);

  // Per outcome j we only ever need the wires the POVM touches plus the
  // kept pair: (B_j, A_1..A_N, C, R), N+3 qubits. The unmeasured ports'
  // B wires trace out of the Bell-pair marginals as I/2 beforehand,
  // which keeps the transient matrix at most 1024-dimensional.
  const int wires = n + 3;
  const auto dims = qubit_dims(wires);
  const std::array<int, 2> kept{0, wires - 1};  // B_j and R

  ComplexMatrix choi = ComplexMatrix::Zero(4, 4);
  for (int j = 1; j <= n; ++j) {
    // Base order (B_j, A_j, other A wires ascending, C, R).
    ComplexMatrix w = pair;
    if (n > 1) w = kron(w, maximally_mixed(n - 1));
    w = kron(w, reference_pair);

    std::vector<int> perm(static_cast<std::size_t>(wires));
    perm[0] = 0;  // B_j
    int next_other = 2;
    for (int k = 0; k < n; ++k)
      perm[static_cast<std::size_t>(1 + k)] = (k + 1 == j) ? 1 : next_other++;
    perm[static_cast<std::size_t>(n + 1)] = n + 1;  // C
    perm[static_cast<std::size_t>(n + 2)] = n + 2;  // R
    w = permute_subsystems(w, dims, perm);

    const ComplexMatrix meas =
        kron(kron(ComplexMatrix::Identity(2, 2), povm[static_cast<std::size_t>(j - 1)]),
             ComplexMatrix::Identity(2, 2));
    choi += partial_trace(meas * w, dims, kept);
  }
  return 0.5 * (choi + choi.adjoint());
}

ComplexMatrix analytic_choi(const PbtChannel& ch) {
  const auto& w = ch.induced_channel().weights();
  ComplexMatrix choi = ComplexMatrix::Zero(4, 4);
  for (int k = 0; k < 4; ++k)
    choi += w[static_cast<std::size_t>(k)] * bell_state(k).density();
  return choi;
}

ComplexMatrix analytic_choi(const PortConfig& cfg) {
  return analytic_choi(PbtChannel(cfg.ports, cfg.noise));
}

}  // namespace pbtsim
