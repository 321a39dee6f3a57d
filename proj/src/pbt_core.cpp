#include "pbtsim/pbt_core.hpp"

#include <cmath>
#include <stdexcept>

namespace pbtsim {

namespace {

long double summand_bracket(int n, int k) {
  const long double a = (n - 2.0L * k - 1.0L) / std::sqrt(k + 1.0L);
  const long double b = (n - 2.0L * k + 1.0L) / std::sqrt(n - k + 1.0L);
  return (a + b) * (a + b);
}

}  // namespace

double entanglement_fidelity(int ports) {
  if (ports < 1) throw std::invalid_argument("entanglement_fidelity: need at least one port");
  const int n = ports;
  long double total = 0.0L;
  if (n <= 50) {
    // Binomials fit comfortably in long double, build them by recurrence.
    long double binom = 1.0L;
    for (int k = 0; k <= n; ++k) {
      total += summand_bracket(n, k) * binom;
      binom = binom * (n - k) / (k + 1.0L);
    }
    total = std::ldexp(total, -(n + 3));
  } else {
    // log-space binomials; the exponent never overflows since each term
    // is at most the full sum, which is below one.
    const long double log2l = std::log(2.0L);
    for (int k = 0; k <= n; ++k) {
      const long double logc = std::lgamma(n + 1.0L) - std::lgamma(k + 1.0L) -
                               std::lgamma(n - k + 1.0L);
      total += summand_bracket(n, k) * std::exp(logc - (n + 3.0L) * log2l);
    }
  }
  return static_cast<double>(total);
}

double teleportation_fidelity(int ports) {
  return (2.0 * entanglement_fidelity(ports) + 1.0) / 3.0;
}

double port_survival(int ports) {
  // Exactly zero for one port; clamp the roundoff of (4F-1)/3 there.
  return std::max(0.0, (4.0 * entanglement_fidelity(ports) - 1.0) / 3.0);
}

BellMixture noisy_resource_state(const PauliChannelParams& p) {
  const double p0 = p.p(0), p1 = p.p(1), p2 = p.p(2), p3 = p.p(3);
  BellMixture mix;
  mix.weights = {(p0 * p0 + p1 * p1 + p2 * p2 + p3 * p3) / 16.0,
                 2.0 * (p0 * p1 + p2 * p3) / 16.0,
                 2.0 * (p0 * p2 + p3 * p1) / 16.0,
                 2.0 * (p0 * p3 + p1 * p2) / 16.0};
  return mix;
}

EffectiveParams effective_params(const PauliChannelParams& p) {
  const double p1 = p.p(1), p2 = p.p(2), p3 = p.p(3);
  const double d12 = (p1 - p2) * (p1 - p2);
  const double d23 = (p2 - p3) * (p2 - p3);
  const double d31 = (p3 - p1) * (p3 - p1);

  EffectiveParams eff;
  eff.q_axis = {(1.0 - p1) * (1.0 - p1) - 0.25 * (d12 - d23 + d31),
                (1.0 - p2) * (1.0 - p2) - 0.25 * (d12 + d23 - d31),
                (1.0 - p3) * (1.0 - p3) - 0.25 * (-d12 + d23 + d31)};
  eff.q_avg = (eff.q_axis[0] + eff.q_axis[1] + eff.q_axis[2]) / 3.0;

  // The closed forms must reproduce the resource-state mixture exactly;
  // a mismatch means a transcription bug, not a data problem.
  const BellMixture mix = noisy_resource_state(p);
  for (int j = 0; j < 3; ++j) {
    const double oracle = 1.0 - 4.0 * mix.weights[static_cast<std::size_t>(j) + 1];
    if (std::abs(eff.q_axis[static_cast<std::size_t>(j)] - oracle) > 1e-10)
      throw std::logic_error("effective_params: closed form disagrees with mixture identity");
  }
  return eff;
}

PbtChannel::PbtChannel(int ports, const PauliChannelParams& noise)
    : PbtChannel(ports, port_survival(ports), noise) {}

PbtChannel PbtChannel::with_port_survival(double q_n, const PauliChannelParams& noise) {
  if (q_n < 0.0 || q_n > 1.0)
    throw std::invalid_argument("PbtChannel: survival factor must lie in [0, 1]");
  return PbtChannel(0, q_n, noise);
}

PbtChannel::PbtChannel(int ports, double q_n, const PauliChannelParams& noise)
    : ports_(ports), q_n_(q_n), noise_(noise), effective_(effective_params(noise)) {
  induced_ = PauliChannelParams::from_weights(
      {(1.0 + 3.0 * q_n_ * effective_.q_avg) / 4.0,
       (1.0 - q_n_ * effective_.q_axis[0]) / 4.0,
       (1.0 - q_n_ * effective_.q_axis[1]) / 4.0,
       (1.0 - q_n_ * effective_.q_axis[2]) / 4.0});
}

double PbtChannel::entanglement_fidelity() const {
  return 0.25 + 0.75 * q_n_ * effective_.q_avg;
}

double PbtChannel::teleportation_fidelity() const {
  return 0.5 + 0.5 * q_n_ * effective_.q_avg;
}

ComplexMatrix apply_noisy_pbt(const PbtChannel& ch, const ComplexMatrix& rho) {
  if (rho.rows() != 2 || rho.cols() != 2)
    throw std::invalid_argument("apply_noisy_pbt: expected a single-qubit density matrix");
  return apply(ch.induced_channel(), rho, 0);
}

ChainDecomposition chain_decomposition(const PbtChannel& ch) {
  const auto& q = ch.q_axis();
  return {PauliChannelParams::depolarizing(1.0 - ch.q_n()),
          PauliChannelParams::from_probabilities(1.0 - q[0], 1.0 - q[1], 1.0 - q[2])};
}

}  // namespace pbtsim
