#include "pbtsim/pbet.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pbtsim {

namespace {

void check_m0(double m0, const char* who) {
  if (m0 < -1e-12 || m0 > 1.0 + 1e-12)
    throw std::invalid_argument(std::string(who) + ": m0 must lie in [0, 1]");
}

}  // namespace

TwoQubitState apply_pbet(const PbetSetting& s) {
  return apply_pbet(PbtChannel(s.ports, s.noise), s.input);
}

TwoQubitState apply_pbet(const PbtChannel& ch, const TwoQubitState& input) {
  const PauliChannelParams& map = ch.induced_channel();
  return apply_local(map, map, input);
}

double m_free(int ports, double m0) {
  check_m0(m0, "m_free");
  const double q = port_survival(ports);
  return std::max(0.0, -0.5 + q * q * (m0 + 0.5));
}

double n_dep(double p) {
  const double s = 1.0 - p;
  return std::max(0.0, (3.0 * s * s - 1.0) / 2.0);
}

double m_dep_pbet(int ports, double p, double m0) {
  check_m0(m0, "m_dep_pbet");
  const double q = port_survival(ports);
  const double mix = (1.0 + 2.0 * n_dep(p)) / 3.0;
  return std::max(0.0, -0.5 + q * q * mix * mix * (m0 + 0.5));
}

double m_bound_pbet(int ports, double q_avg, double m0, Bound which) {
  check_m0(m0, "m_bound_pbet");
  if (q_avg < 0.0 || q_avg > 1.0 + 1e-12)
    throw std::invalid_argument("m_bound_pbet: q_avg must lie in [0, 1]");
  const double omega_env = 1.0 - q_avg;
  const double env =
      which == Bound::low ? m_low(m0, omega_env) : m_up(m0, omega_env);
  const double q = port_survival(ports);
  return std::max(0.0, env * q * q - (1.0 - q * q) / 2.0);
}

double m_bound_pbet(int ports, const PauliChannelParams& noise, double m0,
                    Bound which) {
  return m_bound_pbet(ports, effective_params(noise).q_avg, m0, which);
}

bool phase_flip_representable(double q_avg) {
  return q_avg >= 2.0 / 3.0 && q_avg <= 1.0;
}

AsymptoticBounds asymptotic_bounds(int ports, double omega, double m0) {
  check_m0(m0, "asymptotic_bounds");
  if (ports < 1) throw std::invalid_argument("asymptotic_bounds: need at least one port");
  const double port_loss = (2.0 * m0 + 1.0) / ports;
  return {std::max(0.0, m0 - 6.0 * omega * (m0 + 1.0) / 2.0 - port_loss),
          std::max(0.0, m0 - 6.0 * omega * m0 - port_loss)};
}

}  // namespace pbtsim
