#include "pbtsim/noise_bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace pbtsim {

namespace {

// Shared expression x = 1 - 3*omega/2; both bounds depend on omega only
// through it.
double bound_x(double omega) { return 1.0 - 1.5 * omega; }

}  // namespace

double critical_m0(double omega) {
  const double x = std::abs(bound_x(omega));
  if (x < 1e-12)
    throw std::domain_error("critical_m0: diverges at omega = 2/3");
  return -0.5 * (x - 1.0 / x);
}

double m_low(double m0, double omega) {
  const double x = bound_x(omega);
  return std::max(0.0, m0 * std::abs(x) + x * x / 2.0 - 0.5);
}

double m_up(double m0, double omega) {
  const double x = bound_x(omega);
  return std::max(0.0, m0 * x * x);
}

double m_dep(double m0, double omega) {
  const double s = 1.0 - omega;
  return std::max(0.0, m0 * s * s - omega * (1.0 - omega / 2.0));
}

double entanglement_after_local_noise(const TwoQubitState& rho,
                                      const PauliChannelParams& channel) {
  return negativity(apply_local(channel, channel, rho));
}

}  // namespace pbtsim
