#include "pbtsim/pauli.hpp"

#include <cmath>
#include <stdexcept>

namespace pbtsim {

namespace {

constexpr double weight_floor = -1e-12;

std::array<double, 4> checked_weights(std::array<double, 4> w, const char* who) {
  double sum = 0.0;
  for (double& x : w) {
    if (x < weight_floor)
      throw std::invalid_argument(std::string(who) + ": negative channel weight");
    if (x < 0.0) x = 0.0;
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument(std::string(who) + ": channel weights must sum to one");
  for (double& x : w) x /= sum;
  return w;
}

// Pauli group multiplication up to phase: sigma_i sigma_j ~ sigma_{mul[i][j]}.
constexpr int pauli_mul[4][4] = {
    {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};

}  // namespace

PauliChannelParams PauliChannelParams::from_probabilities(double p1, double p2,
                                                          double p3) {
  return from_weights({1.0 - (p1 + p2 + p3) / 4.0, p1 / 4.0, p2 / 4.0, p3 / 4.0});
}

PauliChannelParams PauliChannelParams::from_weights(const std::array<double, 4>& w) {
  return PauliChannelParams(checked_weights(w, "PauliChannelParams"));
}

PauliChannelParams PauliChannelParams::depolarizing(double p) {
  if (p < 0.0 || p > 4.0 / 3.0)
    throw std::invalid_argument("depolarizing: p must lie in [0, 4/3]");
  return from_probabilities(p, p, p);
}

PauliChannelParams PauliChannelParams::flip(int axis, double p) {
  if (axis < 1 || axis > 3) throw std::invalid_argument("flip: axis must be 1, 2 or 3");
  if (p < 0.0 || 3.0 * p > 4.0)
    throw std::invalid_argument("flip: p must lie in [0, 4/3]");
  std::array<double, 4> w{1.0 - 3.0 * p / 4.0, 0.0, 0.0, 0.0};
  w[static_cast<std::size_t>(axis)] = 3.0 * p / 4.0;
  return from_weights(w);
}

double omega(const PauliChannelParams& c) {
  return (c.p(1) + c.p(2) + c.p(3)) / 3.0;
}

PauliTransfer eigenvalues(const PauliChannelParams& c) {
  const auto q = [&](int i, int j) { return 1.0 - (c.p(i) + c.p(j)) / 2.0; };
  return {q(2, 3), q(3, 1), q(1, 2)};
}

PauliChannelParams from_transfer(const PauliTransfer& t) {
  const double l1 = t.lambda23, l2 = t.lambda31, l3 = t.lambda12;
  return PauliChannelParams::from_weights({(1.0 + l1 + l2 + l3) / 4.0,
                                           (1.0 + l1 - l2 - l3) / 4.0,
                                           (1.0 - l1 + l2 - l3) / 4.0,
                                           (1.0 - l1 - l2 + l3) / 4.0});
}

ComplexMatrix apply(const PauliChannelParams& c, const ComplexMatrix& rho, int qubit) {
  if (rho.rows() != rho.cols())
    throw std::invalid_argument("apply: density matrix must be square");
  const Eigen::Index dim = rho.rows();
  int qubits = 0;
  while ((Eigen::Index{1} << qubits) < dim) ++qubits;
  if ((Eigen::Index{1} << qubits) != dim)
    throw std::invalid_argument("apply: dimension must be a power of two");
  if (qubit < 0 || qubit >= qubits)
    throw std::invalid_argument("apply: qubit index out of range");

  const Eigen::Index mask = Eigen::Index{1} << (qubits - 1 - qubit);
  const auto& w = c.weights();
  ComplexMatrix out = w[0] * rho;
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index col = 0; col < dim; ++col) {
      // Parity of the addressed bit in row/column index drives the sign
      // picked up under Y and Z conjugation.
      const bool br = r & mask, bc = col & mask;
      const double zsign = (br == bc) ? 1.0 : -1.0;
      out(r, col) += w[1] * rho(r ^ mask, col ^ mask) +
                     w[2] * zsign * rho(r ^ mask, col ^ mask) +
                     w[3] * zsign * rho(r, col);
    }
  return out;
}

TwoQubitState apply_local(const PauliChannelParams& first,
                          const PauliChannelParams& second, const TwoQubitState& rho) {
  ComplexMatrix m = apply(first, rho.density(), 0);
  return TwoQubitState(apply(second, m, 1));
}

PauliChannelParams compose(const PauliChannelParams& a, const PauliChannelParams& b) {
  std::array<double, 4> w{0.0, 0.0, 0.0, 0.0};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      w[static_cast<std::size_t>(pauli_mul[i][j])] += a.weight(i) * b.weight(j);
  return PauliChannelParams::from_weights(w);
}

PauliChannelParams channel_root(const PauliChannelParams& c, int order) {
  if (order < 1) throw std::invalid_argument("channel_root: order must be positive");
  PauliTransfer t = eigenvalues(c);
  for (double l : {t.lambda23, t.lambda31, t.lambda12})
    if (l <= 0.0)
      throw std::domain_error("channel_root: requires strictly positive transfer eigenvalues");
  const double inv = 1.0 / order;
  PauliTransfer r{std::pow(t.lambda23, inv), std::pow(t.lambda31, inv),
                  std::pow(t.lambda12, inv)};
  try {
    return from_transfer(r);
  } catch (const std::invalid_argument&) {
    throw std::domain_error("channel_root: root is not a valid channel");
  }
}

PauliChannelParams channel_quotient(const PauliChannelParams& target,
                                     const PauliChannelParams& divisor) {
  PauliTransfer td = eigenvalues(divisor);
  PauliTransfer tt = eigenvalues(target);
  const std::array<double, 3> ld{td.lambda23, td.lambda31, td.lambda12};
  const std::array<double, 3> lt{tt.lambda23, tt.lambda31, tt.lambda12};
  for (double l : ld)
    if (std::abs(l) < 1e-12)
      throw std::domain_error("channel_quotient: divisor has a vanishing transfer eigenvalue");

  PauliChannelParams res = [&] {
    try {
      return from_transfer({lt[0] / ld[0], lt[1] / ld[1], lt[2] / ld[2]});
    } catch (const std::invalid_argument&) {
      throw std::domain_error("channel_quotient: quotient is not a valid channel");
    }
  }();

  // Independent route: solve the 3x3 linear system relating the scaled
  // parameters of target, divisor and quotient, and insist both agree.
  const double q1 = divisor.p(1), q2 = divisor.p(2), q3 = divisor.p(3);
  const double q0 = 4.0 - q1 - q2 - q3;
  Eigen::Matrix3d qmat;
  qmat << q1, q1 - q3, q1 - q2,
          q2 - q3, q2, -q1 + q2,
          -q2 + q3, -q1 + q3, q3;
  Eigen::Matrix3d sys = q0 * Eigen::Matrix3d::Identity() - qmat;
  Eigen::Vector3d rhs(target.p(1) - q1, target.p(2) - q2, target.p(3) - q3);
  Eigen::Vector3d r = 4.0 * sys.partialPivLu().solve(rhs);
  for (int i = 0; i < 3; ++i)
    if (std::abs(r[i] - res.p(i + 1)) > 1e-10)
      throw std::runtime_error("channel_quotient: cross-check between solution routes failed");
  return res;
}

ComplexMatrix superoperator(const PauliChannelParams& c) {
  PauliTransfer t = eigenvalues(c);
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = 1.0;
  m(1, 1) = t.lambda23;
  m(2, 2) = t.lambda31;
  m(3, 3) = t.lambda12;
  return m;
}

}  // namespace pbtsim
