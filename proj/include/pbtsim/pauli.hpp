#pragma once

#include "pbtsim/states.hpp"

#include <array>

namespace pbtsim {

/// A single-qubit Pauli channel rho -> sum_k w_k sigma_k rho sigma_k.
/// Stored canonically as the weight vector (w0..w3) with sum one; the
/// scaled error triple (p1,p2,p3) with p_k = 4 w_k, used by the public
/// parameterisations, covers p1+p2+p3 in [0, 4].
class PauliChannelParams {
 public:
  PauliChannelParams() : w_{1.0, 0.0, 0.0, 0.0} {}

  static PauliChannelParams identity() { return PauliChannelParams(); }

  /// From the scaled error triple (p1,p2,p3), p_k >= 0, p1+p2+p3 <= 4.
  static PauliChannelParams from_probabilities(double p1, double p2, double p3);

  /// From raw conjugation weights (w0..w3); must sum to one. Weights in
  /// [-1e-12, 0) are clamped to zero, anything lower is rejected.
  static PauliChannelParams from_weights(const std::array<double, 4>& w);

  /// Depolarizing channel rho -> (1-p) rho + p I/2, p in [0, 4/3].
  static PauliChannelParams depolarizing(double p);

  /// Single-axis flip normalised to mean error rate p: the scaled
  /// triple puts 3p on the chosen axis (Kraus weight 3p/4), so
  /// omega(flip(axis, p)) == p. axis in 1..3, p in [0, 4/3].
  static PauliChannelParams flip(int axis, double p);

  const std::array<double, 4>& weights() const { return w_; }
  double weight(int k) const { return w_.at(static_cast<std::size_t>(k)); }

  /// Scaled parameter p_k = 4 w_k for k in 0..3.
  double p(int k) const { return 4.0 * weight(k); }

  /// The error triple (p1,p2,p3).
  std::array<double, 3> probabilities() const { return {p(1), p(2), p(3)}; }

 private:
  explicit PauliChannelParams(std::array<double, 4> w) : w_(w) {}

  std::array<double, 4> w_;
};

/// Mean error rate omega = (p1+p2+p3)/3.
double omega(const PauliChannelParams& c);

/// Pauli transfer eigenvalues: lambda_jk = 1 - (p_j+p_k)/2 scales the
/// Bloch axis complementary to j and k, so sigma_1 picks up lambda23 etc.
struct PauliTransfer {
  double lambda23 = 1.0;
  double lambda31 = 1.0;
  double lambda12 = 1.0;
};

PauliTransfer eigenvalues(const PauliChannelParams& c);

/// Invert eigenvalues() back to channel parameters; throws when the
/// eigenvalue triple does not describe a valid Pauli channel.
PauliChannelParams from_transfer(const PauliTransfer& t);

/// Apply the channel to one qubit of a multi-qubit density matrix.
/// Qubit 0 is the most significant index bit.
ComplexMatrix apply(const PauliChannelParams& c, const ComplexMatrix& rho, int qubit);

/// Independent channels on both qubits of a two-qubit state.
TwoQubitState apply_local(const PauliChannelParams& first,
                          const PauliChannelParams& second, const TwoQubitState& rho);

/// Composition b after a, again a Pauli channel.
PauliChannelParams compose(const PauliChannelParams& a, const PauliChannelParams& b);

/// L-fold composition root: a channel r with r^L = c. Requires all
/// transfer eigenvalues strictly positive and the root to stay a channel.
PauliChannelParams channel_root(const PauliChannelParams& c, int order);

/// The channel r with compose(divisor, r) = target, when it exists.
/// Solved on the transfer eigenvalues and cross-checked against the
/// equivalent linear system in the scaled parameters.
PauliChannelParams channel_quotient(const PauliChannelParams& target,
                                     const PauliChannelParams& divisor);

/// Pauli transfer matrix: diag(1, lambda23, lambda31, lambda12).
ComplexMatrix superoperator(const PauliChannelParams& c);

}  // namespace pbtsim
