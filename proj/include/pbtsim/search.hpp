#pragma once

#include "pbtsim/noise_bounds.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace pbtsim {

/// Monte Carlo grid sizes: channels on the fixed-mean simplex, Euler
/// angle pairs on the sphere, and an evenly spaced gamma grid. The same
/// seed always reproduces the same samples.
struct SampleGrid {
  int n_simplex = 25;
  int n_sphere = 150;
  int gamma_steps = 7;
  std::uint64_t seed = 0;
};

/// One orientation sample: sphere angles for each qubit, (azimuth,
/// polar) convention matching EulerAngles (alpha1, alpha2)/(beta1, beta2).
struct SpherePair {
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double beta1 = 0.0;
  double beta2 = 0.0;
};

/// A single (state orientation, channel) grid point.
struct ScanCandidate {
  EulerAngles angles;
  PauliChannelParams channel;
};

struct BoundaryScanResult {
  double min_value = 0.0;
  double max_value = 0.0;
  ScanCandidate argmin;
  ScanCandidate argmax;
  long n_evaluated = 0;
};

/// n channels uniform on the plane p1+p2+p3 = 3*omega (p_i >= 0).
/// Samples scale linearly with omega at fixed seed.
std::vector<PauliChannelParams> sample_simplex(double omega, int n, std::uint64_t seed);

/// n orientation samples, each angle pair area-uniform on the sphere.
std::vector<SpherePair> sample_sphere_pairs(int n, std::uint64_t seed);

/// Evenly spaced gamma grid over [0, 2*pi) with `steps` points (the
/// last grid value, 2*pi, wraps to 0).
std::vector<double> gamma_grid(int steps);

/// Every (channel, orientation, gamma) combination of the grid in fixed
/// order (channel-major, then orientation, then gamma), plus any extra
/// hand-picked candidates appended at the end, with the surviving
/// entanglement of each.
struct GridEvaluation {
  std::vector<ScanCandidate> points;
  std::vector<double> values;
};

GridEvaluation evaluate_grid(double omega, double theta, const SampleGrid& grid,
                             std::span<const ScanCandidate> extras = {});

/// Reduce an evaluation to its extremes; ties keep the earliest point.
BoundaryScanResult scan_extremes(const GridEvaluation& eval);

/// evaluate_grid followed by scan_extremes.
BoundaryScanResult boundary_scan(double omega, double theta, const SampleGrid& grid,
                                 std::span<const ScanCandidate> extras = {});

enum class Objective { minimize, maximize };

/// Local derivative-free polish of a scan extreme: coordinate steps on
/// the five angles and the channel triple (projected back onto its
/// simplex), with the step halved whenever a full sweep fails to
/// improve. Stops once steps drop below 1e-6.
BoundaryScanResult refine_extreme(const ScanCandidate& start, Objective objective,
                                  double omega, double theta);

/// Closed-form bound surface over a (m0, omega) grid.
struct SurfaceRow {
  double m0 = 0.0;
  double omega = 0.0;
  double low = 0.0;
  double up = 0.0;
  double dep = 0.0;
  bool above_critical = false;
};

std::vector<SurfaceRow> surface_data(std::span<const double> m0_grid,
                                     std::span<const double> omega_grid);

/// Bounds relative to the initial entanglement at fixed m0 > 0.
struct SliceRow {
  double omega = 0.0;
  double rel_low = 0.0;
  double rel_up = 0.0;
  double rel_dep = 0.0;
};

std::vector<SliceRow> slice_data(double m0, std::span<const double> omega_grid);

}  // namespace pbtsim
