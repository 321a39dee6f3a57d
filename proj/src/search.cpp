#include "pbtsim/search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace pbtsim {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// Uniform double in [0,1) from the top 53 bits of the generator, so the
// stream does not depend on the standard library's distribution choices.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double objective_value(double theta, const ScanCandidate& c) {
  return entanglement_after_local_noise(general_pure_state(theta, c.angles), c.channel);
}

// Euclidean projection of a point onto {x >= 0, sum(x) = total}.
std::array<double, 3> project_simplex(std::array<double, 3> x, double total) {
  std::array<double, 3> sorted = x;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0, shift = 0.0;
  for (int k = 0; k < 3; ++k) {
    cumulative += sorted[static_cast<std::size_t>(k)];
    const double candidate = (cumulative - total) / (k + 1);
    if (sorted[static_cast<std::size_t>(k)] - candidate > 0.0) shift = candidate;
  }
  for (double& v : x) v = std::max(0.0, v - shift);
  return x;
}

}  // namespace

std::vector<PauliChannelParams> sample_simplex(double omega, int n, std::uint64_t seed) {
  if (omega <= 0.0 || omega > 4.0 / 3.0)
    throw std::invalid_argument("sample_simplex: omega must lie in (0, 4/3]");
  if (n < 1) throw std::invalid_argument("sample_simplex: need at least one sample");
  std::mt19937_64 rng(seed);
  std::vector<PauliChannelParams> out;
  out.reserve(static_cast<std::size_t>(n));
  const double total = 3.0 * omega;
  for (int i = 0; i < n; ++i) {
    // Two uniform cuts of the unit interval give a uniform 2-simplex
    // point; scaling by 3*omega moves it onto the requested plane.
    double u = uniform01(rng), v = uniform01(rng);
    if (u > v) std::swap(u, v);
    out.push_back(PauliChannelParams::from_probabilities(total * u, total * (v - u),
                                                         total * (1.0 - v)));
  }
  return out;
}

std::vector<SpherePair> sample_sphere_pairs(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample_sphere_pairs: need at least one sample");
  std::mt19937_64 rng(seed);
  std::vector<SpherePair> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    SpherePair s;
    s.alpha1 = two_pi * uniform01(rng);
    s.alpha2 = std::acos(1.0 - 2.0 * uniform01(rng));
    s.beta1 = two_pi * uniform01(rng);
    s.beta2 = std::acos(1.0 - 2.0 * uniform01(rng));
    out.push_back(s);
  }
  return out;
}

std::vector<double> gamma_grid(int steps) {
  if (steps < 1) throw std::invalid_argument("gamma_grid: need at least one step");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(steps));
  if (steps == 1) {
    out.push_back(0.0);
    return out;
  }
  const double step = two_pi / (steps - 1);
  for (int i = 0; i < steps; ++i) {
    const double wrapped = std::fmod(i * step, two_pi);
    // The end of the period belongs at 0; fmod can leave it a rounding
    // error shy of 2*pi instead.
    out.push_back(two_pi - wrapped < 1e-9 ? 0.0 : wrapped);
  }
  return out;
}

GridEvaluation evaluate_grid(double omega, double theta, const SampleGrid& grid,
                             std::span<const ScanCandidate> extras) {
  if (grid.n_simplex < 1 || grid.n_sphere < 1 || grid.gamma_steps < 1)
    throw std::invalid_argument("evaluate_grid: empty grid");
  const auto channels = sample_simplex(omega, grid.n_simplex, grid.seed);
  const auto spheres = sample_sphere_pairs(grid.n_sphere, grid.seed);
  const auto gammas = gamma_grid(grid.gamma_steps);

  GridEvaluation eval;
  const std::size_t count =
      channels.size() * spheres.size() * gammas.size() + extras.size();
  eval.points.reserve(count);
  eval.values.reserve(count);

  auto push = [&](const ScanCandidate& c) {
    eval.values.push_back(objective_value(theta, c));
    eval.points.push_back(c);
  };
  for (const auto& ch : channels)
    for (const auto& sp : spheres)
      for (double g : gammas)
        push({EulerAngles{sp.alpha1, sp.alpha2, g, sp.beta1, sp.beta2}, ch});
  for (const auto& extra : extras) push(extra);
  return eval;
}

BoundaryScanResult scan_extremes(const GridEvaluation& eval) {
  if (eval.values.empty()) throw std::invalid_argument("scan_extremes: empty evaluation");
  BoundaryScanResult result;
  result.min_value = result.max_value = eval.values[0];
  result.argmin = result.argmax = eval.points[0];
  result.n_evaluated = static_cast<long>(eval.values.size());
  for (std::size_t i = 1; i < eval.values.size(); ++i) {
    if (eval.values[i] < result.min_value) {
      result.min_value = eval.values[i];
      result.argmin = eval.points[i];
    }
    if (eval.values[i] > result.max_value) {
      result.max_value = eval.values[i];
      result.argmax = eval.points[i];
    }
  }
  return result;
}

BoundaryScanResult boundary_scan(double omega, double theta, const SampleGrid& grid,
                                 std::span<const ScanCandidate> extras) {
  return scan_extremes(evaluate_grid(omega, theta, grid, extras));
}

BoundaryScanResult refine_extreme(const ScanCandidate& start, Objective objective,
                                  double omega, double theta) {
  const double sign = objective == Objective::minimize ? -1.0 : 1.0;
  const double total = 3.0 * omega;

  ScanCandidate best = start;
  // Keep the start on its constraint surface before comparing moves.
  best.channel = [&] {
    auto p = start.channel.probabilities();
    auto projected = project_simplex({p[0], p[1], p[2]}, total);
    return PauliChannelParams::from_probabilities(projected[0], projected[1],
                                                  projected[2]);
  }();
  double best_value = objective_value(theta, best);
  long evaluated = 1;

  double angle_step = 0.1, prob_step = 0.05;
  while (angle_step > 1e-6 || prob_step > 1e-6) {
    bool improved = false;

    auto try_candidate = [&](const ScanCandidate& c) {
      const double value = objective_value(theta, c);
      ++evaluated;
      if (sign * (value - best_value) > 0.0) {
        best = c;
        best_value = value;
        improved = true;
      }
    };

    double* angle_fields[5] = {&best.angles.alpha1, &best.angles.alpha2,
                               &best.angles.gamma, &best.angles.beta1,
                               &best.angles.beta2};
    for (int k = 0; k < 5; ++k)
      for (double dir : {angle_step, -angle_step}) {
        ScanCandidate c = best;
        double* fields[5] = {&c.angles.alpha1, &c.angles.alpha2, &c.angles.gamma,
                             &c.angles.beta1, &c.angles.beta2};
        *fields[k] = *angle_fields[k] + dir;
        try_candidate(c);
      }

    for (int k = 0; k < 3; ++k)
      for (double dir : {prob_step, -prob_step}) {
        auto p = best.channel.probabilities();
        std::array<double, 3> moved{p[0], p[1], p[2]};
        moved[static_cast<std::size_t>(k)] += dir;
        moved = project_simplex(moved, total);
        ScanCandidate c = best;
        c.channel =
            PauliChannelParams::from_probabilities(moved[0], moved[1], moved[2]);
        try_candidate(c);
      }

    if (!improved) {
      angle_step /= 2.0;
      prob_step /= 2.0;
    }
  }

  BoundaryScanResult result;
  result.min_value = result.max_value = best_value;
  result.argmin = result.argmax = best;
  result.n_evaluated = evaluated;
  return result;
}

std::vector<SurfaceRow> surface_data(std::span<const double> m0_grid,
                                     std::span<const double> omega_grid) {
  std::vector<SurfaceRow> rows;
  rows.reserve(m0_grid.size() * omega_grid.size());
  for (double m0 : m0_grid)
    for (double om : omega_grid) {
      SurfaceRow row;
      row.m0 = m0;
      row.omega = om;
      row.low = m_low(m0, om);
      row.up = m_up(m0, om);
      row.dep = m_dep(m0, om);
      // At omega = 2/3 the threshold diverges: no m0 clears it.
      row.above_critical =
          std::abs(1.0 - 1.5 * om) >= 1e-12 && m0 >= critical_m0(om);
      rows.push_back(row);
    }
  return rows;
}

std::vector<SliceRow> slice_data(double m0, std::span<const double> omega_grid) {
  if (m0 <= 0.0) throw std::invalid_argument("slice_data: m0 must be positive");
  std::vector<SliceRow> rows;
  rows.reserve(omega_grid.size());
  for (double om : omega_grid)
    rows.push_back({om, m_low(m0, om) / m0, m_up(m0, om) / m0, m_dep(m0, om) / m0});
  return rows;
}

}  // namespace pbtsim
