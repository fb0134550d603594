#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gridstab/coupling.hpp"

namespace gridstab {

// Constant acceleration applied to one generator while t in [t_on, t_off).
struct PulseSpec {
  std::size_t target = 0;
  double magnitude = 1.0;
  double t_on = 3.0;
  double t_off = 3.1;
};

struct SimConfig {
  double gamma = 0.2;   // uniform damping
  double dt = 1e-3;     // fixed step; t_end must be an integer multiple
  double t_end = 13.0;
  PulseSpec pulse;
};

// Sampled linearized response.  Row-major [sample][generator] layout; a sample
// exists for every accepted step including t = 0.  When the overflow guard
// (any |state| > 1e12) trips, integration stops early and diverged_at records
// the time of the offending sample.
struct Trajectory {
  std::size_t n = 0;
  std::vector<double> times;
  std::vector<double> delta;
  std::vector<double> omega;
  std::vector<double> accel; // instantaneous -gamma*omega - P*delta + pulse
  std::optional<double> diverged_at;
  SimConfig config;

  std::size_t samples() const noexcept { return times.size(); }
  double delta_at(std::size_t s, std::size_t i) const {
    return delta[s * n + i];
  }
  double omega_at(std::size_t s, std::size_t i) const {
    return omega[s * n + i];
  }
  double accel_at(std::size_t s, std::size_t i) const {
    return accel[s * n + i];
  }
};

// Classical RK4 on (delta', omega') = (omega, -gamma*omega - P*delta + f).
// The pulse forcing is held constant across each step (sampled at the step
// midpoint) so the discontinuous edges do not break the integrator's order
// when they fall on step boundaries.  Initial state defaults to rest.
Trajectory simulate(const CouplingMatrix& p, const SimConfig& cfg);
Trajectory simulate(const CouplingMatrix& p, const SimConfig& cfg,
                    std::span<const double> delta0,
                    std::span<const double> omega0);

// Peak-to-peak acceleration across all generators over samples with
// t >= window_start.  EmptyWindow when no sample qualifies.
double ripple_metric(const Trajectory& t, double window_start);

enum class ResponseClass { Decayed, Oscillating, Diverged };

const char* response_class_name(ResponseClass c) noexcept;

// Post-pulse envelope classification: the max-|omega| trace after pulse end is
// split into 20 equal bins (fewer when samples are scarce); Decayed when the
// last bin falls below 1% of the peak bin, Diverged when the overflow guard
// tripped or the envelope rises strictly across the final quarter of the bins,
// Oscillating otherwise.  EmptyWindow when nothing follows the pulse.
ResponseClass divergence_detect(const Trajectory& t);

// time, then delta_i for all generators, then omega_i, then accel_i.
std::string trajectory_to_csv(const Trajectory& t);

} // namespace gridstab
