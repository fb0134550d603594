#include "gridstab/swing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gridstab/textio.hpp"

namespace gridstab {

const char* response_class_name(ResponseClass c) noexcept {
  switch (c) {
    case ResponseClass::Decayed: return "decayed";
    case ResponseClass::Oscillating: return "oscillating";
    case ResponseClass::Diverged: return "diverged";
  }
  return "unknown";
}

namespace {

constexpr double kOverflowLimit = 1e12;

struct Deriv {
  // omega and the acceleration for a given (delta, omega) and frozen forcing.
  static void eval(const RealSymMatrix& p, double gamma,
                   const std::vector<double>& forcing,
                   const std::vector<double>& delta,
                   const std::vector<double>& omega,
                   std::vector<double>& ddelta, std::vector<double>& domega) {
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
      ddelta[i] = omega[i];
      double coupling = 0.0;
      for (std::size_t j = 0; j < n; ++j) coupling += p(i, j) * delta[j];
      domega[i] = -gamma * omega[i] - coupling + forcing[i];
    }
  }
};

void validate_config(const SimConfig& cfg, std::size_t n) {
  if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt))
    fail(ErrorCode::InvalidArgument, "simulate: dt must be positive");
  if (!(cfg.t_end > 0.0) || !std::isfinite(cfg.t_end))
    fail(ErrorCode::InvalidArgument, "simulate: t_end must be positive");
  if (cfg.gamma < 0.0 || !std::isfinite(cfg.gamma))
    fail(ErrorCode::InvalidArgument, "simulate: gamma must be nonnegative");
  if (!std::isfinite(cfg.pulse.magnitude))
    fail(ErrorCode::InvalidArgument, "simulate: pulse magnitude not finite");
  if (cfg.pulse.target >= n)
    fail(ErrorCode::InvalidArgument,
         "simulate: pulse target " + std::to_string(cfg.pulse.target) +
             " out of range for " + std::to_string(n) + " generators");
  if (!(cfg.pulse.t_on >= 0.0) || !(cfg.pulse.t_off >= cfg.pulse.t_on))
    fail(ErrorCode::InvalidArgument,
         "simulate: pulse window must satisfy 0 <= t_on <= t_off");
  const double steps = cfg.t_end / cfg.dt;
  if (std::abs(steps - std::round(steps)) > 1e-6)
    fail(ErrorCode::InvalidArgument,
         "simulate: t_end must be an integer multiple of dt");
}

} // namespace

Trajectory simulate(const CouplingMatrix& p, const SimConfig& cfg,
                    std::span<const double> delta0,
                    std::span<const double> omega0) {
  const std::size_t n = p.matrix.size();
  validate_config(cfg, n);
  if (delta0.size() != n || omega0.size() != n)
    fail(ErrorCode::DimensionMismatch,
         "simulate: initial state must have one entry per generator");

  const std::size_t n_steps =
      static_cast<std::size_t>(std::llround(cfg.t_end / cfg.dt));

  Trajectory traj;
  traj.n = n;
  traj.config = cfg;
  traj.times.reserve(n_steps + 1);
  traj.delta.reserve((n_steps + 1) * n);
  traj.omega.reserve((n_steps + 1) * n);
  traj.accel.reserve((n_steps + 1) * n);

  std::vector<double> delta(delta0.begin(), delta0.end());
  std::vector<double> omega(omega0.begin(), omega0.end());
  std::vector<double> forcing(n, 0.0);
  std::vector<double> kd1(n), ko1(n), kd2(n), ko2(n), kd3(n), ko3(n), kd4(n),
      ko4(n), tmp_d(n), tmp_o(n);

  auto pulse_at = [&cfg](double t, std::vector<double>& f) {
    std::fill(f.begin(), f.end(), 0.0);
    if (t >= cfg.pulse.t_on && t < cfg.pulse.t_off)
      f[cfg.pulse.target] = cfg.pulse.magnitude;
  };

  auto record = [&](double t) {
    pulse_at(t, forcing);
    traj.times.push_back(t);
    for (std::size_t i = 0; i < n; ++i) {
      traj.delta.push_back(delta[i]);
      traj.omega.push_back(omega[i]);
    }
    // instantaneous acceleration at the sample
    Deriv::eval(p.matrix, cfg.gamma, forcing, delta, omega, tmp_d, tmp_o);
    for (std::size_t i = 0; i < n; ++i) traj.accel.push_back(tmp_o[i]);
  };

  record(0.0);

  for (std::size_t step = 0; step < n_steps; ++step) {
    const double t = static_cast<double>(step) * cfg.dt;
    // forcing frozen across the step, sampled at the midpoint
    pulse_at(t + 0.5 * cfg.dt, forcing);

    Deriv::eval(p.matrix, cfg.gamma, forcing, delta, omega, kd1, ko1);
    for (std::size_t i = 0; i < n; ++i) {
      tmp_d[i] = delta[i] + 0.5 * cfg.dt * kd1[i];
      tmp_o[i] = omega[i] + 0.5 * cfg.dt * ko1[i];
    }
    Deriv::eval(p.matrix, cfg.gamma, forcing, tmp_d, tmp_o, kd2, ko2);
    for (std::size_t i = 0; i < n; ++i) {
      tmp_d[i] = delta[i] + 0.5 * cfg.dt * kd2[i];
      tmp_o[i] = omega[i] + 0.5 * cfg.dt * ko2[i];
    }
    Deriv::eval(p.matrix, cfg.gamma, forcing, tmp_d, tmp_o, kd3, ko3);
    for (std::size_t i = 0; i < n; ++i) {
      tmp_d[i] = delta[i] + cfg.dt * kd3[i];
      tmp_o[i] = omega[i] + cfg.dt * ko3[i];
    }
    Deriv::eval(p.matrix, cfg.gamma, forcing, tmp_d, tmp_o, kd4, ko4);

    bool overflow = false;
    for (std::size_t i = 0; i < n; ++i) {
      delta[i] += cfg.dt / 6.0 * (kd1[i] + 2.0 * kd2[i] + 2.0 * kd3[i] + kd4[i]);
      omega[i] += cfg.dt / 6.0 * (ko1[i] + 2.0 * ko2[i] + 2.0 * ko3[i] + ko4[i]);
      if (std::abs(delta[i]) > kOverflowLimit ||
          std::abs(omega[i]) > kOverflowLimit || !std::isfinite(delta[i]) ||
          !std::isfinite(omega[i]))
        overflow = true;
    }
    const double t_next = static_cast<double>(step + 1) * cfg.dt;
    if (overflow) {
      traj.diverged_at = t_next;
      break;
    }
    record(t_next);
  }
  return traj;
}

Trajectory simulate(const CouplingMatrix& p, const SimConfig& cfg) {
  const std::vector<double> zeros(p.matrix.size(), 0.0);
  return simulate(p, cfg, zeros, zeros);
}

double ripple_metric(const Trajectory& t, double window_start) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  bool any = false;
  for (std::size_t s = 0; s < t.samples(); ++s) {
    if (t.times[s] < window_start) continue;
    any = true;
    for (std::size_t i = 0; i < t.n; ++i) {
      lo = std::min(lo, t.accel_at(s, i));
      hi = std::max(hi, t.accel_at(s, i));
    }
  }
  if (!any)
    fail(ErrorCode::EmptyWindow,
         "ripple: no samples at or after t = " + std::to_string(window_start));
  return hi - lo;
}

ResponseClass divergence_detect(const Trajectory& t) {
  if (t.diverged_at) return ResponseClass::Diverged;

  std::vector<double> m; // max |omega| per post-pulse sample
  for (std::size_t s = 0; s < t.samples(); ++s) {
    if (t.times[s] < t.config.pulse.t_off) continue;
    double best = 0.0;
    for (std::size_t i = 0; i < t.n; ++i)
      best = std::max(best, std::abs(t.omega_at(s, i)));
    m.push_back(best);
  }
  if (m.empty())
    fail(ErrorCode::EmptyWindow, "classify: no samples after the pulse");

  const std::size_t n_bins = std::min<std::size_t>(20, m.size());
  std::vector<double> env(n_bins, 0.0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    const std::size_t b = std::min(n_bins - 1, i * n_bins / m.size());
    env[b] = std::max(env[b], m[i]);
  }

  const double peak = *std::max_element(env.begin(), env.end());
  if (env.back() < 0.01 * peak) return ResponseClass::Decayed;

  const std::size_t tail = std::max<std::size_t>(2, n_bins / 4);
  if (n_bins >= tail + 1) {
    bool rising = true;
    for (std::size_t b = n_bins - tail; b < n_bins; ++b)
      if (!(env[b] > env[b - 1])) {
        rising = false;
        break;
      }
    if (rising) return ResponseClass::Diverged;
  }
  return ResponseClass::Oscillating;
}

std::string trajectory_to_csv(const Trajectory& t) {
  std::string s = "time";
  for (const char* field : {"delta", "omega", "accel"})
    for (std::size_t i = 0; i < t.n; ++i)
      s += std::string(",") + field + "_" + std::to_string(i);
  s += "\n";
  for (std::size_t k = 0; k < t.samples(); ++k) {
    s += fmt_g(t.times[k]);
    for (std::size_t i = 0; i < t.n; ++i) s += "," + fmt_g(t.delta_at(k, i));
    for (std::size_t i = 0; i < t.n; ++i) s += "," + fmt_g(t.omega_at(k, i));
    for (std::size_t i = 0; i < t.n; ++i) s += "," + fmt_g(t.accel_at(k, i));
    s += "\n";
  }
  return s;
}

} // namespace gridstab
