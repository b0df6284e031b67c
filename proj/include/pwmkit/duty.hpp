#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pwmkit/angles.hpp"
#include "pwmkit/command.hpp"
#include "pwmkit/errors.hpp"

namespace pwmkit {

enum class Technique { spwm, thpwm, dpwm, dpwm_offset, cpwm, apwm };

inline const char* technique_name(Technique t) {
  switch (t) {
    case Technique::spwm: return "spwm";
    case Technique::thpwm: return "thpwm";
    case Technique::dpwm: return "dpwm";
    case Technique::dpwm_offset: return "dpwm-offset";
    case Technique::cpwm: return "cpwm";
    case Technique::apwm: return "apwm";
  }
  throw std::invalid_argument("technique_name: unknown technique");
}

inline Technique technique_from_name(std::string_view name) {
  if (name == "spwm") return Technique::spwm;
  if (name == "thpwm") return Technique::thpwm;
  if (name == "dpwm") return Technique::dpwm;
  if (name == "dpwm-offset") return Technique::dpwm_offset;
  if (name == "cpwm") return Technique::cpwm;
  if (name == "apwm") return Technique::apwm;
  throw std::invalid_argument("unknown technique: " + std::string(name));
}

// One per-phase duty evaluation. theta_eff is the phase position after the
// phase advance has been applied.
struct DutyVector {
  std::vector<double> duties;
  Technique technique = Technique::spwm;
  double m = 0.0;
  double theta_eff = 0.0;
};

namespace detail {

// 2/sqrt(3): rescales the min-subtracted sine envelope back to full duty
// range on a three-phase drive. Applied as written for other phase counts.
inline const double dpwm_scale = 2.0 / std::sqrt(3.0);

// Clears sub-ulp overshoot of the [0, 1] duty range caused by rounding in
// the trig products. The window is a few machine epsilons wide, so genuine
// overmodulation excursions pass through untouched.
inline double snap_unit(double d) {
  constexpr double slack = 64.0 * std::numeric_limits<double>::epsilon();
  if (d > 1.0 && d < 1.0 + slack) return 1.0;
  if (d < 0.0 && d > -slack) return 0.0;
  return d;
}

inline void check_phase_frame(const ElectricalAngle& angle,
                              const char* op) {
  if (angle.frame != Frame::phase) {
    throw frame_error(std::string(op) + ": duty evaluation takes a "
                      "phase-frame angle; convert line-frame input first");
  }
}

// Sine-triangle duties: d_r = (1 + m sin(theta_eff - (r-1) beta)) / 2.
inline std::vector<double> spwm_core(double theta_eff, double m,
                                     const DriveConfig& cfg) {
  std::vector<double> d(static_cast<std::size_t>(cfg.n_phases));
  const double beta = cfg.beta();
  for (int r = 0; r < cfg.n_phases; ++r) {
    const double x = theta_eff - r * beta;
    d[static_cast<std::size_t>(r)] = snap_unit(0.5 * (1.0 + m * std::sin(x)));
  }
  return d;
}

// Discontinuous duties: subtract the smallest sine-triangle duty so one
// phase rides the lower rail, then rescale by 2/sqrt(3).
inline std::vector<double> dpwm_core(double theta_eff, double m,
                                     const DriveConfig& cfg) {
  std::vector<double> d = spwm_core(theta_eff, m, cfg);
  const double lo = *std::min_element(d.begin(), d.end());
  for (double& v : d) v = snap_unit(dpwm_scale * (v - lo));
  return d;
}

// Shared ramp: 1 below m_l, linear descent to 0 at m_h, 0 above.
inline double modulation_ramp(double m, const DriveConfig& cfg) {
  if (m < cfg.m_l) return 1.0;
  if (m < cfg.m_h) return -(m - cfg.m_h) / (cfg.m_h - cfg.m_l);
  return 0.0;
}

inline DutyVector make_duty(std::vector<double> duties, Technique t,
                            double m, double theta_eff) {
  return DutyVector{std::move(duties), t, m, theta_eff};
}

}  // namespace detail

// Weight of the common-mode offset added on top of discontinuous duties.
inline double commutation_offset(double m, const DriveConfig& cfg) {
  require_valid(cfg);
  return detail::modulation_ramp(m, cfg);
}

// Blend between continuous and discontinuous duties. Same ramp shape as
// commutation_offset, kept as a separate entry point because it weighs a
// different quantity.
inline double blend_factor(double m, const DriveConfig& cfg) {
  require_valid(cfg);
  return detail::modulation_ramp(m, cfg);
}

inline DutyVector spwm_duty(const ElectricalAngle& theta_hat,
                            const PolarCommand& polar,
                            const DriveConfig& cfg) {
  detail::check_phase_frame(theta_hat, "spwm_duty");
  require_valid(cfg);
  const double theta_eff = theta_hat.value + polar.delta;
  return detail::make_duty(detail::spwm_core(theta_eff, polar.m, cfg),
                           Technique::spwm, polar.m, theta_eff);
}

// Third-harmonic injection. Defined for three-phase drives only: the
// injected component is common mode precisely because 3 * beta is a full
// turn.
inline DutyVector thpwm_duty(const ElectricalAngle& theta_hat,
                             const PolarCommand& polar,
                             const DriveConfig& cfg) {
  detail::check_phase_frame(theta_hat, "thpwm_duty");
  require_valid(cfg);
  if (cfg.n_phases != 3) {
    throw unsupported_error(
        "thpwm_duty: third-harmonic injection requires n_phases == 3");
  }
  const double theta_eff = theta_hat.value + polar.delta;
  std::vector<double> d(3);
  const double beta = cfg.beta();
  for (int r = 0; r < 3; ++r) {
    const double x = theta_eff - r * beta;
    const double envelope = std::sin(x) + std::sin(3.0 * x) / 6.0;
    double t = polar.m * (detail::dpwm_scale * envelope);
    t = std::clamp(t, -polar.m, polar.m);
    d[static_cast<std::size_t>(r)] = detail::snap_unit(0.5 * (1.0 + t));
  }
  return detail::make_duty(std::move(d), Technique::thpwm, polar.m, theta_eff);
}

inline DutyVector dpwm_duty(const ElectricalAngle& theta_hat,
                            const PolarCommand& polar,
                            const DriveConfig& cfg) {
  detail::check_phase_frame(theta_hat, "dpwm_duty");
  require_valid(cfg);
  const double theta_eff = theta_hat.value + polar.delta;
  return detail::make_duty(detail::dpwm_core(theta_eff, polar.m, cfg),
                           Technique::dpwm, polar.m, theta_eff);
}

// Discontinuous duties plus the ramped common-mode offset d_o * f(m).
inline DutyVector dpwm_offset_duty(const ElectricalAngle& theta_hat,
                                   const PolarCommand& polar,
                                   const DriveConfig& cfg) {
  detail::check_phase_frame(theta_hat, "dpwm_offset_duty");
  require_valid(cfg);
  const double theta_eff = theta_hat.value + polar.delta;
  std::vector<double> d = detail::dpwm_core(theta_eff, polar.m, cfg);
  const double offset = cfg.d_o * detail::modulation_ramp(polar.m, cfg);
  for (double& v : d) v = detail::snap_unit(v + offset);
  return detail::make_duty(std::move(d), Technique::dpwm_offset, polar.m,
                           theta_eff);
}

// Continuous variant: recenters the plain discontinuous duties so the
// envelope is symmetric about one half, i.e. min + max == 1.
inline DutyVector cpwm_duty(const ElectricalAngle& theta_hat,
                            const PolarCommand& polar,
                            const DriveConfig& cfg) {
  detail::check_phase_frame(theta_hat, "cpwm_duty");
  require_valid(cfg);
  const double theta_eff = theta_hat.value + polar.delta;
  std::vector<double> d = detail::dpwm_core(theta_eff, polar.m, cfg);
  const double hi = *std::max_element(d.begin(), d.end());
  const double shift = 0.5 * (1.0 - hi);
  for (double& v : d) v = detail::snap_unit(v + shift);
  return detail::make_duty(std::move(d), Technique::cpwm, polar.m, theta_eff);
}

// Blends continuous duties into offset discontinuous duties as m rises:
// pure discontinuous-with-offset below m_l, pure continuous at and above
// m_h. blend_swap exchanges the two roles.
inline DutyVector apwm_duty(const ElectricalAngle& theta_hat,
                            const PolarCommand& polar,
                            const DriveConfig& cfg) {
  detail::check_phase_frame(theta_hat, "apwm_duty");
  require_valid(cfg);
  const double b = detail::modulation_ramp(polar.m, cfg);
  DutyVector continuous = cpwm_duty(theta_hat, polar, cfg);
  DutyVector discontinuous = dpwm_offset_duty(theta_hat, polar, cfg);
  const double w_disc = cfg.blend_swap ? 1.0 - b : b;
  const double w_cont = cfg.blend_swap ? b : 1.0 - b;
  std::vector<double> d(continuous.duties.size());
  for (std::size_t r = 0; r < d.size(); ++r) {
    d[r] = detail::snap_unit(w_cont * continuous.duties[r] +
                             w_disc * discontinuous.duties[r]);
  }
  return detail::make_duty(std::move(d), Technique::apwm, polar.m,
                           continuous.theta_eff);
}

inline DutyVector duty(Technique t, const ElectricalAngle& theta_hat,
                       const PolarCommand& polar, const DriveConfig& cfg) {
  switch (t) {
    case Technique::spwm: return spwm_duty(theta_hat, polar, cfg);
    case Technique::thpwm: return thpwm_duty(theta_hat, polar, cfg);
    case Technique::dpwm: return dpwm_duty(theta_hat, polar, cfg);
    case Technique::dpwm_offset: return dpwm_offset_duty(theta_hat, polar, cfg);
    case Technique::cpwm: return cpwm_duty(theta_hat, polar, cfg);
    case Technique::apwm: return apwm_duty(theta_hat, polar, cfg);
  }
  throw std::invalid_argument("duty: unknown technique");
}

// Samples one electrical revolution on an even grid of phase-frame angles.
inline std::vector<std::pair<double, DutyVector>> duty_waveform(
    Technique t, const PolarCommand& polar, const DriveConfig& cfg,
    int samples) {
  if (samples < 2) {
    throw std::invalid_argument("duty_waveform: need at least 2 samples");
  }
  std::vector<std::pair<double, DutyVector>> rows;
  rows.reserve(static_cast<std::size_t>(samples));
  for (int j = 0; j < samples; ++j) {
    const double theta = two_pi * j / samples;
    rows.emplace_back(theta,
                      duty(t, ElectricalAngle::phase(theta), polar, cfg));
  }
  return rows;
}

}  // namespace pwmkit
