#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "pwmkit/duty.hpp"

namespace pwmkit {

// PWM period plus optional per-period dithering. dither_amplitude is the
// half-width of the uniform interval the period is drawn from.
struct TimebaseConfig {
  double t_p_nominal = 50e-6;
  double dither_amplitude = 0.0;
  std::uint64_t seed = 0;
};

inline void require_valid(const TimebaseConfig& tb) {
  if (!(tb.t_p_nominal > 0.0)) {
    throw std::invalid_argument("timebase: t_p_nominal must be positive");
  }
  if (tb.dither_amplitude < 0.0 || tb.dither_amplitude >= tb.t_p_nominal) {
    throw std::invalid_argument(
        "timebase: dither_amplitude must lie in [0, t_p_nominal)");
  }
}

// Per-phase on/off durations for one PWM period. t_on[r] + t_off[r] always
// reconstructs t_p exactly; saturated records whether any duty had to be
// clamped into [0, 1] first.
struct SwitchTiming {
  std::vector<double> t_on;
  std::vector<double> t_off;
  double t_p = 0.0;
  bool saturated = false;
};

// Splits a period into on/off durations per phase. The second subtraction
// in the low-duty branch is exact by Sterbenz's lemma, which is what makes
// the complementarity invariant hold bit for bit.
inline SwitchTiming duty_to_times(const DutyVector& duties, double t_p) {
  if (!(t_p > 0.0)) {
    throw std::domain_error("duty_to_times: t_p must be positive");
  }
  SwitchTiming timing;
  timing.t_p = t_p;
  timing.t_on.reserve(duties.duties.size());
  timing.t_off.reserve(duties.duties.size());
  for (double d : duties.duties) {
    double clamped = d;
    if (clamped < 0.0) { clamped = 0.0; timing.saturated = true; }
    if (clamped > 1.0) { clamped = 1.0; timing.saturated = true; }
    double on = t_p * clamped;
    double off = t_p - on;
    if (on < 0.5 * t_p) on = t_p - off;
    timing.t_on.push_back(on);
    timing.t_off.push_back(off);
  }
  return timing;
}

// Deterministic stream of dithered PWM periods, uniform over
// [t_p - amplitude, t_p + amplitude]. The 53-bit draw keeps the sequence
// identical across standard-library implementations.
class PeriodDither {
 public:
  explicit PeriodDither(const TimebaseConfig& tb) : tb_(tb), rng_(tb.seed) {
    require_valid(tb);
  }

  double next() {
    const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    return (tb_.t_p_nominal - tb_.dither_amplitude) +
           2.0 * tb_.dither_amplitude * u;
  }

 private:
  TimebaseConfig tb_;
  std::mt19937_64 rng_;
};

inline std::vector<double> dithered_periods(const TimebaseConfig& tb,
                                            std::size_t count) {
  PeriodDither gen(tb);
  std::vector<double> periods(count);
  for (double& p : periods) p = gen.next();
  return periods;
}

}  // namespace pwmkit
