#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "pwmkit/duty.hpp"
#include "pwmkit/spectrum.hpp"
#include "pwmkit/timing.hpp"

namespace pwmkit {

// Carrier-comparison settings for the idealized inverter. f_ratio is the
// number of PWM periods per electrical cycle; samples_per_period must be
// even so the triangular carrier is sampled symmetrically.
struct CarrierConfig {
  int f_ratio = 21;
  int samples_per_period = 512;
  double v_dc = 1.0;
  TimebaseConfig timebase{};
};

inline void require_valid(const CarrierConfig& carrier) {
  if (carrier.f_ratio < 3) {
    throw std::invalid_argument("carrier: f_ratio must be at least 3");
  }
  if (carrier.samples_per_period < 16 || carrier.samples_per_period % 2 != 0) {
    throw std::invalid_argument(
        "carrier: samples_per_period must be even and at least 16");
  }
  if (!(carrier.v_dc > 0.0)) {
    throw std::invalid_argument("carrier: v_dc must be positive");
  }
  require_valid(carrier.timebase);
}

// Idealized phase-to-ground switching waveforms. Samples are exactly 0 or
// v_dc. The per-period metadata (boundaries, commanded duties) is kept so
// downstream checks can reason per period without re-deriving it.
struct SwitchedWaveform {
  std::vector<double> t;
  std::vector<std::vector<double>> v_pg;  // [phase][sample]
  double fundamental_freq = 0.0;

  double v_dc = 0.0;
  double dt = 0.0;
  double t_p_nominal = 0.0;
  int n_phases = 0;
  int f_ratio = 0;
  int samples_per_period = 0;
  int cycles = 0;
  bool dithered = false;
  bool saturated = false;

  std::vector<std::size_t> period_offset;        // [period + 1]
  std::vector<double> period_duration;           // [period]
  std::vector<std::vector<double>> period_duty;  // [period][phase]
};

// Runs the carrier comparison: the duty command is held for each PWM
// period (sampled at the period start), and each phase outputs v_dc while
// the symmetric triangular carrier sits below its duty, giving a
// centre-aligned pulse of width duty * t_p. Sampling hits mid-points of a
// uniform grid, so the carrier never lands exactly on 0 or 1 and the
// degenerate duties 0 and 1 produce all-off / all-on periods exactly.
inline SwitchedWaveform synthesize(Technique technique,
                                   const PolarCommand& polar,
                                   const DriveConfig& cfg,
                                   const CarrierConfig& carrier,
                                   int cycles = 1) {
  require_valid(cfg);
  require_valid(carrier);
  if (cycles < 1) {
    throw std::invalid_argument("synthesize: cycles must be at least 1");
  }

  const int periods = carrier.f_ratio * cycles;
  const int s = carrier.samples_per_period;
  const double t_p = carrier.timebase.t_p_nominal;
  const bool dithered = carrier.timebase.dither_amplitude > 0.0;

  SwitchedWaveform wf;
  wf.v_dc = carrier.v_dc;
  wf.dt = t_p / static_cast<double>(s);
  wf.t_p_nominal = t_p;
  wf.n_phases = cfg.n_phases;
  wf.f_ratio = carrier.f_ratio;
  wf.samples_per_period = s;
  wf.cycles = cycles;
  wf.dithered = dithered;
  wf.fundamental_freq = 1.0 / (static_cast<double>(carrier.f_ratio) * t_p);

  // Duty command and period length for every PWM period.
  wf.period_duty.reserve(static_cast<std::size_t>(periods));
  wf.period_duration.resize(static_cast<std::size_t>(periods), t_p);
  if (dithered) {
    PeriodDither gen(carrier.timebase);
    for (double& dur : wf.period_duration) dur = gen.next();
  }
  for (int k = 0; k < periods; ++k) {
    const double theta = two_pi * (k % carrier.f_ratio) / carrier.f_ratio;
    DutyVector dv = duty(technique, ElectricalAngle::phase(theta), polar, cfg);
    for (double d : dv.duties) {
      if (d < 0.0 || d > 1.0) wf.saturated = true;
    }
    wf.period_duty.push_back(std::move(dv.duties));
  }

  const auto on_sample = [&](double carrier_level, double d) {
    return carrier_level < d;
  };

  wf.period_offset.assign(1, 0);
  wf.v_pg.assign(static_cast<std::size_t>(cfg.n_phases), {});

  if (!dithered) {
    const std::size_t total = static_cast<std::size_t>(periods) *
                              static_cast<std::size_t>(s);
    wf.t.resize(total);
    for (auto& trace : wf.v_pg) trace.resize(total);
    for (int k = 0; k < periods; ++k) {
      const auto& duties = wf.period_duty[static_cast<std::size_t>(k)];
      for (int i = 0; i < s; ++i) {
        const std::size_t n = static_cast<std::size_t>(k) *
                                  static_cast<std::size_t>(s) +
                              static_cast<std::size_t>(i);
        wf.t[n] = (static_cast<double>(n) + 0.5) * wf.dt;
        const double level =
            std::abs(1.0 - (2.0 * i + 1.0) / static_cast<double>(s));
        for (int r = 0; r < cfg.n_phases; ++r) {
          wf.v_pg[static_cast<std::size_t>(r)][n] =
              on_sample(level, duties[static_cast<std::size_t>(r)])
                  ? carrier.v_dc
                  : 0.0;
        }
      }
      wf.period_offset.push_back(static_cast<std::size_t>(k + 1) *
                                 static_cast<std::size_t>(s));
    }
    return wf;
  }

  // Dithered runs keep the nominal uniform sample grid (so the waveform
  // stays analyzable) while the period boundaries float underneath it.
  std::vector<double> boundary(static_cast<std::size_t>(periods) + 1, 0.0);
  for (int k = 0; k < periods; ++k) {
    boundary[static_cast<std::size_t>(k) + 1] =
        boundary[static_cast<std::size_t>(k)] +
        wf.period_duration[static_cast<std::size_t>(k)];
  }
  const double total_time = boundary.back();
  const auto total =
      static_cast<std::size_t>(std::floor(total_time / wf.dt - 0.5)) + 1;

  wf.t.resize(total);
  for (auto& trace : wf.v_pg) trace.resize(total);
  std::size_t k = 0;
  for (std::size_t n = 0; n < total; ++n) {
    const double t_n = (static_cast<double>(n) + 0.5) * wf.dt;
    while (k + 1 < static_cast<std::size_t>(periods) && t_n >= boundary[k + 1]) {
      ++k;
      wf.period_offset.push_back(n);
    }
    wf.t[n] = t_n;
    const double tau = (t_n - boundary[k]) / wf.period_duration[k];
    const double level = std::abs(1.0 - 2.0 * tau);
    const auto& duties = wf.period_duty[k];
    for (int r = 0; r < cfg.n_phases; ++r) {
      wf.v_pg[static_cast<std::size_t>(r)][n] =
          on_sample(level, duties[static_cast<std::size_t>(r)]) ? carrier.v_dc
                                                                : 0.0;
    }
  }
  while (wf.period_offset.size() < static_cast<std::size_t>(periods) + 1) {
    wf.period_offset.push_back(total);
  }
  return wf;
}

// Names like "ab", "bc", "ca" for the cyclically adjacent phase pairs.
inline std::vector<std::string> line_pair_names(int n_phases) {
  std::vector<std::string> names;
  for (int r = 0; r < n_phases; ++r) {
    const char a = static_cast<char>('a' + r);
    const char b = static_cast<char>('a' + (r + 1) % n_phases);
    names.push_back(std::string{a, b});
  }
  return names;
}

// Voltage differences between cyclically adjacent phases, one trace per
// pair. Values are exactly in {-v_dc, 0, v_dc}.
inline std::vector<std::vector<double>> line_to_line(
    const SwitchedWaveform& wf) {
  std::vector<std::vector<double>> pairs;
  pairs.reserve(static_cast<std::size_t>(wf.n_phases));
  for (int r = 0; r < wf.n_phases; ++r) {
    const auto& va = wf.v_pg[static_cast<std::size_t>(r)];
    const auto& vb = wf.v_pg[static_cast<std::size_t>((r + 1) % wf.n_phases)];
    std::vector<double> diff(va.size());
    for (std::size_t n = 0; n < va.size(); ++n) diff[n] = va[n] - vb[n];
    pairs.push_back(std::move(diff));
  }
  return pairs;
}

// Mean phase-to-ground voltage of each PWM period. For undithered runs
// this lands within v_dc / samples_per_period of duty * v_dc.
inline std::vector<std::vector<double>> period_averages(
    const SwitchedWaveform& wf) {
  const std::size_t periods = wf.period_duration.size();
  std::vector<std::vector<double>> means(
      periods, std::vector<double>(static_cast<std::size_t>(wf.n_phases), 0.0));
  for (std::size_t k = 0; k < periods; ++k) {
    const std::size_t first = wf.period_offset[k];
    const std::size_t last = wf.period_offset[k + 1];
    if (last <= first) continue;
    for (int r = 0; r < wf.n_phases; ++r) {
      double acc = 0.0;
      for (std::size_t n = first; n < last; ++n) {
        acc += wf.v_pg[static_cast<std::size_t>(r)][n];
      }
      means[k][static_cast<std::size_t>(r)] =
          acc / static_cast<double>(last - first);
    }
  }
  return means;
}

// Number of 0 <-> v_dc transitions per phase, normalized per electrical
// cycle.
inline std::vector<double> switching_count(const SwitchedWaveform& wf) {
  std::vector<double> counts(static_cast<std::size_t>(wf.n_phases), 0.0);
  for (int r = 0; r < wf.n_phases; ++r) {
    const auto& trace = wf.v_pg[static_cast<std::size_t>(r)];
    std::size_t transitions = 0;
    for (std::size_t n = 1; n < trace.size(); ++n) {
      if (trace[n] != trace[n - 1]) ++transitions;
    }
    counts[static_cast<std::size_t>(r)] =
        static_cast<double>(transitions) / static_cast<double>(wf.cycles);
  }
  return counts;
}

// DC-bus utilization: fundamental amplitude of a line-to-line trace over
// v_dc, measured on a freshly synthesized undithered cycle so the capture
// is coherent. Undefined (and rejected) at zero modulation.
inline double utilization_report(Technique technique,
                                 const PolarCommand& polar,
                                 const DriveConfig& cfg,
                                 const CarrierConfig& carrier) {
  if (!(polar.m > 0.0)) {
    throw std::domain_error(
        "utilization_report: ratio undefined for m <= 0");
  }
  CarrierConfig clean = carrier;
  clean.timebase.dither_amplitude = 0.0;
  const SwitchedWaveform wf = synthesize(technique, polar, cfg, clean, 1);
  const auto pairs = line_to_line(wf);
  const double amplitude = bin_amplitude(pairs.front(), 1);
  return amplitude / wf.v_dc;
}

}  // namespace pwmkit
