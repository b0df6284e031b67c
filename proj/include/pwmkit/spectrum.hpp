#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "pwmkit/angles.hpp"

namespace pwmkit {

// Single-sided amplitude spectrum: a pure on-bin sinusoid A*sin(2*pi*f*t)
// reports amplitude A at f, and a constant c reports |c| at DC.
struct Spectrum {
  std::vector<double> freqs;
  std::vector<double> mags;
  double resolution = 0.0;  // bin spacing in hertz
};

namespace detail {

inline void check_analyze_args(std::size_t n, double sample_rate) {
  if (n < 2) {
    throw std::invalid_argument("analyze: need at least 2 samples");
  }
  if (!(sample_rate > 0.0)) {
    throw std::invalid_argument("analyze: sample_rate must be positive");
  }
}

}  // namespace detail

// Direct DFT over the full capture. Quadratic in the sample count, which is
// fine at the grid sizes this library targets; the twiddle table keeps the
// per-bin error at the round-off floor. The capture must span an integer
// number of cycles of whatever the caller wants to read off on-bin.
inline Spectrum analyze(std::span<const double> samples, double sample_rate) {
  const std::size_t n = samples.size();
  detail::check_analyze_args(n, sample_rate);

  std::vector<std::complex<double>> twiddle(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double arg = -two_pi * static_cast<double>(j) / static_cast<double>(n);
    twiddle[j] = {std::cos(arg), std::sin(arg)};
  }

  const std::size_t bins = n / 2 + 1;
  Spectrum spec;
  spec.resolution = sample_rate / static_cast<double>(n);
  spec.freqs.resize(bins);
  spec.mags.resize(bins);
  for (std::size_t k = 0; k < bins; ++k) {
    std::complex<double> acc{0.0, 0.0};
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i) {
      acc += samples[i] * twiddle[idx];
      idx += k;
      if (idx >= n) idx -= n;
    }
    spec.freqs[k] = spec.resolution * static_cast<double>(k);
    const bool shared = (k == 0) || (2 * k == n);
    spec.mags[k] = (shared ? 1.0 : 2.0) * std::abs(acc) / static_cast<double>(n);
  }
  return spec;
}

// Convenience overload carrying explicit sample times; rejects non-uniform
// grids instead of silently mis-scaling the frequency axis.
inline Spectrum analyze(std::span<const double> times,
                        std::span<const double> samples) {
  if (times.size() != samples.size()) {
    throw std::invalid_argument("analyze: times/samples length mismatch");
  }
  if (times.size() < 2) {
    throw std::invalid_argument("analyze: need at least 2 samples");
  }
  const double dt = times[1] - times[0];
  if (!(dt > 0.0)) {
    throw std::domain_error("analyze: sample times must be increasing");
  }
  for (std::size_t i = 2; i < times.size(); ++i) {
    const double step = times[i] - times[i - 1];
    if (std::abs(step - dt) > 1e-9 * dt) {
      throw std::domain_error("analyze: sample spacing is not uniform");
    }
  }
  return analyze(samples, 1.0 / dt);
}

// Single-sided amplitude of one integer bin, same convention as analyze.
// Linear in the capture length, so spot checks stay cheap when the full
// spectrum is not needed.
inline double bin_amplitude(std::span<const double> samples, std::size_t k) {
  const std::size_t n = samples.size();
  if (n < 2) {
    throw std::invalid_argument("bin_amplitude: need at least 2 samples");
  }
  if (k > n / 2) {
    throw std::domain_error("bin_amplitude: bin index beyond Nyquist");
  }
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double arg = -two_pi * static_cast<double>(k) *
                       static_cast<double>(i) / static_cast<double>(n);
    re += samples[i] * std::cos(arg);
    im += samples[i] * std::sin(arg);
  }
  const bool shared = (k == 0) || (2 * k == n);
  return (shared ? 1.0 : 2.0) * std::hypot(re, im) / static_cast<double>(n);
}

// Amplitude of the k-th harmonic of the given fundamental, read from the
// nearest bin.
inline double harmonic(const Spectrum& spec, double fundamental_hz, int k) {
  if (k < 0) {
    throw std::domain_error("harmonic: order must be non-negative");
  }
  if (!(fundamental_hz > 0.0)) {
    throw std::domain_error("harmonic: fundamental must be positive");
  }
  const double target = fundamental_hz * static_cast<double>(k);
  if (target > spec.freqs.back() + 0.5 * spec.resolution) {
    throw std::domain_error("harmonic: order lies beyond the spectrum");
  }
  auto idx = static_cast<std::size_t>(std::llround(target / spec.resolution));
  if (idx >= spec.mags.size()) idx = spec.mags.size() - 1;
  return spec.mags[idx];
}

// Peak bin of one sideband group centred on a multiple of the switching
// frequency.
struct BandPeak {
  int multiple = 0;
  double freq_hz = 0.0;
  double amplitude = 0.0;
};

// Scans the neighbourhoods of integer multiples of f_switch and reports the
// strongest bin in each. halfwidth_hz <= 0 selects the default grouping of
// a quarter of the switching frequency, which aggregates the fundamental
// sidebands into their carrier-multiple group.
inline std::vector<BandPeak> switching_band_peaks(const Spectrum& spec,
                                                  double f_switch,
                                                  int multiple_lo,
                                                  int multiple_hi,
                                                  double halfwidth_hz = -1.0) {
  if (!(f_switch > 0.0)) {
    throw std::domain_error("switching_band_peaks: f_switch must be positive");
  }
  if (multiple_lo < 1 || multiple_hi < multiple_lo) {
    throw std::domain_error("switching_band_peaks: bad multiple range");
  }
  if (halfwidth_hz <= 0.0) halfwidth_hz = 0.25 * f_switch;
  if (static_cast<double>(multiple_hi) * f_switch > spec.freqs.back()) {
    throw std::domain_error(
        "switching_band_peaks: spectrum does not reach the requested band");
  }

  std::vector<BandPeak> peaks;
  for (int g = multiple_lo; g <= multiple_hi; ++g) {
    const double centre = static_cast<double>(g) * f_switch;
    const double lo = centre - halfwidth_hz;
    const double hi = centre + halfwidth_hz;
    BandPeak peak{g, 0.0, -1.0};
    for (std::size_t k = 1; k < spec.freqs.size(); ++k) {
      if (spec.freqs[k] < lo || spec.freqs[k] > hi) continue;
      if (spec.mags[k] > peak.amplitude) {
        peak.amplitude = spec.mags[k];
        peak.freq_hz = spec.freqs[k];
      }
    }
    if (peak.amplitude >= 0.0) peaks.push_back(peak);
  }
  if (peaks.empty()) {
    throw std::domain_error("switching_band_peaks: no bins in any group");
  }
  return peaks;
}

// Largest bin across all sideband groups in the requested band.
inline BandPeak dominant_switching_component(const Spectrum& spec,
                                             double f_switch,
                                             int multiple_lo = 1,
                                             int multiple_hi = 3,
                                             double halfwidth_hz = -1.0) {
  const auto peaks = switching_band_peaks(spec, f_switch, multiple_lo,
                                          multiple_hi, halfwidth_hz);
  const BandPeak* best = &peaks.front();
  for (const auto& p : peaks) {
    if (p.amplitude > best->amplitude) best = &p;
  }
  return *best;
}

}  // namespace pwmkit
