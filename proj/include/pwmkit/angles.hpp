#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pwmkit/errors.hpp"

namespace pwmkit {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Offset between the line-to-line and phase voltage position signals of a
// three-phase machine. The sign of the shift follows the rotation polarity.
inline constexpr double line_phase_offset_rad = std::numbers::pi / 6.0;

// Reduces an angle to [0, 2*pi). fmod is exact, so the result stays congruent
// to the input modulo 2*pi at full double precision.
inline double wrap(double raw) {
  if (!std::isfinite(raw)) {
    throw std::domain_error("wrap: angle must be finite");
  }
  double r = std::fmod(raw, two_pi);
  if (r < 0.0) r += two_pi;
  if (r >= two_pi) r = 0.0;
  return r;
}

enum class Frame { phase, line };

// An electrical position signal plus the frame it was measured in and the
// rotation polarity (+1 or -1).
struct ElectricalAngle {
  double value = 0.0;
  Frame frame = Frame::phase;
  int polarity = +1;

  static ElectricalAngle of(double v, Frame f, int pol) {
    if (pol != +1 && pol != -1) {
      throw std::invalid_argument("ElectricalAngle: polarity must be +1 or -1");
    }
    return ElectricalAngle{wrap(v), f, pol};
  }
  static ElectricalAngle phase(double v, int pol = +1) {
    return of(v, Frame::phase, pol);
  }
  static ElectricalAngle line(double v, int pol = +1) {
    return of(v, Frame::line, pol);
  }
};

// Converts a phase-frame angle to the line frame. Only the three-phase
// relationship is defined; other phase counts are rejected rather than
// guessed at.
inline ElectricalAngle phase_to_line(const ElectricalAngle& a,
                                     int n_phases = 3) {
  if (a.frame != Frame::phase) {
    throw frame_error("phase_to_line: angle is not in the phase frame");
  }
  if (n_phases != 3) {
    throw unsupported_error(
        "phase_to_line: line/phase conversion is only defined for "
        "three-phase drives");
  }
  return ElectricalAngle{wrap(a.value + a.polarity * line_phase_offset_rad),
                         Frame::line, a.polarity};
}

inline ElectricalAngle line_to_phase(const ElectricalAngle& a,
                                     int n_phases = 3) {
  if (a.frame != Frame::line) {
    throw frame_error("line_to_phase: angle is not in the line frame");
  }
  if (n_phases != 3) {
    throw unsupported_error(
        "line_to_phase: line/phase conversion is only defined for "
        "three-phase drives");
  }
  return ElectricalAngle{wrap(a.value - a.polarity * line_phase_offset_rad),
                         Frame::phase, a.polarity};
}

}  // namespace pwmkit
