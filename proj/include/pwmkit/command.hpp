#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "pwmkit/angles.hpp"

namespace pwmkit {

// Rotor-frame voltage command plus the DC-link voltage estimate it will be
// realized against.
struct VoltageCommand {
  double v_d = 0.0;
  double v_q = 0.0;
  double v_dc = 0.0;
};

// Normalized magnitude (modulation index) and phase advance of a voltage
// command. delta lies in (-pi, pi].
struct PolarCommand {
  double m = 0.0;
  double delta = 0.0;
};

// Converts a rotor-frame command to modulation index and phase advance.
// The d component is the ordinate and q the abscissa, so a pure q command
// has zero advance and a pure d command leads by pi/2. A zero vector maps
// to (0, 0).
inline PolarCommand to_polar(const VoltageCommand& cmd) {
  if (!(cmd.v_dc > 0.0)) {
    throw std::domain_error("to_polar: v_dc must be positive");
  }
  const double mag = std::hypot(cmd.v_d, cmd.v_q);
  if (mag == 0.0) {
    return PolarCommand{0.0, 0.0};
  }
  double delta = std::atan2(cmd.v_d, cmd.v_q);
  if (delta == -std::numbers::pi) delta = std::numbers::pi;
  return PolarCommand{mag / cmd.v_dc, delta};
}

// Drive-wide modulation settings. beta is derived from the phase count so
// the spacing invariant holds by construction. m_l / m_h bound the offset
// and blend ramp, d_o scales the common-mode offset.
struct DriveConfig {
  int n_phases = 3;
  double m_l = 0.4;
  double m_h = 0.6;
  double d_o = 0.05;
  bool blend_swap = false;

  double beta() const { return two_pi / static_cast<double>(n_phases); }
};

struct ConfigCheck {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  std::string message() const {
    std::string msg;
    for (const auto& v : violations) {
      if (!msg.empty()) msg += "; ";
      msg += v;
    }
    return msg;
  }
};

// Checks every DriveConfig invariant and names each violated one.
inline ConfigCheck validate_config(const DriveConfig& cfg) {
  ConfigCheck check;
  if (cfg.n_phases < 3) check.violations.push_back("n_phases < 3");
  if (cfg.m_l < 0.0) check.violations.push_back("m_l < 0");
  if (!(cfg.m_l < cfg.m_h)) check.violations.push_back("m_l >= m_h");
  if (cfg.m_h > 1.0) check.violations.push_back("m_h > 1");
  if (cfg.d_o < 0.0) check.violations.push_back("d_o < 0");
  if (cfg.m_h + cfg.d_o > 1.0) check.violations.push_back("m_h + d_o > 1");
  return check;
}

inline void require_valid(const DriveConfig& cfg) {
  const ConfigCheck check = validate_config(cfg);
  if (!check.ok()) {
    throw std::invalid_argument("invalid drive config: " + check.message());
  }
}

}  // namespace pwmkit
