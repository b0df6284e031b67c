#pragma once

#include <stdexcept>
#include <string>

namespace pwmkit {

// Thrown when an operation receives an angle tagged with the wrong frame.
// Catching this instead of silently shifting by pi/6 is the whole point of
// the frame tag.
class frame_error : public std::invalid_argument {
 public:
  explicit frame_error(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown for technique / phase-count combinations the library deliberately
// does not define (e.g. third-harmonic injection on a non-three-phase drive).
class unsupported_error : public std::invalid_argument {
 public:
  explicit unsupported_error(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace pwmkit
