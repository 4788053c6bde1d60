#ifndef IBITRACK_ERRORS_HPP_
#define IBITRACK_ERRORS_HPP_

#include <stdexcept>

namespace ibitrack {

// Error taxonomy for the library. Argument problems a caller can check up
// front derive from std::invalid_argument; conditions that only surface
// mid-computation derive from std::runtime_error.

struct InvalidConfig : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonPositiveInterval : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct LengthMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct EmptyInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SingleClass : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NoOverlap : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The conjugate state has collapsed (all absorbed intervals identical, or a
// mode formula produced a non-positive shape); the mode is undefined until
// clamped.
struct DegenerateState : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ibitrack

#endif  // IBITRACK_ERRORS_HPP_
