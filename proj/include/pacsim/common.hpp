#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pacsim {

/// Controller clock tick. One tick is kTickNs nanoseconds.
using Tick = std::uint64_t;
using RowIndex = std::uint32_t;

inline constexpr double kTickNs = 0.75;
inline constexpr Tick kNever = ~Tick{0};

/// Rounds a nanosecond duration up to whole controller ticks.
Tick ns_to_ticks(double ns);
double ticks_to_ns(Tick t);

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A restoration level (or a profile module) that has no usable data.
struct NotApplicable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A command that the device state forbids outright (e.g. RD on a closed bank).
struct IllegalState : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace pacsim
