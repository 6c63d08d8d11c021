#pragma once

#include <stdexcept>
#include <string>

namespace chainlab {

// Invalid configuration: bad key, unparsable value, or a parameter that
// violates a model invariant.  The CLI maps this to exit code 2.
struct config_error : std::runtime_error {
  explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An analysis step failed on otherwise-valid input (singular network,
// degenerate spectrum, ...).  The CLI maps this to exit code 4.
struct analysis_error : std::runtime_error {
  explicit analysis_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace chainlab
