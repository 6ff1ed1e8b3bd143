#pragma once

#include <stdexcept>
#include <string>

namespace repsat {

/// Raised when a solver assignment does not describe a valid witness.
class InvalidAssignment : public std::runtime_error {
 public:
  explicit InvalidAssignment(const std::string& detail)
      : std::runtime_error("solver assignment invalid: " + detail) {}
};

}  // namespace repsat
