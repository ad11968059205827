#pragma once

#include <stdexcept>
#include <string>

namespace paralift {

// Raised for mathematical/usage errors: chart mismatches, unknown
// coordinates, missing connections, malformed model data.
class EngineError : public std::runtime_error {
 public:
  explicit EngineError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace paralift
