#pragma once

#include <stdexcept>
#include <string>

namespace cpl {

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// A CTC target that no length-T alignment can produce. Raised instead of
// returning an infinite loss so callers must handle it explicitly.
struct InfeasibleTarget : std::runtime_error {
  explicit InfeasibleTarget(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace cpl
