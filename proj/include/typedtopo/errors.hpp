#pragma once

#include <stdexcept>
#include <string>

namespace typedtopo {

// Malformed or inconsistent input data (unknown ids, bad files, rejected builds).
struct DataError : std::runtime_error {
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// An operation's stated precondition does not hold for the given arguments.
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace typedtopo
