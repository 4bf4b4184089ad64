#pragma once

#include <stdexcept>
#include <string>

namespace paclab {

// Runtime failures that should stop a run with exit code 1. The leading token
// of the message is stable and machine-checkable:
//   sample-too-small, projection-cap-exceeded, enumeration-cap-exceeded,
//   solver-failure, zero-mass-conditioning, inconsistent-sample,
//   invalid-parameters
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad user input (config files, CLI flags): exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace paclab
