#pragma once

#include <stdexcept>
#include <string>

namespace orpose {

// Rejected inputs: bad shapes, non-finite values, out-of-contract arguments.
struct InvalidInput : std::invalid_argument {
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// Bad configuration: file schema violations, impossible option combinations.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// I/O failures; the message names the offending file.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace orpose
