#pragma once

#include <stdexcept>
#include <string>

namespace ellss {

struct ZeroLengthInterval : std::runtime_error {
  explicit ZeroLengthInterval(const std::string& what) : std::runtime_error(what) {}
};

struct PreconditionViolated : std::logic_error {
  explicit PreconditionViolated(const std::string& what) : std::logic_error(what) {}
};

struct DimensionMismatch : std::invalid_argument {
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct FactorizationFailure : std::runtime_error {
  explicit FactorizationFailure(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ellss
