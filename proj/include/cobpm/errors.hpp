#pragma once

#include <stdexcept>
#include <string>

namespace cobpm {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Dimension is zero or two objects disagree on dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Action targets a region or axis outside the current partition.
class ActionError : public Error {
 public:
  using Error::Error;
};

// shrink() called on the root partition.
class ShrinkError : public Error {
 public:
  using Error::Error;
};

// A point lies outside [0,1]^d.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A split would push a per-axis exponent past the dyadic limit.
class DepthLimitError : public Error {
 public:
  using Error::Error;
};

// Malformed input file or spec string.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Cached state (counts, masses) is misaligned with its partition.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// Invalid configuration value.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace cobpm
