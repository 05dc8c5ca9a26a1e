#pragma once

#include <stdexcept>
#include <string>

namespace liegc {

struct UnsupportedTypeError : std::runtime_error {
  explicit UnsupportedTypeError(const std::string& what) : std::runtime_error(what) {}
};

struct CapExceededError : std::runtime_error {
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatchError : std::runtime_error {
  explicit DimensionMismatchError(const std::string& what) : std::runtime_error(what) {}
};

struct NotClosedError : std::runtime_error {
  explicit NotClosedError(const std::string& what) : std::runtime_error(what) {}
};

struct NotSubalgebraError : std::runtime_error {
  explicit NotSubalgebraError(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedKindError : std::runtime_error {
  explicit UnsupportedKindError(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidPartitionError : std::runtime_error {
  explicit InvalidPartitionError(const std::string& what) : std::runtime_error(what) {}
};

struct NotGCSubsetError : std::runtime_error {
  explicit NotGCSubsetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace liegc
