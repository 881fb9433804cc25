#pragma once

#include <stdexcept>
#include <string>

namespace rgspec {

// Invalid input or broken precondition (CLI exit code 2).
class ConstructionError : public std::invalid_argument {
 public:
  explicit ConstructionError(const std::string& what) : std::invalid_argument(what) {}
};

// A configured size cap was exceeded; the operation declines to run (CLI exit code 3).
class RefusalError : public std::runtime_error {
 public:
  explicit RefusalError(const std::string& what) : std::runtime_error(what) {}
};

// An iterative numeric method failed to converge within its budget (CLI exit code 4).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rgspec
