#pragma once

#include <stdexcept>
#include <string>

namespace combiverse {

// Error taxonomy mirrored by the CLI exit codes: validation -> 2,
// backend -> 3, divergence -> 4.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ValidationError : public Error {
public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

class BackendError : public Error {
public:
  explicit BackendError(const std::string& what) : Error(what) {}
};

class DivergenceError : public Error {
public:
  explicit DivergenceError(const std::string& what) : Error(what) {}
};

class IoError : public Error {
public:
  explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace combiverse
