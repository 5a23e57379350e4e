#pragma once

#include <stdexcept>
#include <string>

namespace ctxgraph {

enum class ErrorKind {
  invalid_parameter,
  invalid_input,
  resource_cap,
  unbounded,
};

const char *to_string(ErrorKind kind) noexcept;

/// Base of every error raised by the library. The kind decides the CLI exit
/// code: resource caps map to 2, everything else to 1.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

class InvalidParameter : public Error {
public:
  explicit InvalidParameter(const std::string &message)
      : Error(ErrorKind::invalid_parameter, message) {}
};

class InvalidInput : public Error {
public:
  explicit InvalidInput(const std::string &message)
      : Error(ErrorKind::invalid_input, message) {}
};

class ResourceCap : public Error {
public:
  explicit ResourceCap(const std::string &message)
      : Error(ErrorKind::resource_cap, message) {}
};

class Unbounded : public Error {
public:
  explicit Unbounded(const std::string &message)
      : Error(ErrorKind::unbounded, message) {}
};

} // namespace ctxgraph
