#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bpeel {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list input. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class EmptyGraphError : public Error {
 public:
  EmptyGraphError() : Error("input contains no edges") {}
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold
/// (e.g. butterfly counts that do not belong to the graph).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A 64-bit counter would have wrapped.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Allocation failure surfaced as an error instead of a crash.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class FetchError : public Error {
 public:
  using Error::Error;
};

/// Requested dataset is not in the registry.
class UnknownDatasetError : public FetchError {
 public:
  using FetchError::FetchError;
};

}  // namespace bpeel
