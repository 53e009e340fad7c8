#pragma once

#include <stdexcept>
#include <string>

namespace jeth {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid argument or violated precondition.
class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& what) : Error(what) {}
};

/// A resource guard refused the requested workload.
class GuardError : public Error {
 public:
  GuardError(std::string guard, std::string workload, const std::string& what)
      : Error(what), guard_(std::move(guard)), workload_(std::move(workload)) {}

  /// Name of the guard that tripped (e.g. "max_paths").
  const std::string& guard() const { return guard_; }
  /// Exact or estimated workload that was refused, as a decimal string.
  const std::string& workload() const { return workload_; }

 private:
  std::string guard_;
  std::string workload_;
};

/// An internal cross-check failed; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace jeth
